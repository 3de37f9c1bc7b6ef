#pragma once

// The hyperelliptic Rauzy class R_d: central vertex, the injections j_t/j_b,
// the involution I_d, the word correspondence W_d (words over {t,b} of
// length < d-1), unique simple paths from the central vertex, and the
// elementary simple loops.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyprv/iet_core.hpp"

namespace hyprv {

using HypWord = std::string;

inline PermutationPair central_vertex(int d) {
    if (d < 2) throw BadDimensionError("central vertex needs d >= 2");
    // pi*_t(k) = (d+1+k)/2, pi*_b(k) = (d+1-k)/2
    std::vector<Letter> top(static_cast<size_t>(d)), bottom(static_cast<size_t>(d));
    for (int pos = 1; pos <= d; ++pos) {
        top[static_cast<size_t>(pos - 1)] = 2 * pos - d - 1;
        bottom[static_cast<size_t>(pos - 1)] = d + 1 - 2 * pos;
    }
    return PermutationPair(top, bottom);
}

inline PermutationPair involution(const PermutationPair& pi) {
    // I_d((pi_t, pi_b)) = (pi_b o iota, pi_t o iota) with iota(k) = -k
    std::vector<Letter> top, bottom;
    top.reserve(static_cast<size_t>(pi.d()));
    bottom.reserve(static_cast<size_t>(pi.d()));
    for (Letter p : pi.bottom()) top.push_back(-p);
    for (Letter p : pi.top()) bottom.push_back(-p);
    return PermutationPair(top, bottom);
}

namespace detail {

// j_t / j_b by the position formulas. In the bottom-injection
// formulas the case condition is read as pi_t(k+1) >= pi_t(3-d); with the
// other reading b(pi)_t is not a bijection.
inline PermutationPair inject_formula(const PermutationPair& pi, ArrowKind side) {
    int d = pi.d();
    int n = d + 1;
    std::vector<Letter> top(static_cast<size_t>(n)), bottom(static_cast<size_t>(n));
    auto set_top = [&](Letter k, int pos) { top[static_cast<size_t>(pos - 1)] = k; };
    auto set_bottom = [&](Letter k, int pos) { bottom[static_cast<size_t>(pos - 1)] = k; };
    if (side == ArrowKind::Top) {
        int cut = pi.bottom_position(d - 3);
        set_top(-d, 1);
        set_bottom(-d, cut);
        for (Letter k = 2 - d; k <= d; k += 2) {
            set_top(k, 1 + pi.top_position(k - 1));
            int pb = pi.bottom_position(k - 1);
            set_bottom(k, pb < cut ? pb : pb + 1);
        }
    } else {
        int cut = pi.top_position(3 - d);
        set_bottom(d, 1);
        set_top(d, cut);
        for (Letter k = -d; k <= d - 2; k += 2) {
            set_bottom(k, 1 + pi.bottom_position(k + 1));
            int pt = pi.top_position(k + 1);
            set_top(k, pt < cut ? pt : pt + 1);
        }
    }
    return PermutationPair(top, bottom);
}

// inverse of inject_formula where defined
inline std::optional<PermutationPair> strip(const PermutationPair& pi, ArrowKind side) {
    int d = pi.d();
    if (d < 3) return std::nullopt;
    Letter removed = side == ArrowKind::Top ? 1 - d : d - 1;
    int shift = side == ArrowKind::Top ? -1 : 1;
    std::vector<Letter> top, bottom;
    for (Letter p : pi.top())
        if (p != removed) top.push_back(p + shift);
    for (Letter p : pi.bottom())
        if (p != removed) bottom.push_back(p + shift);
    try {
        PermutationPair cand(top, bottom);
        if (inject_formula(cand, side) == pi) return cand;
    } catch (const Error&) {
    }
    return std::nullopt;
}

// W_d via the recursive structure alone (no diagram object); nullopt when
// pi is not in the hyperelliptic class.
inline std::optional<HypWord> word_recursive(const PermutationPair& pi) {
    int d = pi.d();
    if (pi == central_vertex(d)) return HypWord{};
    if (d == 2) return std::nullopt;
    if (auto cand = strip(pi, ArrowKind::Top))
        if (auto sub = word_recursive(*cand)) return "t" + *sub;
    if (auto cand = strip(pi, ArrowKind::Bottom))
        if (auto sub = word_recursive(*cand)) return "b" + *sub;
    return std::nullopt;
}

}  // namespace detail

inline PermutationPair inject(const PermutationPair& pi, ArrowKind side) {
    if (!detail::word_recursive(pi)) throw NotInClassError("pair not in hyperelliptic class: " + pi.str());
    return detail::inject_formula(pi, side);
}

inline bool in_hyp_class(const PermutationPair& pi) {
    return detail::word_recursive(pi).has_value();
}

// (top winner, bottom winner) from the word: d-1-2 w_b and 1-d+2 w_t
inline std::pair<Letter, Letter> winners_from_word(const HypWord& w, int d) {
    int wb = 0, wt = 0;
    for (char c : w) (c == 'b' ? wb : wt)++;
    return {d - 1 - 2 * wb, 1 - d + 2 * wt};
}

// W_d(R(pi)) as a word operation, including the wrap rule at |W| = d-2.
inline HypWord word_after_move(const HypWord& w, ArrowKind kind, int d) {
    char c = arrow_kind_char(kind);
    if (static_cast<int>(w.size()) < d - 2) return w + c;
    // W = W' c^m with W' empty or not ending in c; result is W'
    size_t end = w.size();
    while (end > 0 && w[end - 1] == c) --end;
    return w.substr(0, end);
}

struct ElementaryLoop {
    ArrowKind kind;
    PermutationPair base;  // the vertex on the loop with |W_d| minimal
    HypWord base_word;
    int length;
    Letter winner;
};

// Materialized R_d with the two-way word correspondence.
class HypDiagram {
public:
    explicit HypDiagram(int d) : d_(d) {
        if (d < 2) throw BadDimensionError("diagram needs d >= 2");
        add("", central_vertex(d));
        // children of a word w are w+'t', w+'b' while |w| < d-2
        for (size_t i = 0; i < words_.size(); ++i) {
            HypWord w = words_[i];
            if (static_cast<int>(w.size()) >= d - 2) continue;
            PermutationPair v = vertex_of(w);
            add(w + 't', rauzy_move(v, ArrowKind::Top));
            add(w + 'b', rauzy_move(v, ArrowKind::Bottom));
        }
    }

    int d() const { return d_; }
    size_t size() const { return words_.size(); }
    const std::vector<HypWord>& words() const { return words_; }
    const std::vector<PermutationPair>& vertices() const { return vertices_; }

    const PermutationPair& vertex_of(const HypWord& w) const {
        if (static_cast<int>(w.size()) >= d_ - 1) throw WordTooLongError("|W| must be < d-1");
        auto it = by_word_.find(w);
        if (it == by_word_.end()) throw WordTooLongError("malformed word: " + w);
        return vertices_[static_cast<size_t>(it->second)];
    }

    const HypWord& word_of(const PermutationPair& pi) const {
        auto it = by_vertex_.find(pi);
        if (it == by_vertex_.end()) throw NotInClassError("pair not in R_" + std::to_string(d_) + ": " + pi.str());
        return words_[static_cast<size_t>(it->second)];
    }

    std::pair<Letter, Letter> winners_at(const PermutationPair& pi) const {
        return winners_from_word(word_of(pi), d_);
    }

    // gamma*(pi): the unique oriented simple path from the central vertex,
    // through the initial subwords of W_d(pi)
    DiagramPath simple_path_to(const PermutationPair& pi) const {
        const HypWord& w = word_of(pi);
        DiagramPath p(central_vertex(d_));
        for (char c : w) p.append_move(c == 't' ? ArrowKind::Top : ArrowKind::Bottom);
        return p;
    }

    std::vector<ElementaryLoop> elementary_loops() const {
        std::vector<ElementaryLoop> out;
        for (ArrowKind kind : {ArrowKind::Top, ArrowKind::Bottom}) {
            char other = kind == ArrowKind::Top ? 'b' : 't';
            for (const HypWord& w : words_) {
                if (!w.empty() && w.back() != other) continue;  // base words end in the other letter
                auto [tw, bw] = winners_from_word(w, d_);
                out.push_back(ElementaryLoop{kind, vertex_of(w), w, d_ - 1 - static_cast<int>(w.size()),
                                             kind == ArrowKind::Top ? tw : bw});
            }
        }
        return out;
    }

private:
    void add(const HypWord& w, const PermutationPair& v) {
        int id = static_cast<int>(words_.size());
        words_.push_back(w);
        vertices_.push_back(v);
        by_word_.emplace(w, id);
        by_vertex_.emplace(v, id);
    }

    int d_;
    std::vector<HypWord> words_;
    std::vector<PermutationPair> vertices_;
    std::map<HypWord, int> by_word_;
    std::unordered_map<PermutationPair, int, PermutationPairHash> by_vertex_;
};

inline std::vector<ElementaryLoop> elementary_loops(int d) {
    return HypDiagram(d).elementary_loops();
}

// the loop itself as an oriented path based at loop.base
inline DiagramPath loop_path(const ElementaryLoop& loop) {
    DiagramPath p(loop.base);
    for (int i = 0; i < loop.length; ++i) p.append_move(loop.kind);
    if (!p.is_loop()) throw NotALoopError("elementary loop does not close");
    return p;
}

// R_d built through the recursion R_{d} = {pi*} | j_t(R_{d-1}) | j_b(R_{d-1});
// used to cross-check the BFS construction.
inline std::vector<PermutationPair> recursive_class_vertices(int d) {
    if (d == 2) return {central_vertex(2)};
    std::vector<PermutationPair> out{central_vertex(d)};
    for (const PermutationPair& pi : recursive_class_vertices(d - 1)) {
        out.push_back(detail::inject_formula(pi, ArrowKind::Top));
        out.push_back(detail::inject_formula(pi, ArrowKind::Bottom));
    }
    return out;
}

}  // namespace hyprv
