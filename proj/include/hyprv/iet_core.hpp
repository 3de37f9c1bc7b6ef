#pragma once

// Permutation pairs, Rauzy moves and Rauzy classes. A pair is stored as the
// two rows of letters in position order (top[0] is the letter at position 1).
// Pairs are immutable values; moves return fresh pairs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyprv/alphabet.hpp"
#include "hyprv/errors.hpp"

namespace hyprv {

enum class ArrowKind { Top, Bottom };

inline char arrow_kind_char(ArrowKind k) {
    return k == ArrowKind::Top ? 't' : 'b';
}

class PermutationPair {
public:
    PermutationPair(std::vector<Letter> top, std::vector<Letter> bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {
        validate();
    }

    int d() const { return static_cast<int>(top_.size()); }
    const std::vector<Letter>& top() const { return top_; }
    const std::vector<Letter>& bottom() const { return bottom_; }

    const std::vector<Letter>& row(ArrowKind k) const { return k == ArrowKind::Top ? top_ : bottom_; }

    // position of letter p in {1..d}
    int top_position(Letter p) const { return position_in(top_, p); }
    int bottom_position(Letter p) const { return position_in(bottom_, p); }

    bool operator==(const PermutationPair& o) const { return top_ == o.top_ && bottom_ == o.bottom_; }
    bool operator!=(const PermutationPair& o) const { return !(*this == o); }
    bool operator<(const PermutationPair& o) const {
        return top_ != o.top_ ? top_ < o.top_ : bottom_ < o.bottom_;
    }

    size_t hash() const {
        size_t h = 0;
        for (Letter p : top_) h = h * 1000003u + static_cast<size_t>(p + 64);
        for (Letter p : bottom_) h = h * 1000003u + static_cast<size_t>(p + 64);
        return h;
    }

    std::string str() const {
        auto row_str = [](const std::vector<Letter>& r) {
            std::string s;
            for (size_t i = 0; i < r.size(); ++i) {
                if (i) s += ' ';
                s += std::to_string(r[i]);
            }
            return s;
        };
        return "(" + row_str(top_) + " | " + row_str(bottom_) + ")";
    }

private:
    static int position_in(const std::vector<Letter>& row, Letter p) {
        for (size_t i = 0; i < row.size(); ++i)
            if (row[i] == p) return static_cast<int>(i) + 1;
        throw BadLetterError("letter " + std::to_string(p) + " not in row");
    }

    void validate() const {
        int dd = d();
        if (dd < 2 || bottom_.size() != top_.size()) throw BadDimensionError("permutation pair needs d >= 2");
        std::set<Letter> ts(top_.begin(), top_.end()), bs(bottom_.begin(), bottom_.end());
        auto letters = alphabet(dd);
        std::set<Letter> as(letters.begin(), letters.end());
        if (ts != as || bs != as) throw BadLetterError("rows are not permutations of the alphabet");
        // irreducibility: no k < d with top[0..k) equal to bottom[0..k) as sets
        std::set<Letter> tp, bp;
        for (int k = 0; k + 1 < dd; ++k) {
            tp.insert(top_[static_cast<size_t>(k)]);
            bp.insert(bottom_[static_cast<size_t>(k)]);
            if (tp == bp) throw ReducibleError("reducible pair: " + str());
        }
    }

    std::vector<Letter> top_;
    std::vector<Letter> bottom_;
};

struct PermutationPairHash {
    size_t operator()(const PermutationPair& p) const { return p.hash(); }
};

// (winner, loser) of the arrow of the given kind starting at pi
inline std::pair<Letter, Letter> winner_loser(const PermutationPair& pi, ArrowKind kind) {
    Letter t = pi.top().back(), b = pi.bottom().back();
    return kind == ArrowKind::Top ? std::make_pair(t, b) : std::make_pair(b, t);
}

// One Rauzy-Veech step: the loser is reinserted in its row right after the
// winner; the winner's row is unchanged.
inline PermutationPair rauzy_move(const PermutationPair& pi, ArrowKind kind) {
    std::vector<Letter> winner_row = pi.row(kind);
    std::vector<Letter> loser_row = pi.row(kind == ArrowKind::Top ? ArrowKind::Bottom : ArrowKind::Top);
    Letter winner = winner_row.back();
    Letter loser = loser_row.back();
    loser_row.pop_back();
    auto it = std::find(loser_row.begin(), loser_row.end(), winner);
    loser_row.insert(it + 1, loser);
    return kind == ArrowKind::Top ? PermutationPair(winner_row, loser_row)
                                  : PermutationPair(loser_row, winner_row);
}

// Inverse step: the letter sitting right after the winner in its row is
// extracted and appended at the end.
inline PermutationPair rauzy_move_inverse(const PermutationPair& pi, ArrowKind kind) {
    std::vector<Letter> winner_row = pi.row(kind);
    std::vector<Letter> loser_row = pi.row(kind == ArrowKind::Top ? ArrowKind::Bottom : ArrowKind::Top);
    Letter winner = winner_row.back();
    auto it = std::find(loser_row.begin(), loser_row.end(), winner);
    if (it + 1 == loser_row.end())
        throw IncompatibleStepError("no incoming " + std::string(1, arrow_kind_char(kind)) + " arrow at " + pi.str());
    Letter loser = *(it + 1);
    loser_row.erase(it + 1);
    loser_row.push_back(loser);
    return kind == ArrowKind::Top ? PermutationPair(winner_row, loser_row)
                                  : PermutationPair(loser_row, winner_row);
}

struct DiagramArrow {
    PermutationPair source;
    PermutationPair target;
    ArrowKind kind;
    Letter winner;
    Letter loser;

    bool operator==(const DiagramArrow& o) const {
        return kind == o.kind && source == o.source && target == o.target;
    }
};

inline DiagramArrow make_arrow(const PermutationPair& source, ArrowKind kind) {
    auto [w, l] = winner_loser(source, kind);
    return DiagramArrow{source, rauzy_move(source, kind), kind, w, l};
}

struct DiagramStep {
    DiagramArrow arrow;
    bool backward = false;

    const PermutationPair& from() const { return backward ? arrow.target : arrow.source; }
    const PermutationPair& to() const { return backward ? arrow.source : arrow.target; }

    bool inverse_of(const DiagramStep& o) const { return arrow == o.arrow && backward != o.backward; }
};

// Oriented path in the non-oriented diagram: forward steps traverse an arrow
// source->target, backward steps target->source.
class DiagramPath {
public:
    explicit DiagramPath(PermutationPair start) : start_(std::move(start)), end_(start_) {}

    const PermutationPair& start() const { return start_; }
    const PermutationPair& end() const { return end_; }
    const std::vector<DiagramStep>& steps() const { return steps_; }
    size_t length() const { return steps_.size(); }
    bool is_loop() const { return start_ == end_; }

    void append(DiagramStep s) {
        if (s.from() != end_) throw IncompatibleStepError("step does not start at path end");
        end_ = s.to();
        steps_.push_back(std::move(s));
    }

    void append_move(ArrowKind kind) { append(DiagramStep{make_arrow(end_, kind), false}); }

    void append_inverse_move(ArrowKind kind) {
        PermutationPair src = rauzy_move_inverse(end_, kind);
        append(DiagramStep{make_arrow(src, kind), true});
    }

    DiagramPath reversed() const {
        DiagramPath out(end_);
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
            out.append(DiagramStep{it->arrow, !it->backward});
        return out;
    }

    DiagramPath concat(const DiagramPath& second) const {
        if (end_ != second.start_) throw IncompatibleStepError("paths are not composable");
        DiagramPath out = *this;
        for (const auto& s : second.steps_) out.append(s);
        return out;
    }

    // cancel adjacent mutually inverse steps until none remain
    DiagramPath reduced() const {
        DiagramPath out(start_);
        for (const auto& s : steps_) {
            if (!out.steps_.empty() && out.steps_.back().inverse_of(s)) {
                out.steps_.pop_back();
                out.end_ = out.steps_.empty() ? out.start_ : out.steps_.back().to();
            } else {
                out.append(s);
            }
        }
        return out;
    }

    bool operator==(const DiagramPath& o) const {
        if (start_ != o.start_ || steps_.size() != o.steps_.size()) return false;
        for (size_t i = 0; i < steps_.size(); ++i)
            if (!(steps_[i].arrow == o.steps_[i].arrow) || steps_[i].backward != o.steps_[i].backward) return false;
        return true;
    }

private:
    PermutationPair start_;
    std::vector<DiagramStep> steps_;
    PermutationPair end_;
};

// spec is a word over {t,b,T,B}: lowercase forward, uppercase backward.
inline DiagramPath parse_path(const PermutationPair& start, const std::string& spec, bool reduce = false) {
    DiagramPath p(start);
    for (char c : spec) {
        switch (c) {
            case 't': p.append_move(ArrowKind::Top); break;
            case 'b': p.append_move(ArrowKind::Bottom); break;
            case 'T': p.append_inverse_move(ArrowKind::Top); break;
            case 'B': p.append_inverse_move(ArrowKind::Bottom); break;
            default: throw MalformedPathError("unknown path character '" + std::string(1, c) + "'");
        }
    }
    return reduce ? p.reduced() : p;
}

struct RauzyClass {
    std::vector<PermutationPair> vertices;
    std::unordered_map<PermutationPair, int, PermutationPairHash> index;
    std::vector<DiagramArrow> arrows;  // two per vertex, Top then Bottom, in vertex order
};

// Breadth-first closure of a seed vertex under the two moves.
inline RauzyClass rauzy_class(const PermutationPair& seed) {
    RauzyClass cls;
    cls.vertices.push_back(seed);
    cls.index.emplace(seed, 0);
    for (size_t next = 0; next < cls.vertices.size(); ++next) {
        PermutationPair pi = cls.vertices[next];
        for (ArrowKind kind : {ArrowKind::Top, ArrowKind::Bottom}) {
            DiagramArrow a = make_arrow(pi, kind);
            if (!cls.index.count(a.target)) {
                cls.index.emplace(a.target, static_cast<int>(cls.vertices.size()));
                cls.vertices.push_back(a.target);
            }
            cls.arrows.push_back(std::move(a));
        }
    }
    return cls;
}

}  // namespace hyprv
