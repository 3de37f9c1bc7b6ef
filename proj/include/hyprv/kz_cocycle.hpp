#pragma once

// Kontsevich-Zorich cocycle matrices along diagram arrows and paths, the
// closed-form matrices of conjugated elementary loops, and the action of
// arrows on the free-group generators theta_alpha with its abelianization.
//
// Conventions: matrices act on column vectors and compose in cocycle order,
// B_{p1 then p2} = B_{p2} * B_{p1}; a single arrow contributes the unipotent
// B = I + E_{loser,winner}.

#include <utility>
#include <vector>

#include "hyprv/hyp_diagram.hpp"
#include "hyprv/int_matrix.hpp"

namespace hyprv {

inline IntMatrix arrow_matrix(const DiagramArrow& a) {
    int d = a.source.d();
    IntMatrix b = IntMatrix::identity(d);
    b.at(letter_index(d, a.loser), letter_index(d, a.winner)) = 1;
    return b;
}

inline IntMatrix path_matrix(const DiagramPath& p) {
    int d = p.start().d();
    IntMatrix out = IntMatrix::identity(d);
    for (const DiagramStep& s : p.steps()) {
        IntMatrix b = IntMatrix::identity(d);
        int lr = letter_index(d, s.arrow.loser), wc = letter_index(d, s.arrow.winner);
        b.at(lr, wc) = s.backward ? -1 : 1;  // inverse of I + E is I - E
        out = b * out;
    }
    return out;
}

// Closed form of B_{gamma'} for gamma' = gamma*(pi) * gamma * gamma*(pi)^{-1}:
// depends only on the kind and the winner of the elementary loop.
inline IntMatrix loop_matrix_closed_form(ArrowKind kind, Letter winner, int d) {
    IntMatrix b = IntMatrix::identity(d);
    int wc = letter_index(d, winner);
    for (int k = 0; k < d; ++k) {
        if (k == wc) continue;
        Letter kl = index_letter(d, k);
        if (kind == ArrowKind::Top)
            b.at(k, wc) = kl < winner ? 1 : -1;
        else
            b.at(k, wc) = kl > winner ? 1 : -1;
    }
    return b;
}

inline IntMatrix loop_matrix(const ElementaryLoop& loop) {
    return loop_matrix_closed_form(loop.kind, loop.winner, loop.base.d());
}

// Reduced word over the free generators theta_alpha.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<std::pair<Letter, int>> syllables) {
        for (auto& s : syllables) push(s.first, s.second);
    }
    static FreeWord generator(Letter p, int sign = 1) { return FreeWord({{p, sign}}); }

    const std::vector<std::pair<Letter, int>>& syllables() const { return syms_; }
    bool empty() const { return syms_.empty(); }

    void push(Letter p, int sign) {
        if (!syms_.empty() && syms_.back().first == p && syms_.back().second == -sign)
            syms_.pop_back();
        else
            syms_.emplace_back(p, sign);
    }

    FreeWord operator*(const FreeWord& o) const {
        FreeWord out = *this;
        for (auto& s : o.syms_) out.push(s.first, s.second);
        return out;
    }

    FreeWord inverse() const {
        FreeWord out;
        for (auto it = syms_.rbegin(); it != syms_.rend(); ++it) out.push(it->first, -it->second);
        return out;
    }

    bool operator==(const FreeWord& o) const { return syms_ == o.syms_; }

private:
    std::vector<std::pair<Letter, int>> syms_;
};

// Generator map of a single arrow: theta_alpha is fixed for alpha != loser;
// for the loser, top arrows give theta_l * theta_w^{-1} and bottom arrows
// give theta_w^{-1} * theta_l.
inline FreeWord pi1_generator_image(const DiagramArrow& a, Letter alpha) {
    if (alpha != a.loser) return FreeWord::generator(alpha);
    if (a.kind == ArrowKind::Top) return FreeWord({{a.loser, 1}, {a.winner, -1}});
    return FreeWord({{a.winner, -1}, {a.loser, 1}});
}

// Inverse automorphism of a single arrow (used by backward steps).
inline FreeWord pi1_generator_preimage(const DiagramArrow& a, Letter alpha) {
    if (alpha != a.loser) return FreeWord::generator(alpha);
    if (a.kind == ArrowKind::Top) return FreeWord({{a.loser, 1}, {a.winner, 1}});
    return FreeWord({{a.winner, 1}, {a.loser, 1}});
}

inline FreeWord pi1_substitute(const FreeWord& w, const DiagramArrow& a, bool backward) {
    FreeWord out;
    for (auto& [p, sign] : w.syllables()) {
        FreeWord img = backward ? pi1_generator_preimage(a, p) : pi1_generator_image(a, p);
        if (sign < 0) img = img.inverse();
        out = out * img;
    }
    return out;
}

inline FreeWord pi1_action(const DiagramArrow& a, const FreeWord& w) {
    return pi1_substitute(w, a, false);
}

// Images of all generators under the composite pi_1 map of the path.
inline std::vector<FreeWord> pi1_path_images(const DiagramPath& p) {
    int d = p.start().d();
    std::vector<FreeWord> images;
    images.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) images.push_back(FreeWord::generator(index_letter(d, i)));
    for (const DiagramStep& s : p.steps())
        for (FreeWord& w : images) w = pi1_substitute(w, s.arrow, s.backward);
    return images;
}

// Exponent-sum matrix of the pi_1 action of a loop, column alpha = image of
// theta_alpha abelianized.
inline IntMatrix abelianize(const DiagramPath& p) {
    if (!p.is_loop()) throw NotALoopError("abelianize needs a loop");
    int d = p.start().d();
    auto images = pi1_path_images(p);
    IntMatrix out(d);
    for (int c = 0; c < d; ++c)
        for (auto& [q, sign] : images[static_cast<size_t>(c)].syllables())
            out.at(letter_index(d, q), c) += sign;
    return out;
}

}  // namespace hyprv
