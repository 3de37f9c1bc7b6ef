#pragma once

// The alphabet A_d = {d-1, d-3, ..., 1-d} and its canonical index order.
// Convention used by every indexed structure in this library: index i
// corresponds to letter d-1-2i, i.e. letters are listed in decreasing order.

#include <vector>

#include "hyprv/errors.hpp"

namespace hyprv {

using Letter = int;

inline bool is_letter(int d, Letter p) {
    if (d < 2) return false;
    if (p < 1 - d || p > d - 1) return false;
    // letters have the parity of d-1
    return ((p - (d - 1)) % 2) == 0;
}

inline void require_letter(int d, Letter p) {
    if (!is_letter(d, p)) throw BadLetterError("letter " + std::to_string(p) + " not in alphabet A_" + std::to_string(d));
}

inline int letter_index(int d, Letter p) {
    require_letter(d, p);
    return (d - 1 - p) / 2;
}

inline Letter index_letter(int d, int i) {
    return d - 1 - 2 * i;
}

inline std::vector<Letter> alphabet(int d) {
    if (d < 2) throw BadDimensionError("alphabet needs d >= 2");
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) out.push_back(index_letter(d, i));
    return out;
}

}  // namespace hyprv
