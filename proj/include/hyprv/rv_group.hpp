#pragma once

// The generators L_p, the intersection form Omega(d) with its kernel vector
// h* for odd d, reduction mod 2 onto the symmetric group H_d, and the
// membership/orbit predicates that define G'_d.

#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyprv/alphabet.hpp"
#include "hyprv/int_matrix.hpp"

namespace hyprv {

// A certificate: product of L_p^{s}, evaluated left to right.
using GeneratorWord = std::vector<std::pair<Letter, int>>;

inline GeneratorWord inverted(const GeneratorWord& w) {
    GeneratorWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

inline GeneratorWord operator+(GeneratorWord a, const GeneratorWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// cancel adjacent mutually inverse letters only
inline GeneratorWord reduce_word(const GeneratorWord& w) {
    GeneratorWord out;
    for (auto& s : w) {
        if (!out.empty() && out.back().first == s.first && out.back().second == -s.second)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

// L_p: fixes e_q for q != p and maps e_p to -sum_{r<p} e_r + sum_{r>=p} e_r.
inline IntMatrix generator(Letter p, int d) {
    require_letter(d, p);
    IntMatrix m = IntMatrix::identity(d);
    int pc = letter_index(d, p);
    for (int r = 0; r < d; ++r) {
        Letter rl = index_letter(d, r);
        if (rl != p) m.at(r, pc) = rl < p ? -1 : 1;
    }
    return m;
}

// L_p^k in closed form: L_p = I + C with C^2 = 0, so L_p^k = I + kC.
inline IntMatrix generator_power(Letter p, int d, const Int& k) {
    require_letter(d, p);
    IntMatrix m = IntMatrix::identity(d);
    int pc = letter_index(d, p);
    for (int r = 0; r < d; ++r) {
        Letter rl = index_letter(d, r);
        if (rl != p) m.at(r, pc) = rl < p ? -k : k;
    }
    return m;
}

// Ordered product of the word (collapsing runs of equal letters).
inline IntMatrix evaluate(const GeneratorWord& w, int d) {
    IntMatrix out = IntMatrix::identity(d);
    size_t i = 0;
    while (i < w.size()) {
        Letter p = w[i].first;
        Int k(0);
        size_t j = i;
        while (j < w.size() && w[j].first == p) k += w[j++].second;
        out = out * generator_power(p, d, k);
        i = j;
    }
    return out;
}

// apply the word to a column vector, letter by letter from the right
inline IntVec apply_word(const GeneratorWord& w, const IntVec& v, int d) {
    IntVec out = v;
    size_t i = w.size();
    while (i > 0) {
        size_t j = i;
        Letter p = w[i - 1].first;
        Int k(0);
        while (j > 0 && w[j - 1].first == p) k += w[--j].second;
        // L_p^k(v) = v + k v_p c_p with c_p as in generator()
        const Int& vp = out[static_cast<size_t>(letter_index(d, p))];
        if (vp != 0 && k != 0) {
            Int f = k * vp;
            for (int r = 0; r < d; ++r) {
                Letter rl = index_letter(d, r);
                if (rl == p) continue;
                out[static_cast<size_t>(r)] += rl < p ? -f : f;
            }
        }
        i = j;
    }
    return out;
}

struct SymplecticData {
    int d;
    IntMatrix omega;
    std::optional<IntVec> h_star;  // present iff d odd
};

// Omega_{pq} = +1 if p < q, -1 if p > q, 0 if p = q (letters as integers).
inline SymplecticData omega(int d) {
    if (d < 2) throw BadDimensionError("omega needs d >= 2");
    SymplecticData out{d, IntMatrix(d), std::nullopt};
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Letter p = index_letter(d, i), q = index_letter(d, j);
            out.omega.at(i, j) = p < q ? 1 : (p > q ? -1 : 0);
        }
    if (d % 2 == 1) {
        IntVec h(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            Letter p = index_letter(d, i);  // even when d is odd
            h[static_cast<size_t>(i)] = ((p / 2) % 2 == 0) ? 1 : -1;
        }
        out.h_star = std::move(h);
    }
    return out;
}

inline IntVec h_star(int d) {
    if (d % 2 == 0) throw BadParityError("h* exists only for odd d");
    return *omega(d).h_star;
}

// B Omega tB == Omega; the membership condition of Sp(Omega^{-1}(d), Z) in
// both parities.
inline bool is_symplectic(const IntMatrix& b, int d) {
    if (b.size() != d) throw BadDimensionError("matrix size mismatch");
    IntMatrix om = omega(d).omega;
    return b * om * b.transpose() == om;
}

// the symplectic pairing t(v) Omega^{-1} v' (d even only, Omega unimodular)
inline Int symplectic_pairing(const IntVec& v, const IntVec& w, int d) {
    if (d % 2 == 1) throw BadParityError("pairing uses Omega^{-1}, d must be even");
    IntMatrix inv = omega(d).omega.inverse();
    return dot(v, inv * w);
}

inline F2Matrix mod2(const IntMatrix& b) {
    F2Matrix out(b.size());
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) out.set(i, j, (b.at(i, j) % 2) != 0);
    return out;
}

// The set E = {e*} u {e_p}: points 0..d-1 are the basis vectors (canonical
// index order), point d is e* = sum of all e_p.
inline std::optional<int> point_of_f2_vector(uint64_t v, int d) {
    uint64_t all = (d == 64) ? ~uint64_t{0} : ((uint64_t{1} << d) - 1);
    if (v == all) return d;
    if (v != 0 && (v & (v - 1)) == 0) {
        int i = 0;
        while (!((v >> i) & 1)) ++i;
        return i;
    }
    return std::nullopt;
}

// If Bbar permutes E, the induced permutation on the d+1 points; nullopt
// otherwise.
inline std::optional<std::vector<int>> in_H_d(const F2Matrix& bbar) {
    int d = bbar.size();
    std::vector<int> perm(static_cast<size_t>(d) + 1, -1);
    std::vector<bool> used(static_cast<size_t>(d) + 1, false);
    uint64_t estar = 0;
    for (int p = 0; p <= d; ++p) {
        uint64_t img;
        if (p < d) {
            img = bbar.column_mask(p);
            estar ^= img;
        } else {
            img = estar;
        }
        auto pt = point_of_f2_vector(img, d);
        if (!pt || used[static_cast<size_t>(*pt)]) return std::nullopt;
        used[static_cast<size_t>(*pt)] = true;
        perm[static_cast<size_t>(p)] = *pt;
    }
    return perm;
}

// G'_d: symplectic in the sense above, mod-2 image in H_d, and (d odd)
// t(h*) B = t(h*). The last condition is what pins det B = 1 when Omega is
// singular; for d even it is automatic.
inline bool in_G_prime(const IntMatrix& b, int d) {
    if (b.size() != d) throw BadDimensionError("matrix size mismatch");
    if (!is_symplectic(b, d)) return false;
    if (!in_H_d(mod2(b))) return false;
    if (d % 2 == 1) {
        IntVec h = h_star(d);
        if (b.transpose() * h != h) return false;
    }
    return true;
}

// Orbit membership: primitive, congruent mod 2 to an element
// of E, and (d odd) on the affine hyperplane t(h*).(v - e_p) = 0.
inline bool orbit_predicate(const IntVec& v, Letter p, int d) {
    require_letter(d, p);
    if (is_zero(v)) throw ZeroVectorError("orbit predicate needs a nonzero vector");
    if (!is_primitive(v)) return false;
    uint64_t parity = 0;
    for (int i = 0; i < d; ++i)
        if (v[static_cast<size_t>(i)] % 2 != 0) parity |= (uint64_t{1} << i);
    if (!point_of_f2_vector(parity, d)) return false;
    if (d % 2 == 1) {
        IntVec h = h_star(d);
        if (dot(h, v - unit_vector(d, letter_index(d, p))) != 0) return false;
    }
    return true;
}

// Order of the group generated by the mod-2 generators (BFS closure).
inline size_t mod2_closure_order(int d) {
    std::vector<F2Matrix> gens;
    for (Letter p : alphabet(d)) gens.push_back(mod2(generator(p, d)));
    std::unordered_set<F2Matrix, F2MatrixHash> seen;
    std::vector<F2Matrix> queue{F2Matrix::identity(d)};
    seen.insert(queue[0]);
    for (size_t i = 0; i < queue.size(); ++i) {
        F2Matrix cur = queue[i];
        for (const F2Matrix& g : gens) {
            F2Matrix nxt = g * cur;
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return seen.size();
}

}  // namespace hyprv
