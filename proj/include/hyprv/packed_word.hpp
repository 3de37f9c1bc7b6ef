#pragma once

// Power-compressed generator words: a word is a sequence of blocks
// (L_{p1}^{e1} ... L_{pk}^{ek})^m. The flat (letter, +-1) GeneratorWord of
// rv_group.hpp is the wire format; the packed form keeps stabilizer
// translations like (N^{d-1})^m tractable, since those need ~m flat letters.

#include <utility>
#include <vector>

#include "hyprv/rv_group.hpp"

namespace hyprv {

struct PackedAtom {
    Letter letter;
    Int exp;
};

struct PackedBlock {
    std::vector<PackedAtom> atoms;
    Int repeats{1};
};

using PackedWord = std::vector<PackedBlock>;

inline PackedWord packed_atom(Letter p, Int exp) {
    if (exp == 0) return {};
    return {PackedBlock{{PackedAtom{p, std::move(exp)}}, 1}};
}

inline PackedWord packed_from_flat(const GeneratorWord& w) {
    PackedBlock block;
    for (auto& [p, s] : w) {
        if (!block.atoms.empty() && block.atoms.back().letter == p)
            block.atoms.back().exp += s;
        else
            block.atoms.push_back(PackedAtom{p, s});
        if (block.atoms.back().exp == 0) block.atoms.pop_back();
    }
    if (block.atoms.empty()) return {};
    return {std::move(block)};
}

inline void append_packed(PackedWord& w, PackedWord tail) {
    for (auto& b : tail) {
        if (b.repeats == 0 || b.atoms.empty()) continue;
        w.push_back(std::move(b));
    }
}

inline PackedWord operator+(PackedWord a, const PackedWord& b) {
    append_packed(a, b);
    return a;
}

inline PackedWord inverted_packed(const PackedWord& w) {
    PackedWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        PackedBlock b;
        b.repeats = it->repeats;
        b.atoms.reserve(it->atoms.size());
        for (auto a = it->atoms.rbegin(); a != it->atoms.rend(); ++a)
            b.atoms.push_back(PackedAtom{a->letter, -a->exp});
        out.push_back(std::move(b));
    }
    return out;
}

inline PackedWord shift_up_packed(const PackedWord& w) {
    PackedWord out = w;
    for (auto& b : out)
        for (auto& a : b.atoms) ++a.letter;
    return out;
}

inline IntMatrix evaluate_packed(const PackedWord& w, int d) {
    IntMatrix out = IntMatrix::identity(d);
    for (const PackedBlock& b : w) {
        IntMatrix block = IntMatrix::identity(d);
        for (const PackedAtom& a : b.atoms) block = block * generator_power(a.letter, d, a.exp);
        Int reps = b.repeats;
        if (reps < 0) {
            block = block.inverse();
            reps = -reps;
        }
        // exact matrix power by squaring
        IntMatrix acc = IntMatrix::identity(d);
        IntMatrix base = block;
        Int e = reps;
        while (e > 0) {
            if ((e & 1) != 0) acc = acc * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        out = out * acc;
    }
    return out;
}

inline IntVec apply_packed(const PackedWord& w, IntVec v, int d) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        bool small = it->repeats >= 0 && it->repeats <= 64;
        if (small) {
            long long reps = static_cast<long long>(it->repeats);
            for (long long r = 0; r < reps; ++r) {
                for (auto a = it->atoms.rbegin(); a != it->atoms.rend(); ++a) {
                    // L_p^k(v) = v + k v_p c_p
                    const Int& vp = v[static_cast<size_t>(letter_index(d, a->letter))];
                    if (vp == 0 || a->exp == 0) continue;
                    Int f = a->exp * vp;
                    for (int i = 0; i < d; ++i) {
                        Letter rl = index_letter(d, i);
                        if (rl == a->letter) continue;
                        v[static_cast<size_t>(i)] += rl < a->letter ? -f : f;
                    }
                }
            }
        } else {
            v = evaluate_packed({*it}, d) * v;
        }
    }
    return v;
}

inline Int packed_flat_length(const PackedWord& w) {
    Int total(0);
    for (const PackedBlock& b : w) {
        Int inner(0);
        for (const PackedAtom& a : b.atoms) inner += abs(a.exp);
        total += inner * abs(b.repeats);
    }
    return total;
}

// exact flat expansion; the caller is responsible for checking
// packed_flat_length first when the input may be adversarial
inline GeneratorWord flatten_packed(const PackedWord& w) {
    GeneratorWord out;
    for (const PackedBlock& b : w) {
        GeneratorWord block;
        for (const PackedAtom& a : b.atoms) {
            int s = a.exp > 0 ? 1 : -1;
            for (Int i = 0; i < abs(a.exp); ++i) block.emplace_back(a.letter, s);
        }
        if (b.repeats >= 0) {
            for (Int r = 0; r < b.repeats; ++r) out.insert(out.end(), block.begin(), block.end());
        } else {
            GeneratorWord inv = inverted(block);
            for (Int r = 0; r < -b.repeats; ++r) out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return out;
}

}  // namespace hyprv
