#pragma once

// Exact dense linear algebra over arbitrary-precision integers, plus the
// mod-2 matrices used for the symmetric-group reduction. Rows and columns
// of letter-indexed matrices follow the canonical decreasing letter order
// of alphabet.hpp; matrices act on column vectors.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyprv/errors.hpp"

namespace hyprv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}
    IntMatrix(int n, std::initializer_list<long long> entries) : IntMatrix(n) {
        size_t k = 0;
        for (long long v : entries) {
            if (k >= a_.size()) break;
            a_[k++] = v;
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    IntVec operator*(const IntVec& v) const {
        IntVec out(static_cast<size_t>(n_), Int(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != 0) out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool is_identity() const { return *this == identity(n_); }

    IntVec column(int c) const {
        IntVec out(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = at(i, c);
        return out;
    }

    IntVec row(int r) const {
        IntVec out(static_cast<size_t>(n_));
        for (int j = 0; j < n_; ++j) out[static_cast<size_t>(j)] = at(r, j);
        return out;
    }

    // Exact determinant, fraction-free Bareiss elimination.
    Int det() const {
        if (n_ == 0) return 1;
        std::vector<Int> m(a_);
        auto e = [&](int r, int c) -> Int& { return m[static_cast<size_t>(r) * n_ + c]; };
        Int prev(1);
        int sign = 1;
        for (int k = 0; k < n_ - 1; ++k) {
            if (e(k, k) == 0) {
                int piv = -1;
                for (int r = k + 1; r < n_; ++r)
                    if (e(r, k) != 0) {
                        piv = r;
                        break;
                    }
                if (piv < 0) return 0;
                for (int c = 0; c < n_; ++c) std::swap(e(k, c), e(piv, c));
                sign = -sign;
            }
            for (int i = k + 1; i < n_; ++i)
                for (int j = k + 1; j < n_; ++j) e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            prev = e(k, k);
        }
        return sign > 0 ? e(n_ - 1, n_ - 1) : -e(n_ - 1, n_ - 1);
    }

    // Exact inverse via Gauss-Jordan over rationals; requires every entry of
    // the inverse to be integral (true for the unimodular matrices this
    // library manipulates). Throws SingularMatrixError otherwise.
    IntMatrix inverse() const {
        std::vector<Rat> m(static_cast<size_t>(n_) * n_ * 2);
        auto e = [&](int r, int c) -> Rat& { return m[static_cast<size_t>(r) * (2 * n_) + c]; };
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) e(i, j) = Rat(at(i, j));
            e(i, n_ + i) = 1;
        }
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (e(r, col) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw SingularMatrixError("matrix not invertible");
            if (piv != col)
                for (int c = 0; c < 2 * n_; ++c) std::swap(e(col, c), e(piv, c));
            Rat p = e(col, col);
            for (int c = 0; c < 2 * n_; ++c) e(col, c) /= p;
            for (int r = 0; r < n_; ++r) {
                if (r == col || e(r, col) == 0) continue;
                Rat f = e(r, col);
                for (int c = 0; c < 2 * n_; ++c) e(r, c) -= f * e(col, c);
            }
        }
        IntMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Rat v = e(i, n_ + j);
                if (denominator(v) != 1) throw SingularMatrixError("inverse is not integral");
                out.at(i, j) = numerator(v);
            }
        return out;
    }

private:
    int n_;
    std::vector<Int> a_;
};

inline IntVec unit_vector(int n, int i) {
    IntVec v(static_cast<size_t>(n), Int(0));
    v[static_cast<size_t>(i)] = 1;
    return v;
}

inline IntVec ones_vector(int n) {
    return IntVec(static_cast<size_t>(n), Int(1));
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline Int content(const IntVec& v) {
    Int g(0);
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) {
    return content(v) == 1;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

// d x d matrix over F_2; a row is a bitmask (bit j = column j). Fits any d
// this library meets (d <= 64).
class F2Matrix {
public:
    F2Matrix() : n_(0) {}
    explicit F2Matrix(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {}

    static F2Matrix identity(int n) {
        F2Matrix m(n);
        for (int i = 0; i < n; ++i) m.rows_[static_cast<size_t>(i)] = (uint64_t{1} << i);
        return m;
    }

    int size() const { return n_; }
    uint64_t row(int r) const { return rows_[static_cast<size_t>(r)]; }

    bool get(int r, int c) const { return (rows_[static_cast<size_t>(r)] >> c) & 1; }
    void set(int r, int c, bool v) {
        uint64_t bit = uint64_t{1} << c;
        if (v)
            rows_[static_cast<size_t>(r)] |= bit;
        else
            rows_[static_cast<size_t>(r)] &= ~bit;
    }

    bool operator==(const F2Matrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }

    F2Matrix operator*(const F2Matrix& o) const {
        F2Matrix out(n_);
        for (int i = 0; i < n_; ++i) {
            uint64_t acc = 0;
            uint64_t r = rows_[static_cast<size_t>(i)];
            for (int k = 0; k < n_; ++k)
                if ((r >> k) & 1) acc ^= o.rows_[static_cast<size_t>(k)];
            out.rows_[static_cast<size_t>(i)] = acc;
        }
        return out;
    }

    // column c as a bitmask over rows
    uint64_t column_mask(int c) const {
        uint64_t out = 0;
        for (int i = 0; i < n_; ++i)
            if (get(i, c)) out |= (uint64_t{1} << i);
        return out;
    }

    uint64_t apply(uint64_t v) const {
        uint64_t out = 0;
        for (int c = 0; c < n_; ++c)
            if ((v >> c) & 1) out ^= column_mask(c);
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (uint64_t r : rows_) h = h * 1469598103934665603ull + std::hash<uint64_t>{}(r);
        return h;
    }

private:
    int n_;
    std::vector<uint64_t> rows_;
};

struct F2MatrixHash {
    size_t operator()(const F2Matrix& m) const { return m.hash(); }
};

}  // namespace hyprv
