#pragma once

// The third symmetric power rho of the standard SL(2) representation, the
// invariant form J, and the exact pinching/twisting computations for the
// group generated by A = rho([[1,1],[0,1]]) and B = rho([[1,0],[1,1]]):
// eigenvalues of A.B, the eigenvector matrix M, T = M^{-1} A M and its
// second compound T^2 of 2x2 minors.

#include <array>
#include <utility>
#include <vector>

#include "hyprv/int_matrix.hpp"
#include "hyprv/quad_field.hpp"

namespace hyprv {

struct SL2Int {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
};

// the 4x4 matrix of rho(g) in the basis {X^3, X^2 Y, X Y^2, Y^3}
inline IntMatrix rho(const SL2Int& g) {
    if (g.det() != 1) throw NotUnimodularError("rho needs det = 1");
    const Int &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    IntMatrix m(4);
    Int row0[4] = {a * a * a, a * a * b, a * b * b, b * b * b};
    Int row1[4] = {3 * a * a * c, a * a * d + 2 * a * b * c, b * b * c + 2 * a * b * d, 3 * b * b * d};
    Int row2[4] = {3 * a * c * c, b * c * c + 2 * a * c * d, a * d * d + 2 * b * c * d, 3 * b * d * d};
    Int row3[4] = {c * c * c, c * c * d, c * d * d, d * d * d};
    for (int j = 0; j < 4; ++j) {
        m.at(0, j) = row0[j];
        m.at(1, j) = row1[j];
        m.at(2, j) = row2[j];
        m.at(3, j) = row3[j];
    }
    return m;
}

// Square matrix over Q(sqrt 5).
class QuadMatrix {
public:
    QuadMatrix() : n_(0) {}
    explicit QuadMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static QuadMatrix identity(int n) {
        QuadMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = QuadRat(1);
        return m;
    }

    static QuadMatrix from_int(const IntMatrix& m) {
        QuadMatrix out(m.size());
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) out.at(i, j) = QuadRat(Rat(m.at(i, j)));
        return out;
    }

    int size() const { return n_; }
    QuadRat& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const QuadRat& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    bool operator==(const QuadMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const QuadMatrix& o) const { return !(*this == o); }

    QuadMatrix operator*(const QuadMatrix& o) const {
        QuadMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const QuadRat& v = at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) += v * o.at(k, j);
            }
        return out;
    }

    QuadMatrix transpose() const {
        QuadMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    QuadMatrix inverse() const {
        int n = n_;
        std::vector<QuadRat> m(static_cast<size_t>(n) * n * 2);
        auto e = [&](int r, int c) -> QuadRat& { return m[static_cast<size_t>(r) * (2 * n) + c]; };
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) e(i, j) = at(i, j);
            e(i, n + i) = QuadRat(1);
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!e(r, col).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw SingularMatrixError("matrix over Q(sqrt 5) not invertible");
            if (piv != col)
                for (int c = 0; c < 2 * n; ++c) std::swap(e(col, c), e(piv, c));
            QuadRat pv = e(col, col);
            for (int c = 0; c < 2 * n; ++c) e(col, c) /= pv;
            for (int r = 0; r < n; ++r) {
                if (r == col || e(r, col).is_zero()) continue;
                QuadRat f = e(r, col);
                for (int c = 0; c < 2 * n; ++c) e(r, c) -= f * e(col, c);
            }
        }
        QuadMatrix out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j) = e(i, n + j);
        return out;
    }

private:
    int n_;
    std::vector<QuadRat> a_;
};

inline std::vector<QuadRat> mat_vec(const QuadMatrix& m, const std::vector<QuadRat>& v) {
    std::vector<QuadRat> out(static_cast<size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
    return out;
}

// J = [[0,0,0,-1],[0,0,1/3,0],[0,-1/3,0,0],[1,0,0,0]]
inline QuadMatrix sym_cube_form() {
    QuadMatrix j(4);
    j.at(0, 3) = QuadRat(Rat(-1));
    j.at(1, 2) = QuadRat(Rat(1, 3));
    j.at(2, 1) = QuadRat(Rat(-1, 3));
    j.at(3, 0) = QuadRat(Rat(1));
    return j;
}

inline bool check_J_invariance(const SL2Int& g) {
    QuadMatrix r = QuadMatrix::from_int(rho(g));
    QuadMatrix j = sym_cube_form();
    return r.transpose() * j * r == j;
}

// monic quadratic x^2 + c1 x + c0
struct Quadratic {
    Int c1, c0;
    bool operator==(const Quadratic& o) const { return c1 == o.c1 && c0 == o.c0; }
};

// characteristic polynomial factors of rho(g) with det(g) = 1 substituted:
// (x^2 - tr x + 1)(x^2 - (tr^3 - 3 tr) x + 1)
inline std::pair<Quadratic, Quadratic> charpoly_factors(const SL2Int& g) {
    Int tr = g.a + g.d;
    return {Quadratic{-tr, 1}, Quadratic{-(tr * tr * tr - 3 * tr), 1}};
}

// coefficients of det(xI - m), degree-n monic, exact (Faddeev-LeVerrier)
inline std::vector<Rat> charpoly(const IntMatrix& m) {
    int n = m.size();
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    QuadMatrix mm = QuadMatrix::from_int(m);  // rational arithmetic is enough
    QuadMatrix acc = QuadMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        acc = mm * acc;
        // trace
        QuadRat tr;
        for (int i = 0; i < n; ++i) tr += acc.at(i, i);
        Rat ck = -tr.a() / k;
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) acc.at(i, i) += QuadRat(ck);
    }
    return c;
}

// roots of x^2 + c1 x + c0 in Q(sqrt 5); requires the discriminant to be
// 5 times a rational square (true for every factor met here)
inline std::pair<QuadRat, QuadRat> quadratic_roots_sqrt5(const Quadratic& qq) {
    Rat disc = Rat(qq.c1) * Rat(qq.c1) - 4 * Rat(qq.c0);
    // disc = 5 s^2 with s rational, or a rational square
    auto rational_sqrt = [](const Rat& r) -> std::pair<bool, Rat> {
        if (r < 0) return {false, 0};
        Int num = numerator(r), den = denominator(r);
        Int sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
        if (sn * sn == num && sd * sd == den) return {true, Rat(sn, sd)};
        return {false, 0};
    };
    QuadRat sq;  // sqrt(disc) as an element of Q(sqrt 5)
    if (auto [ok, s] = rational_sqrt(disc); ok)
        sq = QuadRat(s);
    else if (auto [ok5, s5] = rational_sqrt(disc / 5); ok5)
        sq = QuadRat(Rat(0), s5);
    else
        throw Error("discriminant is not a square in Q(sqrt 5)");
    QuadRat half(Rat(1, 2));
    QuadRat mc1(Rat(-qq.c1));
    return {(mc1 + sq) * half, (mc1 - sq) * half};
}

inline SL2Int sl2_gen_upper() {
    return SL2Int{1, 1, 0, 1};
}
inline SL2Int sl2_gen_lower() {
    return SL2Int{1, 0, 1, 1};
}

// Exact eigenvalues of A.B = rho([[2,1],[1,1]]), sorted decreasing; asserts
// four real values with pairwise distinct absolute values.
inline std::vector<QuadRat> pinching_check() {
    auto [f1, f2] = charpoly_factors(SL2Int{2, 1, 1, 1});
    auto [r1a, r1b] = quadratic_roots_sqrt5(f1);
    auto [r2a, r2b] = quadratic_roots_sqrt5(f2);
    std::vector<QuadRat> ev{r2a, r1a, r1b, r2b};
    for (size_t i = 0; i + 1 < ev.size(); ++i)
        if (!(ev[i] > ev[i + 1])) throw Error("eigenvalues not sorted");
    for (size_t i = 0; i < ev.size(); ++i)
        for (size_t j = i + 1; j < ev.size(); ++j)
            if (abs_compare(ev[i], ev[j]) == Ordering::EQ) throw Error("eigenvalue moduli are not distinct");
    return ev;
}

// The eigenvector matrix M, scaled to a last row of ones (columns ordered
// by the eigenvalues 9+4s5, (3+s5)/2, (3-s5)/2, 9-4s5).
inline QuadMatrix eigenvector_matrix() {
    QuadRat s5 = QuadRat::sqrt5();
    QuadRat lam = QuadRat(9) + QuadRat(4) * s5;           // 9 + 4 sqrt5
    QuadRat lamc = lam.conjugate();                       // 9 - 4 sqrt5
    QuadRat mu = (QuadRat(3) + s5) * QuadRat(Rat(1, 2));  // (3+sqrt5)/2
    QuadRat muc = mu.conjugate();
    QuadMatrix m(4);
    auto outer_col = [&](int c, const QuadRat& l) {
        m.at(0, c) = QuadRat(Rat(-1, 4)) + l * QuadRat(Rat(1, 4));
        m.at(1, c) = QuadRat(Rat(9, 8)) + l * QuadRat(Rat(3, 8));
        m.at(2, c) = QuadRat(Rat(-15, 8)) + l * QuadRat(Rat(3, 8));
        m.at(3, c) = QuadRat(1);
    };
    auto inner_col = [&](int c, const QuadRat& l) {
        m.at(0, c) = QuadRat(1) - l;
        m.at(1, c) = QuadRat(-2) + l;
        m.at(2, c) = l;
        m.at(3, c) = QuadRat(1);
    };
    outer_col(0, lam);
    inner_col(1, mu);
    inner_col(2, muc);
    outer_col(3, lamc);
    return m;
}

// second compound: 2x2 minors over the ordered pair basis {12,13,14,23,24,34}
inline QuadMatrix second_compound(const QuadMatrix& t) {
    static const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    QuadMatrix out(6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            auto [i, j] = pairs[static_cast<size_t>(r)];
            auto [k, l] = pairs[static_cast<size_t>(c)];
            out.at(r, c) = t.at(i, k) * t.at(j, l) - t.at(i, l) * t.at(j, k);
        }
    return out;
}

struct TwistingResult {
    QuadMatrix t;       // M^{-1} A M
    QuadMatrix t_wedge; // second compound of t
    bool all_nonzero;
};

inline TwistingResult twisting_check() {
    IntMatrix a_int = rho(sl2_gen_upper());
    IntMatrix ab = rho(SL2Int{2, 1, 1, 1});
    QuadMatrix m = eigenvector_matrix();

    // columns of M are eigenvectors of A.B for the sorted eigenvalues
    QuadMatrix abq = QuadMatrix::from_int(ab);
    std::vector<QuadRat> ev = pinching_check();
    for (int c = 0; c < 4; ++c) {
        std::vector<QuadRat> col(4);
        for (int i = 0; i < 4; ++i) col[static_cast<size_t>(i)] = m.at(i, c);
        std::vector<QuadRat> img = mat_vec(abq, col);
        for (int i = 0; i < 4; ++i)
            if (img[static_cast<size_t>(i)] != ev[static_cast<size_t>(c)] * col[static_cast<size_t>(i)])
                throw Error("column of M is not an eigenvector");
    }

    TwistingResult out{QuadMatrix(4), QuadMatrix(6), true};
    out.t = m.inverse() * QuadMatrix::from_int(a_int) * m;
    out.t_wedge = second_compound(out.t);
    for (int i = 0; i < 4 && out.all_nonzero; ++i)
        for (int j = 0; j < 4; ++j)
            if (out.t.at(i, j).is_zero()) {
                out.all_nonzero = false;
                break;
            }
    for (int i = 0; i < 6 && out.all_nonzero; ++i)
        for (int j = 0; j < 6; ++j)
            if (out.t_wedge.at(i, j).is_zero()) {
                out.all_nonzero = false;
                break;
            }
    return out;
}

}  // namespace hyprv
