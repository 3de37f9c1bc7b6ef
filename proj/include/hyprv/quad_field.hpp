#pragma once

// Exact arithmetic in Q(sqrt 5): values a + b*sqrt(5) with rational a, b.
// Comparison is the real-number order, decided by sign analysis of a, b and
// a^2 - 5 b^2; no floating point anywhere.

#include <string>

#include "hyprv/errors.hpp"
#include "hyprv/int_matrix.hpp"  // for Int / Rat

namespace hyprv {

enum class Ordering { LT, EQ, GT };

class QuadRat {
public:
    QuadRat() : a_(0), b_(0) {}
    QuadRat(long long n) : a_(n), b_(0) {}
    QuadRat(Rat a, Rat b = 0) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadRat sqrt5() { return QuadRat(Rat(0), Rat(1)); }
    static QuadRat rational(long long num, long long den) { return QuadRat(Rat(num, den)); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadRat conjugate() const { return QuadRat(a_, -b_); }
    Rat norm() const { return a_ * a_ - 5 * b_ * b_; }

    QuadRat operator+(const QuadRat& o) const { return QuadRat(a_ + o.a_, b_ + o.b_); }
    QuadRat operator-(const QuadRat& o) const { return QuadRat(a_ - o.a_, b_ - o.b_); }
    QuadRat operator-() const { return QuadRat(-a_, -b_); }
    QuadRat operator*(const QuadRat& o) const {
        return QuadRat(a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    QuadRat operator/(const QuadRat& o) const {
        if (o.is_zero()) throw DivisionByZeroError("division by zero in Q(sqrt 5)");
        // conjugate rationalization: 1/(a+b s5) = (a - b s5)/(a^2 - 5 b^2)
        Rat n = o.norm();
        QuadRat num = *this * o.conjugate();
        return QuadRat(num.a_ / n, num.b_ / n);
    }

    QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
    QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
    QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
    QuadRat& operator/=(const QuadRat& o) { return *this = *this / o; }

    bool operator==(const QuadRat& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    // sign of the real number a + b sqrt(5)
    int sign() const {
        int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
        int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with 5 b^2
        Rat n = norm();
        int sn = n > 0 ? 1 : (n < 0 ? -1 : 0);
        return sa > 0 ? sn : -sn;
    }

    QuadRat abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        auto rat_str = [](const Rat& r) {
            std::string s = numerator(r).str();
            if (denominator(r) != 1) s += "/" + denominator(r).str();
            return s;
        };
        if (b_ == 0) return rat_str(a_);
        std::string s = rat_str(a_) + (b_ < 0 ? " - " : " + ");
        Rat ab = b_ < 0 ? Rat(-b_) : b_;
        s += rat_str(ab) + "*sqrt(5)";
        return s;
    }

private:
    Rat a_, b_;
};

inline Ordering compare(const QuadRat& x, const QuadRat& y) {
    int s = (x - y).sign();
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

inline Ordering abs_compare(const QuadRat& x, const QuadRat& y) {
    return compare(x.abs(), y.abs());
}

inline bool operator<(const QuadRat& x, const QuadRat& y) {
    return compare(x, y) == Ordering::LT;
}
inline bool operator>(const QuadRat& x, const QuadRat& y) {
    return compare(x, y) == Ordering::GT;
}

}  // namespace hyprv
