#pragma once
#include "hlb/rational.hpp"

#include <stdexcept>

namespace hlb {

// Element a + b*sqrt(d) of a real quadratic extension of Q; d > 0 rational,
// fixed per value and required to match in arithmetic.  d need not be
// squarefree; with b == 0 the radicand is inert.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT: implicit
    QuadExt(Rational a, Rational b, Rational d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ <= 0) throw std::invalid_argument("radicand must be positive");
        if (b_ == 0) { d_ = 1; return; }
        // fold rational square roots back into the rational part
        Integer ns = sqrt(numerator(d_)), ds = sqrt(denominator(d_));
        if (ns * ns == numerator(d_) && ds * ds == denominator(d_)) {
            a_ += b_ * Rational(ns, ds);
            b_ = 0;
            d_ = 1;
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("value is irrational");
        return a_;
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt operator+(const QuadExt& o) const {
        check(o);
        return QuadExt(a_ + o.a_, b_ + o.b_, b_ != 0 ? d_ : o.d_);
    }
    QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
    QuadExt operator*(const QuadExt& o) const {
        check(o);
        Rational d = b_ != 0 ? d_ : o.d_;
        return QuadExt(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
    }
    QuadExt operator/(const QuadExt& o) const {
        check(o);
        Rational nrm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
        if (nrm == 0) throw std::domain_error("division by zero");
        return *this * QuadExt(o.a_ / nrm, -o.b_ / nrm, o.d_);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    bool operator==(const QuadExt& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_ == 0 || d_ == o.d_);
    }

    // Sign of a + b*sqrt(d) as a real number.
    int sign() const {
        int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        int sb = b_ == 0 ? 0 : (b_ > 0 ? 1 : -1);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with b^2 d
        Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

private:
    void check(const QuadExt& o) const {
        if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
            throw std::invalid_argument("mixed radicands");
    }
    Rational a_, b_, d_;
};

} // namespace hlb
