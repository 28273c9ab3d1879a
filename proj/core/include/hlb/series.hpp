#pragma once
#include "hlb/rational.hpp"

#include <stdexcept>
#include <vector>

namespace hlb {

// Truncated power series in z with rational coefficients, exact through
// the stated order (inclusive).
class Series {
public:
    explicit Series(int order) : c_(order + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("negative order");
    }
    Series(int order, std::vector<Rational> coeffs) : Series(order) {
        for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }

    int order() const { return (int)c_.size() - 1; }
    const Rational& coeff(int n) const { return c_.at(n); }
    Rational& coeff(int n) { return c_.at(n); }

    Series operator+(const Series& o) const {
        Series r(std::min(order(), o.order()));
        for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Series operator*(const Series& o) const {
        Series r(std::min(order(), o.order()));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order() && j <= o.order(); ++j)
                if (i <= order()) r.c_[i + j] += c_[i] * o.c_[j];
        return r;
    }
    bool operator==(const Series&) const = default;

private:
    std::vector<Rational> c_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }

// e^{gamma z}: coefficients gamma^k / k!.
inline Series exp_series(const Rational& gamma, int order) {
    Series s(order);
    Rational c(1);
    s.coeff(0) = c;
    for (int k = 1; k <= order; ++k) {
        c = c * gamma / k;
        s.coeff(k) = c;
    }
    return s;
}

// 1/(1 - alpha z): geometric series.
inline Series geometric_series(const Rational& alpha, int order) {
    Series s(order);
    Rational c(1);
    s.coeff(0) = c;
    for (int k = 1; k <= order; ++k) {
        c *= alpha;
        s.coeff(k) = c;
    }
    return s;
}

// (-beta z; t)_infinity = prod_{j>=0} (1 + beta t^j z), by Euler's identity:
// coefficient of z^n is t^{n(n-1)/2} beta^n / prod_{j=1}^{n}(1-t^j).
inline Series q_exponential_series(const Rational& beta, const Rational& t, int order) {
    Series s(order);
    Rational c(1);
    s.coeff(0) = c;
    Rational tp(1); // t^{n-1}
    for (int n = 1; n <= order; ++n) {
        Rational tn = tp * t; // t^n
        if (tn == 1) throw std::domain_error("t must avoid roots of unity here");
        c = c * tp * beta / (1 - tn);
        s.coeff(n) = c;
        tp = tn;
    }
    return s;
}

} // namespace hlb
