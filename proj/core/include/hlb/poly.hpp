#pragma once
#include "hlb/rational.hpp"

#include <string>
#include <vector>

namespace hlb {

// Univariate polynomial in t with rational coefficients, dense, trimmed.
class Poly {
public:
    Poly() = default;
    Poly(Rational c) : c_{std::move(c)} { trim(); }       // NOLINT: implicit
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t_power(int k);                           // t^k
    static Poly one_minus_t_power(int k);                 // 1 - t^k

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }     // -1 for zero
    Rational coeff(int k) const { return k < (int)c_.size() ? c_[k] : Rational(0); }
    Rational eval(const Rational& t) const;
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly&) const = default;

    // Division with remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    static Poly gcd(Poly a, Poly b);                      // monic gcd

    std::string str() const;                              // canonical, e.g. "1 - t^2"

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<Rational> c_;
};

// Rational function num/den in t; canonical: gcd removed, den monic and nonzero.
class RatFun {
public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT: implicit
    RatFun(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RatFun(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    Rational eval(const Rational& t) const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    bool operator==(const RatFun&) const = default;

    std::string str() const;                              // "num" or "(num)/(den)"

private:
    void normalize();
    Poly num_, den_;
};

// prod_{j=1}^{n} (1 - u t^{j-1}) for polynomial u and t the formal variable
// is a special case of this generic Pochhammer over any ring with * and -.
template <class T>
T pochhammer(const T& u, const T& t, int n) {
    T acc(1), tp(1);
    for (int j = 0; j < n; ++j) {
        acc = acc * (T(1) - u * tp);
        tp = tp * t;
    }
    return acc;
}

} // namespace hlb
