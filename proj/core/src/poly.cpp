#include "hlb/poly.hpp"

#include <stdexcept>

namespace hlb {

Poly Poly::t_power(int k) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    return Poly(std::move(c));
}

Poly Poly::one_minus_t_power(int k) {
    if (k == 0) return Poly();
    std::vector<Rational> c(k + 1, Rational(0));
    c[0] = 1;
    c[k] = -1;
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.c_), quot;
    int db = b.degree();
    if ((int)rem.size() - 1 >= db) quot.assign(rem.size() - db, Rational(0));
    while ((int)rem.size() - 1 >= db) {
        Rational f = rem.back() / b.c_.back();
        int shift = (int)rem.size() - 1 - db;
        quot[shift] = f;
        for (int i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational lead = a.leading();
    for (auto& x : a.c_) x /= lead;
    return a;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = 0; k < (int)c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (a != 1 || k == 0) {
            s += rat_str(a);
            if (!mono.empty()) s += "*";
        }
        s += mono;
    }
    return s;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        std::vector<Rational> nc(num_.coeffs()), dc(den_.coeffs());
        for (auto& x : nc) x /= lead;
        for (auto& x : dc) x /= lead;
        num_ = Poly(std::move(nc));
        den_ = Poly(std::move(dc));
    }
}

Rational RatFun::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(t) / d;
}

RatFun RatFun::operator-() const {
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

std::string RatFun::str() const {
    if (den_ == Poly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace hlb
