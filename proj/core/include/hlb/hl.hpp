#pragma once
#include "hlb/partition.hpp"
#include "hlb/poly.hpp"
#include "hlb/quadext.hpp"

#include <functional>
#include <map>
#include <vector>

namespace hlb {

// Symmetric polynomial in a fixed number of variables, coefficients in Q(t).
// Stored by dominant exponents (i.e. in the monomial-symmetric basis); the
// full exponent-vector expansion is materialized on demand.
class SymPoly {
public:
    explicit SymPoly(int nvars) : nvars_(nvars) {}
    SymPoly(int nvars, std::map<Partition, RatFun> terms);

    // Builds from an arbitrary exponent-vector map, verifying symmetry.
    static SymPoly from_monomials(int nvars, const std::map<std::vector<int>, RatFun>& mono);
    static SymPoly monomial_basis(int nvars, const Partition& lam); // m_lambda
    static SymPoly power_sum(int nvars, int k);                     // p_k

    int nvars() const { return nvars_; }
    const std::map<Partition, RatFun>& terms() const { return terms_; }
    RatFun coeff(const Partition& lam) const;
    std::map<std::vector<int>, RatFun> monomials() const; // full expansion

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly scale(const RatFun& c) const;
    bool operator==(const SymPoly&) const = default;

private:
    int nvars_;
    std::map<Partition, RatFun> terms_; // zero coefficients omitted
};

// Expansion sum_rho c_rho p_rho of a homogeneous symmetric function.
struct PowerSumExpansion {
    int degree = 0;
    std::map<Partition, RatFun> terms;
};

// Single-box Pieri coefficient: (1-t) p_1 Q_mu = sum psi Q_lambda.
RatFun psi_single(const Partition& mu, const Partition& lam);

// Two-box Pieri coefficient: (1-t^2) p_2 Qt_mu = sum xi Qt_lambda,
// where Qt_lambda = (-1)^{n(lambda)} Q_lambda.  Zero when lambda does not
// cover mu by a vertical domino or two boxes in consecutive columns.
RatFun xi_double(const Partition& mu, const Partition& lam);

// Same coefficient reconstructed from single-box data:
// (-1)^{n(lam)-n(mu)} (2 psi_{lam/mu} - sum_nu psi_{nu/mu} psi_{lam/nu}),
// with the two-box horizontal-strip psi given by its case analysis.
RatFun xi_from_single_steps(const Partition& mu, const Partition& lam);

// b_lambda(t) = prod_i prod_{j=1}^{m_i} (1 - t^j).
Poly b_factor(const Partition& lam);

// Q_lambda(x_1..x_N; t) via antisymmetrization; any N >= l(lambda) is
// accepted, but only N >= |lambda| gives a faithful degree-|lambda|
// expansion for basis conversions.
SymPoly hl_q_oracle(const Partition& lam, int nvars);

// p-basis expansion of Q_lambda, obtained from the oracle in |lambda|
// variables by solving against the monomial expansions of the p_rho.
PowerSumExpansion to_power_sums(const Partition& lam);

// Closed form for one-row shapes: Q_(r) = sum_rho z_rho^{-1}
// prod_i (1-t^{rho_i}) p_rho, from the generating series
// sum_r Q_(r) z^r = exp(sum_k (1-t^k) p_k z^k / k).
PowerSumExpansion one_row_power_sums(int r);

// <p_rho, p_sigma> = delta z_rho prod (1-t^{rho_i})^{-1}.
RatFun hl_inner_p(const Partition& rho, const Partition& sigma);

bool verify_pieri_p1(const Partition& mu);
bool verify_pieri_p2(const Partition& mu);

// Substitutes p_1 -> 1, p_k -> sum alpha_i^k + (-1)^{k-1} (1-t^k)^{-1} sum beta_i^k.
Rational specialize_power_sums(const PowerSumExpansion& e,
                               const std::vector<Rational>& alpha,
                               const std::vector<Rational>& beta,
                               const Rational& t);

// Linear functional on Sym given by its values on the p-basis, together
// with the parity of the graded pieces it is meant to pair with.
struct HLFunctional {
    enum Parity { Even, Odd, Both } parity;
    Rational t;                                        // fixed in (-1,0)
    Rational radicand;                                 // for QuadExt values; 1 if rational
    std::function<QuadExt(const Partition&)> p_value;  // rho -> Phi(p_rho)

    QuadExt apply_q(const Partition& lam) const;       // Phi(Q_lambda)
    QuadExt apply_q_tilde(const Partition& lam) const; // Phi(Qt_lambda)
};

HLFunctional plancherel_functional(HLFunctional::Parity parity, const Rational& t);
// m = 0 encodes the principal specialization of infinite rank.
HLFunctional principal_functional(int m, const Rational& t);
HLFunctional two_point_functional(const Rational& a1, const Rational& a2, const Rational& t);

// Closed form for principal values, used to cross-check apply_q.
QuadExt principal_q_value(int m, const Rational& t, const Partition& lam);

// Kostka number K(lambda, nu): semistandard tableaux of shape lambda,
// content nu (exposed for tests).
long kostka_number(const Partition& lam, const Partition& nu);

} // namespace hlb
