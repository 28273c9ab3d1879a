#pragma once
#include "hlb/graphs.hpp"
#include "hlb/hl.hpp"
#include "hlb/partition.hpp"
#include "hlb/rational.hpp"

#include <cstdint>
#include <vector>

namespace hlb {

// Boundary parameter (alpha, beta) with deformation t in (0,1):
// finite nonincreasing nonnegative rational lists subject to
// sum(alpha) + sum(beta)/(1-t) <= 1.  The geometric family
// alpha_i = (1-t) t^{i-1} (infinitely supported) gets its own flag.
struct OmegaPoint {
    std::vector<Rational> alpha, beta;
    Rational t;
    bool geometric_alpha = false;

    OmegaPoint(std::vector<Rational> alpha, std::vector<Rational> beta, Rational t);
    static OmegaPoint haar(const Rational& t);
    static OmegaPoint plancherel(const Rational& t); // alpha = beta = 0

    Rational gamma_tilde() const;
    Rational p_value(int k) const; // p_k(omega) for k >= 2; p_1 = 1
};

// phi_omega(lam) = Q_lam(omega; t) / (1-t)^{|lam|}.
Rational gl_harmonic(const Partition& lam, const OmegaPoint& omega);

// q^{n(lam) - n(n-1)/2} (1 - 1/q)^{-n} Q_lam(omega; 1/q), n = |lam|;
// requires omega.t == 1/q.
Rational gl_cylinder_mass(const Partition& lam, const OmegaPoint& omega, int q);

// (t;t)_n h_n(omega) / ((1-t)^n t^{n(n-1)/2}) via the generating series
// H(omega)(z) = e^{gamma z} prod (-beta_i z; t)_inf / (1 - alpha_i z).
Rational gl_level_mass(int n, const OmegaPoint& omega, int q);

// phi(lam) = c Phi(Qt_lam) / (1-t^2)^{floor(|lam|/2)}, with c = 1 for even
// |lam| and c = 1/((1-t) Phi(p_1)) for odd |lam| (root normalization).
Rational unitary_harmonic(const Partition& lam, const HLFunctional& phi, const Rational& t);

// q^{n(lam) - N(N-1)/2} * unitary_harmonic at t = -1/q, N = |lam|.
Rational unitary_cylinder_mass(const Partition& lam, const HLFunctional& phi, int q);

// Seeded growth process on a branching graph: from the root, step to lam
// with probability W(lam, mu) phi(lam) / phi(mu).  Deterministic per seed:
// mt19937_64 draws interpreted as rationals r / 2^64 compared against
// exact cumulative probabilities.
std::vector<Partition> markov_growth(const BranchingGraph& g, const VertexFunction& phi,
                                     int steps, uint64_t seed);

struct EmpiricalEdge {
    Partition to;
    Rational prob;       // exact transition probability
    long long count = 0; // observed transitions
    bool within_3sigma = false;
};
struct EmpiricalReport {
    long long visits = 0; // observed departures from mu
    std::vector<EmpiricalEdge> edges;
    bool all_within() const;
};

EmpiricalReport empirical_check(const std::vector<std::vector<Partition>>& paths,
                                const BranchingGraph& g, const VertexFunction& phi,
                                const Partition& mu);

} // namespace hlb
