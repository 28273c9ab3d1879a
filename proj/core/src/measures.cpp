#include "hlb/measures.hpp"

#include "hlb/series.hpp"

#include <random>
#include <stdexcept>

namespace hlb {

OmegaPoint::OmegaPoint(std::vector<Rational> a, std::vector<Rational> b, Rational t_)
    : alpha(std::move(a)), beta(std::move(b)), t(std::move(t_)) {
    if (!(t > 0 && t < 1)) throw std::invalid_argument("need t in (0,1)");
    for (const auto* list : {&alpha, &beta})
        for (size_t i = 0; i < list->size(); ++i) {
            if ((*list)[i] < 0) throw std::invalid_argument("negative parameter");
            if (i && (*list)[i] > (*list)[i - 1])
                throw std::invalid_argument("parameters must be nonincreasing");
        }
    Rational total(0);
    for (const auto& x : alpha) total += x;
    for (const auto& x : beta) total += x / (1 - t);
    if (total > 1) throw std::invalid_argument("alpha/beta mass exceeds 1");
}

OmegaPoint OmegaPoint::haar(const Rational& t) {
    OmegaPoint w({}, {}, t);
    w.geometric_alpha = true;
    return w;
}

OmegaPoint OmegaPoint::plancherel(const Rational& t) { return OmegaPoint({}, {}, t); }

Rational OmegaPoint::gamma_tilde() const {
    if (geometric_alpha) return 0; // alpha sums to 1
    Rational total(1);
    for (const auto& x : alpha) total -= x;
    for (const auto& x : beta) total -= x / (1 - t);
    return total;
}

Rational OmegaPoint::p_value(int k) const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k == 1) return 1;
    Rational tk = rat_pow(t, k);
    if (geometric_alpha) return rat_pow(1 - t, k) / (1 - tk); // sum (1-t)^k t^{k(i-1)}
    Rational v(0);
    for (const auto& a : alpha) v += rat_pow(a, k);
    Rational bs(0);
    for (const auto& b : beta) bs += rat_pow(b, k);
    if (bs != 0) v += (k % 2 ? bs : -bs) / (1 - tk);
    return v;
}

namespace {
Rational omega_q_value(const Partition& lam, const OmegaPoint& omega) {
    PowerSumExpansion e = to_power_sums(lam);
    Rational total(0);
    for (const auto& [rho, c] : e.terms) {
        Rational v(1);
        for (int k : rho.parts()) v *= omega.p_value(k);
        total += c.eval(omega.t) * v;
    }
    return total;
}
} // namespace

Rational gl_harmonic(const Partition& lam, const OmegaPoint& omega) {
    return omega_q_value(lam, omega) / rat_pow(1 - omega.t, lam.size());
}

Rational gl_cylinder_mass(const Partition& lam, const OmegaPoint& omega, int q) {
    if (omega.t != Rational(1, q)) throw std::invalid_argument("need t = 1/q");
    long n = lam.size();
    return rat_pow(Rational(q), lam.n_stat() - n * (n - 1) / 2) * gl_harmonic(lam, omega);
}

Rational gl_level_mass(int n, const OmegaPoint& omega, int q) {
    if (omega.t != Rational(1, q)) throw std::invalid_argument("need t = 1/q");
    const Rational& t = omega.t;
    Rational hn;
    if (omega.geometric_alpha) {
        // closed form: h_n of the geometric family is (1-t)^n / (t;t)_n
        Rational poch(1), tt(1);
        for (int j = 1; j <= n; ++j) {
            tt *= t;
            poch *= 1 - tt;
        }
        hn = rat_pow(1 - t, n) / poch;
    } else {
        Series h = exp_series(omega.gamma_tilde(), n);
        for (const auto& b : omega.beta) h = h * q_exponential_series(b, t, n);
        for (const auto& a : omega.alpha) h = h * geometric_series(a, n);
        hn = h.coeff(n);
    }
    Rational poch(1), tt(1);
    for (int j = 1; j <= n; ++j) {
        tt *= t;
        poch *= 1 - tt;
    }
    return poch * hn / (rat_pow(1 - t, n) * rat_pow(t, (long)n * (n - 1) / 2));
}

Rational unitary_harmonic(const Partition& lam, const HLFunctional& phi, const Rational& t) {
    if (!(t > -1 && t < 0)) throw std::invalid_argument("need t in (-1,0)");
    if (phi.t != t) throw std::invalid_argument("functional was built at a different t");
    int n = lam.size();
    if (phi.parity != HLFunctional::Both &&
        (n % 2 == 0) != (phi.parity == HLFunctional::Even))
        throw std::invalid_argument("parity mismatch");
    QuadExt val = phi.apply_q_tilde(lam);
    if (n % 2) {
        QuadExt p1 = phi.p_value(Partition({1}));
        val = val / (QuadExt(1 - t) * p1);
    }
    QuadExt result = val / QuadExt(rat_pow(1 - t * t, n / 2));
    if (!result.is_rational())
        throw std::domain_error("harmonic value is irrational; check normalization");
    return result.rational_value();
}

Rational unitary_cylinder_mass(const Partition& lam, const HLFunctional& phi, int q) {
    Rational t(-1, q);
    long n = lam.size();
    return rat_pow(Rational(q), lam.n_stat() - n * (n - 1) / 2) * unitary_harmonic(lam, phi, t);
}

std::vector<Partition> markov_growth(const BranchingGraph& g, const VertexFunction& phi,
                                     int steps, uint64_t seed) {
    if (steps > g.lmax()) throw std::invalid_argument("steps exceed graph depth");
    std::mt19937_64 rng(seed);
    std::vector<Partition> path{g.levels()[0][0]};
    int cur = 0;
    for (int l = 0; l < steps; ++l) {
        Rational phimu = phi(g.levels()[l][cur]);
        if (phimu <= 0) throw std::invalid_argument("phi vanishes on a reachable vertex");
        std::vector<std::pair<int, Rational>> probs;
        Rational total(0);
        for (const auto& e : g.edges()) {
            if (e.level != l || e.from != cur) continue;
            Rational p = g.weight_value(e) * phi(g.vertex(e, true)) / phimu;
            if (p < 0) throw std::invalid_argument("negative transition probability");
            if (p == 0) continue;
            probs.emplace_back(e.to, p);
            total += p;
        }
        if (total != 1) throw std::invalid_argument("phi is not harmonic at " +
                                                    g.levels()[l][cur].str());
        Rational u(Integer(rng()), Integer(1) << 64);
        Rational cum(0);
        int chosen = probs.back().first;
        for (const auto& [to, p] : probs) {
            cum += p;
            if (u < cum) { chosen = to; break; }
        }
        cur = chosen;
        path.push_back(g.levels()[l + 1][cur]);
    }
    return path;
}

bool EmpiricalReport::all_within() const {
    for (const auto& e : edges)
        if (!e.within_3sigma) return false;
    return true;
}

EmpiricalReport empirical_check(const std::vector<std::vector<Partition>>& paths,
                                const BranchingGraph& g, const VertexFunction& phi,
                                const Partition& mu) {
    EmpiricalReport rep;
    // locate mu's level
    int level = -1, idx = -1;
    for (int l = 0; l <= g.lmax() && level < 0; ++l) {
        for (size_t i = 0; i < g.levels()[l].size(); ++i)
            if (g.levels()[l][i] == mu) { level = l; idx = (int)i; break; }
    }
    if (level < 0) throw std::invalid_argument("mu is not a vertex");
    Rational phimu = phi(mu);
    for (const auto& e : g.edges())
        if (e.level == level && e.from == idx) {
            Rational p = g.weight_value(e) * phi(g.vertex(e, true)) / phimu;
            if (p != 0) rep.edges.push_back({g.vertex(e, true), p, 0, false});
        }
    for (const auto& path : paths) {
        if ((int)path.size() <= level + 1 || !(path[level] == mu)) continue;
        ++rep.visits;
        for (auto& e : rep.edges)
            if (e.to == path[level + 1]) ++e.count;
    }
    for (auto& e : rep.edges) {
        if (rep.visits == 0) continue;
        // |count - visits p|^2 <= 9 visits p (1-p), all exact
        Rational diff = Rational(e.count) - Rational(rep.visits) * e.prob;
        e.within_3sigma = diff * diff <= Rational(9) * Rational(rep.visits) * e.prob * (1 - e.prob);
    }
    return rep;
}

} // namespace hlb
