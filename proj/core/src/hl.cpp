#include "hlb/hl.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hlb {

// ---------------------------------------------------------------------------
// SymPoly

SymPoly::SymPoly(int nvars, std::map<Partition, RatFun> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.length() > nvars_)
            throw std::invalid_argument("monomial needs more variables");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

RatFun SymPoly::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatFun() : it->second;
}

namespace {
// Distinct permutations of the padded exponent vector of lam, ascending start.
std::vector<std::vector<int>> exponent_orbit(const Partition& lam, int nvars) {
    std::vector<int> v(nvars, 0);
    for (int i = 0; i < lam.length(); ++i) v[i] = lam.parts()[i];
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do out.push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}
} // namespace

std::map<std::vector<int>, RatFun> SymPoly::monomials() const {
    std::map<std::vector<int>, RatFun> out;
    for (const auto& [lam, c] : terms_)
        for (auto& e : exponent_orbit(lam, nvars_)) out.emplace(std::move(e), c);
    return out;
}

SymPoly SymPoly::from_monomials(int nvars, const std::map<std::vector<int>, RatFun>& mono) {
    std::map<Partition, RatFun> terms;
    std::map<Partition, size_t> seen;
    for (const auto& [e, c] : mono) {
        if ((int)e.size() != nvars) throw std::invalid_argument("exponent size mismatch");
        if (c.is_zero()) continue;
        std::vector<int> s(e);
        std::sort(s.rbegin(), s.rend());
        Partition lam(std::move(s));
        auto [it, fresh] = terms.emplace(lam, c);
        if (!fresh && !(it->second == c))
            throw std::invalid_argument("not symmetric: unequal orbit coefficients");
        ++seen[lam];
    }
    for (const auto& [lam, count] : seen)
        if (count != exponent_orbit(lam, nvars).size())
            throw std::invalid_argument("not symmetric: incomplete orbit");
    return SymPoly(nvars, std::move(terms));
}

SymPoly SymPoly::monomial_basis(int nvars, const Partition& lam) {
    return SymPoly(nvars, {{lam, RatFun(1L)}});
}

SymPoly SymPoly::power_sum(int nvars, int k) {
    if (k < 1) throw std::invalid_argument("power sum index must be positive");
    return monomial_basis(nvars, Partition({k}));
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    std::map<Partition, RatFun> terms(terms_);
    for (const auto& [lam, c] : o.terms_) {
        auto [it, fresh] = terms.emplace(lam, c);
        if (!fresh) it->second += c;
    }
    return SymPoly(nvars_, std::move(terms));
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + o.scale(RatFun(-1L)); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    auto a = monomials(), b = o.monomials();
    std::map<std::vector<int>, RatFun> prod;
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            // product of symmetric polynomials is symmetric: keep dominant reps
            if (!std::is_sorted(e.begin(), e.end(), std::greater<int>())) continue;
            auto [it, fresh] = prod.try_emplace(e, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    std::map<Partition, RatFun> terms;
    for (auto& [e2, c] : prod)
        if (!c.is_zero()) terms.emplace(Partition(std::vector<int>(e2)), std::move(c));
    return SymPoly(nvars_, std::move(terms));
}

SymPoly SymPoly::scale(const RatFun& c) const {
    std::map<Partition, RatFun> terms;
    if (!c.is_zero())
        for (const auto& [lam, x] : terms_) terms.emplace(lam, x * c);
    return SymPoly(nvars_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

// eta <= lam with lam/eta a horizontal strip of size r
void hstrip_preds(const Partition& lam, int r, std::vector<Partition>& out) {
    std::vector<int> eta(lam.length(), 0);
    // choose eta_i in [max(lam_{i+1}, ...), lam_i] with eta decreasing and
    // the strip condition eta_i >= lam_{i+1}
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == lam.length()) {
            if (rem == 0) out.emplace_back(std::vector<int>(eta));
            return;
        }
        int lo = lam.part(i + 1), hi = lam.parts()[i];
        if (i > 0) hi = std::min(hi, eta[i - 1]);
        for (int v = hi; v >= lo; --v) {
            if (lam.parts()[i] - v > rem) break;
            eta[i] = v;
            rec(i + 1, rem - (lam.parts()[i] - v));
        }
        eta[i] = 0;
    };
    rec(0, r);
}

} // namespace

long kostka_number(const Partition& lam, const Partition& nu) {
    static std::map<std::pair<Partition, Partition>, long> memo;
    static std::mutex mx;
    if (lam.size() != nu.size()) return 0;
    if (lam.size() == 0) return 1;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = memo.find({lam, nu});
        if (it != memo.end()) return it->second;
    }
    // peel the last content row
    std::vector<int> rest(nu.parts());
    int r = rest.back();
    rest.pop_back();
    Partition nu2(std::move(rest));
    std::vector<Partition> preds;
    hstrip_preds(lam, r, preds);
    long total = 0;
    for (const auto& eta : preds) total += kostka_number(eta, nu2);
    std::lock_guard<std::mutex> lk(mx);
    memo.emplace(std::make_pair(lam, nu), total);
    return total;
}

// ---------------------------------------------------------------------------
// The antisymmetrization oracle

namespace {

using IPoly = std::vector<long long>; // integer polynomial in t

void ip_add(IPoly& a, const IPoly& b, long long factor, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += factor * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly ip_to_poly(const IPoly& a) {
    std::vector<Rational> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return Poly(std::move(c));
}

constexpr int kExpBits = 6; // per-variable exponent field; enough through N=10

uint64_t pack(const std::vector<int>& e) {
    uint64_t k = 0;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= (1 << kExpBits)) throw std::domain_error("exponent overflow");
        k |= (uint64_t)e[i] << (kExpBits * i);
    }
    return k;
}

// prod_{i<j} (x_i - t x_j), expanded; memoized per variable count
const std::unordered_map<uint64_t, IPoly>& vandermonde_q_product(int nvars) {
    static std::map<int, std::unordered_map<uint64_t, IPoly>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(nvars);
    if (it != memo.end()) return it->second;
    std::unordered_map<uint64_t, IPoly> cur;
    cur[0] = IPoly{1};
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            std::unordered_map<uint64_t, IPoly> next;
            next.reserve(cur.size() * 2);
            for (const auto& [key, c] : cur) {
                ip_add(next[key + ((uint64_t)1 << (kExpBits * i))], c, 1, 0);
                ip_add(next[key + ((uint64_t)1 << (kExpBits * j))], c, -1, 1);
            }
            cur = std::move(next);
        }
    return memo.emplace(nvars, std::move(cur)).first->second;
}

// Q_lambda in the monomial-symmetric basis.
std::map<Partition, RatFun> hl_q_m_basis(const Partition& lam, int nvars) {
    static std::map<std::pair<Partition, int>, std::map<Partition, RatFun>> memo;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = memo.find({lam, nvars});
        if (it != memo.end()) return it->second;
    }
    if (lam.length() > nvars) throw std::invalid_argument("too few variables");

    // antisymmetrize x^{lam+e} over the expansion of prod (x_i - t x_j):
    // only strictly decreasing exponent rearrangements survive
    const auto& pi = vandermonde_q_product(nvars);
    std::unordered_map<uint64_t, IPoly> alternant; // strictly decreasing beta, packed
    std::vector<int> f(nvars);
    for (const auto& [key, c] : pi) {
        for (int i = 0; i < nvars; ++i)
            f[i] = (int)((key >> (kExpBits * i)) & ((1 << kExpBits) - 1)) + lam.part(i);
        // sort descending, tracking the permutation sign; drop repeats
        int sign = 1;
        bool dup = false;
        for (int i = 1; i < nvars && !dup; ++i)
            for (int j = i; j > 0; --j) {
                if (f[j] == f[j - 1]) { dup = true; break; }
                if (f[j] > f[j - 1]) { std::swap(f[j], f[j - 1]); sign = -sign; }
                else break;
            }
        if (dup) continue;
        ip_add(alternant[pack(f)], c, sign, 0);
    }

    // a_{mu+delta} / a_delta = s_mu, expanded via Kostka numbers
    std::map<Partition, IPoly> acc;
    for (const auto& [bkey, c] : alternant) {
        if (c.empty()) continue;
        std::vector<int> mu(nvars);
        for (int i = 0; i < nvars; ++i)
            mu[i] = (int)((bkey >> (kExpBits * i)) & ((1 << kExpBits) - 1)) - (nvars - 1 - i);
        Partition muP(std::move(mu));
        for (const auto& nu : enumerate_partitions(muP.size())) {
            if (nu.length() > nvars) continue; // m_nu vanishes in nvars variables
            long k = kostka_number(muP, nu);
            if (k) ip_add(acc[nu], c, k, 0);
        }
    }

    // Q = (b_lam / v_lam) * P-sum; the ratio collapses to
    // (1-t)^{nvars} / prod_{j=1}^{m0}(1-t^j) with m0 = nvars - l(lam)
    Poly numf(Rational(1)), denf(Rational(1));
    for (int i = 0; i < nvars; ++i) numf *= Poly::one_minus_t_power(1);
    for (int j = 1; j <= nvars - lam.length(); ++j) denf *= Poly::one_minus_t_power(j);
    RatFun factor{numf, denf};

    std::map<Partition, RatFun> out;
    for (const auto& [nu, c] : acc) {
        RatFun v = RatFun(ip_to_poly(c)) * factor;
        if (!v.is_zero()) out.emplace(nu, std::move(v));
    }
    std::lock_guard<std::mutex> lk(mx);
    return memo.emplace(std::make_pair(lam, nvars), std::move(out)).first->second;
}

} // namespace

SymPoly hl_q_oracle(const Partition& lam, int nvars) {
    if (nvars < lam.length())
        throw std::invalid_argument("need at least l(lambda) variables");
    return SymPoly(nvars, hl_q_m_basis(lam, nvars));
}

// ---------------------------------------------------------------------------
// Pieri coefficients

namespace {
// column of the single added box, or 0 if lam does not cover mu
int added_column(const Partition& mu, const Partition& lam) {
    if (lam.size() != mu.size() + 1 || !lam.contains(mu)) return 0;
    for (int i = 0; i < lam.length(); ++i)
        if (lam.parts()[i] != mu.part(i)) return lam.parts()[i];
    return 0;
}
} // namespace

RatFun psi_single(const Partition& mu, const Partition& lam) {
    int k = added_column(mu, lam);
    if (k == 0) throw std::invalid_argument("not a single-box cover");
    if (k == 1) return RatFun(1L);
    return RatFun(Poly::one_minus_t_power(mu.mult(k - 1)));
}

RatFun xi_double(const Partition& mu, const Partition& lam) {
    if (lam.size() != mu.size() + 2) throw std::invalid_argument("size mismatch");
    for (const auto& [cand, dc] : double_covers(mu)) {
        if (!(cand == lam)) continue;
        int k = dc.column;
        if (dc.kind == DoubleCoverCase::VerticalDomino) {
            if (k == 1) return RatFun(1L); // t^{m_0} and t^{m_0 - 1} both read 0
            int m = mu.mult(k - 1);
            return RatFun(Poly::one_minus_t_power(m) * Poly::one_minus_t_power(m - 1));
        }
        // one box in each of columns k, k+1
        Poly mt{std::vector<Rational>{Rational(0), Rational(-1)}}; // -t
        Poly head(Rational(1));
        for (int i = 0; i < mu.mult(k); ++i) head *= mt;
        Poly onept{std::vector<Rational>{Rational(1), Rational(1)}}; // 1+t
        Poly tail = k == 1 ? Poly(Rational(1)) : Poly::one_minus_t_power(mu.mult(k - 1));
        return RatFun(head * onept * tail);
    }
    return RatFun();
}

RatFun xi_from_single_steps(const Partition& mu, const Partition& lam) {
    if (lam.size() != mu.size() + 2 || !lam.contains(mu))
        return RatFun();
    std::vector<int> cols;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = mu.part(i); j < lam.parts()[i]; ++j) cols.push_back(j + 1);
    std::sort(cols.begin(), cols.end());
    // horizontal-strip psi for the two-box skew, by case
    RatFun strip;
    if (cols[0] == cols[1]) {
        strip = RatFun(); // vertical domino: not a horizontal strip
    } else {
        Poly a = cols[0] == 1 ? Poly(Rational(1)) : Poly::one_minus_t_power(mu.mult(cols[0] - 1));
        if (cols[1] == cols[0] + 1) strip = RatFun(a);
        else strip = RatFun(a * Poly::one_minus_t_power(mu.mult(cols[1] - 1)));
    }
    RatFun chain;
    for (const auto& [nu, k] : single_covers(mu)) {
        (void)k;
        if (lam.contains(nu) && lam.size() == nu.size() + 1)
            chain += psi_single(mu, nu) * psi_single(nu, lam);
    }
    RatFun val = RatFun(2L) * strip - chain;
    long dn = lam.n_stat() - mu.n_stat();
    return dn % 2 ? -val : val;
}

Poly b_factor(const Partition& lam) {
    Poly b(Rational(1));
    for (int i = 1; i <= (lam.length() ? lam.parts()[0] : 0); ++i)
        for (int j = 1; j <= lam.mult(i); ++j) b *= Poly::one_minus_t_power(j);
    return b;
}

// ---------------------------------------------------------------------------
// Power-sum expansion

namespace {

// monomial expansions of all p_rho with |rho| = n, in n variables
const std::map<Partition, std::map<Partition, Rational>>& p_rho_m_table(int n) {
    static std::map<int, std::map<Partition, std::map<Partition, Rational>>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::map<Partition, std::map<Partition, Rational>> table;
    for (const auto& rho : enumerate_partitions(n)) {
        SymPoly p = SymPoly::monomial_basis(n, Partition{});
        for (int part : rho.parts()) p = p * SymPoly::power_sum(n, part);
        std::map<Partition, Rational> row;
        for (const auto& [nu, c] : p.terms()) row.emplace(nu, c.eval(Rational(0)));
        table.emplace(rho, std::move(row));
    }
    return memo.emplace(n, std::move(table)).first->second;
}

} // namespace

PowerSumExpansion to_power_sums(const Partition& lam) {
    static std::map<Partition, PowerSumExpansion> memo;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
    }
    int n = lam.size();
    PowerSumExpansion out;
    out.degree = n;
    if (n == 0) {
        out.terms.emplace(Partition{}, RatFun(1L));
    } else {
        auto q = hl_q_m_basis(lam, n);
        const auto& table = p_rho_m_table(n);
        std::vector<Partition> rhos = enumerate_partitions(n), nus = rhos;
        int d = (int)rhos.size();
        // solve A c = b where A[nu][rho] is the m_nu coefficient of p_rho
        std::vector<std::vector<Rational>> A(d, std::vector<Rational>(d, Rational(0)));
        std::vector<RatFun> b(d);
        for (int j = 0; j < d; ++j) {
            const auto& row = table.at(rhos[j]);
            for (int i = 0; i < d; ++i) {
                auto it = row.find(nus[i]);
                if (it != row.end()) A[i][j] = it->second;
            }
        }
        for (int i = 0; i < d; ++i) {
            auto it = q.find(nus[i]);
            if (it != q.end()) b[i] = it->second;
        }
        for (int col = 0; col < d; ++col) {
            int piv = col;
            while (piv < d && A[piv][col] == 0) ++piv;
            if (piv == d) throw std::logic_error("singular power-sum transition matrix");
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
            for (int r = 0; r < d; ++r) {
                if (r == col || A[r][col] == 0) continue;
                Rational f = A[r][col] / A[col][col];
                for (int c2 = col; c2 < d; ++c2) A[r][c2] -= f * A[col][c2];
                b[r] -= b[col] * RatFun(f);
            }
        }
        for (int j = 0; j < d; ++j) {
            RatFun c = b[j] * RatFun(Rational(1) / A[j][j]);
            if (!c.is_zero()) out.terms.emplace(rhos[j], std::move(c));
        }
    }
    std::lock_guard<std::mutex> lk(mx);
    return memo.emplace(lam, std::move(out)).first->second;
}

PowerSumExpansion one_row_power_sums(int r) {
    if (r < 0) throw std::invalid_argument("row length must be >= 0");
    PowerSumExpansion out;
    out.degree = r;
    for (const auto& rho : enumerate_partitions(r)) {
        Rational z(1);
        RatFun num(1L);
        for (int i = 1; i <= r; ++i) {
            int mi = rho.mult(i);
            if (!mi) continue;
            for (int j = 1; j <= mi; ++j) z *= Rational(i) * j;
            for (int j = 0; j < mi; ++j) num = num * RatFun(Poly::one_minus_t_power(i));
        }
        out.terms.emplace(rho, num * RatFun(1 / z));
    }
    return out;
}

RatFun hl_inner_p(const Partition& rho, const Partition& sigma) {
    if (!(rho == sigma)) return RatFun();
    // z_rho = prod_i i^{m_i} m_i!
    Rational z(1);
    for (int i = 1; i <= (rho.length() ? rho.parts()[0] : 0); ++i) {
        int m = rho.mult(i);
        for (int j = 0; j < m; ++j) z *= i;
        for (int j = 2; j <= m; ++j) z *= j;
    }
    Poly den(Rational(1));
    for (int part : rho.parts()) den *= Poly::one_minus_t_power(part);
    return RatFun(Poly(z), den);
}

bool verify_pieri_p1(const Partition& mu) {
    int n = mu.size() + 1;
    SymPoly lhs = SymPoly::power_sum(n, 1).scale(RatFun(Poly::one_minus_t_power(1))) *
                  hl_q_oracle(mu, n);
    SymPoly rhs(n);
    for (const auto& [lam, k] : single_covers(mu)) {
        (void)k;
        rhs = rhs + hl_q_oracle(lam, n).scale(psi_single(mu, lam));
    }
    return lhs == rhs;
}

bool verify_pieri_p2(const Partition& mu) {
    int n = mu.size() + 2;
    RatFun sgn_mu(mu.n_stat() % 2 ? -1L : 1L);
    SymPoly lhs = SymPoly::power_sum(n, 2)
                      .scale(RatFun(Poly::one_minus_t_power(2)) * sgn_mu) *
                  hl_q_oracle(mu, n);
    SymPoly rhs(n);
    for (const auto& [lam, dc] : double_covers(mu)) {
        (void)dc;
        RatFun sgn_lam(lam.n_stat() % 2 ? -1L : 1L);
        rhs = rhs + hl_q_oracle(lam, n).scale(xi_double(mu, lam) * sgn_lam);
    }
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Specializations and functionals

Rational specialize_power_sums(const PowerSumExpansion& e,
                               const std::vector<Rational>& alpha,
                               const std::vector<Rational>& beta,
                               const Rational& t) {
    Rational total(0);
    for (const auto& [rho, c] : e.terms) {
        Rational val(1);
        for (int k : rho.parts()) {
            if (k == 1) continue; // p_1 -> 1
            Rational pk(0);
            for (const auto& a : alpha) pk += rat_pow(a, k);
            Rational bsum(0);
            for (const auto& b : beta) bsum += rat_pow(b, k);
            if (bsum != 0) {
                Rational tk = rat_pow(t, k);
                pk += (k % 2 ? bsum : -bsum) / (1 - tk);
            }
            val *= pk;
        }
        total += c.eval(t) * val;
    }
    return total;
}

QuadExt HLFunctional::apply_q(const Partition& lam) const {
    PowerSumExpansion e = to_power_sums(lam);
    QuadExt total;
    for (const auto& [rho, c] : e.terms)
        total += QuadExt(c.eval(t)) * p_value(rho);
    return total;
}

QuadExt HLFunctional::apply_q_tilde(const Partition& lam) const {
    QuadExt v = apply_q(lam);
    return lam.n_stat() % 2 ? -v : v;
}

HLFunctional plancherel_functional(HLFunctional::Parity parity, const Rational& t) {
    HLFunctional f;
    f.parity = parity;
    f.t = t;
    f.radicand = 1;
    f.p_value = [parity](const Partition& rho) -> QuadExt {
        int ones = rho.mult(1), twos = rho.mult(2);
        bool hit = parity == HLFunctional::Even ? (ones == 0 && twos == rho.length())
                                                : (ones == 1 && twos == rho.length() - 1);
        return QuadExt(Rational(hit ? 1 : 0));
    };
    return f;
}

HLFunctional principal_functional(int m, const Rational& t) {
    if (m < 0) throw std::invalid_argument("rank must be >= 1, or 0 for infinite rank");
    HLFunctional f;
    f.parity = HLFunctional::Both;
    f.t = t;
    Rational c2 = m == 0 ? 1 - t * t : (1 - t * t) / (1 - rat_pow(t, 2L * m));
    f.radicand = c2;
    f.p_value = [m, t, c2](const Partition& rho) -> QuadExt {
        QuadExt val(Rational(1));
        for (int k : rho.parts()) {
            Rational tk = rat_pow(t, k);
            Rational g = m == 0 ? Rational(1) / (1 - tk)
                                : (1 - rat_pow(t, (long)k * m)) / (1 - tk);
            // c^k: even powers are rational, odd carry one sqrt(c2)
            Rational even_part = rat_pow(c2, k / 2);
            QuadExt ck = k % 2 ? QuadExt(Rational(0), even_part, c2) : QuadExt(even_part);
            val *= ck * QuadExt(g);
        }
        return val;
    };
    return f;
}

QuadExt principal_q_value(int m, const Rational& t, const Partition& lam) {
    Rational c2 = m == 0 ? 1 - t * t : (1 - t * t) / (1 - rat_pow(t, 2L * m));
    if (m != 0 && lam.length() > m) return QuadExt(Rational(0));
    int n = lam.size();
    Rational even_part = rat_pow(c2, n / 2);
    QuadExt cn = n % 2 ? QuadExt(Rational(0), even_part, c2) : QuadExt(even_part);
    Rational v = rat_pow(t, lam.n_stat());
    if (m != 0)
        for (int i = 1; i <= lam.length(); ++i) v *= 1 - rat_pow(t, m - i + 1);
    return cn * QuadExt(v);
}

HLFunctional two_point_functional(const Rational& a1, const Rational& a2, const Rational& t) {
    if (!(a1 > 0 && a2 < 0 && a1 * a1 + a2 * a2 == 1 && a1 > -a2))
        throw std::invalid_argument("need a1 > 0 > a2, a1^2 + a2^2 = 1, a1 > |a2|");
    HLFunctional f;
    f.parity = HLFunctional::Both;
    f.t = t;
    f.radicand = 1;
    f.p_value = [a1, a2](const Partition& rho) -> QuadExt {
        Rational val(1);
        for (int k : rho.parts()) val *= rat_pow(a1, k) + rat_pow(a2, k);
        return QuadExt(val);
    };
    return f;
}

} // namespace hlb
