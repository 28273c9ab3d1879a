#include "hlb/ffield.hpp"

#include "hlb/poly.hpp"
#include "hlb/hl.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace hlb {

FieldCtx::FieldCtx(int q_) : q(q_), delta(0) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be an odd prime");
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("q must be an odd prime");
    std::vector<bool> residue(q, false);
    for (int x = 1; x < q; ++x) residue[(x * x) % q] = true;
    for (int d = 2; d < q; ++d)
        if (!residue[d]) { delta = d; break; }
}

int FieldCtx::finv(int x) const {
    x %= q;
    if (x == 0) throw std::domain_error("inverse of zero");
    int r = 1, e = q - 2, base = x;
    while (e) {
        if (e & 1) r = fmul(r, base);
        base = fmul(base, base);
        e >>= 1;
    }
    return r;
}

GF FieldCtx::inv(GF x) const {
    int n = norm(x);
    if (n == 0) throw std::domain_error("inverse of zero");
    int ni = finv(n);
    return {fmul(x.a, ni), fmul(fneg(x.b), ni)};
}

FFMatrix FFMatrix::identity(FieldCtx ctx, int n) {
    FFMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

FFMatrix FFMatrix::form_w(FieldCtx ctx, int n) {
    FFMatrix m(ctx, n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = ctx.one();
    return m;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            GF x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j)
                r.at(i, j) = ctx_.add(r.at(i, j), ctx_.mul(x, o.at(k, j)));
        }
    return r;
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = ctx_.add(e_[i], o.e_[i]);
    return r;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = ctx_.sub(e_[i], o.e_[i]);
    return r;
}

GFVec FFMatrix::apply(const GFVec& v) const {
    GFVec r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r[i] = ctx_.add(r[i], ctx_.mul(at(i, j), v[j]));
    return r;
}

FFMatrix FFMatrix::pow(int k) const {
    FFMatrix r = identity(ctx_, n_), base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

FFMatrix FFMatrix::conj_transpose() const {
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = ctx_.conj(at(i, j));
    return r;
}

FFMatrix FFMatrix::sharp() const {
    FFMatrix w = form_w(ctx_, n_);
    return w * conj_transpose() * w;
}

FFMatrix FFMatrix::scaled(GF c) const {
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.e_[i] = ctx_.mul(c, e_[i]);
    return r;
}

bool FFMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](GF x) { return x.is_zero(); });
}

namespace {

// In-place row reduction; returns rank.  Rows may have any length.
int rref(const FieldCtx& ctx, std::vector<GFVec>& rows) {
    if (rows.empty()) return 0;
    int m = (int)rows[0].size(), rank = 0;
    for (int col = 0; col < m && rank < (int)rows.size(); ++col) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        GF inv = ctx.inv(rows[rank][col]);
        for (int c = 0; c < m; ++c) rows[rank][c] = ctx.mul(inv, rows[rank][c]);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GF f = rows[r][col];
            for (int c = 0; c < m; ++c)
                rows[r][c] = ctx.sub(rows[r][c], ctx.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

std::vector<GFVec> matrix_rows(const FFMatrix& a) {
    std::vector<GFVec> rows(a.dim(), GFVec(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) rows[i][j] = a.at(i, j);
    return rows;
}

// Basis of { v : sum_j rows[r][j] v_j = 0 for all r }.
std::vector<GFVec> right_kernel(const FieldCtx& ctx, std::vector<GFVec> rows, int m) {
    rref(ctx, rows);
    std::vector<int> pivot_col;
    for (const auto& row : rows) {
        int c = 0;
        while (c < m && row[c].is_zero()) ++c;
        pivot_col.push_back(c);
    }
    std::vector<GFVec> basis;
    for (int c = 0; c < m; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        GFVec v(m);
        v[c] = ctx.one();
        for (size_t r = 0; r < rows.size(); ++r)
            v[pivot_col[r]] = ctx.neg(rows[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of M x = b, if any.
std::optional<GFVec> solve_linear(const FieldCtx& ctx, const FFMatrix& m, const GFVec& b) {
    int n = m.dim();
    std::vector<GFVec> rows(n, GFVec(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
        rows[i][n] = b[i];
    }
    rref(ctx, rows);
    GFVec x(n);
    for (const auto& row : rows) {
        int c = 0;
        while (c <= n && row[c].is_zero()) ++c;
        if (c == n) return std::nullopt; // 0 = nonzero
        if (c < n) x[c] = row[n];
    }
    return x;
}

GFVec e_vector(int n, int i, const FieldCtx& ctx) {
    GFVec v(n);
    v[i] = ctx.one();
    return v;
}

// tau(u, v) = u* W v  (conjugate-linear in the first argument)
GF w_form(const FieldCtx& ctx, const GFVec& u, const GFVec& v) {
    GF s{};
    int n = (int)u.size();
    for (int i = 0; i < n; ++i) s = ctx.add(s, ctx.mul(ctx.conj(u[i]), v[n - 1 - i]));
    return s;
}

GF dot_herm(const FieldCtx& ctx, const GFVec& u, const GFVec& v) {
    GF s{};
    for (size_t i = 0; i < u.size(); ++i) s = ctx.add(s, ctx.mul(ctx.conj(u[i]), v[i]));
    return s;
}

} // namespace

int FFMatrix::rank() const {
    auto rows = matrix_rows(*this);
    return rref(ctx_, rows);
}

FFMatrix FFMatrix::inverse() const {
    std::vector<GFVec> rows(n_, GFVec(2 * n_));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) rows[i][j] = at(i, j);
        rows[i][n_ + i] = ctx_.one();
    }
    if (rref(ctx_, rows) < n_) throw std::domain_error("singular matrix");
    FFMatrix r(ctx_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = rows[i][n_ + j];
    return r;
}

Subspace::Subspace(FieldCtx ctx, int n, std::vector<GFVec> spanning)
    : ctx_(ctx), n_(n), rows_(std::move(spanning)) {
    rref(ctx_, rows_);
}

bool Subspace::contains(const GFVec& v) const {
    std::vector<GFVec> rows(rows_);
    rows.push_back(v);
    return rref(ctx_, rows) == dim();
}

Partition jordan_type(const FFMatrix& x) {
    int n = x.dim();
    if (!x.pow(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
    std::vector<int> colsizes; // transpose parts: rk X^{i-1} - rk X^i
    FFMatrix p = FFMatrix::identity(x.ctx(), n);
    int prev = n;
    for (int i = 1; prev > 0; ++i) {
        p = p * x;
        int r = p.rank();
        if (prev - r > 0) colsizes.push_back(prev - r);
        prev = r;
    }
    return Partition(std::move(colsizes)).transpose();
}

std::pair<int, Partition> fitting_type(const FFMatrix& x) {
    int n = x.dim();
    int s = x.pow(n).rank();
    std::vector<int> colsizes;
    FFMatrix p = FFMatrix::identity(x.ctx(), n);
    int prev = n;
    for (int i = 1; i <= n && prev > s; ++i) {
        p = p * x;
        int r = p.rank();
        if (prev - r > 0) colsizes.push_back(prev - r);
        prev = r;
    }
    return {s, Partition(std::move(colsizes)).transpose()};
}

FFMatrix canonical_nilpotent_gl(const Partition& mu, const FieldCtx& ctx) {
    int n = mu.size();
    FFMatrix m(ctx, n);
    int off = 0;
    for (int part : mu.parts()) {
        for (int j = 1; j < part; ++j) m.at(off + j - 1, off + j) = ctx.one();
        off += part;
    }
    return m;
}

FFMatrix hermitian_congruence(const FFMatrix& g) {
    const FieldCtx& ctx = g.ctx();
    int n = g.dim();
    if (!(g.conj_transpose() == g)) throw std::invalid_argument("matrix is not Hermitian");
    if (g.rank() < n) throw std::invalid_argument("degenerate form");
    if (g == FFMatrix::form_w(ctx, n)) return FFMatrix::identity(ctx, n);

    auto form = [&](const GFVec& u, const GFVec& v) {
        GF s{};
        for (int i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            GF cu = ctx.conj(u[i]);
            for (int j = 0; j < n; ++j) s = ctx.add(s, ctx.mul(cu, ctx.mul(g.at(i, j), v[j])));
        }
        return s;
    };

    // Gram-Schmidt to an orthogonal basis with diagonal in F_q^x
    std::vector<GFVec> b;
    for (int i = 0; i < n; ++i) b.push_back(e_vector(n, i, ctx));
    for (int k = 0; k < n; ++k) {
        int hit = -1;
        for (int i = k; i < n && hit < 0; ++i)
            if (!form(b[i], b[i]).is_zero()) hit = i;
        if (hit >= 0) {
            std::swap(b[k], b[hit]);
        } else {
            // all isotropic: polarization guarantees a non-isotropic b_i + c b_j
            bool found = false;
            for (int i = k; i < n && !found; ++i)
                for (int j = i + 1; j < n && !found; ++j)
                    for (GF c : {ctx.one(), ctx.eps()}) {
                        GFVec cand(b[i]);
                        for (int t2 = 0; t2 < n; ++t2)
                            cand[t2] = ctx.add(cand[t2], ctx.mul(c, b[j][t2]));
                        if (!form(cand, cand).is_zero()) {
                            b[i] = cand; // keeps the span: b_j is still present
                            std::swap(b[k], b[i]);
                            found = true;
                            break;
                        }
                    }
            if (!found) throw std::logic_error("no anisotropic vector in a nondegenerate form");
        }
        GF dk = form(b[k], b[k]);
        for (int i = k + 1; i < n; ++i) {
            GF f = ctx.mul(form(b[k], b[i]), ctx.inv(dk));
            for (int t2 = 0; t2 < n; ++t2)
                b[i][t2] = ctx.sub(b[i][t2], ctx.mul(f, b[k][t2]));
        }
    }

    // scale: x with Norm(x) = d^{-1}, by exhaustive search (norm is onto F_q^x)
    for (int k = 0; k < n; ++k) {
        GF dk = form(b[k], b[k]);
        if (dk.b != 0) throw std::logic_error("Hermitian square not in the base field");
        int target = ctx.finv(dk.a);
        GF x{};
        bool found = false;
        for (int idx = 1; idx < ctx.q * ctx.q && !found; ++idx) {
            x = ctx.element(idx);
            found = ctx.norm(x) == target;
        }
        if (!found) throw std::logic_error("norm equation unsolvable");
        for (int t2 = 0; t2 < n; ++t2) b[k][t2] = ctx.mul(x, b[k][t2]);
    }

    // map the identity form to W: hyperbolic pairs from orthonormal couples
    GF gamma{};
    {
        int m1 = ctx.fneg(1);
        for (int idx = 0; idx < ctx.q * ctx.q; ++idx)
            if (ctx.norm(ctx.element(idx)) == m1) { gamma = ctx.element(idx); break; }
    }
    std::vector<GFVec> s(n);
    for (int p = 0; 2 * p + 1 < n; ++p) {
        const GFVec &c1 = b[2 * p], &c2 = b[2 * p + 1];
        GFVec u(n), v(n);
        GF gamma2{};
        bool found = false;
        for (int idx = 0; idx < ctx.q * ctx.q && !found; ++idx) {
            gamma2 = ctx.element(idx);
            found = ctx.norm(gamma2) == ctx.fneg(1) && !(gamma2 == gamma) &&
                    !ctx.add(ctx.one(), ctx.mul(ctx.conj(gamma), gamma2)).is_zero();
        }
        if (!found) throw std::logic_error("no second norm-(-1) element");
        for (int t2 = 0; t2 < n; ++t2) {
            u[t2] = ctx.add(c1[t2], ctx.mul(gamma, c2[t2]));
            v[t2] = ctx.add(c1[t2], ctx.mul(gamma2, c2[t2]));
        }
        GF z = ctx.add(ctx.one(), ctx.mul(ctx.conj(gamma), gamma2)); // form(u, v)
        GF zi = ctx.inv(z);
        for (int t2 = 0; t2 < n; ++t2) v[t2] = ctx.mul(zi, v[t2]);
        s[p] = u;
        s[n - 1 - p] = v;
    }
    if (n % 2) s[n / 2] = b[n - 1];

    FFMatrix out(ctx, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.at(i, j) = s[j][i];
    if (!(out.conj_transpose() * g * out == FFMatrix::form_w(ctx, n)))
        throw std::logic_error("congruence reduction failed");
    return out;
}

FFMatrix canonical_nilpotent_hermitian(const Partition& mu, const FieldCtx& ctx) {
    int n = mu.size();
    if (n == 0) return FFMatrix(ctx, 0);
    // box model: X v_{i,j} = v_{i,j-1}, Gram tau(v_{i,j}, v_{i,mu_i-j+1}) = 1
    std::vector<std::vector<int>> idx(mu.length());
    int next = 0;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.parts()[i]; ++j) idx[i].push_back(next++);
    FFMatrix x0(ctx, n), gram(ctx, n);
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.parts()[i]; ++j) {
            if (j > 0) x0.at(idx[i][j - 1], idx[i][j]) = ctx.one();
            gram.at(idx[i][j], idx[i][mu.parts()[i] - 1 - j]) = ctx.one();
        }
    FFMatrix s = hermitian_congruence(gram);
    FFMatrix x = s.inverse() * x0 * s;
    if (!(x.sharp() == x)) throw std::logic_error("result is not W-Hermitian");
    return x;
}

FFMatrix canonical_nilpotent_skew_hermitian(const Partition& mu, const FieldCtx& ctx) {
    FFMatrix x = canonical_nilpotent_hermitian(mu, ctx).scaled(ctx.eps());
    if (!(x.sharp() == x.scaled({ctx.fneg(1), 0}))) throw std::logic_error("not skew-Hermitian");
    return x;
}

Subspace v_subspace(const FFMatrix& x, int k) {
    const FieldCtx& ctx = x.ctx();
    int n = x.dim();
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    FFMatrix xk = x.pow(k), xk1 = x.pow(k - 1);
    // rows annihilating Ran X^k: right kernel of the transpose of X^k
    std::vector<GFVec> tr(n, GFVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr[i][j] = xk.at(j, i);
    std::vector<GFVec> ann = right_kernel(ctx, std::move(tr), n);
    // V_k = kernel of (ann rows) * X^{k-1}
    std::vector<GFVec> rows;
    for (const auto& a : ann) {
        GFVec row(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) row[j] = ctx.add(row[j], ctx.mul(a[i], xk1.at(i, j)));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) rows.push_back(GFVec(n)); // zero row: whole space
    return Subspace(ctx, n, right_kernel(ctx, std::move(rows), n));
}

bool tau_k_radical_check(const FFMatrix& x, int k) {
    const FieldCtx& ctx = x.ctx();
    int n = x.dim();
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    if (!(x.sharp() == x)) throw std::invalid_argument("matrix is not W-Hermitian");
    Subspace vk = v_subspace(x, k), vk1 = v_subspace(x, k - 1);
    FFMatrix xk = x.pow(k), xkm1 = x.pow(k - 1), xkm2 = x.pow(k - 2);
    int d = vk.dim();
    // Gram of tau_k(u, w) = tau(X^{k-2} u, w) - tau(X^{k-1} u', w), X^k u' = X^{k-1} u
    std::vector<GFVec> left(d);
    for (int i = 0; i < d; ++i) {
        const GFVec& u = vk.basis()[i];
        auto uprime = solve_linear(ctx, xk, xkm1.apply(u));
        if (!uprime) throw std::logic_error("V_k membership without preimage");
        GFVec a = xkm2.apply(u), b2 = xkm1.apply(*uprime);
        GFVec diff(n);
        for (int t2 = 0; t2 < n; ++t2) diff[t2] = ctx.sub(a[t2], b2[t2]);
        left[i] = diff;
    }
    std::vector<GFVec> gram(d, GFVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram[i][j] = w_form(ctx, left[i], vk.basis()[j]);
    // radical coordinates: conjugate of the left kernel of the Gram matrix
    std::vector<GFVec> gt(d, GFVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gt[i][j] = gram[j][i];
    std::vector<GFVec> rad_coords = right_kernel(ctx, std::move(gt), d);
    std::vector<GFVec> rad_vectors;
    for (const auto& c : rad_coords) {
        GFVec v(n);
        for (int i = 0; i < d; ++i) {
            GF ci = ctx.conj(c[i]);
            for (int t2 = 0; t2 < n; ++t2)
                v[t2] = ctx.add(v[t2], ctx.mul(ci, vk.basis()[i][t2]));
        }
        rad_vectors.push_back(std::move(v));
    }
    return Subspace(ctx, n, std::move(rad_vectors)) == vk1;
}

namespace {

// all vectors in the span of `basis` (coefficient enumeration over F_{q^2})
bool find_isotropic(const FieldCtx& ctx, const std::vector<GFVec>& basis,
                    const std::function<GF(const GFVec&)>& qform, GFVec& out) {
    int d = (int)basis.size(), n = basis.empty() ? 0 : (int)basis[0].size();
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= ctx.q * ctx.q;
    for (long long code = 1; code < total; ++code) {
        long long c = code;
        GFVec v(n);
        for (int i = 0; i < d; ++i) {
            GF ci = ctx.element((int)(c % (ctx.q * ctx.q)));
            c /= ctx.q * ctx.q;
            for (int t2 = 0; t2 < n; ++t2) v[t2] = ctx.add(v[t2], ctx.mul(ci, basis[i][t2]));
        }
        if (qform(v).is_zero()) { out = v; return true; }
    }
    return false;
}

} // namespace

FFMatrix triangularizing_basis(const FFMatrix& x) {
    const FieldCtx& ctx = x.ctx();
    int n = x.dim();
    bool herm = x.sharp() == x, skew = x.sharp() == x.scaled({ctx.fneg(1), 0});
    if (!herm && !skew) throw std::invalid_argument("matrix is not form-compatible");
    if (!x.pow(n).is_zero()) throw std::invalid_argument("matrix is not nilpotent");

    // recursion state: ambient basis of the current subspace, the operator and
    // the Gram matrix written in its coordinates
    std::function<std::vector<GFVec>(std::vector<GFVec>, std::vector<GFVec>, std::vector<GFVec>)>
        rec = [&](std::vector<GFVec> basis, std::vector<GFVec> op,
                  std::vector<GFVec> gramc) -> std::vector<GFVec> {
        int d = (int)basis.size();
        if (d == 0) return {};
        if (d == 1) return {basis[0]};
        // kernel of the operator in coordinates
        std::vector<GFVec> oprows(d, GFVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) oprows[i][j] = op[i][j];
        std::vector<GFVec> ker = right_kernel(ctx, std::move(oprows), d);
        auto qform = [&](const GFVec& c) {
            GF s{};
            for (int i = 0; i < d; ++i) {
                if (c[i].is_zero()) continue;
                GF ci = ctx.conj(c[i]);
                for (int j = 0; j < d; ++j)
                    s = ctx.add(s, ctx.mul(ci, ctx.mul(gramc[i][j], c[j])));
            }
            return s;
        };
        GFVec vc;
        if (!find_isotropic(ctx, ker, qform, vc))
            throw std::logic_error("no isotropic kernel vector");
        // S' = orthogonal complement of v inside the subspace (contains v)
        GFVec wrow(d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i)
                wrow[j] = ctx.add(wrow[j], ctx.mul(ctx.conj(vc[i]), gramc[i][j]));
        std::vector<GFVec> sprime = right_kernel(ctx, {wrow}, d);
        // complement of span(v) inside S'
        std::vector<GFVec> stack{vc};
        std::vector<GFVec> comp;
        for (const auto& c : sprime) {
            std::vector<GFVec> test(stack);
            test.push_back(c);
            if (rref(ctx, test) > (int)stack.size()) {
                stack.push_back(c);
                comp.push_back(c);
            }
        }
        // some w outside S'
        GFVec wc;
        for (int i = 0; i < d; ++i) {
            GFVec cand(d);
            cand[i] = ctx.one();
            std::vector<GFVec> test(stack);
            test.push_back(cand);
            std::vector<GFVec> test2 = test;
            if (rref(ctx, test2) > (int)stack.size()) { wc = cand; break; }
        }
        int d2 = (int)comp.size(); // d - 2
        // quotient operator: op(c_j) written in the basis [v, comp...], v dropped
        std::vector<GFVec> solve_basis{vc};
        for (const auto& c : comp) solve_basis.push_back(c);
        std::vector<GFVec> op2(d2, GFVec(d2)), gram2(d2, GFVec(d2));
        for (int j = 0; j < d2; ++j) {
            GFVec y(d);
            for (int i = 0; i < d; ++i)
                for (int t2 = 0; t2 < d; ++t2)
                    y[i] = ctx.add(y[i], ctx.mul(op[i][t2], comp[j][t2]));
            // coordinates of y in solve_basis
            std::vector<GFVec> rows(d, GFVec(d2 + 2));
            for (int i = 0; i < d; ++i) {
                for (int s2 = 0; s2 < d2 + 1; ++s2) rows[i][s2] = solve_basis[s2][i];
                rows[i][d2 + 1] = y[i];
            }
            rref(ctx, rows);
            GFVec coords(d2 + 1);
            for (const auto& row : rows) {
                int c = 0;
                while (c <= d2 + 1 && row[c].is_zero()) ++c;
                if (c == d2 + 1) throw std::logic_error("operator does not preserve S'");
                if (c < d2 + 1) coords[c] = row[d2 + 1];
            }
            for (int i = 0; i < d2; ++i) op2[i][j] = coords[i + 1];
        }
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d2; ++j) {
                GF s{};
                for (int a = 0; a < d; ++a) {
                    if (comp[i][a].is_zero()) continue;
                    GF ca = ctx.conj(comp[i][a]);
                    for (int b2 = 0; b2 < d; ++b2)
                        s = ctx.add(s, ctx.mul(ca, ctx.mul(gramc[a][b2], comp[j][b2])));
                }
                gram2[i][j] = s;
            }
        // lift coordinate vectors to the ambient space
        auto lift = [&](const GFVec& c, const std::vector<GFVec>& base) {
            GFVec v(basis[0].size());
            for (size_t i = 0; i < base.size(); ++i)
                for (size_t t2 = 0; t2 < v.size(); ++t2)
                    v[t2] = ctx.add(v[t2], ctx.mul(c[i], base[i][t2]));
            return v;
        };
        std::vector<GFVec> comp_amb;
        for (const auto& c : comp) comp_amb.push_back(lift(c, basis));
        std::vector<GFVec> mid = rec(comp_amb, op2, gram2);
        std::vector<GFVec> out{lift(vc, basis)};
        for (auto& m : mid) out.push_back(std::move(m));
        out.push_back(lift(wc, basis));
        return out;
    };

    std::vector<GFVec> basis, op(n, GFVec(n)), gramc(n, GFVec(n));
    for (int i = 0; i < n; ++i) basis.push_back(e_vector(n, i, ctx));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            op[i][j] = x.at(i, j);
            gramc[i][j] = i + j == n - 1 ? ctx.one() : GF{};
        }
    std::vector<GFVec> cols = rec(basis, op, gramc);
    FFMatrix t(ctx, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) t.at(i, j) = cols[j][i];
    return t;
}

FFMatrix random_w_unitary(const FieldCtx& ctx, int n, std::mt19937_64& rng) {
    auto rand_gf = [&]() { return ctx.element((int)(rng() % (ctx.q * ctx.q))); };
    for (;;) {
        FFMatrix a(ctx, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i + j < n - 1) a.at(i, j) = rand_gf();
                else if (i + j == n - 1) a.at(i, j) = ctx.mul(ctx.eps(), {(int)(rng() % ctx.q), 0});
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i + j > n - 1) a.at(i, j) = ctx.neg(ctx.conj(a.at(n - 1 - j, n - 1 - i)));
        FFMatrix id = FFMatrix::identity(ctx, n);
        FFMatrix ipa = id + a;
        if (ipa.rank() < n) continue;
        FFMatrix u = (id - a) * ipa.inverse();
        if (!(u.sharp() * u == id)) throw std::logic_error("Cayley transform failed");
        return u;
    }
}

long long count_L_bruteforce(const Partition& mu, const Partition& lam, int q) {
    if (lam.size() != mu.size() + 1) throw std::invalid_argument("size mismatch");
    FieldCtx ctx(q);
    int n = mu.size();
    FFMatrix x = canonical_nilpotent_gl(mu, ctx);
    long long total = 1, count = 0;
    for (int i = 0; i < n; ++i) total *= q;
    for (long long code = 0; code < total; ++code) {
        FFMatrix y(ctx, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y.at(i, j) = x.at(i, j);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            y.at(i, n) = {(int)(c % q), 0};
            c /= q;
        }
        if (jordan_type(y) == lam) ++count;
    }
    return count;
}

long long L_formula(const Partition& mu, const Partition& lam, int q) {
    if (lam.size() != mu.size() + 1 || !lam.contains(mu)) return 0;
    int k = 0;
    for (int i = 0; i < lam.length(); ++i)
        if (lam.parts()[i] != mu.part(i)) { k = lam.parts()[i]; break; }
    int n = mu.size(), tail = 0;
    for (int j = k; j <= n; ++j) tail += mu.mult(j);
    long long lead = 1;
    for (int i = 0; i < n - tail; ++i) lead *= q;
    if (k == 1) return lead;
    long long drop = lead;
    for (int i = 0; i < mu.mult(k - 1); ++i) drop /= q;
    return lead - drop;
}

long long count_Ltilde_with_corner(const FFMatrix& x, const Partition& lam) {
    const FieldCtx& ctx = x.ctx();
    int n = x.dim(), q = ctx.q;
    long long total = 1, count = 0;
    for (int i = 0; i < 2 * n; ++i) total *= q;
    for (long long code = 0; code < total; ++code) {
        GFVec xv(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            xv[i] = ctx.element((int)(c % ((long long)q * q)));
            c /= (long long)q * q;
        }
        for (int y = 0; y < q; ++y) {
            FFMatrix m(ctx, n + 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i + 1, j + 1) = x.at(i, j);
            for (int i = 0; i < n; ++i) {
                m.at(i + 1, n + 1) = xv[i];
                m.at(0, 1 + i) = ctx.neg(ctx.conj(xv[n - 1 - i])); // -x* W
            }
            m.at(0, n + 1) = ctx.mul(ctx.eps(), {y, 0});
            if (jordan_type(m) == lam) ++count;
        }
    }
    return count;
}

long long count_Ltilde_bruteforce(const Partition& mu, const Partition& lam, int q) {
    if (lam.size() != mu.size() + 2) throw std::invalid_argument("size mismatch");
    FieldCtx ctx(q);
    return count_Ltilde_with_corner(canonical_nilpotent_skew_hermitian(mu, ctx), lam);
}

long long Ltilde_formula(const Partition& mu, const Partition& lam, int q) {
    if (lam.size() != mu.size() + 2) return 0;
    for (const auto& [cand, dc] : double_covers(mu)) {
        if (!(cand == lam)) continue;
        int n = mu.size(), k = dc.column;
        int tail = 0;
        for (int j = k; j <= n; ++j) tail += mu.mult(j);
        Rational lead = rat_pow(Rational(q), 2L * (n - tail));
        Rational mq(-q);
        Rational val;
        if (dc.kind == DoubleCoverCase::VerticalDomino) {
            int m = k == 1 ? 0 : mu.mult(k - 1);
            Rational f1 = k == 1 ? Rational(1) : 1 - rat_pow(mq, -(long)m);
            Rational f2 = k == 1 ? Rational(1) : 1 - rat_pow(mq, 1 - (long)m);
            val = lead * f1 * f2;
        } else {
            Rational f1 = k == 1 ? Rational(1) : 1 - rat_pow(mq, -(long)mu.mult(k - 1));
            val = lead * Rational(q - 1) * f1;
        }
        if (denominator(val) != 1) throw std::logic_error("non-integer count");
        return (long long)numerator(val);
    }
    return 0;
}

long long c0_formula(int m, int q) {
    long long v = 1;
    for (int i = 0; i < 2 * m - 1; ++i) v *= q;
    long long w = q - 1;
    for (int i = 0; i < m - 1; ++i) w *= q;
    return v + (m % 2 ? -w : w);
}

long long c0_bruteforce(int m, int q) {
    FieldCtx ctx(q);
    long long total = 1, count = 0;
    for (int i = 0; i < m; ++i) total *= (long long)q * q;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        int s = 0;
        for (int i = 0; i < m; ++i) {
            s = ctx.fadd(s, ctx.norm(ctx.element((int)(c % ((long long)q * q)))));
            c /= (long long)q * q;
        }
        if (s == 0) ++count;
    }
    return count;
}

Integer class_size(const Partition& lam, int q) {
    int n = lam.size();
    Rational t(1, q);
    Rational v(1), tt(1);
    for (int j = 1; j <= n; ++j) {
        tt *= t;
        v *= 1 - tt; // (t; t)_n
    }
    v *= rat_pow(t, 2 * lam.n_stat() - (long)n * (n - 1));
    v /= b_factor(lam).eval(t);
    if (denominator(v) != 1) throw std::logic_error("class size must be an integer");
    return numerator(v);
}

std::map<Partition, long long> nilpotent_census(int n, int q) {
    FieldCtx ctx(q);
    std::map<Partition, long long> out;
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    for (long long code = 0; code < total; ++code) {
        FFMatrix m(ctx, n);
        long long c = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = {(int)(c % q), 0};
                c /= q;
            }
        if (!m.pow(n).is_zero()) continue;
        ++out[jordan_type(m)];
    }
    return out;
}

std::map<std::pair<int, int>, long long> augmentation_case_counts(const Partition& mu, int q) {
    FieldCtx ctx(q);
    int n = mu.size();
    FFMatrix x = canonical_nilpotent_hermitian(mu, ctx);
    std::vector<Subspace> v; // v[k], k = 1..mu_1+1
    int kmax = (mu.length() ? mu.parts()[0] : 0) + 1;
    for (int k = 1; k <= kmax; ++k) v.push_back(v_subspace(x, k));
    std::map<std::pair<int, int>, long long> out;
    long long total = 1;
    for (int i = 0; i < 2 * n; ++i) total *= q;
    for (long long code = 0; code < total; ++code) {
        GFVec xv(n);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            xv[i] = ctx.element((int)(c % ((long long)q * q)));
            c /= (long long)q * q;
        }
        int k = 1;
        while (!v[k - 1].contains(xv)) ++k;
        if (k >= 2) {
            // tau_k(x, x) = tau(X^{k-2} x, x) - tau(X^{k-1} x', x)
            FFMatrix xk = x.pow(k), xkm1 = x.pow(k - 1), xkm2 = x.pow(k - 2);
            auto xp = solve_linear(ctx, xk, xkm1.apply(xv));
            if (!xp) throw std::logic_error("V_k membership without preimage");
            GFVec a = xkm2.apply(xv), b2 = xkm1.apply(*xp);
            GFVec diff(n);
            for (int t2 = 0; t2 < n; ++t2) diff[t2] = ctx.sub(a[t2], b2[t2]);
            GF tau = w_form(ctx, diff, xv);
            out[{k, tau.is_zero() ? 0 : 1}] += q; // z is free
        } else {
            auto xp = solve_linear(ctx, x, xv); // x' with X x' = x
            if (!xp) throw std::logic_error("V_1 membership without preimage");
            GF w = w_form(ctx, xv, *xp); // x* W x'
            if (w.b != 0) throw std::logic_error("corner correction not in the base field");
            ++out[{1, 0}];               // z = x* W x'
            out[{1, 1}] += q - 1;        // remaining z
        }
    }
    return out;
}

} // namespace hlb
