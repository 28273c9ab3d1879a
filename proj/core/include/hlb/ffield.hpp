#pragma once
#include "hlb/partition.hpp"
#include "hlb/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace hlb {

// F_q (odd prime q) and its quadratic extension F_{q^2} = F_q(eps),
// eps^2 = delta with delta the smallest quadratic non-residue mod q.
// Conjugation is Frobenius: (a + b eps)^q = a - b eps.
struct GF {
    int a = 0, b = 0; // a + b*eps
    bool operator==(const GF&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

struct FieldCtx {
    int q;
    int delta;

    explicit FieldCtx(int q);

    int fadd(int x, int y) const { return (x + y) % q; }
    int fneg(int x) const { return (q - x % q) % q; }
    int fmul(int x, int y) const { return (int)((long long)x * y % q); }
    int finv(int x) const;

    GF add(GF x, GF y) const { return {fadd(x.a, y.a), fadd(x.b, y.b)}; }
    GF sub(GF x, GF y) const { return add(x, neg(y)); }
    GF neg(GF x) const { return {fneg(x.a), fneg(x.b)}; }
    GF mul(GF x, GF y) const {
        return {fadd(fmul(x.a, y.a), fmul(delta, fmul(x.b, y.b))),
                fadd(fmul(x.a, y.b), fmul(x.b, y.a))};
    }
    GF conj(GF x) const { return {x.a, fneg(x.b)}; }
    int norm(GF x) const { return fadd(fmul(x.a, x.a), fneg(fmul(delta, fmul(x.b, x.b)))); }
    GF inv(GF x) const;
    GF eps() const { return {0, 1}; }
    GF one() const { return {1, 0}; }
    GF element(int idx) const { return {idx % q, idx / q}; } // idx in [0, q^2)

    bool operator==(const FieldCtx&) const = default;
};

using GFVec = std::vector<GF>;

class FFMatrix {
public:
    FFMatrix(FieldCtx ctx, int n) : ctx_(ctx), n_(n), e_(n * n) {}
    static FFMatrix identity(FieldCtx ctx, int n);
    static FFMatrix form_w(FieldCtx ctx, int n); // anti-diagonal ones

    int dim() const { return n_; }
    const FieldCtx& ctx() const { return ctx_; }
    GF& at(int i, int j) { return e_[i * n_ + j]; }
    const GF& at(int i, int j) const { return e_[i * n_ + j]; }

    FFMatrix operator*(const FFMatrix& o) const;
    FFMatrix operator+(const FFMatrix& o) const;
    FFMatrix operator-(const FFMatrix& o) const;
    GFVec apply(const GFVec& v) const;
    FFMatrix pow(int k) const;
    FFMatrix conj_transpose() const;                 // A*
    FFMatrix sharp() const;                          // W A* W
    FFMatrix scaled(GF c) const;
    int rank() const;
    FFMatrix inverse() const;                        // throws if singular
    bool is_zero() const;
    bool operator==(const FFMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    FieldCtx ctx_;
    int n_;
    std::vector<GF> e_;
};

// Row space in reduced row echelon form; canonical per subspace.
class Subspace {
public:
    Subspace(FieldCtx ctx, int n, std::vector<GFVec> spanning);
    int dim() const { return (int)rows_.size(); }
    int ambient_dim() const { return n_; }
    const std::vector<GFVec>& basis() const { return rows_; }
    bool contains(const GFVec& v) const;
    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    FieldCtx ctx_;
    int n_;
    std::vector<GFVec> rows_;
};

// Jordan type of a nilpotent matrix from its rank sequence.
Partition jordan_type(const FFMatrix& x);

// (dimension of invertible component, Jordan type of nilpotent component).
std::pair<int, Partition> fitting_type(const FFMatrix& x);

FFMatrix canonical_nilpotent_gl(const Partition& mu, const FieldCtx& ctx);

// Nilpotent X with X^sharp = X (resp. -X) relative to W_N, of Jordan type mu.
FFMatrix canonical_nilpotent_hermitian(const Partition& mu, const FieldCtx& ctx);
FFMatrix canonical_nilpotent_skew_hermitian(const Partition& mu, const FieldCtx& ctx);

// S invertible with S* G S = W, for nondegenerate Hermitian G.
FFMatrix hermitian_congruence(const FFMatrix& g);

// V_k = { v : X^{k-1} v in Ran X^k }.
Subspace v_subspace(const FFMatrix& x, int k);

// For W-Hermitian nilpotent X and k >= 2: the radical of the induced form
// tau_k on V_k equals V_{k-1}.
bool tau_k_radical_check(const FFMatrix& x, int k);

// Basis T such that T^{-1} X T is strictly upper triangular, built from an
// isotropic X-invariant flag; requires X nilpotent and form-compatible
// (X^sharp = X or -X).
FFMatrix triangularizing_basis(const FFMatrix& x);

// Haar-ish W-unitary matrix via the Cayley transform of a random
// skew-Hermitian matrix.
FFMatrix random_w_unitary(const FieldCtx& ctx, int n, std::mt19937_64& rng);

// Single-box augmentation counts over F_q.
long long count_L_bruteforce(const Partition& mu, const Partition& lam, int q);
long long L_formula(const Partition& mu, const Partition& lam, int q);

// Two-box skew-Hermitian augmentation counts over F_{q^2}.
long long count_Ltilde_bruteforce(const Partition& mu, const Partition& lam, int q);
// Same count with an explicit (skew-Hermitian, type-mu) corner matrix.
long long count_Ltilde_with_corner(const FFMatrix& x, const Partition& lam);
long long Ltilde_formula(const Partition& mu, const Partition& lam, int q);

// Isotropic-vector counts for a nondegenerate Hermitian form on F_{q^2}^m.
long long c0_formula(int m, int q);
long long c0_bruteforce(int m, int q);

// Size of the nilpotent conjugacy class of type lam in Mat_n(F_q).
Integer class_size(const Partition& lam, int q);
std::map<Partition, long long> nilpotent_census(int n, int q);

// Brute-force counts of Hermitian augmentations (x, z), partitioned by the
// first k with x in V_k and by vanishing of tau_k(x,x) (z-corrected for k=1).
// Key: (k, 0) for the vanishing case, (k, 1) otherwise.
std::map<std::pair<int, int>, long long> augmentation_case_counts(const Partition& mu, int q);

} // namespace hlb
