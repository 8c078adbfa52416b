#pragma once

#include "cherednik/decomposition.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cherednik {

// Graded dimension of a simple module: a polynomial in t when finite
// dimensional, otherwise a numerator over (1-t)^denom_exponent.
struct GradedDimension {
    std::vector<long long> num; // coefficients of t^0, t^1, ...
    int denom_exponent = 0;     // 0 when finite
    bool finite = true;
    long long total = 0;        // numerator sum; the dimension when finite

    bool operator==(const GradedDimension&) const = default;
};

// Euler-characteristic formula applied to a BGG resolution: the alternating
// sum of #SYT(mu) t^{c~_lambda(mu)} divided exactly by (1-t)^n when it
// divides.
GradedDimension graded_dimension(const BlockGraph& g, const Resolution& res);

// Closed graded dimension of L(Triv) for G(2,1,2n) at c = 1/2n (variant 'C')
// and G(2,2,2n) at c = 1/2n (variant 'D').
GradedDimension g2_dim_formula(int n, char variant);

// Monomial basis count of L(Triv) for G(r,1,rn) at equal parameters 1/rn:
// alpha with alpha^-_{kn} <= k-1 and alpha^-_{rn} <= r, equality forcing the
// largest entries right of the smallest.
GradedDimension monomial_basis_count(const Params& p);

// General homogeneous basis count of L(Triv) at c0 = ell/n: spread bound
// alpha^-_n - alpha^-_1 <= ell r with the tie rule, plus alpha^-_{m+1} < k
// for every solution of d_0 - d_{-k} + r m ell/n = k. When no such solution
// bounds the count, a degree cap must be supplied.
GradedDimension general_basis_count(const Params& p, std::optional<int> degree_cap = std::nullopt);

// Exact (z_i, zeta-exponent) eigenvalue pairs of f_{alpha,T}, per position.
struct Spectrum {
    std::vector<std::pair<Rational, int>> at;
};
Spectrum spectrum(const Composition& alpha, const std::vector<int>& T, const RPartition& lam,
                  const Params& p);

// Sorted eigenvalue multiset of the alpha = 0 basis of Delta(mu); the same
// for every tableau, hence an isotype fingerprint.
std::vector<std::pair<Rational, int>> fingerprint(const RPartition& mu, const Params& p);

// Search (alpha, T) by increasing degree for members of the intersection of
// the given fundamental submodules of Delta(lambda); match the minimal
// degree spectrum multiset against the block fingerprints.
std::optional<RPartition> isotype_oracle(const RPartition& lam,
                                         const std::vector<FundamentalSubmodule>& submods,
                                         const Params& p, long long degree_cap);

// Number of fundamental submodules of Delta(lambda) containing f_{alpha,T}.
int jantzen_layer_count(const Composition& alpha, const std::vector<int>& T,
                        const RPartition& lam, const Params& p);

// Default search cap: twice the charge spread of the block plus r.
long long default_degree_cap(const BlockGraph& g);

// Series comparison against the generating functions (1-4x)^{-3/2} and
// (1-4x)^{-3/2}(1+sqrt(1-4x))^2/4, coefficient by coefficient.
struct OYRow {
    int n = 0;
    long long dim_d_formula = 0, dim_d_series = 0;
    long long dim_c_formula = 0, dim_c_series = 0;
    bool match_d = false, match_c = false;
};
struct OYReport {
    bool all_match = false;
    std::vector<OYRow> rows;
};
OYReport oblomkov_yun_check(int nmax);

// Exact series coefficients, exposed for tests: d_series(k) is the x^k
// coefficient of (1-4x)^{-3/2}, c_series(k) of the C-type product.
long long oy_d_series_coeff(int k);
long long oy_c_series_coeff(int k);

} // namespace cherednik
