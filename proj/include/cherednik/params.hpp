#pragma once

#include "cherednik/partition.hpp"
#include "cherednik/rational.hpp"

#include <vector>

namespace cherednik {

// Group indices (r, n) and the rational parameters of H_c(G(r,1,n)): the
// reflection-class parameter c0 and the Fourier coefficients d_0..d_{r-1}.
// Subscripts on d reduce mod r wherever index arithmetic produces negatives.
struct Params {
    int r = 1;
    int n = 1;
    Rational c0;
    std::vector<Rational> d;

    static Params make(int r, int n, Rational c0, std::vector<Rational> d);

    // Equal parameters c_0 = ... = c_{r-1} = c0: d_0 = (r-1)c0, d_i = -c0.
    // The standard principal-block case takes c0 = 1/n.
    static Params equal(int r, int n);
    static Params equal(int r, int n, Rational c0);

    const Rational& d_at(long long k) const {
        long long m = k % r;
        if (m < 0) m += r;
        return d[static_cast<size_t>(m)];
    }

    // c0 = ell/n with ell a positive integer coprime to n (the denominator
    // of c0 is exactly n). Principal-block machinery requires this.
    bool principal_form() const {
        return c0.is_positive() && c0.denominator() == n;
    }
    long long ell() const;
};

Rational charged_content(const Box& b, const Params& p);
Rational c_weight(const Box& b, const Params& p); // charged content mod 1, in [0,1)

// c~(b) = r c0 ct(b) + d_{beta(b)}; c^(lambda) = sum over boxes.
Rational c_tilde_box(const Box& b, const Params& p);
Rational c_hat(const RPartition& lam, const Params& p);

// Scalar of the Euler element on the highest weight: n/2 - c^(lambda).
// Only differences of h_c values are ever used downstream.
Rational h_c(const RPartition& lam, const Params& p);

// Same block iff the multisets of box c-weights agree.
bool same_block(const RPartition& a, const RPartition& b, const Params& p);

// Sorted c-weight multiset, the block invariant.
std::vector<Rational> weight_multiset(const RPartition& lam, const Params& p);

} // namespace cherednik
