#pragma once

#include "cherednik/graph.hpp"
#include "cherednik/vpoly.hpp"

#include <string>
#include <vector>

namespace cherednik {

// Square matrix over integer polynomials in v, rows and columns indexed by
// the block members in graph order.
struct GradedMatrix {
    std::vector<RPartition> order;
    std::vector<std::vector<VPoly>> e; // e[row][col], row = lambda, col = mu
    bool verified = false;             // tight-block hypotheses held

    const VPoly& at(int lam, int mu) const {
        return e[static_cast<size_t>(lam)][static_cast<size_t>(mu)];
    }
    std::string tsv() const;
};

// [Delta(lambda):L(mu)](v) = v^{d(mu,lambda)} for mu in P_lambda, else 0.
GradedMatrix graded_dec_matrix(const BlockGraph& g);

// B_{mu,lambda} = sum_n b_n(mu,lambda) v^n, b_n the number of chains of n
// arrows in Gamma(Hom).
VPoly b_polynomial(const BlockGraph& g, int mu, int lam);

// Entry (lambda,mu) = B_{mu,lambda}(-1) v^{d(mu,lambda)}. Verified against
// graded_dec_matrix by exact polynomial multiplication; a mismatch is fatal.
GradedMatrix inverse_dec_matrix(const BlockGraph& g);

// BGG resolution of L(lambda) by the pruning algorithm: stratify P_lambda by
// longest-path distance, then repeatedly delete arrows skipping a stratum
// together with the full down-set of their source.
struct Resolution {
    int center = 0;
    std::vector<std::vector<int>> terms;           // terms[i] = vertices in homological degree i
    std::vector<int> retained;                     // all retained vertices
    std::vector<std::pair<int, int>> graph_arrows; // arrows of the pruned graph
    std::vector<int> strata;                       // d(v, lambda) per graph vertex, -1 if outside P

    bool is_retained(int v) const;
};
Resolution bgg_resolution(const BlockGraph& g, int lam, bool reverse_order = false);

// Closed form for the terms of the resolution of L(Triv) in type B_{2n} at
// equal parameters 1/2n: homological degrees i and 2n-i, 0 <= i <= n.
std::pair<std::vector<RPartition>, std::vector<RPartition>>
b2n_resolution_formula(int n, int i);

// Consistency report between the pruning algorithm and the inverse matrix
// row, plus the sign identities behind it. The unequal-path-length clause is
// conjectural: violations are reported, never enforced.
struct ConjectureReport {
    bool tight = false;
    bool algorithm_matches_inverse = false;
    bool part_b_exact = false; // B(-1) = 0 exactly at removed unequal-length vertices
    bool passed = false;       // both of the above
    std::vector<std::string> mismatches;
};
ConjectureReport conjecture_check(const BlockGraph& g, int lam);

// Q_prim (primitive arrows) and, on tight blocks, the predicted Ext^1 quiver
// (its double). On non-tight blocks only Q_prim is returned.
struct Quiver {
    std::vector<std::pair<int, int>> arrows;
};
struct QuiverPair {
    Quiver q_prim;
    bool ext1_valid = false;
    Quiver ext1_predicted; // empty unless ext1_valid
};
QuiverPair quivers(const BlockGraph& g);

} // namespace cherednik
