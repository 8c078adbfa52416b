#pragma once

#include "cherednik/labeling.hpp"
#include "cherednik/params.hpp"

#include <vector>

namespace cherednik {

// The two fillings of the one-row diagram (n) encoding a block member:
// S(b) is the component of the matching box of lambda, T(b) the integer
// shift between the charged contents.
struct STPair {
    std::vector<int> S;       // size n
    std::vector<long long> T; // size n
    bool operator==(const STPair&) const = default;
};

// lambda must lie in the principal block; T is computed directly from the
// charged contents (the unique matching box of lambda per residue class).
STPair st_pair(const RPartition& lam, const Params& p);

// Inverse of st_pair. Throws std::invalid_argument when the pair does not
// describe a valid r-partition of n.
RPartition from_st_pair(const STPair& st, const Params& p);

// All r-partitions of n with the same c-weight multiset as Triv, via the
// (S,T) bijection. Sorted by (h_c descending, text form ascending).
std::vector<RPartition> enumerate_block(const Params& p);

// Brute-force oracle: filter all r-partitions of n by same_block vs Triv.
// Same sort order as enumerate_block.
std::vector<RPartition> enumerate_block_brute(const Params& p);

// t-diagonalizability of Delta(lambda). Requires c0 > 0. True iff c0 is not
// a rational of denominator <= m (m the max diameter of non-column
// components) and no integer equals a cross-component charged-content
// difference.
bool is_diagonalizable(const RPartition& lam, const Params& p);

struct BlockDiag {
    bool distinct_weights = false; // n box-weights of Triv pairwise distinct (sufficient)
    bool all_members = false;      // conjunction of is_diagonalizable over the block (exact)
};
BlockDiag block_diagonalizable(const Params& p);

// Comparator used everywhere block members are listed: h_c descending
// (equivalently c^ ascending), ties broken by the canonical text form.
bool block_order_less(const RPartition& a, const RPartition& b, const Params& p);

} // namespace cherednik
