#pragma once

#include "cherednik/block.hpp"
#include "cherednik/composition.hpp"
#include "cherednik/params.hpp"

#include <string>
#include <vector>

namespace cherednik {

// A fundamental submodule of Delta(lambda), either
//   M_{b,k}      with k = r c(b) + beta(b) - d_{beta(b)-k}, or
//   M_{b1,b2,k}  with k = r c(b1) + beta(b1) - r c(b2) - beta(b2) +- r c0
//                and k = beta(b1) - beta(b2) mod r.
// The sign of the +-r c0 branch is stored; it decides which box move the
// lowest-degree isotype performs. Candidates whose membership predicate is
// unsatisfiable (the pair forces T(b1) < T(b2) in every tableau) are not
// submodules and are never produced.
struct FundamentalSubmodule {
    enum Kind { Type1, Type2 };
    Kind kind = Type1;
    RPartition host;
    Box b1;
    Box b2;       // Type2 only
    long long k = 0;
    int sign = 0; // Type2: +1 column move, -1 row move

    std::string str() const;
};

// All fundamental submodules of Delta(lambda), deterministically ordered.
// Preconditions: lambda in the principal block, Delta(lambda) diagonalizable.
std::vector<FundamentalSubmodule> fundamental_submodules(const RPartition& lam, const Params& p);

// Isotype of the lowest degree subspace: the box move of the corresponding
// corollary. Type1 moves the subdiagram weakly below-right of b into
// component beta(b)-k; Type2 with + sign moves b1 and the boxes below it
// under b2, with - sign moves b1 and the boxes right of it next to b2.
RPartition lowest_degree_isotype(const FundamentalSubmodule& f, const Params& p);

// Membership predicate of the submodule at a basis vector f_{alpha,T}.
// T is given as entries in canonical box order of the host.
bool predicate_holds(const FundamentalSubmodule& f, const SortedComposition& sc,
                     const std::vector<int>& T);

} // namespace cherednik
