#include "cherednik/composition.hpp"

#include <algorithm>
#include <numeric>

namespace cherednik {

SortedComposition sort_composition(const Composition& alpha) {
    int n = alpha.n();
    SortedComposition sc;
    sc.w_inv.resize(n);
    std::iota(sc.w_inv.begin(), sc.w_inv.end(), 0);
    std::sort(sc.w_inv.begin(), sc.w_inv.end(), [&](int a, int b) {
        if (alpha.entries[a] != alpha.entries[b]) return alpha.entries[a] < alpha.entries[b];
        return a > b; // reversed ties: Bruhat-longest sorting permutation
    });
    sc.alpha_minus.resize(n);
    sc.w.resize(n);
    for (int slot = 0; slot < n; ++slot) {
        sc.alpha_minus[slot] = alpha.entries[sc.w_inv[slot]];
        sc.w[sc.w_inv[slot]] = slot;
    }
    return sc;
}

} // namespace cherednik
