#pragma once

#include <vector>

namespace cherednik {

// Exponent vector alpha of length n, non-negative entries.
struct Composition {
    std::vector<long long> entries;

    Composition() = default;
    explicit Composition(std::vector<long long> e) : entries(std::move(e)) {}

    int n() const { return static_cast<int>(entries.size()); }
    long long total() const {
        long long t = 0;
        for (long long e : entries) t += e;
        return t;
    }
};

// Sorted view of a composition together with the longest permutation sorting
// it. w maps positions to slots, w_inv slots to positions (0-based); the
// Bruhat-longest choice puts tied positions in reversed order, which makes
// w_inv the stable sort by (value ascending, position descending).
struct SortedComposition {
    std::vector<long long> alpha_minus; // nondecreasing
    std::vector<int> w;                 // position -> slot
    std::vector<int> w_inv;             // slot -> position

    // 1-based accessor matching the usual alpha^-_i indexing
    long long minus(int i) const { return alpha_minus[static_cast<size_t>(i - 1)]; }
    int w_inv_1(int slot) const { return w_inv[static_cast<size_t>(slot - 1)] + 1; }
};

SortedComposition sort_composition(const Composition& alpha);

} // namespace cherednik
