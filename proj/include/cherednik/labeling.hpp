#pragma once

#include "cherednik/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cherednik {

// A label (i, k_i) on a box of the one-row diagram (n). Labels are ordered
// lexicographically on (k, i): (i1,k1) > (i2,k2) iff k1 > k2, or k1 = k2 and
// i1 > i2.
struct Label {
    int i = 0;
    long long k = 0;
    bool operator==(const Label&) const = default;
};

inline bool label_greater(const Label& a, const Label& b) {
    return a.k > b.k || (a.k == b.k && a.i > b.i);
}

inline std::string label_str(const Label& l) {
    return "(" + std::to_string(l.i) + "," + std::to_string(l.k) + ")";
}

// The labeled one-row diagram: for each i with a solution of
//   (d_i - i)/r = d_0/r + ct(b) c0 + k
// a label (i,k) sits in box b. Each i appears at most once; box 1 always
// carries (0,0).
struct BlockLabeling {
    int n = 0;
    long long ell = 0;
    std::vector<std::vector<Label>> per_box;                    // 0-based box index, decreasing per box
    std::vector<std::optional<std::pair<int, long long>>> by_i; // i -> (box pos 1-based, k)

    std::vector<Label> flattened() const; // left to right, decreasing within a box
};

BlockLabeling build_labeling(const Params& p);

struct TightResult {
    bool tight = false;
    std::string witness; // names the first violated comparison when not tight
};

// Theorem criterion: the flattened labels must satisfy
// (i1,k1) > (i2,k2) > ... > (is,ks) > (i1,k1-ell).
TightResult tight_check(const Params& p);

} // namespace cherednik
