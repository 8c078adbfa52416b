#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

// Internal-consistency failure: an invariant the inputs were supposed to
// guarantee broke. CLI maps this to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Integer partition, weakly decreasing positive parts. (3,3,2,0,0)
// normalizes to (3,3,2); the empty partition is the empty list.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;
    bool empty() const { return parts.empty(); }
    int rows() const { return static_cast<int>(parts.size()); }

    // contents in reading order (row by row, left to right)
    std::vector<int> contents() const;
    bool is_single_column() const;
    int diameter() const; // max content - min content; requires nonempty
    Partition transposed() const;
    bool is_hook() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

// The unique partition whose boxes realize a given set of distinct contents,
// if one exists. Distinct contents force a hook, so this checks for a
// consecutive run containing 0.
std::optional<Partition> partition_from_distinct_contents(std::vector<long long> contents);

struct Box {
    int component = 0;
    int row = 1; // 1-based
    int col = 1; // 1-based
    long long content() const { return col - row; }
    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// r-tuple of partitions. Box iteration order is fixed (component, row,
// column) so multiset comparisons and emitted files are deterministic.
struct RPartition {
    std::vector<Partition> comps;

    RPartition() = default;
    explicit RPartition(std::vector<Partition> c) : comps(std::move(c)) {}

    static RPartition trivial(int r, int n);

    int r() const { return static_cast<int>(comps.size()); }
    int total() const;
    std::vector<Box> boxes() const;

    // canonical text form: components joined by '|', parts by ',',
    // empty component printed as '-'  (e.g. "3,1|-|2")
    std::string str() const;
    static RPartition parse(std::string_view text, int r);

    bool operator==(const RPartition&) const = default;
    auto operator<=>(const RPartition&) const = default;
};

// Number of standard Young tableaux on an r-partition: multinomial over
// component sizes times per-component hook-length counts.
long long syt_count(const RPartition& lam);

// All standard tableaux, each as the vector of entries 1..n in canonical box
// order. Exponential; meant for the small shapes this library works with.
std::vector<std::vector<int>> all_syt(const RPartition& lam);

// All r-partitions of n (brute-force block oracle support).
std::vector<RPartition> all_rpartitions(int r, int n);

} // namespace cherednik
