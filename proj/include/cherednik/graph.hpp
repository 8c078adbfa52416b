#pragma once

#include "cherednik/submodules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cherednik {

// Arrow mu -> lambda of the block graph: mu is the lowest-degree isotype of
// a fundamental submodule of Delta(lambda). degree is the charge gap
// c~_lambda(mu), always a positive integer. An arrow is composite when the
// corresponding hom factors through an intermediate standard module, i.e.
// when Gamma contains a directed path mu ~> lambda of length >= 2.
struct Arrow {
    int source = 0;
    int target = 0;
    FundamentalSubmodule via;
    long long degree = 0;
    bool composite = false;
};

struct BlockGraph {
    Params params;
    std::vector<RPartition> vertices; // block members in canonical order
    std::vector<Arrow> arrows;        // all arrows, parallel ones kept
    std::vector<std::vector<int>> adj; // deduplicated edges, source -> targets
    std::vector<std::vector<int>> dist; // dist[u][v] = longest path length, -1 if none
    bool tight = false;
    std::string tight_witness;

    int index_of(const RPartition& lam) const;
    std::optional<int> longest_path(int mu, int lam) const {
        int d = dist[static_cast<size_t>(mu)][static_cast<size_t>(lam)];
        if (d < 0) return std::nullopt;
        return d;
    }
    // P_lambda as path-reachability: everything with a directed path to lam,
    // plus lam itself.
    std::vector<int> reach_set(int lam) const;
    bool edge(int u, int v) const { return dist[static_cast<size_t>(u)][static_cast<size_t>(v)] >= 1 && has_arrow(u, v); }
    bool has_arrow(int u, int v) const;
};

BlockGraph build_gamma(const Params& p);

// Gamma(Hom): ordered pairs (mu, lambda), mu != lambda, mu in P_lambda.
// Identified with nonzero homs only under the tightness hypotheses; callers
// on non-tight blocks receive warn = true.
struct HomRelation {
    std::vector<std::pair<int, int>> pairs;
    bool warn = false;
};
HomRelation hom_relation(const BlockGraph& g);

// DOT with one node per vertex, vertical rank proportional to the charge
// distance below Triv; composite arrows dashed with class="composite".
std::string to_dot(const BlockGraph& g);

} // namespace cherednik
