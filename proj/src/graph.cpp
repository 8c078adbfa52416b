#include "cherednik/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace cherednik {

namespace {

int thread_budget() {
    if (const char* env = std::getenv("CHEREDNIK_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Deterministic slot-parallel map: each index writes only its own result.
template <typename F>
void parallel_for(int count, F&& fn) {
    int threads = std::min(thread_budget(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += threads) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

int BlockGraph::index_of(const RPartition& lam) const {
    auto it = std::find(vertices.begin(), vertices.end(), lam);
    if (it == vertices.end()) throw std::invalid_argument("r-partition is not a block member");
    return static_cast<int>(it - vertices.begin());
}

bool BlockGraph::has_arrow(int u, int v) const {
    const auto& row = adj[static_cast<size_t>(u)];
    return std::find(row.begin(), row.end(), v) != row.end();
}

std::vector<int> BlockGraph::reach_set(int lam) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        if (v == lam || dist[static_cast<size_t>(v)][static_cast<size_t>(lam)] >= 1) out.push_back(v);
    return out;
}

BlockGraph build_gamma(const Params& p) {
    BlockGraph g;
    g.params = p;
    g.vertices = enumerate_block(p);
    int nv = static_cast<int>(g.vertices.size());

    BlockDiag diag = block_diagonalizable(p);
    if (!diag.all_members)
        throw std::invalid_argument("block graph requires a diagonalizable block");

    TightResult tr = tight_check(p);
    g.tight = tr.tight;
    g.tight_witness = tr.witness;

    std::map<RPartition, int> index;
    for (int i = 0; i < nv; ++i) index[g.vertices[static_cast<size_t>(i)]] = i;

    std::vector<Rational> chat(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) chat[static_cast<size_t>(i)] = c_hat(g.vertices[static_cast<size_t>(i)], p);

    // per-target arrow lists are independent; assemble in vertex order
    std::vector<std::vector<Arrow>> per_target(static_cast<size_t>(nv));
    parallel_for(nv, [&](int t) {
        const RPartition& lam = g.vertices[static_cast<size_t>(t)];
        std::set<std::tuple<int, int, int, long long>> seen; // (source, kind, sign, k)
        for (const FundamentalSubmodule& f : fundamental_submodules(lam, p)) {
            RPartition mu = lowest_degree_isotype(f, p);
            auto it = index.find(mu);
            if (it == index.end())
                throw internal_error("isotype " + mu.str() + " is not a block member");
            int s = it->second;
            if (s == t) throw internal_error("self arrow at " + lam.str());
            if (!seen.insert({s, f.kind, f.sign, f.k}).second) continue;
            Arrow a;
            a.source = s;
            a.target = t;
            a.via = f;
            Rational deg = chat[static_cast<size_t>(t)] - chat[static_cast<size_t>(s)];
            if (!deg.is_integer() || !deg.is_positive())
                throw internal_error("arrow degree is not a positive integer");
            a.degree = deg.as_integer();
            per_target[static_cast<size_t>(t)].push_back(std::move(a));
        }
    });

    g.adj.assign(static_cast<size_t>(nv), {});
    for (int t = 0; t < nv; ++t)
        for (Arrow& a : per_target[static_cast<size_t>(t)]) {
            if (!g.has_arrow(a.source, a.target)) g.adj[static_cast<size_t>(a.source)].push_back(a.target);
            g.arrows.push_back(std::move(a));
        }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());

    // longest-path table by DP over the charge order (sources precede targets)
    std::vector<int> order(static_cast<size_t>(nv));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return chat[static_cast<size_t>(a)] < chat[static_cast<size_t>(b)]; });

    g.dist.assign(static_cast<size_t>(nv), std::vector<int>(static_cast<size_t>(nv), -1));
    for (int s = 0; s < nv; ++s) {
        auto& row = g.dist[static_cast<size_t>(s)];
        row[static_cast<size_t>(s)] = 0;
        for (int u : order) {
            int du = row[static_cast<size_t>(u)];
            if (du < 0) continue;
            for (int v : g.adj[static_cast<size_t>(u)])
                row[static_cast<size_t>(v)] = std::max(row[static_cast<size_t>(v)], du + 1);
        }
    }

    // composite iff some path of length >= 2 joins the endpoints
    for (Arrow& a : g.arrows) {
        bool comp = false;
        for (int rho : g.adj[static_cast<size_t>(a.source)]) {
            if (rho == a.target) continue;
            if (g.dist[static_cast<size_t>(rho)][static_cast<size_t>(a.target)] >= 1) {
                comp = true;
                break;
            }
        }
        a.composite = comp;
    }
    return g;
}

HomRelation hom_relation(const BlockGraph& g) {
    HomRelation h;
    h.warn = !g.tight;
    int nv = static_cast<int>(g.vertices.size());
    for (int lam = 0; lam < nv; ++lam)
        for (int mu = 0; mu < nv; ++mu)
            if (mu != lam && g.dist[static_cast<size_t>(mu)][static_cast<size_t>(lam)] >= 1)
                h.pairs.push_back({mu, lam});
    return h;
}

std::string to_dot(const BlockGraph& g) {
    std::ostringstream os;
    os << "digraph block {\n  rankdir=BT;\n  node [shape=box];\n";
    int triv = g.index_of(RPartition::trivial(g.params.r, g.params.n));
    Rational top = c_hat(g.vertices[static_cast<size_t>(triv)], g.params);

    std::map<Rational, std::vector<int>> ranks;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        Rational depth = top - c_hat(g.vertices[static_cast<size_t>(v)], g.params);
        ranks[depth].push_back(v);
        os << "  n" << v << " [label=\"" << g.vertices[static_cast<size_t>(v)].str()
           << "\" charge=\"" << depth.str() << "\"];\n";
    }
    for (const auto& [depth, vs] : ranks) {
        os << "  { rank=same;";
        for (int v : vs) os << " n" << v << ";";
        os << " }\n";
    }
    std::set<std::tuple<int, int, bool>> emitted;
    for (const Arrow& a : g.arrows) {
        if (!emitted.insert({a.source, a.target, a.composite}).second) continue;
        os << "  n" << a.source << " -> n" << a.target;
        if (a.composite) os << " [style=dashed, class=\"composite\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace cherednik
