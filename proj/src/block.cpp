#include "cherednik/block.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cherednik {

namespace {

// charged content of box p (1-based) of the one-row diagram in component 0
Rational domain_content(int pos, const Params& p) {
    return p.d[0] / Rational(p.r) + Rational(pos - 1) * p.c0;
}

std::map<Rational, int> domain_residues(const Params& p) {
    std::map<Rational, int> m;
    for (int pos = 1; pos <= p.n; ++pos) {
        Rational w = domain_content(pos, p).mod1();
        if (!m.emplace(w, pos).second)
            throw internal_error("domain residues are not distinct");
    }
    return m;
}

} // namespace

STPair st_pair(const RPartition& lam, const Params& p) {
    if (lam.total() != p.n) throw std::invalid_argument("st_pair: |lambda| != n");
    build_labeling(p); // validates the parameter form
    auto residues = domain_residues(p);

    STPair st;
    st.S.assign(static_cast<size_t>(p.n), -1);
    st.T.assign(static_cast<size_t>(p.n), 0);
    for (const Box& b : lam.boxes()) {
        Rational c = charged_content(b, p);
        auto it = residues.find(c.mod1());
        if (it == residues.end())
            throw std::invalid_argument("lambda is not in the principal block");
        int pos = it->second;
        if (st.S[static_cast<size_t>(pos - 1)] != -1)
            throw std::invalid_argument("lambda is not in the principal block (residue collision)");
        Rational t = c - domain_content(pos, p);
        st.S[static_cast<size_t>(pos - 1)] = b.component;
        st.T[static_cast<size_t>(pos - 1)] = t.as_integer();
    }
    return st;
}

RPartition from_st_pair(const STPair& st, const Params& p) {
    if (static_cast<int>(st.S.size()) != p.n || static_cast<int>(st.T.size()) != p.n)
        throw std::invalid_argument("from_st_pair: fillings must have n boxes");
    std::vector<std::vector<long long>> contents(static_cast<size_t>(p.r));
    for (int pos = 1; pos <= p.n; ++pos) {
        int i = st.S[static_cast<size_t>(pos - 1)];
        if (i < 0 || i >= p.r) throw std::invalid_argument("from_st_pair: component out of range");
        // c(b~) = c(pos) + T; solve for the content of b~ in component i
        Rational c = domain_content(pos, p) + Rational(st.T[static_cast<size_t>(pos - 1)]);
        Rational ct = (c - (p.d_at(i) - Rational(i)) / Rational(p.r)) / p.c0;
        if (!ct.is_integer())
            throw std::invalid_argument("from_st_pair: no box with the required charged content");
        contents[static_cast<size_t>(i)].push_back(ct.as_integer());
    }
    std::vector<Partition> comps;
    for (auto& cts : contents) {
        std::set<long long> distinct(cts.begin(), cts.end());
        if (distinct.size() != cts.size())
            throw std::invalid_argument("from_st_pair: repeated contents in a component");
        auto part = partition_from_distinct_contents(cts);
        if (!part)
            throw std::invalid_argument("from_st_pair: contents do not form a partition");
        comps.push_back(std::move(*part));
    }
    return RPartition(std::move(comps));
}

bool block_order_less(const RPartition& a, const RPartition& b, const Params& p) {
    Rational ca = c_hat(a, p), cb = c_hat(b, p); // h_c descending == c^ ascending
    if (!(ca == cb)) return ca < cb;
    return a.str() < b.str();
}

std::vector<RPartition> enumerate_block(const Params& p) {
    BlockLabeling bl = build_labeling(p);
    int n = p.n;
    long long ell = bl.ell;

    struct LabelAt {
        int i;
        int pos; // 1-based
        long long k;
    };
    std::vector<LabelAt> labels;
    for (int i = 0; i < p.r; ++i)
        if (bl.by_i[static_cast<size_t>(i)])
            labels.push_back({i, bl.by_i[static_cast<size_t>(i)]->first,
                              bl.by_i[static_cast<size_t>(i)]->second});

    std::set<RPartition> members;

    // Cut the circle of n boxes after each position in C; every arc must
    // contain the distinguished box of the label it is assigned. T follows
    // the wrap rule: +ell each time the walk from b_i crosses box n -> box 1.
    int maxCuts = std::min<int>(n, static_cast<int>(labels.size()));
    std::vector<int> cuts;
    std::function<void(int)> chooseCuts = [&](int from) {
        if (!cuts.empty()) {
            // arcs: (cuts[j], cuts[j+1]] cyclically
            int k = static_cast<int>(cuts.size());
            std::vector<std::vector<int>> arcLabels(static_cast<size_t>(k));
            std::vector<std::pair<int, int>> arcs; // unrolled [start, end]
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int start = cuts[static_cast<size_t>(j)] + 1;
                int end = j + 1 < k ? cuts[static_cast<size_t>(j + 1)] : cuts[0] + n;
                arcs.push_back({start, end});
                for (size_t li = 0; li < labels.size(); ++li) {
                    int q = labels[li].pos;
                    if (q < start) q += n;
                    if (q <= end) arcLabels[static_cast<size_t>(j)].push_back(static_cast<int>(li));
                }
                if (arcLabels[static_cast<size_t>(j)].empty()) ok = false;
            }
            if (ok) {
                std::vector<int> choice(static_cast<size_t>(k), 0);
                std::function<void(int)> assign = [&](int arc) {
                    if (arc == k) {
                        STPair st;
                        st.S.assign(static_cast<size_t>(n), -1);
                        st.T.assign(static_cast<size_t>(n), 0);
                        for (int j = 0; j < k; ++j) {
                            const LabelAt& la = labels[static_cast<size_t>(
                                arcLabels[static_cast<size_t>(j)][static_cast<size_t>(choice[static_cast<size_t>(j)])])];
                            auto [start, end] = arcs[static_cast<size_t>(j)];
                            int qb = la.pos < start ? la.pos + n : la.pos;
                            for (int q = start; q <= end; ++q) {
                                int pos = (q - 1) % n + 1;
                                long long crossings = (q - 1) / n - (qb - 1) / n;
                                st.S[static_cast<size_t>(pos - 1)] = la.i;
                                st.T[static_cast<size_t>(pos - 1)] = la.k + ell * crossings;
                            }
                        }
                        try {
                            members.insert(from_st_pair(st, p));
                        } catch (const std::invalid_argument&) {
                            // candidate pair does not invert to a partition tuple
                        }
                        return;
                    }
                    for (size_t c = 0; c < arcLabels[static_cast<size_t>(arc)].size(); ++c) {
                        choice[static_cast<size_t>(arc)] = static_cast<int>(c);
                        assign(arc + 1);
                    }
                };
                assign(0);
            }
        }
        if (static_cast<int>(cuts.size()) == maxCuts) return;
        for (int c = from; c <= n; ++c) {
            cuts.push_back(c);
            chooseCuts(c + 1);
            cuts.pop_back();
        }
    };
    chooseCuts(1);

    std::vector<RPartition> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(),
              [&](const RPartition& a, const RPartition& b) { return block_order_less(a, b, p); });
    return out;
}

std::vector<RPartition> enumerate_block_brute(const Params& p) {
    RPartition triv = RPartition::trivial(p.r, p.n);
    auto target = weight_multiset(triv, p);
    std::vector<RPartition> out;
    for (const RPartition& lam : all_rpartitions(p.r, p.n))
        if (weight_multiset(lam, p) == target) out.push_back(lam);
    std::sort(out.begin(), out.end(),
              [&](const RPartition& a, const RPartition& b) { return block_order_less(a, b, p); });
    return out;
}

bool is_diagonalizable(const RPartition& lam, const Params& p) {
    if (!p.c0.is_positive())
        throw std::invalid_argument("diagonalizability criterion assumes c0 > 0");
    int m = 0;
    bool have_m = false;
    for (const Partition& c : lam.comps) {
        if (c.empty() || c.is_single_column()) continue;
        m = std::max(m, c.diameter());
        have_m = true;
    }
    if (have_m && p.c0.denominator() <= m) return false;
    auto boxes = lam.boxes();
    for (const Box& a : boxes)
        for (const Box& b : boxes) {
            if (a.component == b.component) continue;
            if ((charged_content(a, p) - charged_content(b, p)).is_integer()) return false;
        }
    return true;
}

BlockDiag block_diagonalizable(const Params& p) {
    BlockDiag out;
    RPartition triv = RPartition::trivial(p.r, p.n);
    auto ws = weight_multiset(triv, p);
    out.distinct_weights = std::adjacent_find(ws.begin(), ws.end()) == ws.end();
    out.all_members = true;
    for (const RPartition& lam : enumerate_block(p))
        if (!is_diagonalizable(lam, p)) {
            out.all_members = false;
            break;
        }
    return out;
}

} // namespace cherednik
