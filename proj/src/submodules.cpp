#include "cherednik/submodules.hpp"

#include <algorithm>
#include <set>

namespace cherednik {

std::string FundamentalSubmodule::str() const {
    auto boxstr = [](const Box& b) {
        return std::to_string(b.component) + ":(" + std::to_string(b.row) + "," +
               std::to_string(b.col) + ")";
    };
    if (kind == Type1) return "M{" + boxstr(b1) + "," + std::to_string(k) + "}";
    return "M{" + boxstr(b1) + "," + boxstr(b2) + "," + std::to_string(k) +
           (sign > 0 ? ",+" : ",-") + "}";
}

namespace {

// weakly northwest in the same component forces T(b1) < T(b2) for every
// standard tableau, making the Type2 span empty
bool forces_smaller_entry(const Box& b1, const Box& b2) {
    return b1.component == b2.component && b1.row <= b2.row && b1.col <= b2.col;
}

} // namespace

std::vector<FundamentalSubmodule> fundamental_submodules(const RPartition& lam, const Params& p) {
    if (!is_diagonalizable(lam, p))
        throw std::invalid_argument("fundamental submodules require a diagonalizable standard module");
    auto boxes = lam.boxes();
    std::vector<FundamentalSubmodule> out;

    for (const Box& b : boxes) {
        // k = r c(b) + beta - d_{beta-k}: solve per residue class of k
        Rational base = Rational(p.r) * charged_content(b, p) + Rational(b.component);
        for (int rho = 0; rho < p.r; ++rho) {
            Rational k = base - p.d_at(b.component - rho);
            if (!k.is_integer()) continue;
            long long kk = k.as_integer();
            if (kk <= 0 || ((kk % p.r) + p.r) % p.r != rho) continue;
            FundamentalSubmodule f;
            f.kind = FundamentalSubmodule::Type1;
            f.host = lam;
            f.b1 = b;
            f.k = kk;
            out.push_back(std::move(f));
        }
    }

    for (const Box& b1 : boxes)
        for (const Box& b2 : boxes) {
            if (b1 == b2 || forces_smaller_entry(b1, b2)) continue;
            Rational base = Rational(p.r) * (charged_content(b1, p) - charged_content(b2, p)) +
                            Rational(b1.component - b2.component);
            for (int sign : {+1, -1}) {
                Rational k = base + Rational(sign) * Rational(p.r) * p.c0;
                if (!k.is_integer()) continue;
                long long kk = k.as_integer();
                if (kk <= 0) continue;
                long long res = ((kk - (b1.component - b2.component)) % p.r + p.r) % p.r;
                if (res != 0) continue;
                FundamentalSubmodule f;
                f.kind = FundamentalSubmodule::Type2;
                f.host = lam;
                f.b1 = b1;
                f.b2 = b2;
                f.k = kk;
                f.sign = sign;
                out.push_back(std::move(f));
            }
        }

    std::sort(out.begin(), out.end(), [](const FundamentalSubmodule& a, const FundamentalSubmodule& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (!(a.b1 == b.b1)) return a.b1 < b.b1;
        if (!(a.b2 == b.b2)) return a.b2 < b.b2;
        return a.k < b.k;
    });
    return out;
}

namespace {

struct Grid {
    // row lengths, mutable during a box move
    std::vector<int> rows;

    static Grid of(const Partition& part) {
        return Grid{part.parts};
    }
    bool has(int row, int col) const {
        return row >= 1 && row <= static_cast<int>(rows.size()) &&
               col >= 1 && col <= rows[static_cast<size_t>(row - 1)];
    }
    Partition to_partition() const {
        std::vector<int> p = rows;
        while (!p.empty() && p.back() == 0) p.pop_back();
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] < p[i + 1]) throw internal_error("box move produced a non-partition shape");
        for (int v : p)
            if (v < 0) throw internal_error("box move produced a non-partition shape");
        return Partition(std::move(p));
    }
};

} // namespace

RPartition lowest_degree_isotype(const FundamentalSubmodule& f, const Params& p) {
    const RPartition& lam = f.host;
    std::vector<Partition> comps = lam.comps;

    if (f.kind == FundamentalSubmodule::Type1) {
        int c = f.b1.component;
        int t = static_cast<int>((((c - f.k) % p.r) + p.r) % p.r);
        Grid g = Grid::of(comps[static_cast<size_t>(c)]);
        // subdiagram weakly below and right of b
        std::vector<int> sub;
        for (int row = f.b1.row; row <= static_cast<int>(g.rows.size()); ++row) {
            int len = g.rows[static_cast<size_t>(row - 1)];
            if (len < f.b1.col) break;
            sub.push_back(len - f.b1.col + 1);
            g.rows[static_cast<size_t>(row - 1)] = f.b1.col - 1;
        }
        if (sub.empty()) throw internal_error("Type1 move at a box outside its component");
        Partition moved = Partition(std::move(sub));
        if (t != c && !comps[static_cast<size_t>(t)].empty())
            throw internal_error("Type1 target component is not empty");
        comps[static_cast<size_t>(c)] = g.to_partition();
        comps[static_cast<size_t>(t)] = moved;
    } else {
        int c1 = f.b1.component, c2 = f.b2.component;
        Grid g1 = Grid::of(comps[static_cast<size_t>(c1)]);
        int strip = 0;
        if (f.sign > 0) {
            // detach b1 and the boxes below it (a column strip)
            for (int row = f.b1.row; row <= static_cast<int>(g1.rows.size()) &&
                                     g1.rows[static_cast<size_t>(row - 1)] >= f.b1.col;
                 ++row) {
                if (g1.rows[static_cast<size_t>(row - 1)] != f.b1.col)
                    throw internal_error("Type2 column strip leaves a gap");
                g1.rows[static_cast<size_t>(row - 1)] = f.b1.col - 1;
                ++strip;
            }
        } else {
            // detach b1 and the boxes to its right (a row strip)
            if (!g1.has(f.b1.row, f.b1.col)) throw internal_error("Type2 box outside its component");
            strip = g1.rows[static_cast<size_t>(f.b1.row - 1)] - f.b1.col + 1;
            g1.rows[static_cast<size_t>(f.b1.row - 1)] = f.b1.col - 1;
        }
        if (strip <= 0) throw internal_error("Type2 move with empty strip");
        comps[static_cast<size_t>(c1)] = g1.to_partition();

        Grid g2 = Grid::of(comps[static_cast<size_t>(c2)]);
        if (f.sign > 0) {
            // attach so b1 sits directly below b2
            for (int t = 0; t < strip; ++t) {
                int row = f.b2.row + 1 + t;
                if (static_cast<int>(g2.rows.size()) < row) g2.rows.resize(static_cast<size_t>(row), 0);
                if (g2.rows[static_cast<size_t>(row - 1)] != f.b2.col - 1)
                    throw internal_error("Type2 column attach does not fit");
                g2.rows[static_cast<size_t>(row - 1)] = f.b2.col;
            }
        } else {
            // attach so b1 sits directly right of b2
            if (g2.rows[static_cast<size_t>(f.b2.row - 1)] != f.b2.col)
                throw internal_error("Type2 row attach does not fit");
            g2.rows[static_cast<size_t>(f.b2.row - 1)] += strip;
            if (f.b2.row > 1 &&
                g2.rows[static_cast<size_t>(f.b2.row - 2)] < g2.rows[static_cast<size_t>(f.b2.row - 1)])
                throw internal_error("Type2 row attach does not fit");
        }
        comps[static_cast<size_t>(c2)] = g2.to_partition();
    }

    RPartition mu(std::move(comps));
    if (mu.total() != lam.total()) throw internal_error("box move changed the total size");
    return mu;
}

bool predicate_holds(const FundamentalSubmodule& f, const SortedComposition& sc,
                     const std::vector<int>& T) {
    auto boxes = f.host.boxes();
    auto entry_at = [&](const Box& b) -> int {
        for (size_t i = 0; i < boxes.size(); ++i)
            if (boxes[i] == b) return T[i];
        throw internal_error("predicate box not in host");
    };
    if (f.kind == FundamentalSubmodule::Type1)
        return sc.minus(entry_at(f.b1)) >= f.k;
    int t1 = entry_at(f.b1), t2 = entry_at(f.b2);
    long long diff = sc.minus(t1) - sc.minus(t2);
    if (diff > f.k) return true;
    if (diff < f.k) return false;
    return sc.w_inv_1(t1) < sc.w_inv_1(t2);
}

} // namespace cherednik
