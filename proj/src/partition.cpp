#include "cherednik/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cherednik {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    for (int i = 0; i < rows(); ++i)
        for (int j = 1; j <= parts[i]; ++j) out.push_back(j - (i + 1));
    return out;
}

bool Partition::is_single_column() const {
    return !parts.empty() && parts[0] == 1;
}

int Partition::diameter() const {
    if (empty()) throw internal_error("diameter of empty partition");
    // max content = parts[0]-1, min content = -(rows-1)
    return (parts[0] - 1) + (rows() - 1);
}

Partition Partition::transposed() const {
    if (empty()) return {};
    std::vector<int> t(parts[0], 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

bool Partition::is_hook() const {
    return empty() || rows() == 1 || parts[1] == 1;
}

std::optional<Partition> partition_from_distinct_contents(std::vector<long long> contents) {
    if (contents.empty()) return Partition();
    std::sort(contents.begin(), contents.end());
    for (size_t i = 1; i < contents.size(); ++i)
        if (contents[i] != contents[i - 1] + 1) return std::nullopt;
    long long lo = contents.front(), hi = contents.back();
    if (lo > 0 || hi < 0) return std::nullopt;
    // hook with arm length hi, leg length -lo
    std::vector<int> parts;
    parts.push_back(static_cast<int>(hi) + 1);
    for (long long i = 0; i < -lo; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

RPartition RPartition::trivial(int r, int n) {
    std::vector<Partition> c(static_cast<size_t>(r));
    c[0] = Partition(std::vector<int>{n});
    return RPartition(std::move(c));
}

int RPartition::total() const {
    int t = 0;
    for (const auto& c : comps) t += c.size();
    return t;
}

std::vector<Box> RPartition::boxes() const {
    std::vector<Box> out;
    for (int c = 0; c < r(); ++c)
        for (int i = 0; i < comps[c].rows(); ++i)
            for (int j = 1; j <= comps[c].parts[i]; ++j)
                out.push_back(Box{c, i + 1, j});
    return out;
}

std::string RPartition::str() const {
    std::string s;
    for (int c = 0; c < r(); ++c) {
        if (c) s += '|';
        if (comps[c].empty()) {
            s += '-';
        } else {
            for (int i = 0; i < comps[c].rows(); ++i) {
                if (i) s += ',';
                s += std::to_string(comps[c].parts[i]);
            }
        }
    }
    return s;
}

RPartition RPartition::parse(std::string_view text, int r) {
    std::vector<Partition> comps;
    size_t pos = 0;
    while (true) {
        size_t bar = text.find('|', pos);
        std::string_view piece = text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
        if (piece == "-" || piece.empty()) {
            comps.emplace_back();
        } else {
            std::vector<int> parts;
            size_t p = 0;
            while (p <= piece.size()) {
                size_t comma = piece.find(',', p);
                std::string tok(piece.substr(p, comma == std::string_view::npos ? comma : comma - p));
                try {
                    parts.push_back(std::stoi(tok));
                } catch (...) {
                    throw std::invalid_argument("malformed partition '" + std::string(piece) + "'");
                }
                if (comma == std::string_view::npos) break;
                p = comma + 1;
            }
            comps.emplace_back(std::move(parts));
        }
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    if (static_cast<int>(comps.size()) != r)
        throw std::invalid_argument("expected " + std::to_string(r) + " components in '" +
                                    std::string(text) + "'");
    return RPartition(std::move(comps));
}

namespace {

long long hook_count(const Partition& lam) {
    // m! / prod of hook lengths
    if (lam.empty()) return 1;
    int m = lam.size();
    Partition t = lam.transposed();
    long long fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    long long denom = 1;
    for (int i = 0; i < lam.rows(); ++i)
        for (int j = 1; j <= lam.parts[i]; ++j) {
            long long hook = (lam.parts[i] - j) + (t.parts[j - 1] - (i + 1)) + 1;
            denom *= hook;
        }
    if (fact % denom != 0) throw internal_error("hook length formula failed");
    return fact / denom;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (n - k + i);
        out /= i;
    }
    return out;
}

} // namespace

long long syt_count(const RPartition& lam) {
    long long out = 1;
    long long placed = 0;
    for (const auto& c : lam.comps) {
        long long m = c.size();
        out *= binomial(placed + m, m);
        out *= hook_count(c);
        placed += m;
    }
    return out;
}

std::vector<std::vector<int>> all_syt(const RPartition& lam) {
    int n = lam.total();
    auto boxes = lam.boxes();
    int nb = static_cast<int>(boxes.size());

    // entry per canonical box; a box may receive k when its upper and left
    // neighbours (within its component) already hold entries
    std::vector<int> entries(nb, 0);
    std::vector<std::vector<int>> out;

    auto index_of = [&](int comp, int row, int col) -> int {
        for (int i = 0; i < nb; ++i)
            if (boxes[i].component == comp && boxes[i].row == row && boxes[i].col == col) return i;
        return -1;
    };

    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(entries);
            return;
        }
        for (int i = 0; i < nb; ++i) {
            if (entries[i] != 0) continue;
            const Box& b = boxes[i];
            if (b.row > 1) {
                int up = index_of(b.component, b.row - 1, b.col);
                if (entries[up] == 0) continue;
            }
            if (b.col > 1) {
                int left = index_of(b.component, b.row, b.col - 1);
                if (entries[left] == 0) continue;
            }
            entries[i] = k;
            rec(k + 1);
            entries[i] = 0;
        }
    };
    rec(1);
    return out;
}

std::vector<RPartition> all_rpartitions(int r, int n) {
    // partitions of m for each m <= n
    std::vector<std::vector<Partition>> parts_of(n + 1);
    parts_of[0] = {Partition()};
    for (int m = 1; m <= n; ++m) {
        std::function<void(int, int, std::vector<int>&)> gen = [&](int rest, int maxp, std::vector<int>& cur) {
            if (rest == 0) {
                parts_of[m].push_back(Partition(cur));
                return;
            }
            for (int p = std::min(rest, maxp); p >= 1; --p) {
                cur.push_back(p);
                gen(rest - p, p, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        gen(m, m, cur);
    }

    std::vector<RPartition> out;
    std::vector<Partition> cur(static_cast<size_t>(r));
    std::function<void(int, int)> rec = [&](int comp, int rest) {
        if (comp == r) {
            if (rest == 0) out.push_back(RPartition(cur));
            return;
        }
        for (int m = 0; m <= rest; ++m)
            for (const auto& p : parts_of[m]) {
                cur[comp] = p;
                rec(comp + 1, rest - m);
            }
        cur[comp] = Partition();
    };
    rec(0, n);
    return out;
}

} // namespace cherednik
