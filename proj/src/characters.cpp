#include "cherednik/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cherednik {

namespace {

// exact division by (1-t) via prefix sums; divisible iff P(1) = 0
std::optional<std::vector<long long>> divide_by_one_minus_t(const std::vector<long long>& p) {
    std::vector<long long> q;
    long long run = 0;
    for (long long c : p) {
        run += c;
        q.push_back(run);
    }
    if (q.empty() || q.back() != 0) return std::nullopt;
    q.pop_back();
    return q;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i);
        out /= i;
    }
    return out;
}

} // namespace

GradedDimension graded_dimension(const BlockGraph& g, const Resolution& res) {
    const Params& p = g.params;
    Rational top = c_hat(g.vertices[static_cast<size_t>(res.center)], p);

    std::vector<long long> num;
    for (size_t deg = 0; deg < res.terms.size(); ++deg) {
        long long sign = deg % 2 == 0 ? 1 : -1;
        for (int v : res.terms[deg]) {
            Rational e = top - c_hat(g.vertices[static_cast<size_t>(v)], p);
            if (!e.is_integer() || e.is_negative())
                throw internal_error("charge exponent is not a non-negative integer");
            size_t exp = static_cast<size_t>(e.as_integer());
            if (num.size() <= exp) num.resize(exp + 1, 0);
            num[exp] += sign * syt_count(g.vertices[static_cast<size_t>(v)]);
        }
    }
    while (!num.empty() && num.back() == 0) num.pop_back();

    GradedDimension out;
    std::vector<long long> cur = num;
    bool ok = true;
    for (int i = 0; i < p.n && ok; ++i) {
        auto q = divide_by_one_minus_t(cur);
        if (!q) ok = false;
        else cur = std::move(*q);
    }
    if (ok) {
        out.finite = true;
        out.denom_exponent = 0;
        out.num = std::move(cur);
        while (!out.num.empty() && out.num.back() == 0) out.num.pop_back();
        for (long long c : out.num)
            if (c < 0) throw internal_error("negative coefficient in a graded dimension");
        out.total = std::accumulate(out.num.begin(), out.num.end(), 0LL);
    } else {
        out.finite = false;
        out.denom_exponent = p.n;
        out.num = std::move(num);
        out.total = 0;
    }
    return out;
}

GradedDimension g2_dim_formula(int n, char variant) {
    if (n < 1 || (variant != 'C' && variant != 'D'))
        throw std::invalid_argument("g2_dim_formula needs n >= 1 and variant C or D");
    auto partial = [&](int d) {
        long long s = 0;
        for (int l = 0; l <= d; ++l)
            if ((d - l) % 2 == 0) s += binomial(2 * n, l);
        return s;
    };
    GradedDimension out;
    if (variant == 'C') {
        out.num.assign(static_cast<size_t>(2 * n) + 1, 0);
        out.num[static_cast<size_t>(n)] = partial(n);
        for (int d = 0; d < n; ++d) {
            long long v = partial(d);
            out.num[static_cast<size_t>(d)] += v;
            out.num[static_cast<size_t>(2 * n - d)] += v;
        }
    } else {
        out.num.assign(static_cast<size_t>(2 * (n - 1)) + 1, 0);
        out.num[static_cast<size_t>(n - 1)] = partial(n - 1);
        for (int d = 0; d + 1 < n; ++d) {
            long long v = partial(d);
            out.num[static_cast<size_t>(d)] += v;
            out.num[static_cast<size_t>(2 * (n - 1) - d)] += v;
        }
    }
    out.finite = true;
    out.total = std::accumulate(out.num.begin(), out.num.end(), 0LL);
    return out;
}

namespace {

// enumerate alpha in {0..hi}^len, calling fn on each
template <typename F>
void enumerate_vectors(int len, long long hi, F&& fn) {
    std::vector<long long> alpha(static_cast<size_t>(len), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            fn(alpha);
            return;
        }
        for (long long v = 0; v <= hi; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
}

void bump(std::vector<long long>& coeffs, long long deg) {
    if (static_cast<long long>(coeffs.size()) <= deg) coeffs.resize(static_cast<size_t>(deg) + 1, 0);
    ++coeffs[static_cast<size_t>(deg)];
}

} // namespace

GradedDimension monomial_basis_count(const Params& p) {
    if (p.n % p.r != 0)
        throw std::invalid_argument("monomial basis count needs the group G(r,1,rn)");
    Params eq = Params::equal(p.r, p.n);
    if (!(p.c0 == eq.c0) || p.d != eq.d)
        throw std::invalid_argument("monomial basis count is stated for equal parameters 1/rn");
    int N = p.n, r = p.r, m = N / r;

    GradedDimension out;
    enumerate_vectors(N, r, [&](const std::vector<long long>& alpha) {
        Composition a{alpha};
        SortedComposition sc = sort_composition(a);
        for (int k = 1; k < r; ++k)
            if (sc.minus(k * m) > k - 1) return;
        if (sc.minus(N) > r) return;
        if (sc.minus(N) == r && !(sc.w_inv[static_cast<size_t>(N - 1)] > sc.w_inv[0])) return;
        bump(out.num, a.total());
    });
    out.finite = true;
    out.total = std::accumulate(out.num.begin(), out.num.end(), 0LL);
    return out;
}

GradedDimension general_basis_count(const Params& p, std::optional<int> degree_cap) {
    long long ell = p.ell();
    int N = p.n, r = p.r;

    // condition (b): integer pairs (k, m), k > 0, 0 <= m <= n-1, with
    // d_0 - d_{-k} + r m ell / n = k
    std::vector<std::pair<long long, long long>> km;
    Rational dmax;
    for (int i = 0; i < r; ++i) dmax = std::max(dmax, p.d[0] - p.d[static_cast<size_t>(i)]);
    long long kBound = r * ell + dmax.floor_int() + 2;
    for (long long k = 1; k <= kBound; ++k) {
        Rational mr = (Rational(k) - p.d[0] + p.d_at(-k)) * Rational(N) / (Rational(r) * Rational(ell));
        if (!mr.is_integer()) continue;
        long long m = mr.as_integer();
        if (m >= 0 && m <= N - 1) km.push_back({k, m});
    }

    long long hi;
    if (!km.empty()) {
        long long minK = km[0].first;
        for (auto& [k, m] : km) minK = std::min(minK, k);
        hi = (minK - 1) + ell * r; // alpha^-_1 <= minK-1, spread <= ell r
    } else if (degree_cap) {
        hi = *degree_cap;
    } else {
        throw std::invalid_argument("general basis count is infinite; supply a degree cap");
    }

    GradedDimension out;
    enumerate_vectors(N, hi, [&](const std::vector<long long>& alpha) {
        Composition a{alpha};
        if (degree_cap && a.total() > *degree_cap) return;
        SortedComposition sc = sort_composition(a);
        long long spread = sc.minus(N) - sc.minus(1);
        if (spread > ell * r) return;
        if (spread == ell * r && !(sc.w_inv[static_cast<size_t>(N - 1)] > sc.w_inv[0])) return;
        for (auto& [k, m] : km)
            if (sc.minus(static_cast<int>(m) + 1) >= k) return;
        bump(out.num, a.total());
    });
    out.finite = !km.empty();
    out.denom_exponent = 0;
    out.total = std::accumulate(out.num.begin(), out.num.end(), 0LL);
    return out;
}

Spectrum spectrum(const Composition& alpha, const std::vector<int>& T, const RPartition& lam,
                  const Params& p) {
    int n = p.n;
    if (alpha.n() != n || static_cast<int>(T.size()) != lam.total() || lam.total() != n)
        throw std::invalid_argument("spectrum: inconsistent sizes");
    auto boxes = lam.boxes();
    SortedComposition sc = sort_composition(alpha);

    Spectrum s;
    for (int i = 0; i < n; ++i) {
        int entry = sc.w[static_cast<size_t>(i)] + 1; // w_alpha(i), 1-based
        int bi = -1;
        for (size_t j = 0; j < boxes.size(); ++j)
            if (T[j] == entry) bi = static_cast<int>(j);
        if (bi < 0) throw std::invalid_argument("spectrum: T is not a bijection onto 1..n");
        const Box& b = boxes[static_cast<size_t>(bi)];
        long long ai = alpha.entries[static_cast<size_t>(i)];
        Rational z = Rational(ai + 1) - (p.d_at(b.component) - p.d_at(b.component - ai - 1)) -
                     Rational(p.r) * Rational(b.content()) * p.c0;
        int zeta = static_cast<int>((((b.component - ai) % p.r) + p.r) % p.r);
        s.at.push_back({z, zeta});
    }
    return s;
}

std::vector<std::pair<Rational, int>> fingerprint(const RPartition& mu, const Params& p) {
    std::vector<std::pair<Rational, int>> out;
    for (const Box& b : mu.boxes()) {
        Rational z = Rational(1) - (p.d_at(b.component) - p.d_at(b.component - 1)) -
                     Rational(p.r) * Rational(b.content()) * p.c0;
        out.push_back({z, b.component % p.r});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <typename F>
void enumerate_compositions_of(long long total, int len, F&& fn) {
    std::vector<long long> alpha(static_cast<size_t>(len), 0);
    std::function<void(int, long long)> rec = [&](int pos, long long rest) {
        if (pos == len - 1) {
            alpha[static_cast<size_t>(pos)] = rest;
            fn(alpha);
            return;
        }
        for (long long v = 0; v <= rest; ++v) {
            alpha[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    if (len == 0) return;
    rec(0, total);
}

} // namespace

std::optional<RPartition> isotype_oracle(const RPartition& lam,
                                         const std::vector<FundamentalSubmodule>& submods,
                                         const Params& p, long long degree_cap) {
    for (const auto& f : submods)
        if (!(f.host == lam))
            throw std::invalid_argument("isotype oracle: submodules of different hosts");
    if (!is_diagonalizable(lam, p))
        throw std::invalid_argument("isotype oracle requires a diagonalizable standard module");

    std::map<std::vector<std::pair<Rational, int>>, std::vector<RPartition>> prints;
    for (const RPartition& mu : enumerate_block(p)) prints[fingerprint(mu, p)].push_back(mu);

    auto tableaux = all_syt(lam);
    for (long long deg = 0; deg <= degree_cap; ++deg) {
        std::vector<std::vector<std::pair<Rational, int>>> hits;
        enumerate_compositions_of(deg, p.n, [&](const std::vector<long long>& av) {
            Composition alpha{av};
            SortedComposition sc = sort_composition(alpha);
            for (const auto& T : tableaux) {
                bool in = true;
                for (const auto& f : submods)
                    if (!predicate_holds(f, sc, T)) {
                        in = false;
                        break;
                    }
                if (!in) continue;
                Spectrum s = spectrum(alpha, T, lam, p);
                auto key = s.at;
                std::sort(key.begin(), key.end());
                hits.push_back(std::move(key));
            }
        });
        if (hits.empty()) continue;
        for (const auto& h : hits)
            if (h != hits.front())
                throw internal_error("isotype oracle: mixed spectra at the minimal degree");
        auto it = prints.find(hits.front());
        if (it == prints.end())
            throw internal_error("isotype oracle: spectrum matches no block member");
        if (it->second.size() != 1) {
            std::string msg = "isotype oracle: ambiguous spectrum match:";
            for (const auto& mu : it->second) msg += " " + mu.str();
            throw internal_error(msg);
        }
        return it->second.front();
    }
    return std::nullopt;
}

int jantzen_layer_count(const Composition& alpha, const std::vector<int>& T,
                        const RPartition& lam, const Params& p) {
    SortedComposition sc = sort_composition(alpha);
    int count = 0;
    for (const auto& f : fundamental_submodules(lam, p))
        if (predicate_holds(f, sc, T)) ++count;
    return count;
}

long long default_degree_cap(const BlockGraph& g) {
    Rational lo = c_hat(g.vertices[0], g.params), hi = lo;
    for (const auto& v : g.vertices) {
        Rational c = c_hat(v, g.params);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return 2 * (hi - lo).as_integer() + g.params.r;
}

namespace {

// x^k coefficient of (1-4x)^{-3/2}, exact
Rational d_series_rational(int k) {
    Rational term(1);
    for (int j = 1; j <= k; ++j)
        term = term * (Rational(-3, 2) - Rational(j - 1)) / Rational(j) * Rational(-4);
    return term;
}

} // namespace

long long oy_d_series_coeff(int k) {
    Rational c = d_series_rational(k);
    if (!c.is_integer() || c.is_negative()) throw internal_error("D series coefficient not a positive integer");
    return c.as_integer();
}

long long oy_c_series_coeff(int k) {
    // (1+sqrt(1-4x))^2/4 = (1-2x)/2 + sqrt(1-4x)/2, so the product with
    // (1-4x)^{-3/2} is (1-2x)/2 (1-4x)^{-3/2} + (1-4x)^{-1}/2
    Rational a_k = d_series_rational(k);
    Rational a_km1 = k >= 1 ? d_series_rational(k - 1) : Rational(0);
    Rational geo(1);
    for (int j = 0; j < k; ++j) geo = geo * Rational(4);
    Rational c = (a_k - Rational(2) * a_km1) / Rational(2) + geo / Rational(2);
    if (!c.is_integer() || c.is_negative()) throw internal_error("C series coefficient not a positive integer");
    return c.as_integer();
}

OYReport oblomkov_yun_check(int nmax) {
    if (nmax < 1) throw std::invalid_argument("oy check needs nmax >= 1");
    OYReport rep;
    rep.all_match = true;
    for (int n = 1; n <= nmax; ++n) {
        OYRow row;
        row.n = n;
        row.dim_d_formula = g2_dim_formula(n, 'D').total;
        row.dim_c_formula = g2_dim_formula(n, 'C').total;
        row.dim_d_series = oy_d_series_coeff(n - 1);
        row.dim_c_series = oy_c_series_coeff(n);
        row.match_d = row.dim_d_formula == row.dim_d_series;
        row.match_c = row.dim_c_formula == row.dim_c_series;
        rep.all_match = rep.all_match && row.match_d && row.match_c;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace cherednik
