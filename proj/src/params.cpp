#include "cherednik/params.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cherednik {

Params Params::make(int r, int n, Rational c0, std::vector<Rational> d) {
    if (r < 1 || n < 1) throw std::invalid_argument("r and n must be positive");
    if (static_cast<int>(d.size()) != r)
        throw std::invalid_argument("d-vector must have r entries");
    Params p;
    p.r = r;
    p.n = n;
    p.c0 = c0;
    p.d = std::move(d);
    return p;
}

Params Params::equal(int r, int n) { return equal(r, n, Rational(1, n)); }

Params Params::equal(int r, int n, Rational c0) {
    std::vector<Rational> d(static_cast<size_t>(r), -c0);
    d[0] = Rational(r - 1) * c0;
    return make(r, n, c0, std::move(d));
}

long long Params::ell() const {
    if (!principal_form())
        throw std::invalid_argument("principal-block machinery requires c0 = ell/n");
    return c0.numerator();
}

Rational charged_content(const Box& b, const Params& p) {
    return (p.d_at(b.component) - Rational(b.component)) / Rational(p.r) +
           Rational(b.content()) * p.c0;
}

Rational c_weight(const Box& b, const Params& p) {
    return charged_content(b, p).mod1();
}

Rational c_tilde_box(const Box& b, const Params& p) {
    return Rational(p.r) * p.c0 * Rational(b.content()) + p.d_at(b.component);
}

Rational c_hat(const RPartition& lam, const Params& p) {
    Rational s;
    for (const Box& b : lam.boxes()) s += c_tilde_box(b, p);
    return s;
}

Rational h_c(const RPartition& lam, const Params& p) {
    return Rational(p.n, 2) - c_hat(lam, p);
}

std::vector<Rational> weight_multiset(const RPartition& lam, const Params& p) {
    std::vector<Rational> ws;
    for (const Box& b : lam.boxes()) ws.push_back(c_weight(b, p));
    std::sort(ws.begin(), ws.end());
    return ws;
}

bool same_block(const RPartition& a, const RPartition& b, const Params& p) {
    if (a.total() != b.total())
        throw std::invalid_argument("same_block: size mismatch");
    if (p.c0.is_zero())
        throw std::invalid_argument("same_block requires nonzero parameters");
    return weight_multiset(a, p) == weight_multiset(b, p);
}

} // namespace cherednik
