#include "cherednik/labeling.hpp"

#include <algorithm>

namespace cherednik {

std::vector<Label> BlockLabeling::flattened() const {
    std::vector<Label> out;
    for (const auto& box : per_box)
        for (const Label& l : box) out.push_back(l);
    return out;
}

BlockLabeling build_labeling(const Params& p) {
    if (!p.principal_form())
        throw std::invalid_argument("principal-block machinery requires c0 = ell/n");
    BlockLabeling bl;
    bl.n = p.n;
    bl.ell = p.ell();
    bl.per_box.assign(static_cast<size_t>(p.n), {});
    bl.by_i.assign(static_cast<size_t>(p.r), std::nullopt);

    for (int i = 0; i < p.r; ++i) {
        std::optional<std::pair<int, long long>> found;
        for (int ct = 0; ct < p.n; ++ct) {
            // (d_i - i)/r - d_0/r - ct*c0 must be an integer k
            Rational k = (p.d_at(i) - Rational(i)) / Rational(p.r) - p.d[0] / Rational(p.r) -
                         Rational(ct) * p.c0;
            if (!k.is_integer()) continue;
            if (found)
                throw internal_error("label for i=" + std::to_string(i) + " is not unique");
            found = {ct + 1, k.as_integer()};
        }
        if (found) {
            bl.by_i[static_cast<size_t>(i)] = found;
            bl.per_box[static_cast<size_t>(found->first - 1)].push_back(Label{i, found->second});
        }
    }
    for (auto& labels : bl.per_box)
        std::sort(labels.begin(), labels.end(), label_greater);

    if (std::count(bl.per_box[0].begin(), bl.per_box[0].end(), Label{0, 0}) != 1)
        throw internal_error("box 1 must carry the label (0,0)");
    return bl;
}

TightResult tight_check(const Params& p) {
    BlockLabeling bl = build_labeling(p);
    std::vector<Label> chain = bl.flattened();
    TightResult res;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!label_greater(chain[i], chain[i + 1])) {
            res.tight = false;
            res.witness = label_str(chain[i]) + " > " + label_str(chain[i + 1]) + " fails";
            return res;
        }
    }
    Label wrap{chain.front().i, chain.front().k - bl.ell};
    if (!label_greater(chain.back(), wrap)) {
        res.tight = false;
        res.witness = label_str(chain.back()) + " > " + label_str(wrap) + " fails (wrap)";
        return res;
    }
    res.tight = true;
    return res;
}

} // namespace cherednik
