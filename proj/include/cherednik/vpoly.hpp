#pragma once

#include "cherednik/bigint.hpp"

#include <string>
#include <vector>

namespace cherednik {

// Polynomial in the grading variable v with exact integer coefficients.
// Decomposition-matrix entries are 0 or a single monomial v^d; inverse
// entries are c v^d; products of whole matrices stay exact.
class VPoly {
public:
    VPoly() = default;
    static VPoly monomial(BigInt c, int d) {
        VPoly p;
        if (!c.is_zero()) {
            p.c_.resize(static_cast<size_t>(d) + 1);
            p.c_.back() = std::move(c);
        }
        return p;
    }
    static VPoly one() { return monomial(BigInt(1), 0); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int d) const {
        static const BigInt zero;
        if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(d)];
    }

    VPoly& operator+=(const VPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    VPoly& operator-=(const VPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    VPoly operator+(const VPoly& o) const { VPoly r = *this; r += o; return r; }
    VPoly operator-(const VPoly& o) const { VPoly r = *this; r -= o; return r; }

    VPoly operator*(const VPoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        VPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, BigInt());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    VPoly shifted(int by) const { // multiply by v^by
        if (is_zero()) return {};
        VPoly r;
        r.c_.assign(static_cast<size_t>(by), BigInt());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    BigInt eval_neg1() const {
        BigInt out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (i % 2 == 0) out += c_[i]; else out -= c_[i];
        return out;
    }
    BigInt eval_one() const {
        BigInt out;
        for (const BigInt& c : c_) out += c;
        return out;
    }

    bool operator==(const VPoly& o) const { return c_ == o.c_; }

    // "0", "1", "v^d", "-v^d", else the full sum
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const BigInt& c = coeff(d);
            if (c.is_zero()) continue;
            std::string cs = c.str();
            if (!out.empty()) {
                out += cs[0] == '-' ? " - " : " + ";
                if (cs[0] == '-') cs = cs.substr(1);
            }
            if (d == 0) {
                out += cs;
            } else {
                if (cs == "1") cs.clear();
                else if (cs == "-1") cs = "-";
                out += cs + "v" + (d == 1 ? "" : "^" + std::to_string(d));
            }
        }
        return out;
    }

private:
    std::vector<BigInt> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

} // namespace cherednik
