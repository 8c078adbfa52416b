#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cherednik {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Chain counts in the hom graph grow combinatorially, so the polynomial
// coefficients are kept exact here rather than in machine words. Only the
// operations the chain DP needs are provided: addition, subtraction,
// comparison and decimal printing.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long a = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(a));
        if (a >> 32) mag_.push_back(static_cast<uint32_t>(a >> 32));
    }

    bool is_zero() const { return sign_ == 0; }
    int sgn() const { return sign_; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(mag_, o.mag_);
            return *this;
        }
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
        if (c > 0) {
            sub_mag(mag_, o.mag_);
        } else {
            std::vector<uint32_t> tmp = o.mag_;
            sub_mag(tmp, mag_);
            mag_ = std::move(tmp);
            sign_ = o.sign_;
        }
        return *this;
    }
    BigInt& operator-=(const BigInt& o) { return *this += -o; }
    BigInt operator+(const BigInt& o) const { BigInt r = *this; r += o; return r; }
    BigInt operator-(const BigInt& o) const { BigInt r = *this; r -= o; return r; }

    BigInt operator*(const BigInt& o) const {
        BigInt r;
        if (sign_ == 0 || o.sign_ == 0) return r;
        r.sign_ = sign_ * o.sign_;
        r.mag_.assign(mag_.size() + o.mag_.size(), 0);
        for (size_t i = 0; i < mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(mag_[i]) * o.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + o.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.mag_.empty() && r.mag_.back() == 0) r.mag_.pop_back();
        if (r.mag_.empty()) r.sign_ = 0;
        return r;
    }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator==(long long v) const { return *this == BigInt(v); }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (sign_ < 0) out.insert(0, "-");
        return out;
    }

    // Exact conversion when the value fits; used only in contexts where
    // smallness is an invariant (e.g. verified dimension totals).
    long long to_int64() const {
        unsigned long long a = 0;
        if (mag_.size() > 2) throw std::overflow_error("bigint too large for int64");
        if (mag_.size() >= 1) a |= mag_[0];
        if (mag_.size() == 2) a |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (a > static_cast<unsigned long long>(INT64_MAX)) throw std::overflow_error("bigint too large for int64");
            return static_cast<long long>(a) * (sign_ == 0 ? 0 : 1);
        }
        if (a > static_cast<unsigned long long>(INT64_MAX) + 1ULL) throw std::overflow_error("bigint too large for int64");
        return -static_cast<long long>(a - 1) - 1;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_; // little-endian, no leading zero limb

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = carry + a[i] + (i < b.size() ? b[i] : 0);
            a[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<uint32_t>(carry));
    }

    // requires |a| >= |b|
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += (1LL << 32); borrow = 1; } else borrow = 0;
            a[i] = static_cast<uint32_t>(cur);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
};

} // namespace cherednik
