#include "ratgenus/bigint.hpp"

#include <bit>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ratgenus {

namespace {
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
constexpr u64 kBase = u64{1} << 32;
}  // namespace

void BigInt::canonicalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // two's-complement-safe magnitude, LLONG_MIN included
    u64 m = v > 0 ? static_cast<u64>(v) : (~static_cast<u64>(v) + 1);
    mag_.push_back(static_cast<u32>(m));
    if (m >> 32) mag_.push_back(static_cast<u32>(m >> 32));
}

void BigInt::mul_small_add(u32 mul, u32 add) {
    u64 carry = add;
    for (auto& limb : mag_) {
        u64 cur = static_cast<u64>(limb) * mul + carry;
        limb = static_cast<u32>(cur);
        carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<u32>(carry));
}

BigInt BigInt::from_decimal(std::string_view s) {
    std::string_view digits = s;
    bool neg = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        neg = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt out;
    out.sign_ = 1;
    // consume 9 digits at a time: 10^9 < 2^32
    size_t i = 0;
    while (i < digits.size()) {
        size_t take = std::min<size_t>(9, digits.size() - i);
        u32 chunk = 0, scale = 1;
        for (size_t j = 0; j < take; ++j) {
            char c = digits[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit");
            chunk = chunk * 10 + static_cast<u32>(c - '0');
            scale *= 10;
        }
        out.mul_small_add(scale, chunk);
        i += take;
    }
    if (neg) out.sign_ = -1;
    out.canonicalize();
    return out;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.empty()) return true;
    u64 m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<u64>(mag_[1]) << 32;
    if (sign_ > 0) return m <= static_cast<u64>(std::numeric_limits<i64>::max());
    return m <= static_cast<u64>(std::numeric_limits<i64>::max()) + 1;
}

long long BigInt::to_int64() const {
    u64 m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() >= 2) m |= static_cast<u64>(mag_[1]) << 32;
    if (sign_ >= 0) return static_cast<long long>(m);
    return -static_cast<long long>(m - 1) - 1;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

int BigInt::compare_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<u32> BigInt::add_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<u32> r;
    r.reserve(hi.size() + 1);
    u64 carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        u64 cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r.push_back(static_cast<u32>(cur));
        carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<u32>(carry));
    return r;
}

// precondition: |a| >= |b|
std::vector<u32> BigInt::sub_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r;
    r.reserve(a.size());
    i64 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        i64 cur = static_cast<i64>(a[i]) - borrow - (i < b.size() ? static_cast<i64>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<i64>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<u32>(cur));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> BigInt::mul_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u32> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u64 ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            u64 cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<u32>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit digits (u, v magnitudes; v nonempty).
void BigInt::divmod_mag(const std::vector<u32>& u, const std::vector<u32>& v,
                        std::vector<u32>& q, std::vector<u32>& r) {
    q.clear();
    r.clear();
    if (compare_mag(u, v) < 0) {
        r = u;
        return;
    }
    const size_t n = v.size();
    if (n == 1) {
        const u64 d = v[0];
        q.assign(u.size(), 0);
        u64 rem = 0;
        for (size_t i = u.size(); i-- > 0;) {
            u64 cur = (rem << 32) | u[i];
            q[i] = static_cast<u32>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<u32>(rem));
        return;
    }

    const size_t m = u.size() - n;
    const int s = std::countl_zero(v[n - 1]);
    std::vector<u32> vn(n), un(u.size() + 1);
    for (size_t i = n - 1; i > 0; --i)
        vn[i] = (v[i] << s) | (s ? v[i - 1] >> (32 - s) : 0);
    vn[0] = v[0] << s;
    un[u.size()] = s ? u[u.size() - 1] >> (32 - s) : 0;
    for (size_t i = u.size() - 1; i > 0; --i)
        un[i] = (u[i] << s) | (s ? u[i - 1] >> (32 - s) : 0);
    un[0] = u[0] << s;

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        u64 num = (static_cast<u64>(un[j + n]) << 32) | un[j + n - 1];
        u64 qhat = num / vn[n - 1];
        u64 rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply and subtract
        i64 borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u64 p = qhat * vn[i] + carry;
            carry = p >> 32;
            i64 t = static_cast<i64>(un[i + j]) - borrow - static_cast<i64>(p & 0xffffffffULL);
            if (t < 0) {
                t += static_cast<i64>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<u32>(t);
        }
        i64 top = static_cast<i64>(un[j + n]) - borrow - static_cast<i64>(carry);
        if (top < 0) {
            // qhat was one too large: add divisor back
            --qhat;
            u64 c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 t = static_cast<u64>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<u32>(t);
                c2 = t >> 32;
            }
            top += static_cast<i64>(c2);
        }
        un[j + n] = static_cast<u32>(top);
        q[j] = static_cast<u32>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        r[i] = (un[i] >> s) | (s && i + 1 < un.size() ? static_cast<u64>(un[i + 1]) << (32 - s) : 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::compare_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt{};
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    std::vector<u32> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt{};
    r = BigInt{};
    if (!qm.empty()) {
        q.sign_ = a.sign_ * b.sign_;
        q.mag_ = std::move(qm);
    }
    if (!rm.empty()) {
        r.sign_ = a.sign_;
        r.mag_ = std::move(rm);
    }
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (a.fits_int64() && b.fits_int64()) {
        u64 x = static_cast<u64>(std::llabs(a.to_int64()));
        u64 y = static_cast<u64>(std::llabs(b.to_int64()));
        while (y) {
            u64 t = x % y;
            x = y;
            y = t;
        }
        BigInt g;
        if (x) {
            g.sign_ = 1;
            g.mag_.push_back(static_cast<u32>(x));
            if (x >> 32) g.mag_.push_back(static_cast<u32>(x >> 32));
        }
        return g;
    }
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::compare_mag(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    return c <=> 0;
}

std::string BigInt::to_decimal() const {
    if (sign_ == 0) return "0";
    std::vector<u32> work = mag_;
    std::string digits;
    while (!work.empty()) {
        // divide by 10^9, collect 9 digits
        u64 rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            u64 cur = (rem << 32) | work[i];
            work[i] = static_cast<u32>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int j = 0; j < 9; ++j) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_decimal();
}

}  // namespace ratgenus
