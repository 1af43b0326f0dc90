/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers.
 *
 * Sign-magnitude representation with base 2^32 limbs (little-endian).
 * Canonical form: no leading zero limbs, and sign() == 0 exactly when the
 * magnitude is empty. All arithmetic is exact; overflow cannot occur.
 *
 * Division truncates toward zero, so the remainder carries the sign of the
 * dividend and |rem| < |divisor|.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ratgenus {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    /// Parses an optionally signed decimal string. Throws
    /// std::invalid_argument on anything else (including the empty string).
    static BigInt from_decimal(std::string_view s);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }

    bool fits_int64() const;
    long long to_int64() const;   // precondition: fits_int64()

    std::string to_decimal() const;

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncated division: a == q*b + r with |r| < |b| and sign(r) == sign(a).
    /// Throws std::domain_error when b == 0.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    /// gcd(|a|, |b|); gcd(0, 0) == 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) = default;
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void canonicalize();
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
    void mul_small_add(std::uint32_t mul, std::uint32_t add);
};

}  // namespace ratgenus
