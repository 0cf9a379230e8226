#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcsp {

/// Exact nonnegative integer used for every count, weight and bound.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigCount(const mpz_class& v);
    explicit BigCount(mpz_class&& v);

    /// Parses a nonnegative decimal string; throws InvalidInput otherwise.
    static BigCount parse(std::string_view decimal);

    /// base^exp.
    static BigCount pow(const BigCount& base, std::uint64_t exp);
    static BigCount factorial(std::uint64_t n);

    std::string str() const;
    std::size_t decimal_digits() const;
    bool is_zero() const { return sgn(value_) == 0; }
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws InvalidInput if it does not fit

    const mpz_class& raw() const { return value_; }

    BigCount& operator+=(const BigCount& o);
    BigCount& operator*=(const BigCount& o);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
    /// Throws InvalidInput when b > a.
    friend BigCount operator-(const BigCount& a, const BigCount& b);
    /// Floor division; throws InvalidInput on division by zero.
    friend BigCount operator/(const BigCount& a, const BigCount& b);
    friend BigCount operator%(const BigCount& a, const BigCount& b);

    friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class value_;
};

/// Nearest-integer quotient a/b, ties rounded up.
BigCount round_div(const BigCount& a, const BigCount& b);

}  // namespace homcsp
