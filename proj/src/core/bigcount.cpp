#include "homcsp/bigcount.hpp"

#include <limits>

#include "homcsp/errors.hpp"

namespace homcsp {

BigCount::BigCount(std::uint64_t v) {
    // mpz_class has no portable uint64_t constructor.
    mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigCount::BigCount(const mpz_class& v) : value_(v) {
    if (sgn(value_) < 0)
        throw InvalidInput("BigCount cannot hold a negative value");
}

BigCount::BigCount(mpz_class&& v) : value_(std::move(v)) {
    if (sgn(value_) < 0)
        throw InvalidInput("BigCount cannot hold a negative value");
}

BigCount BigCount::parse(std::string_view decimal) {
    if (decimal.empty())
        throw InvalidInput("empty decimal string");
    for (char c : decimal)
        if (c < '0' || c > '9')
            throw InvalidInput("not a nonnegative decimal integer: " + std::string(decimal));
    return BigCount(mpz_class(std::string(decimal), 10));
}

BigCount BigCount::pow(const BigCount& base, std::uint64_t exp) {
    if (exp > std::numeric_limits<unsigned long>::max())
        throw InvalidInput("exponent too large");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), static_cast<unsigned long>(exp));
    return BigCount(std::move(r));
}

BigCount BigCount::factorial(std::uint64_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return BigCount(std::move(r));
}

std::string BigCount::str() const { return value_.get_str(10); }

std::size_t BigCount::decimal_digits() const {
    if (is_zero())
        return 1;
    // mpz_sizeinbase may overshoot by one; only used for reporting magnitudes.
    return mpz_sizeinbase(value_.get_mpz_t(), 10);
}

bool BigCount::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64())
        throw InvalidInput("count does not fit in 64 bits: " + str());
    std::uint64_t out = 0;
    std::size_t words = 0;
    mpz_export(&out, &words, 1, sizeof(out), 0, 0, value_.get_mpz_t());
    return words == 0 ? 0 : out;
}

BigCount& BigCount::operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
}

BigCount& BigCount::operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
}

BigCount operator-(const BigCount& a, const BigCount& b) {
    if (b > a)
        throw InvalidInput("BigCount subtraction would go negative");
    return BigCount(mpz_class(a.value_ - b.value_));
}

BigCount operator/(const BigCount& a, const BigCount& b) {
    if (b.is_zero())
        throw InvalidInput("division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return BigCount(std::move(q));
}

BigCount operator%(const BigCount& a, const BigCount& b) {
    if (b.is_zero())
        throw InvalidInput("division by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return BigCount(std::move(r));
}

BigCount round_div(const BigCount& a, const BigCount& b) {
    return (a * BigCount(2) + b) / (b * BigCount(2));
}

}  // namespace homcsp
