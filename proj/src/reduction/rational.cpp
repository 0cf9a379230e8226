#include <cctype>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/reduction.hpp"

namespace homcsp {

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    auto bad = [&]() -> Rational { throw InvalidInput("not a nonnegative number: \"" + s + "\""); };
    if (s.empty()) return bad();
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const BigCount num = BigCount::parse(s.substr(0, slash));
        const BigCount den = BigCount::parse(s.substr(slash + 1));
        if (den.is_zero()) return bad();
        Rational q(num.raw(), den.raw());
        q.canonicalize();
        return q;
    }
    std::string mantissa = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
        mantissa = s.substr(0, e);
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(e + 1), &used);
            if (used != s.size() - e - 1) return bad();
        } catch (const std::exception&) {
            return bad();
        }
    }
    std::string digits;
    long scale = 0;
    bool dot = false;
    for (char c : mantissa) {
        if (c == '.' && !dot) {
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (dot) ++scale;
        } else {
            return bad();
        }
    }
    if (digits.empty()) return bad();
    exponent -= scale;
    Rational q{mpz_class(digits, 10)};
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) q /= ten_pow;
    else q *= ten_pow;
    q.canonicalize();
    return q;
}

Rational parse_epsilon(std::string_view text) {
    const Rational q = parse_rational(text);
    if (q <= 0 || q >= 1) throw InvalidInput("epsilon must satisfy 0 < epsilon < 1, got " + std::string(text));
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigCount ceil_rational(const Rational& q) {
    if (q < 0) throw InvalidInput("ceil of a negative rational");
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return BigCount(c);
}

BigCount smallest_root_above(const Rational& bound, std::size_t k) {
    if (k == 0) throw InvalidInput("root index must be positive");
    if (bound < 1) return BigCount(1);
    // t^k > bound  <=>  t^k * den > num
    const mpz_class& num = bound.get_num();
    const mpz_class& den = bound.get_den();
    const mpz_class whole = num / den;
    mpz_class t;
    mpz_root(t.get_mpz_t(), whole.get_mpz_t(), k);  // t^k <= bound, so the answer exceeds t
    for (;;) {
        ++t;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), k);
        if (power * den > num) break;
    }
    return BigCount(t);
}

}  // namespace homcsp
