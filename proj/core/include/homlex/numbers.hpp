#ifndef HOMLEX_NUMBERS_HPP
#define HOMLEX_NUMBERS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "homlex/errors.hpp"

namespace homlex {

/// Exact nonnegative integer used for all homomorphism counts.
using BigCount = mpz_class;

/// Exact rational used for weighted counts and independence polynomials.
using Rational = mpq_class;

inline BigCount big_pow2(std::int64_t e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

inline BigCount big_pow3(std::int64_t e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
    return r;
}

inline BigCount big_pow(std::uint64_t base, std::int64_t e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

inline std::string to_decimal(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parses "p" or "p/q" into an exact rational. Rejects q = 0.
Rational parse_rational(std::string_view text);

/// Number of unordered pairs, exact in 64 bits for n <= ~3e9.
constexpr std::int64_t pairs(std::int64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

/// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt(std::int64_t x);

} // namespace homlex

#endif
