/// @file rational.hpp
/// @brief Exact rationals (GMP) and the canonical "p/q" text form.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace monopole {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Always "p/q" with q >= 1, so integers print as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws InputError.
Rational parse_rational(std::string_view text);

/// base^e for any integer e; base must be nonzero when e < 0.
Rational pow(const Rational& base, std::int64_t e);
Rational pow2(std::int64_t e);

/// (-1)^e as +1 or -1.
inline int neg_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

bool is_integer(const Rational& q);

/// Integer value of q; throws InputError if q is not an integer fitting int64.
std::int64_t to_int64(const Rational& q, const char* what = "value");

}  // namespace monopole
