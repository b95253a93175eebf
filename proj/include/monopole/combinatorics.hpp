/// @file combinatorics.hpp
/// @brief Pochhammer symbols, generalized binomials, Jacobi and terminating
/// hypergeometric sums, and the link-pairing constant C by two routes.
#pragma once

#include "monopole/rational.hpp"

#include <cstdint>

namespace monopole {

/// a(a+1)...(a+n-1); 1 when n = 0.
Rational pochhammer(const Rational& a, std::uint64_t n);

Integer factorial(std::uint64_t n);

/// binom(a, k) = (-1)^k (-a)_k / k!, total in a.
Rational gen_binomial(const Rational& a, std::uint64_t k);
Rational gen_binomial(std::int64_t a, std::uint64_t k);

struct JacobiParams {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t n = 0;
    Rational xi;
};

/// Gradshteyn-Ryzhik normalization:
/// 2^{-n} sum_k binom(a+n, n-k) binom(n+b, k) (xi-1)^k (xi+1)^{n-k}.
Rational jacobi_standard(const JacobiParams& p);

/// F(-n, b; c; xi) as a finite sum. Throws DegenerateParameter if (c)_k = 0 for a needed k.
Rational hypergeom_terminating(std::uint64_t neg_n, const Rational& b, const Rational& c,
                               const Rational& xi);

/// sum_u 2^u binom(-ns2, d-u) binom(delta_p - ns1, u).
Rational link_constant_direct(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                              std::uint64_t d);

/// sum_i sum_j 2^{i+j} binom(delta_p, i) binom(-ns1, j) binom(-ns2, d-i-j): the form before
/// the convolution step. Kept as an oracle for link_constant_direct.
Rational link_constant_double_sum(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                                  std::uint64_t d);

/// (-2)^d P^{a,b}_d(0) with a = ns2 + ns1 - delta_p - 1, b = delta_p - ns1 - d.
Rational link_constant_closed(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                              std::uint64_t d);

/// C(deg z, delta_c, d_a, d_s, delta1) = (-2)^d P^{a,b}_d(0), d = (d_s - delta1)/2,
/// a = delta_c - d, b = (deg z - d_a - d_s)/2 - (chi+sigma)/4. Under
/// deg z + 2 delta_c = d_s + 2 ns1 + 2 ns2 - 2 this is link_constant_closed; the printed
/// a = delta_c - d - 1 is one too small.
/// Throws HypothesisError if d or b is not an integer or d < 0.
Rational jacobi_constant(std::int64_t deg_z, std::int64_t delta_c, std::int64_t d_a,
                         std::int64_t d_s, std::int64_t delta1, std::int64_t chi_plus_sigma);

/// The undivided form sum_u binom(a+d, d-u) binom(b+d, u) (-1)^u with no 2^{-d} and the
/// prefactor 2^d: the display normalization of H. Only used to flag disagreement.
Rational h_constant_literal(std::int64_t a, std::int64_t b, std::uint64_t d);

}  // namespace monopole
