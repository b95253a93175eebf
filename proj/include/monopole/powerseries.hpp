/// @file powerseries.hpp
/// @brief Degree-capped multivariate polynomials and short univariate series, both exact.
#pragma once

#include "monopole/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace monopole {

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);
/// "e1,e2,..." as used in reports.
std::string exponent_key(const Exponents& e);
Exponents parse_exponent_key(const std::string& key, std::size_t num_vars);

class TruncatedMultiPoly {
public:
    using Terms = std::map<Exponents, Rational>;

    TruncatedMultiPoly(std::size_t num_vars, std::uint32_t cap);

    static TruncatedMultiPoly constant(std::size_t num_vars, std::uint32_t cap, const Rational& c);
    static TruncatedMultiPoly variable(std::size_t num_vars, std::uint32_t cap, std::size_t i);
    /// sum_i coeffs[i] x_i
    static TruncatedMultiPoly linear(std::uint32_t cap, std::span<const Rational> coeffs);

    std::size_t num_vars() const { return num_vars_; }
    std::uint32_t cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponents& e) const;
    /// Adds c to the coefficient of e; terms above the cap are dropped, zeros erased.
    void add_term(const Exponents& e, const Rational& c);

    /// Part of total degree exactly k.
    TruncatedMultiPoly homogeneous_part(std::uint32_t k) const;
    /// Smallest degree carrying a nonzero term; cap+1 for the zero polynomial.
    std::uint32_t lowest_degree() const;
    /// Same terms, new cap (terms above it dropped).
    TruncatedMultiPoly recapped(std::uint32_t cap) const;

    Rational evaluate(std::span<const Rational> point) const;

    TruncatedMultiPoly& operator+=(const TruncatedMultiPoly& q);
    TruncatedMultiPoly& operator-=(const TruncatedMultiPoly& q);
    TruncatedMultiPoly& operator*=(const Rational& s);

    friend bool operator==(const TruncatedMultiPoly&, const TruncatedMultiPoly&) = default;

private:
    void check_shape(const TruncatedMultiPoly& q) const;
    std::size_t num_vars_;
    std::uint32_t cap_;
    Terms terms_;
};

TruncatedMultiPoly operator+(TruncatedMultiPoly p, const TruncatedMultiPoly& q);
TruncatedMultiPoly operator-(TruncatedMultiPoly p, const TruncatedMultiPoly& q);
TruncatedMultiPoly operator-(TruncatedMultiPoly p);
TruncatedMultiPoly operator*(TruncatedMultiPoly p, const Rational& s);
TruncatedMultiPoly operator*(const Rational& s, TruncatedMultiPoly p);

TruncatedMultiPoly poly_mul(const TruncatedMultiPoly& p, const TruncatedMultiPoly& q);
TruncatedMultiPoly poly_pow(const TruncatedMultiPoly& p, std::uint32_t n);
/// Requires zero constant term.
TruncatedMultiPoly poly_exp(const TruncatedMultiPoly& p);

class TruncatedUniSeries {
public:
    explicit TruncatedUniSeries(std::uint32_t cap);
    TruncatedUniSeries(std::uint32_t cap, std::vector<Rational> coeffs);

    std::uint32_t cap() const { return cap_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }

    friend bool operator==(const TruncatedUniSeries&, const TruncatedUniSeries&) = default;

private:
    std::uint32_t cap_;
    std::vector<Rational> coeffs_;
};

TruncatedUniSeries series_mul(const TruncatedUniSeries& s, const TruncatedUniSeries& t);
/// Requires s[0] = 1.
TruncatedUniSeries series_inverse(const TruncatedUniSeries& s);
/// s^n for any integer n, by repeated products (and series_inverse when n < 0). s[0] = 1.
TruncatedUniSeries series_pow(const TruncatedUniSeries& s, std::int64_t n);

enum class SegreSumStart { FromZero, FromOne };

/// s_i = sum_j 2^j binom(-ns1, j) binom(-ns2, i-j). FromOne reproduces the misprinted
/// lower limit and is wrong whenever the dropped j = 0 term is nonzero.
Rational segre_closed_form(std::int64_t ns1, std::int64_t ns2, std::uint32_t i,
                           SegreSumStart start = SegreSumStart::FromZero);

/// Coefficients of the inverse of (1+2mu)^{ns1} (1+mu)^{ns2}, computed without binomials.
TruncatedUniSeries segre_by_inversion(std::int64_t ns1, std::int64_t ns2, std::uint32_t imax);

/// (s_0..s_imax) by the closed form, cross-checked against segre_by_inversion.
/// Throws OracleMismatch on disagreement.
std::vector<Rational> segre_classes(std::int64_t ns1, std::int64_t ns2, std::uint32_t imax,
                                    SegreSumStart start = SegreSumStart::FromZero);

}  // namespace monopole
