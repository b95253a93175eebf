/// @file lattice.hpp
/// @brief Free unimodular lattices standing in for H^2(X;Z) with its intersection form.
#pragma once

#include "monopole/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monopole {

using Coord = std::int64_t;
using Gram = std::vector<std::vector<Coord>>;

/// An element of H^2(X;Z) in the lattice basis.
struct CohClass {
    std::vector<Coord> coords;

    CohClass() = default;
    explicit CohClass(std::vector<Coord> c) : coords(std::move(c)) {}
    static CohClass zero(std::size_t rank) { return CohClass(std::vector<Coord>(rank, 0)); }
    static CohClass unit(std::size_t rank, std::size_t i);

    std::size_t size() const { return coords.size(); }
    Coord operator[](std::size_t i) const { return coords[i]; }
    bool is_zero() const;

    /// Appends one coordinate (used when passing to the blow-up).
    CohClass extended(Coord last) const;

    friend bool operator==(const CohClass&, const CohClass&) = default;
    friend auto operator<=>(const CohClass& a, const CohClass& b) { return a.coords <=> b.coords; }
};

CohClass operator+(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a);
CohClass operator*(Coord s, const CohClass& a);

/// Element of H^2(X;Z/2).
struct Mod2Class {
    std::vector<std::uint8_t> bits;

    Mod2Class() = default;
    explicit Mod2Class(std::vector<std::uint8_t> b);
    std::size_t size() const { return bits.size(); }
    bool is_zero() const;
    friend bool operator==(const Mod2Class&, const Mod2Class&) = default;
};

Mod2Class reduce_mod2(const CohClass& u);
bool congruent_mod2(const CohClass& u, const CohClass& v);
bool congruent_mod2(const CohClass& u, const Mod2Class& v);

/// Result of exact congruence diagonalization.
struct FormInvariants {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t null = 0;
    Integer determinant;
};

/// Lagrange reduction over Q; throws InputError if gram is not square and symmetric.
FormInvariants diagonalize(const Gram& gram);

class IntegralLattice {
public:
    /// Validates symmetry, unimodularity and that the signature is (sig_plus, sig_minus).
    IntegralLattice(Gram gram, std::size_t sig_plus, std::size_t sig_minus);

    /// The rank-0 lattice.
    IntegralLattice() = default;

    /// Reads the signature off the form instead of checking a claimed one.
    static IntegralLattice from_gram(Gram gram);

    std::size_t rank() const { return gram_.size(); }
    const Gram& gram() const { return gram_; }
    std::size_t sig_plus() const { return sig_plus_; }
    std::size_t sig_minus() const { return sig_minus_; }
    std::int64_t signature() const {
        return static_cast<std::int64_t>(sig_plus_) - static_cast<std::int64_t>(sig_minus_);
    }

    Coord pairing(const CohClass& u, const CohClass& v) const;
    Coord square(const CohClass& u) const { return pairing(u, u); }
    Rational pairing(const CohClass& u, std::span<const Rational> eta) const;
    Rational pairing(std::span<const Rational> a, std::span<const Rational> b) const;

    /// Coefficients c with Q(u, eta) = sum_i c_i eta_i.
    std::vector<Coord> linear_form(const CohClass& u) const;

    bool is_characteristic(const CohClass& k) const;
    bool is_characteristic(const Mod2Class& k) const;
    bool is_even() const;

    /// Orthogonal sum with <-1>; the new basis vector is last.
    IntegralLattice with_exceptional() const;

    void check_dimension(const CohClass& u, const char* what = "class") const;
    void check_dimension(std::size_t n, const char* what = "vector") const;

    friend bool operator==(const IntegralLattice&, const IntegralLattice&) = default;

private:
    Gram gram_;
    std::size_t sig_plus_ = 0;
    std::size_t sig_minus_ = 0;
};

/// Standard building blocks.
Gram hyperbolic_gram();
Gram e8_gram(int sign);
Gram diagonal_gram(std::span<const Coord> entries);
Gram block_sum(const std::vector<Gram>& blocks);

/// Definition 4.8 under the free model: good iff nonzero.
bool is_good(const Mod2Class& v);

/// All L in B^perp with L^2 = target and |L_i| <= bound, in ascending lexicographic order.
std::vector<CohClass> find_orthogonal_classes(const IntegralLattice& lattice,
                                              const std::vector<CohClass>& basic,
                                              Coord target_square, Coord coeff_bound);

/// As above but only over vectors with at most max_support nonzero coordinates.
/// Used where the rank makes the box search hopeless.
std::vector<CohClass> find_orthogonal_classes_sparse(const IntegralLattice& lattice,
                                                     const std::vector<CohClass>& basic,
                                                     Coord target_square, Coord coeff_bound,
                                                     std::size_t max_support);

}  // namespace monopole
