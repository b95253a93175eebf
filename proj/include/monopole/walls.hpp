/// @file walls.hpp
/// @brief (w, p1)-walls for b2+ = 1 and their matching SW walls.
#pragma once

#include "monopole/lattice.hpp"
#include "monopole/manifold.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace monopole {

struct WallClass {
    CohClass alpha;
    std::int64_t level = 0;
    friend bool operator==(const WallClass&, const WallClass&) = default;
};

/// alpha = w mod 2, alpha^2 = p1 + 4 level with 0 <= level <= level_max, |alpha_i| <= bound,
/// alpha != 0; ascending lexicographic order. Needs sig_plus = 1.
std::vector<WallClass> enumerate_walls(const IntegralLattice& l, const CohClass& w, std::int64_t p1,
                                       std::int64_t level_max, Coord coeff_bound);

struct WallImage {
    CohClass alpha;
    CohClass c1_s;  ///< Lambda - alpha
    std::int64_t level = 0;
};

/// c1(s) = Lambda - alpha for each wall; checks characteristic images, the square and
/// injectivity. Throws InputError when an image is not characteristic.
std::vector<WallImage> wall_correspondence(const IntegralLattice& l, const SpinUData& t,
                                           const std::vector<WallClass>& walls);

/// alpha = Lambda - c1(s).
CohClass wall_from_class(const SpinUData& t, const CohClass& c1_s);

/// Sign of Q(omega, alpha); needs Q(omega, omega) > 0.
int chamber_sign(const IntegralLattice& l, std::span<const Rational> omega, const CohClass& alpha);

}  // namespace monopole
