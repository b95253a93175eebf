/// @file fixtures.hpp
/// @brief Synthetic manifests for tests and demos, plus a generator of random level-0 cases.
///
/// All SW data produced here is made up; manifests are named "synthetic:...".
#pragma once

#include "monopole/io.hpp"
#include "monopole/manifold.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace monopole {

enum class FixtureKind { Empty, K3Like, EnLike, Asymmetric };

FixtureKind parse_fixture_kind(const std::string& s);
std::string_view to_string(FixtureKind k);

/// en_like(n): H + (2n-2)<1> + (10n-2)<-1>, basic classes +-K with K^2 = 0, SW(+-K) = -+1.
/// asymmetric: en_like(3) with SW(+-K) = +1. k3_like: 3H + 2(-E8), basic class 0.
/// empty: the k3_like lattice without basic classes. n is only read for en_like.
ManifoldData gen_fixture(FixtureKind kind, std::int64_t n = 3);

/// A request with Lambda^2 = 2 - (chi + sigma), Lambda orthogonal to every basic class,
/// w = Lambda + w2 and z = h^r, so that the result lands in case AT_R when B is nonempty.
Request fixture_request(const ManifoldData& x);

/// (x, t, class, z, delta_c, h) with class at level 0 and deg z + 2 delta_c = d_a + 2 n_a - 2.
struct RandomCase {
    ManifoldData x;
    SpinUData t;
    std::size_t class_index = 0;
    MonomialZ z;
    std::int64_t delta_c = 0;
    RationalVector h;
};

/// Lattice H^a + p<1> + q<-1>, b1 in [0, 2]. extra_classes adds up to that many further
/// random basic classes (not at level 0 in general).
RandomCase random_level_zero_case(std::mt19937_64& rng, std::size_t extra_classes = 0);

RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t n, std::int64_t num_bound,
                                      std::int64_t den_bound);

}  // namespace monopole
