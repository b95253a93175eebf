/// @file manifold.hpp
/// @brief Input data of the theorem engine: X with its basic classes, the spin-u
/// structure t, and the monomial z.
#pragma once

#include "monopole/lattice.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monopole {

/// Key of a pairing SW_{X,s}(x^d theta); serialized "d:theta_tag".
struct SwKey {
    std::int64_t d = 0;
    std::string theta_tag;
    friend auto operator<=>(const SwKey&, const SwKey&) = default;
    friend bool operator==(const SwKey&, const SwKey&) = default;
};

std::string to_string(const SwKey& key);
/// Throws InputError on a malformed key.
SwKey parse_sw_key(std::string_view text);

struct BasicClassEntry {
    CohClass c1;
    std::int64_t sw = 0;
    std::map<SwKey, std::int64_t> sw_higher;
};

struct ManifoldData {
    std::string name;
    std::int64_t b1 = 0;
    std::int64_t b2_plus = 0;
    std::int64_t b2_minus = 0;
    IntegralLattice lattice;
    Mod2Class w2;
    std::vector<BasicClassEntry> basic_classes;
    bool simple_type = false;  ///< the claim as supplied; validated against the data
    bool effective = false;
    bool h1_cup_trivial = false;

    std::int64_t chi() const { return 2 - 2 * b1 + b2_plus + b2_minus; }
    std::int64_t sigma() const { return b2_plus - b2_minus; }
    std::int64_t chi_plus_sigma() const { return chi() + sigma(); }
    std::vector<CohClass> basic_class_vectors() const;
};

/// Checks every ManifoldData invariant; the first violation is thrown as InputError
/// with a path such as "basic_classes[0].c1".
void validate(const ManifoldData& x);

/// Spin-u structure: Lambda = c1(t), p1(t) and an integral lift w of w2(t).
struct SpinUData {
    CohClass lambda;
    std::int64_t p1 = 0;
    CohClass w;
};

/// w - Lambda = w2(X) mod 2 and lengths; throws InputError.
void validate(const ManifoldData& x, const SpinUData& t);

/// z = x^{delta0} theta h^{delta2}, theta a product of delta1 classes in H_1.
struct MonomialZ {
    std::int64_t delta0 = 0;
    std::int64_t delta1 = 0;
    std::int64_t delta2 = 0;
    std::string theta_tag;
    bool contains_h3 = false;

    /// 4 delta0 + 3 delta1 + 2 delta2, plus 1 for an H_3 factor.
    std::int64_t degree() const {
        return 4 * delta0 + 3 * delta1 + 2 * delta2 + (contains_h3 ? 1 : 0);
    }
};

enum class CaseLabel { VanishBelowR, AtR, RelationRange, Mod8Fail, OutOfTheorem };

std::string_view to_string(CaseLabel c);

}  // namespace monopole
