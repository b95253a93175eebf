/// @file invariants.hpp
/// @brief Dimension and index formulas, level and orientation bookkeeping, link pairings,
/// the cobordism sum, blow-up transport, and the low-degree Donaldson invariants.
#pragma once

#include "monopole/manifold.hpp"
#include "monopole/powerseries.hpp"
#include "monopole/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace monopole {

/// c(X) = -(7 chi + 11 sigma)/4.
Rational c_invariant(const ManifoldData& x);
/// i(Lambda) = Lambda^2 + c(X) + chi + sigma.
Rational index_i(const ManifoldData& x, const CohClass& lambda);

struct DimensionReport {
    std::int64_t d_a = 0;  ///< -2 p1 - (3/2)(chi+sigma)
    std::int64_t n_a = 0;  ///< (p1 + Lambda^2 - sigma)/4
    Rational i_lambda;
    Rational c_x;
};

DimensionReport dimension_report(const ManifoldData& x, const SpinUData& t);

/// d_s = (K^2 - 2 chi - 3 sigma)/4.
std::int64_t sw_dimension(const ManifoldData& x, const CohClass& k);

struct NormalIndices {
    std::int64_t ns1 = 0;  ///< -(Lambda-K)^2 - (chi+sigma)/2
    std::int64_t ns2 = 0;  ///< ((2 Lambda - K)^2 - sigma)/8
};

NormalIndices normal_indices(const ManifoldData& x, const SpinUData& t, const CohClass& k);

/// r(Lambda, K) = -(K-Lambda)^2 - (3/4)(chi+sigma). A half-integer when chi+sigma = 2 mod 4.
Rational r_value(const ManifoldData& x, const CohClass& lambda, const CohClass& k);

struct RValues {
    std::vector<Rational> per_class;
    std::optional<Rational> r_min;  ///< nullopt encodes +infinity (no basic classes)
};

RValues r_values(const ManifoldData& x, const SpinUData& t);

/// ((Lambda-K)^2 - p1)/4 when a nonnegative integer.
std::optional<std::int64_t> level(const SpinUData& t, const CohClass& k, const IntegralLattice& l);

/// (w - Lambda + K)^2 / 4 mod 2.
int orientation_sign(const SpinUData& t, const CohClass& k, const IntegralLattice& l);
/// The same bit as (w^2 + K.(w-Lambda))/2 + (sigma - w^2)/2 mod 2.
int orientation_sign_decomposed(const ManifoldData& x, const SpinUData& t, const CohClass& k);

/// p1 making d_a = deg: -deg/2 - (3/4)(chi+sigma). Throws InputError if not an integer.
std::int64_t p1_for_degree(const ManifoldData& x, std::int64_t degree);
/// kappa = -p1/4 with d_a = 8 kappa - (3/2)(chi+sigma).
Rational kappa_for_degree(const ManifoldData& x, std::int64_t degree);
/// deg = -2 w^2 - (3/2)(chi+sigma) mod 8.
bool mod8_condition(const ManifoldData& x, const CohClass& w, std::int64_t degree);

/// SW_{X,s}(x^d theta): the plain value when d = 0 and delta1 = 0, else sw_higher["d:tag"].
std::int64_t sw_pairing_value(const BasicClassEntry& s, std::int64_t d, std::int64_t delta1,
                              const std::string& theta_tag);

enum class PairingMethod { Direct, Closed, Both };

/// One factor h_j^{p_j} of the H_2 part of z, given by the Poincare dual of h_j.
struct HFactor {
    RationalVector pd;
    std::int64_t power = 0;
};

/// The constant C of the link pairing for class s. The direct route sums Segre classes of
/// the normal bundle, the closed route evaluates a Jacobi polynomial; Both compares them.
Rational link_constant(const ManifoldData& x, const SpinUData& t, const CohClass& k,
                       const MonomialZ& z, std::int64_t delta_c, PairingMethod method);

/// <mu_p(z) mu_c^{delta_c}, [L_{t,s}]> for a level-0 class s, with z's H_2 part h^{delta2}.
Rational link_pairing(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                      const MonomialZ& z, std::int64_t delta_c, std::span<const Rational> h_pd,
                      PairingMethod method);

/// Same, with the H_2 part of z a product of several classes; powers must sum to z.delta2.
Rational link_pairing(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                      const MonomialZ& z, std::int64_t delta_c,
                      const std::vector<HFactor>& factors, PairingMethod method);

struct CobordismTerm {
    std::size_t class_index = 0;
    int orientation = 0;
    Rational pairing;
};

struct CobordismResult {
    Rational value;                  ///< D(z) when deg z = d_a, else 0
    Rational relation_residual;      ///< the signed sum when deg z > d_a; expected 0
    bool relation_regime = false;    ///< deg z > d_a
    std::vector<CobordismTerm> terms;
};

CobordismResult cobordism_sum(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::int64_t delta_c, const std::vector<HFactor>& factors,
                              PairingMethod method);
CobordismResult cobordism_sum(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::int64_t delta_c, std::span<const Rational> h_pd,
                              PairingMethod method);

struct BlownUpClass {
    std::size_t source = 0;
    std::size_t plus = 0;   ///< index of K + e* in the blown-up basic classes
    std::size_t minus = 0;  ///< index of K - e*
};

struct BlowUp {
    ManifoldData manifold;
    SpinUData spin_u;
    std::vector<BlownUpClass> class_map;
};

/// X # CP^2-bar with e* appended last; t keeps Lambda, p1 drops by 1, w gains e*.
BlowUp blowup_transform(const ManifoldData& x, const SpinUData& t);

/// Right-hand side of the blow-up formula for link pairings: here z is the monomial on X,
/// so its h-power is the delta2 - k of the formula. Zero for odd k.
Rational blowup_pairing_closed(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                               const MonomialZ& z, std::int64_t delta_c, std::int64_t k,
                               std::span<const Rational> h_pd, PairingMethod method);

/// Signed sum over s+, s- of pairings of e^{k+1} z on the blow-up, computed there and
/// checked against blowup_pairing_closed (OracleMismatch on disagreement).
Rational blowup_pairing_pair(const ManifoldData& x, const SpinUData& t, std::size_t class_index,
                             const MonomialZ& z, std::int64_t delta_c, std::int64_t k,
                             std::span<const Rational> h_pd, PairingMethod method);

struct ChamberEntry {
    std::size_t class_index = 0;
    int sign = 0;  ///< sign of omega . (K - Lambda)
};

struct DonaldsonTerm {
    std::size_t class_index = 0;
    int sign = 1;
    Rational h_constant;
    std::int64_t sw = 0;
    Rational pairing_power;  ///< <K - Lambda, h>^{delta2}
};

struct DonaldsonResult {
    CaseLabel label = CaseLabel::OutOfTheorem;
    std::optional<Rational> value;
    std::optional<Rational> residual;  ///< right-hand side of the main formula in case (c)
    Rational delta;
    std::optional<Rational> r_min;
    Rational i_lambda;
    std::vector<DonaldsonTerm> terms;
    bool h_literal_agrees = true;
    std::vector<ChamberEntry> chamber;
};

/// Low-degree Donaldson invariant D^w_X(z) at h. Uses Lambda and w from t; p1 is not needed.
DonaldsonResult donaldson_invariant(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                                    std::span<const Rational> h_pd,
                                    const std::optional<RationalVector>& period_point);

/// D via the blow-up: the cobordism sum on X # CP^2-bar for e z, with p1 chosen so that
/// deg z = d_a. Only meaningful in case AT_R.
Rational donaldson_via_blowup(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::span<const Rational> h_pd, PairingMethod method);

struct SimpleTypeResult {
    CaseLabel label = CaseLabel::OutOfTheorem;
    TruncatedMultiPoly poly{0, 0};                 ///< homogeneous of degree delta - 2m in eta
    std::optional<TruncatedMultiPoly> residual;    ///< case (c)
};

/// D^w_X(h^{delta-2m} x^m) as a polynomial in the coordinates of eta = PD(h).
SimpleTypeResult donaldson_simple_type_poly(const ManifoldData& x, const SpinUData& t,
                                            std::int64_t delta, std::int64_t m);
Rational donaldson_simple_type(const ManifoldData& x, const SpinUData& t, std::int64_t delta,
                               std::int64_t m, std::span<const Rational> h_pd);

/// sum_s (-1)^{(w^2 + K.w)/2} SW(s) exp(Q(K, eta)), truncated at total degree cap.
TruncatedMultiPoly sw_series(const ManifoldData& x, const CohClass& w, std::uint32_t cap);

struct RelationResidual {
    std::string lambda_name;  ///< "lambda0" or "lambda1"
    CohClass lambda;
    std::int64_t d = 0;
    TruncatedMultiPoly residual{0, 0};
};

struct WittenReport {
    std::uint32_t sw_vanish_order = 0;  ///< lowest degree of a nonzero SW term
    std::uint32_t d_vanish_order = 0;
    bool sw_vanishes = false;           ///< SW = 0 mod h^{c-2}
    bool d_vanishes = false;            ///< D = 0 mod h^{c-2}
    bool congruence = false;            ///< D = 2^{2-c} e^{Q/2} SW mod h^c
    bool relations_hold = true;
    bool congruence_ok = false;         ///< all of the above
    TruncatedMultiPoly d_series{0, 0};
    TruncatedMultiPoly sw_series{0, 0};
    TruncatedMultiPoly rhs_series{0, 0};
    std::vector<RelationResidual> relations;
};

/// Compares the Donaldson and SW series up to degree c(X) - 1 (cap must be at least that).
WittenReport witten_compare(const ManifoldData& x, const SpinUData& t, std::uint32_t cap);

/// Every basic class has K^2 = 2 chi + 3 sigma.
bool simple_type_check(const ManifoldData& x);

}  // namespace monopole
