#include "monopole/invariants.hpp"

#include "monopole/combinatorics.hpp"
#include "monopole/error.hpp"

#include <algorithm>

namespace monopole {

namespace {

Rational R(std::int64_t v) { return make_rational(v); }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::string class_path(std::size_t i) { return "basic_classes[" + std::to_string(i) + "]"; }

bool nontrivial(const BasicClassEntry& s) {
    if (s.sw != 0) return true;
    return std::any_of(s.sw_higher.begin(), s.sw_higher.end(),
                       [](const auto& kv) { return kv.second != 0; });
}

RationalVector to_rationals(std::span<const Rational> v) { return RationalVector(v.begin(), v.end()); }

Rational linear_pairing_power(const IntegralLattice& l, const CohClass& c,
                              const std::vector<HFactor>& factors) {
    Rational out(1);
    for (const auto& f : factors) {
        if (f.power == 0) continue;
        out *= pow(l.pairing(c, std::span<const Rational>(f.pd)), f.power);
    }
    return out;
}

void require_b1_condition(const ManifoldData& x) {
    if (x.b1 > 0 && !x.h1_cup_trivial)
        throw HypothesisError("b1 > 0 needs the cup product on H^1 to vanish", "h1_cup_trivial");
}

void require_z_shape(const MonomialZ& z) {
    if (z.delta0 < 0 || z.delta1 < 0 || z.delta2 < 0)
        throw InputError("monomial exponents must be nonnegative", "z");
}

/// 2^e for a rational exponent that must be an integer.
Rational pow2_checked(const Rational& e, const char* what) {
    if (!is_integer(e)) throw HypothesisError(std::string(what) + " is not an integer: " + to_string(e));
    return pow2(e.get_num().get_si());
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

TruncatedMultiPoly linear_poly(const IntegralLattice& l, const CohClass& c, std::uint32_t cap) {
    auto lf = l.linear_form(c);
    RationalVector coeffs;
    coeffs.reserve(lf.size());
    for (auto v : lf) coeffs.push_back(R(v));
    return TruncatedMultiPoly::linear(cap, coeffs);
}

}  // namespace

Rational c_invariant(const ManifoldData& x) {
    return make_rational(-(7 * x.chi() + 11 * x.sigma()), 4);
}

Rational index_i(const ManifoldData& x, const CohClass& lambda) {
    return R(x.lattice.square(lambda)) + c_invariant(x) + R(x.chi_plus_sigma());
}

DimensionReport dimension_report(const ManifoldData& x, const SpinUData& t) {
    x.lattice.check_dimension(t.lambda, "lambda");
    const std::int64_t cps = x.chi_plus_sigma();
    if (floor_mod(cps, 2) != 0) throw InputError("chi + sigma is odd, so d_a is not an integer");
    const std::int64_t num = t.p1 + x.lattice.square(t.lambda) - x.sigma();
    if (floor_mod(num, 4) != 0)
        throw InputError("p1 + Lambda^2 - sigma = " + std::to_string(num) + " is not divisible by 4",
                         "p1");
    DimensionReport r;
    r.d_a = -2 * t.p1 - 3 * cps / 2;
    r.n_a = num / 4;
    r.c_x = c_invariant(x);
    r.i_lambda = index_i(x, t.lambda);
    return r;
}

std::int64_t sw_dimension(const ManifoldData& x, const CohClass& k) {
    const std::int64_t num = x.lattice.square(k) - 2 * x.chi() - 3 * x.sigma();
    if (floor_mod(num, 4) != 0) throw InputError("(K^2 - 2chi - 3sigma)/4 is not an integer");
    return num / 4;
}

NormalIndices normal_indices(const ManifoldData& x, const SpinUData& t, const CohClass& k) {
    const std::int64_t cps = x.chi_plus_sigma();
    if (floor_mod(cps, 2) != 0) throw InputError("chi + sigma is odd");
    const std::int64_t num2 = x.lattice.square(2 * t.lambda - k) - x.sigma();
    if (floor_mod(num2, 8) != 0) throw InputError("((2 Lambda - K)^2 - sigma)/8 is not an integer");
    return {-x.lattice.square(t.lambda - k) - cps / 2, num2 / 8};
}

Rational r_value(const ManifoldData& x, const CohClass& lambda, const CohClass& k) {
    return make_rational(-4 * x.lattice.square(k - lambda) - 3 * x.chi_plus_sigma(), 4);
}

RValues r_values(const ManifoldData& x, const SpinUData& t) {
    RValues out;
    for (const auto& s : x.basic_classes) {
        out.per_class.push_back(r_value(x, t.lambda, s.c1));
        if (!nontrivial(s)) continue;
        if (!out.r_min || out.per_class.back() < *out.r_min) out.r_min = out.per_class.back();
    }
    return out;
}

std::optional<std::int64_t> level(const SpinUData& t, const CohClass& k, const IntegralLattice& l) {
    const std::int64_t num = l.square(t.lambda - k) - t.p1;
    if (num < 0 || num % 4 != 0) return std::nullopt;
    return num / 4;
}

int orientation_sign(const SpinUData& t, const CohClass& k, const IntegralLattice& l) {
    const std::int64_t sq = l.square(t.w - t.lambda + k);
    if (floor_mod(sq, 4) != 0)
        throw InputError("(w - Lambda + K)^2 = " + std::to_string(sq) + " is not divisible by 4");
    return static_cast<int>(floor_mod(sq / 4, 2));
}

int orientation_sign_decomposed(const ManifoldData& x, const SpinUData& t, const CohClass& k) {
    const auto& l = x.lattice;
    const std::int64_t w2 = l.square(t.w);
    const std::int64_t first = w2 + l.pairing(k, t.w - t.lambda);
    const std::int64_t second = x.sigma() - w2;
    if (floor_mod(first, 2) != 0 || floor_mod(second, 2) != 0)
        throw InputError("parity of w^2 does not match sigma", "w");
    return static_cast<int>(floor_mod(first / 2 + second / 2, 2));
}

std::int64_t p1_for_degree(const ManifoldData& x, std::int64_t degree) {
    const std::int64_t num = -2 * degree - 3 * x.chi_plus_sigma();
    if (floor_mod(num, 4) != 0)
        throw InputError("no integral p1 has d_a = deg z = " + std::to_string(degree), "p1");
    return num / 4;
}

Rational kappa_for_degree(const ManifoldData& x, std::int64_t degree) {
    return make_rational(2 * degree + 3 * x.chi_plus_sigma(), 16);
}

bool mod8_condition(const ManifoldData& x, const CohClass& w, std::int64_t degree) {
    const std::int64_t cps = x.chi_plus_sigma();
    if (floor_mod(cps, 2) != 0) return false;
    return floor_mod(degree + 2 * x.lattice.square(w) + 3 * cps / 2, 8) == 0;
}

std::int64_t sw_pairing_value(const BasicClassEntry& s, std::int64_t d, std::int64_t delta1,
                              const std::string& theta_tag) {
    if (d == 0 && delta1 == 0) return s.sw;
    auto it = s.sw_higher.find(SwKey{d, theta_tag});
    if (it == s.sw_higher.end())
        throw InputError("missing SW value for key \"" + to_string(SwKey{d, theta_tag}) + "\"",
                         "sw_higher");
    return it->second;
}

Rational link_constant(const ManifoldData& x, const SpinUData& t, const CohClass& k,
                       const MonomialZ& z, std::int64_t delta_c, PairingMethod method) {
    const std::int64_t d_s = sw_dimension(x, k);
    if (z.delta1 > d_s || (d_s - z.delta1) % 2 != 0)
        throw HypothesisError("link constant needs d_s - delta1 even and nonnegative");
    const std::int64_t d = (d_s - z.delta1) / 2;

    std::optional<Rational> closed, direct;
    if (method != PairingMethod::Direct) {
        const auto dr = dimension_report(x, t);
        closed = jacobi_constant(z.degree(), delta_c, dr.d_a, d_s, z.delta1, x.chi_plus_sigma());
    }
    if (method != PairingMethod::Closed) {
        const auto ns = normal_indices(x, t, k);
        const std::int64_t delta_p = z.delta2 + z.delta1 + 2 * z.delta0;
        const auto s = segre_classes(ns.ns1, ns.ns2, static_cast<std::uint32_t>(d));
        Rational c(0);
        for (std::int64_t i = 0; i <= d; ++i)
            c += pow2(i) * gen_binomial(delta_p, static_cast<std::uint64_t>(i)) * s[d - i];
        direct = c;
    }
    if (closed && direct && *closed != *direct)
        throw OracleMismatch("link constant: Segre route " + to_string(*direct) +
                             " != Jacobi route " + to_string(*closed));
    return closed ? *closed : *direct;
}

Rational link_pairing(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                      const MonomialZ& z, std::int64_t delta_c, std::span<const Rational> h_pd,
                      PairingMethod method) {
    return link_pairing(x, t, s, z, delta_c, std::vector<HFactor>{{to_rationals(h_pd), z.delta2}},
                        method);
}

Rational link_pairing(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                      const MonomialZ& z, std::int64_t delta_c,
                      const std::vector<HFactor>& factors, PairingMethod method) {
    const auto& l = x.lattice;
    l.check_dimension(s.c1, "basic class");
    require_z_shape(z);
    require_b1_condition(x);
    std::int64_t total_power = 0;
    for (const auto& f : factors) {
        l.check_dimension(f.pd.size(), "h_pd");
        if (f.power < 0) throw InputError("negative power of h");
        total_power += f.power;
    }
    if (total_power != z.delta2) throw InputError("powers of the H_2 factors do not add up to delta2");
    if (delta_c < 0) throw InputError("delta_c must be nonnegative");

    const auto lv = level(t, s.c1, l);
    if (!lv || *lv != 0) throw HypothesisError("link pairing needs a level-0 class");
    const auto dr = dimension_report(x, t);
    if (z.degree() + 2 * delta_c != dr.d_a + 2 * dr.n_a - 2)
        throw HypothesisError("deg z + 2 delta_c = " + std::to_string(z.degree() + 2 * delta_c) +
                              " but d_a + 2 n_a - 2 = " + std::to_string(dr.d_a + 2 * dr.n_a - 2));
    if (z.contains_h3) return Rational(0);
    const std::int64_t d_s = sw_dimension(x, s.c1);
    if (z.delta1 > d_s) return Rational(0);
    if ((d_s - z.delta1) % 2 != 0) throw HypothesisError("delta1 and d_s have different parity");
    const std::int64_t d = (d_s - z.delta1) / 2;
    const std::int64_t sw = sw_pairing_value(s, d, z.delta1, z.theta_tag);
    if (sw == 0) return Rational(0);

    const Rational c = link_constant(x, t, s.c1, z, delta_c, method);
    const Rational pre = R(neg_one_pow(z.delta0 + z.delta1)) * pow2(-z.delta2 - 2 * z.delta0);
    return pre * c * R(sw) * linear_pairing_power(l, s.c1 - t.lambda, factors);
}

CobordismResult cobordism_sum(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::int64_t delta_c, std::span<const Rational> h_pd,
                              PairingMethod method) {
    return cobordism_sum(x, t, z, delta_c, std::vector<HFactor>{{to_rationals(h_pd), z.delta2}},
                         method);
}

CobordismResult cobordism_sum(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::int64_t delta_c, const std::vector<HFactor>& factors,
                              PairingMethod method) {
    validate(x, t);
    require_z_shape(z);
    require_b1_condition(x);
    const auto dr = dimension_report(x, t);
    if (z.degree() + 2 * delta_c != dr.d_a + 2 * dr.n_a - 2)
        throw HypothesisError("deg z + 2 delta_c != d_a + 2 n_a - 2");
    if (dr.n_a <= 0) throw HypothesisError("n_a = " + std::to_string(dr.n_a) + " must be positive");
    if (!is_good(reduce_mod2(t.w))) throw HypothesisError("w mod 2 is not good (it is zero)", "w");
    if (z.degree() < dr.d_a) throw HypothesisError("deg z is below d_a");

    CobordismResult out;
    Rational sum(0);
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
        const auto& s = x.basic_classes[i];
        const auto lv = level(t, s.c1, x.lattice);
        if (!lv || !nontrivial(s)) continue;
        if (*lv > 0)
            throw HypothesisError("basic class at level " + std::to_string(*lv) +
                                      " > 0; only top-level reducibles are supported",
                                  class_path(i) + ".c1");
        CobordismTerm term;
        term.class_index = i;
        term.orientation = orientation_sign(t, s.c1, x.lattice);
        term.pairing = link_pairing(x, t, s, z, delta_c, factors, method);
        sum += R(neg_one_pow(term.orientation)) * term.pairing;
        out.terms.push_back(std::move(term));
    }
    if (z.degree() == dr.d_a) {
        out.value = -pow2(1 - dr.n_a) * sum;
        out.relation_residual = 0;
    } else {
        out.relation_regime = true;
        out.value = 0;
        out.relation_residual = sum;
    }
    return out;
}

BlowUp blowup_transform(const ManifoldData& x, const SpinUData& t) {
    BlowUp out{x, t, {}};
    ManifoldData& y = out.manifold;
    y.name = x.name + " # CP2-bar";
    y.b2_minus = x.b2_minus + 1;
    y.lattice = x.lattice.with_exceptional();
    y.w2.bits.push_back(1);
    y.basic_classes.clear();
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
        const auto& s = x.basic_classes[i];
        BasicClassEntry plus = s, minus = s;
        plus.c1 = s.c1.extended(1);
        minus.c1 = s.c1.extended(-1);
        out.class_map.push_back({i, y.basic_classes.size(), y.basic_classes.size() + 1});
        y.basic_classes.push_back(std::move(plus));
        y.basic_classes.push_back(std::move(minus));
    }
    out.spin_u.lambda = t.lambda.extended(0);
    out.spin_u.p1 = t.p1 - 1;
    out.spin_u.w = t.w.extended(1);
    return out;
}

Rational blowup_pairing_closed(const ManifoldData& x, const SpinUData& t, const BasicClassEntry& s,
                               const MonomialZ& z, std::int64_t delta_c, std::int64_t k,
                               std::span<const Rational> h_pd, PairingMethod method) {
    require_z_shape(z);
    if (k < 0) throw InputError("k must be nonnegative");
    const auto lv = level(t, s.c1, x.lattice);
    if (!lv || *lv != 0) throw HypothesisError("blow-up pairing needs a level-0 class");
    if (k % 2 != 0 || z.contains_h3) return Rational(0);
    const std::int64_t d_s = sw_dimension(x, s.c1);
    if (z.delta1 > d_s) return Rational(0);
    if ((d_s - z.delta1) % 2 != 0) throw HypothesisError("delta1 and d_s have different parity");
    const std::int64_t d = (d_s - z.delta1) / 2;
    const std::int64_t sw = sw_pairing_value(s, d, z.delta1, z.theta_tag);

    MonomialZ shifted = z;  // degree deg z + 2k, delta2 as in the formula
    shifted.delta2 = z.delta2 + k;
    const auto dr = dimension_report(x, t);
    if (shifted.degree() + 2 * delta_c != dr.d_a + 2 * dr.n_a - 2)
        throw HypothesisError("deg z + 2k + 2 delta_c != d_a + 2 n_a - 2");
    const Rational c = link_constant(x, t, s.c1, shifted, delta_c, method);
    const int o = orientation_sign(t, s.c1, x.lattice);
    return R(neg_one_pow(o + z.delta0 + z.delta1)) * pow2(-shifted.delta2 - 2 * z.delta0) * c *
           R(sw) * pow(x.lattice.pairing(s.c1 - t.lambda, h_pd), z.delta2);
}

Rational blowup_pairing_pair(const ManifoldData& x, const SpinUData& t, std::size_t class_index,
                             const MonomialZ& z, std::int64_t delta_c, std::int64_t k,
                             std::span<const Rational> h_pd, PairingMethod method) {
    const auto& s = x.basic_classes.at(class_index);
    x.lattice.check_dimension(h_pd.size(), "h_pd");
    const Rational closed = blowup_pairing_closed(x, t, s, z, delta_c, k, h_pd, method);

    const BlowUp bu = blowup_transform(x, t);
    const std::size_t n = bu.manifold.lattice.rank();
    RationalVector h_ext = to_rationals(h_pd);
    h_ext.push_back(Rational(0));
    RationalVector e_pd(n, Rational(0));
    e_pd.back() = 1;
    MonomialZ ze = z;
    ze.delta2 = z.delta2 + k + 1;
    const std::vector<HFactor> factors{{h_ext, z.delta2}, {e_pd, k + 1}};

    Rational sum(0);
    const auto& images = bu.class_map.at(class_index);
    for (std::size_t idx : {images.plus, images.minus}) {
        const auto& sb = bu.manifold.basic_classes[idx];
        const int o = orientation_sign(bu.spin_u, sb.c1, bu.manifold.lattice);
        sum += R(neg_one_pow(o)) *
               link_pairing(bu.manifold, bu.spin_u, sb, ze, delta_c, factors, method);
    }
    if (sum != closed)
        throw OracleMismatch("blow-up pairing: sum on the blow-up " + to_string(sum) +
                             " != closed form " + to_string(closed));
    return sum;
}

namespace {

struct MainFormula {
    Rational value;
    std::vector<DonaldsonTerm> terms;
    bool literal_agrees = true;
};

/// Right-hand side of the main formula summed over classes with r(Lambda, K) = r.
MainFormula main_formula(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                         std::span<const Rational> h_pd, const Rational& r, const Rational& i_lambda,
                         const std::vector<std::size_t>& contributing) {
    MainFormula out;
    const auto& l = x.lattice;
    const std::int64_t deg = z.degree();
    const Rational delta = make_rational(deg, 2);
    const std::int64_t cps = x.chi_plus_sigma();
    Rational sum(0);
    for (std::size_t idx : contributing) {
        const auto& s = x.basic_classes[idx];
        const std::int64_t d_s = sw_dimension(x, s.c1);
        if (z.delta1 > d_s || (d_s - z.delta1) % 2 != 0) continue;
        const std::int64_t d = (d_s - z.delta1) / 2;
        const Rational dc = (3 * r + i_lambda) / 4 - delta - 1;
        if (!is_integer(dc)) throw HypothesisError("delta_c = (3r+i)/4 - deg z/2 - 1 is not an integer");
        const std::int64_t delta_c = dc.get_num().get_si();
        const Rational two_r = 2 * r;
        if (!is_integer(two_r)) throw HypothesisError("2 r(Lambda) is not an integer");
        const std::int64_t d_a = two_r.get_num().get_si();

        DonaldsonTerm term;
        term.class_index = idx;
        term.h_constant = jacobi_constant(deg, delta_c, d_a, d_s, z.delta1, cps);
        const std::int64_t four_b = 2 * (deg - d_a - d_s) - cps;
        if (four_b % 4 == 0) {
            const Rational lit = h_constant_literal(delta_c - d - 1, four_b / 4, static_cast<std::uint64_t>(d));
            if (lit != term.h_constant) out.literal_agrees = false;
        }
        term.sw = sw_pairing_value(s, d, z.delta1, z.theta_tag);
        const std::int64_t twice_e =
            2 * z.delta0 + 2 * z.delta1 + 2 + x.sigma() + l.pairing(s.c1, t.w - t.lambda);
        if (floor_mod(twice_e, 2) != 0) throw InputError("sign exponent is not an integer", "w");
        term.sign = neg_one_pow(twice_e / 2);
        term.pairing_power = pow(l.pairing(s.c1 - t.lambda, h_pd), z.delta2);
        sum += R(term.sign) * term.h_constant * R(term.sw) * term.pairing_power;
        out.terms.push_back(std::move(term));
    }
    const Rational e = 1 - (i_lambda - delta) / 4 - z.delta2 - 2 * z.delta0;
    out.value = pow2_checked(e, "power of 2 in the main formula") * sum;
    return out;
}

}  // namespace

DonaldsonResult donaldson_invariant(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                                    std::span<const Rational> h_pd,
                                    const std::optional<RationalVector>& period_point) {
    validate(x, t);
    require_z_shape(z);
    x.lattice.check_dimension(h_pd.size(), "h_pd");
    if (!x.effective) throw HypothesisError("X is not marked effective", "effective");
    require_b1_condition(x);
    if (z.delta1 > x.b1) throw InputError("delta1 exceeds b1", "z.delta1");

    DonaldsonResult out;
    const auto& l = x.lattice;
    if (x.b2_plus == 1) {
        if (!period_point) throw HypothesisError("b2_plus = 1 needs a period point", "period_point");
        l.check_dimension(period_point->size(), "period_point");
        if (l.pairing(std::span<const Rational>(*period_point), std::span<const Rational>(*period_point)) <= 0)
            throw InputError("period point is not in the positive cone", "period_point");
        if (!is_good(reduce_mod2(t.w)))
            throw HypothesisError("b2_plus = 1 needs w mod 2 good", "w");
        for (std::size_t i = 0; i < x.basic_classes.size(); ++i)
            out.chamber.push_back(
                {i, sign_of(l.pairing(x.basic_classes[i].c1 - t.lambda, std::span<const Rational>(*period_point)))});
    }

    const std::int64_t deg = z.degree();
    out.delta = make_rational(deg, 2);
    out.i_lambda = index_i(x, t.lambda);
    const RValues rv = r_values(x, t);
    out.r_min = rv.r_min;

    if (!mod8_condition(x, t.w, deg)) {
        out.label = CaseLabel::Mod8Fail;
        out.value = Rational(0);
        return out;
    }
    const Rational& delta = out.delta;
    const Rational& i_l = out.i_lambda;
    const auto& r = rv.r_min;
    if (delta < i_l && (!r || delta < *r)) {
        out.label = CaseLabel::VanishBelowR;
        out.value = Rational(0);
        return out;
    }
    if (delta < i_l && r && delta == *r)
        out.label = CaseLabel::AtR;
    else if (r && *r < delta && 2 * delta <= *r + (*r + i_l) / 2 - 2)
        out.label = CaseLabel::RelationRange;
    else {
        out.label = CaseLabel::OutOfTheorem;
        return out;
    }

    std::vector<std::size_t> contributing;
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i)
        if (nontrivial(x.basic_classes[i]) && rv.per_class[i] == *r) contributing.push_back(i);
    if (x.b2_plus == 1)
        for (std::size_t i : contributing)
            if (out.chamber[i].sign == 0)
                throw HypothesisError("period point lies on the wall of " + class_path(i), "period_point");

    Rational rhs(0);
    if (!z.contains_h3) {
        MainFormula mf = main_formula(x, t, z, h_pd, *r, i_l, contributing);
        rhs = mf.value;
        out.terms = std::move(mf.terms);
        out.h_literal_agrees = mf.literal_agrees;
    }
    if (out.label == CaseLabel::AtR) {
        out.value = rhs;
    } else {
        out.value = Rational(0);
        out.residual = rhs;
    }
    return out;
}

Rational donaldson_via_blowup(const ManifoldData& x, const SpinUData& t, const MonomialZ& z,
                              std::span<const Rational> h_pd, PairingMethod method) {
    SpinUData top = t;
    top.p1 = p1_for_degree(x, z.degree());
    const auto dr = dimension_report(x, top);
    const BlowUp bu = blowup_transform(x, top);
    RationalVector h_ext = to_rationals(h_pd);
    h_ext.push_back(Rational(0));
    RationalVector e_pd(bu.manifold.lattice.rank(), Rational(0));
    e_pd.back() = 1;
    MonomialZ ze = z;
    ze.delta2 = z.delta2 + 1;
    const std::vector<HFactor> factors{{h_ext, z.delta2}, {e_pd, 1}};
    return cobordism_sum(bu.manifold, bu.spin_u, ze, dr.n_a - 1, factors, method).value;
}

namespace {

void require_simple_type_hypotheses(const ManifoldData& x, const SpinUData& t) {
    validate(x, t);
    if (x.b1 != 0) throw HypothesisError("needs b1 = 0", "b1");
    if (x.b2_plus < 3 || x.b2_plus % 2 == 0) throw HypothesisError("needs odd b2_plus >= 3", "b2_plus");
    if (!x.effective) throw HypothesisError("X is not marked effective", "effective");
    if (!simple_type_check(x)) throw HypothesisError("X is not of SW-simple type", "simple_type");
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i)
        if (x.lattice.pairing(t.lambda, x.basic_classes[i].c1) != 0)
            throw HypothesisError("Lambda is not orthogonal to " + class_path(i), "lambda");
}

/// 2^{1-(c+delta)/2} (-1)^{m+1+(sigma-w^2)/2} sum_s (-1)^{(w^2+K.w)/2} SW(s) Q(K-Lambda, eta)^{delta-2m}.
TruncatedMultiPoly simple_type_formula(const ManifoldData& x, const SpinUData& t,
                                       std::int64_t delta, std::int64_t m) {
    const auto& l = x.lattice;
    const auto deg = static_cast<std::uint32_t>(delta - 2 * m);
    const std::int64_t w2 = l.square(t.w);
    if (floor_mod(x.sigma() - w2, 2) != 0) throw InputError("w^2 and sigma have different parity", "w");
    TruncatedMultiPoly sum(l.rank(), deg);
    for (const auto& s : x.basic_classes) {
        const std::int64_t e = w2 + l.pairing(s.c1, t.w);
        if (floor_mod(e, 2) != 0) throw InputError("w^2 + K.w is odd", "w");
        sum += poly_pow(linear_poly(l, s.c1 - t.lambda, deg), deg) * R(neg_one_pow(e / 2) * s.sw);
    }
    const Rational pre = pow2_checked(1 - (c_invariant(x) + delta) / 2, "power of 2 (c+delta)/2") *
                         R(neg_one_pow(m + 1 + (x.sigma() - w2) / 2));
    return sum * pre;
}

}  // namespace

SimpleTypeResult donaldson_simple_type_poly(const ManifoldData& x, const SpinUData& t,
                                            std::int64_t delta, std::int64_t m) {
    require_simple_type_hypotheses(x, t);
    if (delta < 0 || m < 0 || 2 * m > delta) throw InputError("needs 0 <= m <= delta/2");
    const auto& l = x.lattice;
    const Rational c = c_invariant(x);
    const Rational i_l = index_i(x, t.lambda);
    std::optional<Rational> r;
    if (!x.basic_classes.empty()) {
        r = -R(l.square(t.lambda)) + c - x.chi_plus_sigma();
        const auto rv = r_values(x, t);
        if (rv.r_min && *rv.r_min != *r)
            throw OracleMismatch("simple-type r(Lambda) " + to_string(*r) + " != r_min " + to_string(*rv.r_min));
    }
    const auto deg = static_cast<std::uint32_t>(delta - 2 * m);
    SimpleTypeResult out;
    out.poly = TruncatedMultiPoly(l.rank(), deg);
    const Rational dl = R(delta);
    if (dl < i_l && (!r || dl < *r)) {
        out.label = CaseLabel::VanishBelowR;
    } else if (dl < i_l && dl == *r) {
        out.label = CaseLabel::AtR;
        out.poly = simple_type_formula(x, t, delta, m);
    } else if (r && *r < dl && dl <= (*r + c - 2) / 2) {
        out.label = CaseLabel::RelationRange;
        out.residual = simple_type_formula(x, t, delta, m);
    } else {
        out.label = CaseLabel::OutOfTheorem;
    }
    return out;
}

Rational donaldson_simple_type(const ManifoldData& x, const SpinUData& t, std::int64_t delta,
                               std::int64_t m, std::span<const Rational> h_pd) {
    const auto res = donaldson_simple_type_poly(x, t, delta, m);
    if (res.label == CaseLabel::OutOfTheorem)
        throw HypothesisError("delta = " + std::to_string(delta) + " lies outside the ranges of the theorem");
    return res.poly.evaluate(h_pd);
}

TruncatedMultiPoly sw_series(const ManifoldData& x, const CohClass& w, std::uint32_t cap) {
    const auto& l = x.lattice;
    l.check_dimension(w, "w");
    const std::int64_t w2 = l.square(w);
    if (floor_mod(w2 - x.sigma(), 2) != 0) throw InputError("w^2 and sigma have different parity", "w");
    TruncatedMultiPoly out(l.rank(), cap);
    for (const auto& s : x.basic_classes) {
        if (s.sw == 0) continue;
        const std::int64_t e = w2 + l.pairing(s.c1, w);
        if (floor_mod(e, 2) != 0) throw InputError("w^2 + K.w is odd", "w");
        out += poly_exp(linear_poly(l, s.c1, cap)) * R(neg_one_pow(e / 2) * s.sw);
    }
    return out;
}

namespace {

TruncatedMultiPoly half_form(const IntegralLattice& l, std::uint32_t cap) {
    TruncatedMultiPoly q(l.rank(), cap);
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = i; j < l.rank(); ++j) {
            if (l.gram()[i][j] == 0) continue;
            Exponents e(l.rank(), 0);
            ++e[i];
            ++e[j];
            q.add_term(e, i == j ? make_rational(l.gram()[i][j], 2) : R(l.gram()[i][j]));
        }
    return q;
}

TruncatedMultiPoly signed_relation(const ManifoldData& x, const CohClass& w0, const CohClass& lambda0,
                                   std::uint32_t d) {
    const auto& l = x.lattice;
    const std::int64_t w2 = l.square(w0);
    TruncatedMultiPoly out(l.rank(), d);
    for (const auto& s : x.basic_classes) {
        const std::int64_t e = w2 + l.pairing(s.c1, w0);
        if (floor_mod(e, 2) != 0) throw InputError("w0^2 + K.w0 is odd");
        out += poly_pow(linear_poly(l, s.c1 - lambda0, d), d) * R(neg_one_pow(e / 2) * s.sw);
    }
    return out;
}

CohClass find_lambda(const ManifoldData& x, std::int64_t target, const char* name) {
    const Coord bound = std::max<Coord>(2, (target < 0 ? -target : target) / 2 + 1);
    auto found = find_orthogonal_classes_sparse(x.lattice, x.basic_class_vectors(), target, bound, 2);
    if (found.empty())
        throw HypothesisError(std::string("abundance: no ") + name + " in B^perp with square " +
                              std::to_string(target) + " found (support <= 2, |coeff| <= " +
                              std::to_string(bound) + ")");
    return found.front();
}

}  // namespace

WittenReport witten_compare(const ManifoldData& x, const SpinUData& t, std::uint32_t cap) {
    require_simple_type_hypotheses(x, t);
    const auto& l = x.lattice;
    const std::int64_t cps = x.chi_plus_sigma();
    if (l.square(t.lambda) != 2 - cps)
        throw HypothesisError("needs Lambda^2 = 2 - (chi + sigma) = " + std::to_string(2 - cps), "lambda");
    const Rational cq = c_invariant(x);
    if (!is_integer(cq)) throw HypothesisError("c(X) is not an integer");
    const std::int64_t c = cq.get_num().get_si();
    if (c >= 1 && cap + 1 < static_cast<std::uint64_t>(c))
        throw InputError("truncation must be at least c(X) - 1 = " + std::to_string(c - 1), "truncation");
    const std::uint32_t d_cap = c >= 1 ? static_cast<std::uint32_t>(c - 1) : 0;

    WittenReport out;
    out.d_series = TruncatedMultiPoly(l.rank(), d_cap);
    if (c >= 1) {
        for (std::int64_t j = 0; j <= c - 1; ++j)
            for (std::int64_t m = 0; m <= 1; ++m) {
                const std::int64_t delta = j + 2 * m;
                if (!mod8_condition(x, t.w, 2 * delta)) continue;
                const auto res = donaldson_simple_type_poly(x, t, delta, m);
                if (res.label == CaseLabel::OutOfTheorem)
                    throw HypothesisError("D(h^" + std::to_string(j) + " x^" + std::to_string(m) +
                                          ") is not determined by the theorems");
                Rational weight = Rational(1) / Rational(factorial(static_cast<std::uint64_t>(j)));
                if (m == 1) weight /= 2;
                out.d_series += res.poly.recapped(d_cap) * weight;
            }
    }
    out.sw_series = sw_series(x, t.w, cap);
    out.rhs_series = poly_mul(poly_exp(half_form(l, cap)), out.sw_series) * pow2(2 - c);

    const std::uint32_t vanish = c >= 2 ? static_cast<std::uint32_t>(c - 2) : 0;
    out.sw_vanish_order = out.sw_series.lowest_degree();
    out.d_vanish_order = out.d_series.lowest_degree();
    out.sw_vanishes = out.sw_vanish_order >= vanish;
    out.d_vanishes = out.d_vanish_order >= vanish;
    out.congruence = c < 1 || (out.d_series - out.rhs_series.recapped(d_cap)).is_zero();

    if (c >= 3) {
        const CohClass lambda0 = find_lambda(x, 4 - cps, "Lambda_0");
        const CohClass w0 = t.w - t.lambda + lambda0;
        for (std::int64_t d = 0; d <= c - 3; ++d)
            out.relations.push_back(
                {"lambda0", lambda0, d, signed_relation(x, w0, lambda0, static_cast<std::uint32_t>(d))});
        if ((c - 3) % 2 != 0) {
            const CohClass lambda1 = find_lambda(x, 6 - cps, "Lambda_1");
            const CohClass w1 = t.w - t.lambda + lambda1;
            out.relations.push_back({"lambda1", lambda1, 0, signed_relation(x, w1, lambda1, 0)});
        }
    }
    for (const auto& rel : out.relations)
        if (!rel.residual.is_zero()) out.relations_hold = false;
    out.congruence_ok = out.sw_vanishes && out.d_vanishes && out.congruence && out.relations_hold;
    return out;
}

bool simple_type_check(const ManifoldData& x) {
    if (x.b1 != 0) throw HypothesisError("simple-type check is defined here for b1 = 0", "b1");
    const std::int64_t target = 2 * x.chi() + 3 * x.sigma();
    return std::all_of(x.basic_classes.begin(), x.basic_classes.end(),
                       [&](const BasicClassEntry& s) { return x.lattice.square(s.c1) == target; });
}

}  // namespace monopole
