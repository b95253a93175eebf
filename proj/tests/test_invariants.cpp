#include "monopole/error.hpp"
#include "monopole/fixtures.hpp"
#include "monopole/invariants.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace monopole;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

struct Setup {
    ManifoldData x;
    SpinUData t;
    RationalVector h;
};

/// en_like(n) with the fixture Lambda, w = Lambda + w2 and p1 making deg z = d_a for z = h^delta2.
Setup en(std::int64_t n, std::int64_t delta2 = -1) {
    Setup s;
    s.x = gen_fixture(FixtureKind::EnLike, n);
    const Request req = fixture_request(s.x);
    s.t = {req.lambda, 0, req.w};
    const std::int64_t d2 = delta2 < 0 ? req.z.delta2 : delta2;
    s.t.p1 = p1_for_degree(s.x, 2 * d2);
    s.h = req.h_pd;
    return s;
}

MonomialZ hpow(std::int64_t d2) {
    MonomialZ z;
    z.delta2 = d2;
    return z;
}

const Gram& G(const Setup& s) { return s.x.lattice.gram(); }

/// Main-formula value computed from scratch for simple-type data with d = 0, delta0 = delta1 = 0.
Rational main_formula_oracle(const Setup& s, std::int64_t delta2) {
    const auto& g = G(s);
    const auto& w = s.t.w.coords;
    const auto& lam = s.t.lambda.coords;
    const std::int64_t chi = s.x.chi(), sigma = s.x.sigma();
    const Rational c = r(-(7 * chi + 11 * sigma), 4);
    const Rational i = r(oracle::dot(g, lam, lam) + chi + sigma) + c;
    const std::int64_t w2 = oracle::dot(g, w, w);
    Rational sum = 0;
    for (const auto& b : s.x.basic_classes) {
        std::vector<Coord> wl(w.size()), kl(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) {
            wl[j] = w[j] - lam[j];
            kl[j] = b.c1.coords[j] - lam[j];
        }
        const std::int64_t e = (w2 + oracle::dot(g, b.c1.coords, wl)) / 2;
        sum += r(neg_one_pow(e) * b.sw) * oracle::power(oracle::dot(g, kl, s.h), delta2);
    }
    const Rational expo = 1 - (i - delta2) / 4 - delta2;
    REQUIRE(is_integer(expo));
    return pow2(to_int64(expo)) * r(neg_one_pow((sigma - w2) / 2 + 1)) * sum;
}

}  // namespace

TEST_CASE("dimension_report examples") {
    const auto s = en(3);
    CHECK(s.x.chi() == 36);
    CHECK(s.x.sigma() == -24);
    CHECK(s.x.lattice.square(s.t.lambda) == -10);
    CHECK(s.t.p1 == -10);
    const auto dr = dimension_report(s.x, s.t);
    CHECK(dr.c_x == 3);
    CHECK(dr.d_a == 2);
    CHECK(dr.n_a == 1);
    CHECK(dr.i_lambda == 5);
    CHECK(4 * dr.n_a == -r(dr.d_a, 2) + dr.i_lambda);

    const auto k3 = gen_fixture(FixtureKind::K3Like);
    CHECK(c_invariant(k3) == 2);
    const SpinUData zero{CohClass::zero(22), k3.sigma(), CohClass::zero(22)};
    CHECK(dimension_report(k3, zero).n_a == 0);
    SpinUData bad = zero;
    bad.p1 += 1;
    CHECK_THROWS_AS(dimension_report(k3, bad), InputError);
}

TEST_CASE("sw_dimension and simple type") {
    const auto e3 = gen_fixture(FixtureKind::EnLike, 3);
    CHECK(e3.lattice.square(e3.basic_classes[0].c1) == 0);
    CHECK(sw_dimension(e3, e3.basic_classes[0].c1) == 0);
    const auto k3 = gen_fixture(FixtureKind::K3Like);
    CHECK(sw_dimension(k3, CohClass::zero(22)) == 0);
    CHECK(simple_type_check(gen_fixture(FixtureKind::Empty)));
    CHECK(simple_type_check(e3));
    auto off = e3;
    // K with K^2 = -4 (still characteristic): drop two of the 3s to 1
    off.basic_classes[0].c1.coords[2] = 1;
    off.basic_classes[0].c1.coords[3] = 1;
    off.basic_classes[1].c1 = -off.basic_classes[0].c1;
    REQUIRE(off.lattice.square(off.basic_classes[0].c1) == -16);
    CHECK_FALSE(simple_type_check(off));
}

TEST_CASE("normal_indices examples") {
    const auto s = en(3);
    const auto& k = s.x.basic_classes[0].c1;
    REQUIRE(s.x.lattice.pairing(k, s.t.lambda) == 0);
    const auto ni = normal_indices(s.x, s.t, k);
    CHECK(ni.ns1 == 4);
    CHECK(ni.ns2 == -2);
    const auto dr = dimension_report(s.x, s.t);
    REQUIRE(level(s.t, k, s.x.lattice) == std::optional<std::int64_t>(0));
    CHECK(r(ni.ns1) == r(dr.d_a, 2) + r(s.x.chi_plus_sigma(), 4));

    const auto k3 = gen_fixture(FixtureKind::K3Like);
    const SpinUData t0{CohClass::zero(22), 0, CohClass::zero(22)};
    const auto z = normal_indices(k3, t0, CohClass::zero(22));
    CHECK(z.ns1 == -k3.chi_plus_sigma() / 2);
    CHECK(z.ns2 == -k3.sigma() / 8);
}

TEST_CASE("r values") {
    const auto s = en(3);
    const auto rv = r_values(s.x, s.t);
    REQUIRE(rv.r_min);
    CHECK(*rv.r_min == 1);
    CHECK(rv.per_class[0] == 1);
    CHECK(*rv.r_min == c_invariant(s.x) - 2);
    CHECK(index_i(s.x, s.t.lambda) + *rv.r_min == 2 * c_invariant(s.x));
    const auto e = gen_fixture(FixtureKind::Empty);
    const SpinUData t0{CohClass::zero(22), 0, CohClass::zero(22)};
    CHECK_FALSE(r_values(e, t0).r_min.has_value());
}

TEST_CASE("level") {
    const auto s = en(3);
    const auto& k = s.x.basic_classes[0].c1;
    const std::int64_t sq = s.x.lattice.square(s.t.lambda - k);
    SpinUData t = s.t;
    t.p1 = sq;
    CHECK(level(t, k, s.x.lattice) == std::optional<std::int64_t>(0));
    t.p1 = sq - 4;
    CHECK(level(t, k, s.x.lattice) == std::optional<std::int64_t>(1));
    t.p1 = sq + 4;
    CHECK_FALSE(level(t, k, s.x.lattice).has_value());
    t.p1 = sq - 2;
    CHECK_FALSE(level(t, k, s.x.lattice).has_value());
}

TEST_CASE("orientation_sign") {
    const auto s = en(3);
    const auto& l = s.x.lattice;
    const CohClass k = s.t.lambda - s.t.w;
    CHECK(orientation_sign(s.t, k, l) == 0);

    const IntegralLattice h(hyperbolic_gram(), 1, 1);
    const SpinUData th{CohClass({0, 0}), 0, CohClass({2, 0})};
    CHECK(orientation_sign(th, CohClass({0, 0}), h) == 0);

    const auto d = IntegralLattice::from_gram(diagonal_gram(std::vector<Coord>{1, -1}));
    const SpinUData td{CohClass({0, 0}), 0, CohClass({2, 0})};
    CHECK(orientation_sign(td, CohClass({0, 0}), d) == 1);
    const SpinUData odd{CohClass({0, 0}), 0, CohClass({1, 0})};
    CHECK_THROWS_AS(orientation_sign(odd, CohClass({0, 0}), d), InputError);

    for (const auto& b : s.x.basic_classes)
        CHECK(orientation_sign(s.t, b.c1, l) == orientation_sign_decomposed(s.x, s.t, b.c1));
}

TEST_CASE("link_pairing examples") {
    const auto s = en(3);
    const auto z = hpow(1);
    for (const auto& b : s.x.basic_classes) {
        const Rational q = s.x.lattice.pairing(b.c1 - s.t.lambda, std::span<const Rational>(s.h));
        const Rational want = r(1, 2) * r(b.sw) * q;
        CHECK(link_pairing(s.x, s.t, b, z, 0, s.h, PairingMethod::Both) == want);
        CHECK(link_pairing(s.x, s.t, b, z, 0, s.h, PairingMethod::Direct) == want);
        CHECK(link_pairing(s.x, s.t, b, z, 0, s.h, PairingMethod::Closed) == want);
    }
    // wrong delta_c is a hypothesis failure
    CHECK_THROWS_AS(link_pairing(s.x, s.t, s.x.basic_classes[0], z, 1, s.h, PairingMethod::Both), HypothesisError);
}

TEST_CASE("link_pairing vanishes when delta1 > d_s") {
    std::mt19937_64 rng(19);
    int seen = 0;
    for (int i = 0; i < 2000 && seen < 5; ++i) {
        auto rc = random_level_zero_case(rng);
        const auto& s = rc.x.basic_classes[rc.class_index];
        const std::int64_t d_s = sw_dimension(rc.x, s.c1);
        const auto dr = dimension_report(rc.x, rc.t);
        const std::int64_t top = dr.d_a + 2 * dr.n_a - 2;
        for (std::int64_t d1 = d_s + 1; d1 <= d_s + 2; ++d1) {
            const std::int64_t rest = top - 3 * d1;
            if (rest < 0 || rest % 2 != 0) continue;
            MonomialZ z;
            z.delta1 = d1;
            CHECK(link_pairing(rc.x, rc.t, s, z, rest / 2, rc.h, PairingMethod::Both) == 0);
            ++seen;
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("link_pairing with an H_3 factor vanishes") {
    std::mt19937_64 rng(17);
    int seen = 0;
    for (int i = 0; i < 400 && seen < 5; ++i) {
        auto rc = random_level_zero_case(rng);
        const auto dr = dimension_report(rc.x, rc.t);
        const std::int64_t top = dr.d_a + 2 * dr.n_a - 2;
        if (top < 1 || top % 2 == 0) continue;
        MonomialZ z;
        z.contains_h3 = true;
        const std::int64_t dc = (top - 1) / 2;
        CHECK(link_pairing(rc.x, rc.t, rc.x.basic_classes[rc.class_index], z, dc, rc.h, PairingMethod::Both) == 0);
        ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("link_pairing: direct and closed routes agree on random level-0 cases") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const auto rc = random_level_zero_case(rng);
        const auto& s = rc.x.basic_classes[rc.class_index];
        const auto a = link_pairing(rc.x, rc.t, s, rc.z, rc.delta_c, rc.h, PairingMethod::Direct);
        const auto b = link_pairing(rc.x, rc.t, s, rc.z, rc.delta_c, rc.h, PairingMethod::Closed);
        CHECK(a == b);
    }
}

TEST_CASE("cobordism_sum") {
    // empty basic classes
    auto e = gen_fixture(FixtureKind::Empty);
    const Request req = fixture_request(e);
    SpinUData te{req.lambda, -6, req.w};
    const auto dre = dimension_report(e, te);
    REQUIRE(dre.n_a == 1);
    REQUIRE(dre.d_a == 0);
    const auto ce = cobordism_sum(e, te, hpow(0), 0, req.h_pd, PairingMethod::Both);
    CHECK(ce.value == 0);

    // en_like(3): deg z = d_a = 2, n_a = 1
    const auto s = en(3);
    const auto cs = cobordism_sum(s.x, s.t, hpow(1), 0, s.h, PairingMethod::Both);
    Rational want = 0;
    for (const auto& b : s.x.basic_classes) {
        std::vector<Coord> v(b.c1.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = s.t.w[j] - s.t.lambda[j] + b.c1[j];
        const std::int64_t sq = oracle::dot(G(s), v, v);
        REQUIRE(sq % 4 == 0);
        const int o = static_cast<int>(oracle::floor_mod(sq / 4, 2));
        std::vector<Coord> kl(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) kl[j] = b.c1[j] - s.t.lambda[j];
        want += r(neg_one_pow(o)) * r(1, 2) * r(b.sw) * oracle::dot(G(s), kl, s.h);
    }
    CHECK(cs.value == -want);
    CHECK(cs.terms.size() == 2);

    // n_a <= 0
    SpinUData t0 = s.t;
    t0.p1 = -14;
    CHECK_THROWS_AS(cobordism_sum(s.x, t0, hpow(1), 0, s.h, PairingMethod::Both), HypothesisError);
}

TEST_CASE("blowup_transform") {
    const auto s = en(3);
    const auto b = blowup_transform(s.x, s.t);
    CHECK(b.manifold.chi() == s.x.chi() + 1);
    CHECK(b.manifold.sigma() == s.x.sigma() - 1);
    CHECK(b.manifold.chi_plus_sigma() == s.x.chi_plus_sigma());
    CHECK(b.spin_u.p1 == s.t.p1 - 1);
    CHECK(b.manifold.lattice.rank() == s.x.lattice.rank() + 1);
    CHECK_NOTHROW(validate(b.manifold));
    for (const auto& m : b.class_map) {
        const auto& k = s.x.basic_classes[m.source];
        for (auto idx : {m.plus, m.minus}) {
            const auto& kt = b.manifold.basic_classes[idx];
            CHECK(b.manifold.lattice.square(kt.c1) == s.x.lattice.square(k.c1) - 1);
            CHECK(kt.sw == k.sw);
            CHECK(sw_dimension(b.manifold, kt.c1) == sw_dimension(s.x, k.c1));
            CHECK(level(b.spin_u, kt.c1, b.manifold.lattice) == std::optional<std::int64_t>(0));
        }
    }
}

TEST_CASE("blowup_pairing_pair") {
    for (std::int64_t n : {2, 3}) {
        // z on X of h-power 0 or 1 with p1 chosen at level 0; constant C = 1 here (d = 0)
        const auto s = en(n);
        const auto dr = dimension_report(s.x, s.t);
        for (std::int64_t k = 0; k <= 3; ++k) {
            const std::int64_t top = dr.d_a + 2 * dr.n_a - 2;
            for (std::int64_t d2 = 0; d2 <= 1; ++d2) {
                const std::int64_t rest = top - 2 * d2 - 2 * k;
                if (rest < 0 || rest % 2 != 0) continue;
                const auto z = hpow(d2);
                for (std::size_t i = 0; i < s.x.basic_classes.size(); ++i) {
                    const auto v = blowup_pairing_pair(s.x, s.t, i, z, rest / 2, k, s.h, PairingMethod::Both);
                    if (k % 2 == 1) CHECK(v == 0);
                    CHECK(v == blowup_pairing_closed(s.x, s.t, s.x.basic_classes[i], z, rest / 2, k, s.h,
                                                     PairingMethod::Both));
                }
            }
        }
    }
}

TEST_CASE("donaldson_invariant on en_like matches the hand-assembled main formula") {
    for (std::int64_t n : {2, 3, 4}) {
        const auto s = en(n);
        const auto rv = r_values(s.x, s.t);
        const std::int64_t rr = to_int64(*rv.r_min);
        const auto res = donaldson_invariant(s.x, s.t, hpow(rr), s.h, std::nullopt);
        CHECK(res.label == CaseLabel::AtR);
        REQUIRE(res.value);
        CHECK(*res.value == main_formula_oracle(s, rr));
        CHECK(*res.value == donaldson_via_blowup(s.x, s.t, hpow(rr), s.h, PairingMethod::Both));
        CHECK(*res.value == donaldson_simple_type(s.x, s.t, rr, 0, s.h));
    }
}

TEST_CASE("donaldson_invariant cases") {
    const auto s = en(3);
    // deg 4 = h^2: -2 w^2 - 18 mod 8 decides
    const std::int64_t w2 = s.x.lattice.square(s.t.w);
    for (std::int64_t d2 = 0; d2 <= 4; ++d2) {
        const auto res = donaldson_invariant(s.x, s.t, hpow(d2), s.h, std::nullopt);
        const bool ok = oracle::floor_mod(2 * d2 + 2 * w2 + 18, 8) == 0;
        if (!ok) {
            CHECK(res.label == CaseLabel::Mod8Fail);
            CHECK(res.value == std::optional<Rational>(Rational(0)));
        }
    }
    // below r and i: the empty fixture has r = +inf, i = 4, and z = 1 passes the mod-8 gate
    const auto e = gen_fixture(FixtureKind::Empty);
    const auto req = fixture_request(e);
    const SpinUData te{req.lambda, 0, req.w};
    REQUIRE(mod8_condition(e, te.w, 0));
    const auto a = donaldson_invariant(e, te, hpow(0), req.h_pd, std::nullopt);
    CHECK(a.label == CaseLabel::VanishBelowR);
    CHECK(a.value == std::optional<Rational>(Rational(0)));
}

TEST_CASE("donaldson_invariant needs a period point when b2+ = 1") {
    ManifoldData x;
    x.name = "b2p1";
    x.b2_plus = 1;
    x.b2_minus = 1;
    x.lattice = IntegralLattice(hyperbolic_gram(), 1, 1);
    x.w2 = Mod2Class({0, 0});
    x.effective = true;
    x.simple_type = true;
    validate(x);
    const SpinUData t{CohClass({1, 0}), 0, CohClass({1, 0})};
    CHECK_THROWS_AS(donaldson_invariant(x, t, hpow(0), RationalVector{r(1), r(1)}, std::nullopt), HypothesisError);
}

TEST_CASE("donaldson_simple_type") {
    // sinh-like data, delta - 2m = 0: the two classes cancel
    const auto s = en(4);
    const auto rv = r_values(s.x, s.t);
    REQUIRE(*rv.r_min == 2);
    CHECK(*rv.r_min == c_invariant(s.x) - 2);
    CHECK(donaldson_simple_type(s.x, s.t, 2, 1, s.h) == 0);
    CHECK(donaldson_simple_type(s.x, s.t, 0, 0, s.h) == 0);
    // prefactor 2^{2-c} up to sign at delta = r, m = 0
    const auto s3 = en(3);
    const Rational v = donaldson_simple_type(s3.x, s3.t, 1, 0, s3.h);
    Rational raw = 0;
    for (const auto& b : s3.x.basic_classes) {
        const Rational q = s3.x.lattice.pairing(b.c1 - s3.t.lambda, std::span<const Rational>(s3.h));
        raw += r(b.sw) * q;
    }
    CHECK((v == pow2(-1) * raw || v == -pow2(-1) * raw));
}

TEST_CASE("sw_series") {
    const auto e = gen_fixture(FixtureKind::Empty);
    CHECK(sw_series(e, CohClass::zero(22), 3).is_zero());
    const auto k3 = gen_fixture(FixtureKind::K3Like);
    const auto s = sw_series(k3, CohClass::zero(22), 3);
    CHECK(s == TruncatedMultiPoly::constant(22, 3, r(1)));
    const auto x = gen_fixture(FixtureKind::EnLike, 3);
    const auto t = fixture_request(x);
    const auto sw = sw_series(x, t.w, 5);
    for (std::uint32_t d = 0; d <= 5; d += 2) CHECK(sw.homogeneous_part(d).is_zero());
    CHECK_FALSE(sw.homogeneous_part(1).is_zero());
}

TEST_CASE("witten_compare") {
    const auto x = gen_fixture(FixtureKind::EnLike, 3);
    const auto req = fixture_request(x);
    const SpinUData t{req.lambda, 0, req.w};
    const auto w = witten_compare(x, t, 2);
    CHECK(w.sw_vanishes);
    CHECK(w.d_vanishes);
    CHECK(w.congruence);
    CHECK(w.congruence_ok);

    const auto e = gen_fixture(FixtureKind::Empty);
    const auto re = fixture_request(e);
    const auto we = witten_compare(e, {re.lambda, 0, re.w}, 1);
    CHECK(we.congruence_ok);
    CHECK(we.d_series.is_zero());

    const auto a = gen_fixture(FixtureKind::Asymmetric);
    const auto ra = fixture_request(a);
    const auto wa = witten_compare(a, {ra.lambda, 0, ra.w}, 2);
    CHECK_FALSE(wa.congruence_ok);
    bool nonzero = false;
    for (const auto& rel : wa.relations)
        if (rel.d == 0 && !rel.residual.is_zero()) nonzero = true;
    CHECK(nonzero);
}
