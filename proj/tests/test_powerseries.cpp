#include "monopole/error.hpp"
#include "monopole/powerseries.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace monopole;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TruncatedMultiPoly x(std::size_t nv, std::uint32_t cap, std::size_t i) {
    return TruncatedMultiPoly::variable(nv, cap, i);
}

TruncatedMultiPoly one(std::size_t nv, std::uint32_t cap) {
    return TruncatedMultiPoly::constant(nv, cap, r(1));
}

TruncatedMultiPoly random_poly(std::mt19937_64& rng, std::size_t nv, std::uint32_t cap, bool constant) {
    TruncatedMultiPoly p(nv, cap);
    for (int t = 0; t < 6; ++t) {
        Exponents e(nv, 0);
        for (auto& v : e) v = static_cast<std::uint32_t>(rng() % 3);
        if (!constant && total_degree(e) == 0) continue;
        p.add_term(e, r(static_cast<std::int64_t>(rng() % 11) - 5, 1 + static_cast<std::int64_t>(rng() % 3)));
    }
    return p;
}

}  // namespace

TEST_CASE("poly_mul") {
    const auto q = x(2, 3, 0) * r(3) + x(2, 3, 1) - one(2, 3) * r(1, 2);
    CHECK(poly_mul(one(2, 3), q) == q);
    CHECK(poly_mul(x(1, 1, 0), x(1, 1, 0)).is_zero());
    const auto p = poly_mul(one(1, 2) + x(1, 2, 0), one(1, 2) - x(1, 2, 0));
    CHECK(p == one(1, 2) - poly_mul(x(1, 2, 0), x(1, 2, 0)));
    CHECK(p.coefficient({2}) == -1);
    CHECK_THROWS_AS(poly_mul(one(1, 2), one(2, 2)), InputError);
}

TEST_CASE("poly_exp") {
    CHECK(poly_exp(TruncatedMultiPoly(2, 4)) == one(2, 4));
    const auto e = poly_exp(x(1, 3, 0));
    CHECK(e.coefficient({0}) == 1);
    CHECK(e.coefficient({1}) == 1);
    CHECK(e.coefficient({2}) == r(1, 2));
    CHECK(e.coefficient({3}) == r(1, 6));
    const auto qd = poly_mul(x(2, 2, 0), x(2, 2, 1)) * r(2) - poly_mul(x(2, 2, 1), x(2, 2, 1));
    CHECK(poly_exp(qd) == one(2, 2) + qd);
    CHECK_THROWS_AS(poly_exp(one(1, 2)), InputError);
}

TEST_CASE("exp(p) exp(-p) = 1 and multiplication is commutative and associative") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto p = random_poly(rng, 3, 5, false);
        CHECK(poly_mul(poly_exp(p), poly_exp(-p)) == one(3, 5));
        const auto a = random_poly(rng, 3, 5, true), b = random_poly(rng, 3, 5, true), c = random_poly(rng, 3, 5, true);
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
    }
}

TEST_CASE("grading: degree-k part of a product ignores higher components") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_poly(rng, 2, 6, true), b = random_poly(rng, 2, 6, true);
        const std::uint32_t k = static_cast<std::uint32_t>(rng() % 6);
        auto a2 = a, b2 = b;
        for (std::uint32_t d = k + 1; d <= 6; ++d) {
            a2.add_term({d, 0}, r(7));
            b2.add_term({0, d}, r(-3));
        }
        CHECK(poly_mul(a, b).homogeneous_part(k) == poly_mul(a2, b2).homogeneous_part(k));
    }
}

TEST_CASE("series_inverse") {
    CHECK(series_inverse(TruncatedUniSeries(3, {r(1), r(0), r(0), r(0)})) ==
          TruncatedUniSeries(3, {r(1), r(0), r(0), r(0)}));
    CHECK(series_inverse(TruncatedUniSeries(3, {r(1), r(1), r(0), r(0)})) ==
          TruncatedUniSeries(3, {r(1), r(-1), r(1), r(-1)}));
    CHECK(series_inverse(TruncatedUniSeries(2, {r(1), r(2), r(1)})) == TruncatedUniSeries(2, {r(1), r(-2), r(3)}));
    CHECK_THROWS_AS(series_inverse(TruncatedUniSeries(2, {r(2), r(0), r(0)})), InputError);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> c(7);
        c[0] = 1;
        for (std::size_t k = 1; k < c.size(); ++k) c[k] = r(static_cast<std::int64_t>(rng() % 11) - 5);
        const TruncatedUniSeries s(6, c);
        auto unit = TruncatedUniSeries(6);
        unit[0] = 1;
        CHECK(series_mul(s, series_inverse(s)) == unit);
    }
}

TEST_CASE("segre classes") {
    for (std::int64_t a = -3; a <= 3; ++a) CHECK(segre_classes(a, -a, 4)[0] == 1);
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) CHECK(segre_classes(a, b, 1)[1] == -(2 * a + b));
    const auto zero = segre_classes(0, 0, 5);
    CHECK(zero == std::vector<Rational>{r(1), r(0), r(0), r(0), r(0), r(0)});
    for (std::int64_t a = -6; a <= 6; ++a)
        for (std::int64_t b = -6; b <= 6; ++b) {
            const auto got = segre_classes(a, b, 8);
            const auto want = oracle::segre(a, b, 8);
            for (std::size_t i = 0; i <= 8; ++i) CHECK(got[i] == want[i]);
        }
    CHECK(segre_closed_form(0, 1, 1, SegreSumStart::FromOne) != segre_closed_form(0, 1, 1));
    CHECK_THROWS_AS(segre_classes(0, 1, 1, SegreSumStart::FromOne), OracleMismatch);
}

TEST_CASE("exponent keys round-trip") {
    CHECK(exponent_key({1, 0, 3}) == "1,0,3");
    CHECK(parse_exponent_key("1,0,3", 3) == Exponents{1, 0, 3});
    CHECK_THROWS_AS(parse_exponent_key("1,0", 3), InputError);
}
