#include "monopole/checks.hpp"

#include "monopole/combinatorics.hpp"
#include "monopole/error.hpp"
#include "monopole/fixtures.hpp"
#include "monopole/invariants.hpp"
#include "monopole/powerseries.hpp"
#include "monopole/walls.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace monopole {

bool SuiteResult::pass() const {
    for (const auto& p : properties)
        if (!p.pass()) return false;
    return true;
}

namespace {

Rational R(std::int64_t v) { return make_rational(v); }

/// Collects cases for one property and keeps the first failure.
class Prop {
public:
    explicit Prop(std::string name) { r_.name = std::move(name); }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++r_.cases;
        if (!ok && !r_.counterexample) r_.counterexample = describe();
    }
    void skip() { ++r_.skipped; }
    void fail(const std::string& what) {
        ++r_.cases;
        if (!r_.counterexample) r_.counterexample = what;
    }
    PropertyResult done() { return std::move(r_); }

private:
    PropertyResult r_;
};

/// Runs body; any library error becomes the property's counterexample.
template <class Body>
PropertyResult run_prop(const std::string& name, Body&& body) {
    Prop p(name);
    try {
        body(p);
    } catch (const Error& e) {
        p.fail(std::string("exception: ") + e.what());
    }
    return p.done();
}

std::string fmt(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ", ";
        os << k << "=" << v;
        first = false;
    }
    return os.str();
}

std::string S(std::int64_t v) { return std::to_string(v); }
std::string S(const Rational& q) { return to_string(q); }

Rational falling_binomial(std::int64_t a, std::int64_t k) {
    Rational num(1);
    for (std::int64_t j = 0; j < k; ++j) num *= R(a - j);
    Integer f = 1;
    for (std::int64_t j = 2; j <= k; ++j) f *= j;
    return num / Rational(f);
}

// identities -------------------------------------------------------------------------------

SuiteResult identities_suite(std::int64_t n_bound) {
    SuiteResult out{"identities", n_bound, {}};
    const std::int64_t kmax = 8;

    out.properties.push_back(run_prop("pochhammer_reflection", [&](Prop& p) {
        for (std::int64_t a = -n_bound; a <= n_bound; ++a)
            for (std::int64_t k = 0; k <= kmax; ++k) {
                const Rational lhs = pochhammer(R(a), k);
                const Rational rhs = R(neg_one_pow(k)) * pochhammer(R(1 - a - k), k);
                p.expect(lhs == rhs, [&] { return fmt({{"a", S(a)}, {"k", S(k)}}); });
            }
    }));
    out.properties.push_back(run_prop("binomial_as_pochhammer", [&](Prop& p) {
        for (std::int64_t a = -n_bound; a <= n_bound; ++a)
            for (std::int64_t k = 0; k <= kmax; ++k) {
                const Rational rhs = R(neg_one_pow(k)) * pochhammer(R(-a), k) / Rational(factorial(k));
                p.expect(falling_binomial(a, k) == rhs && gen_binomial(a, k) == rhs,
                         [&] { return fmt({{"a", S(a)}, {"k", S(k)}}); });
            }
    }));
    out.properties.push_back(run_prop("shifted_pochhammer", [&](Prop& p) {
        for (std::int64_t a = -n_bound; a <= n_bound; ++a)
            for (std::int64_t n = 0; n <= kmax; ++n)
                for (std::int64_t k = 0; k <= n; ++k) {
                    const Rational den = pochhammer(R(1 - a - n), k);
                    if (den == 0) {
                        p.skip();
                        continue;
                    }
                    const Rational rhs = R(neg_one_pow(k)) * pochhammer(R(a), n) / den;
                    p.expect(pochhammer(R(a), n - k) == rhs,
                             [&] { return fmt({{"a", S(a)}, {"n", S(n)}, {"k", S(k)}}); });
                }
    }));
    out.properties.push_back(run_prop("factorial_ratio", [&](Prop& p) {
        for (std::int64_t n = 0; n <= kmax; ++n)
            for (std::int64_t k = 0; k <= n; ++k) {
                const Rational rhs = Rational(factorial(n)) / (R(neg_one_pow(k)) * pochhammer(R(-n), k));
                p.expect(Rational(factorial(n - k)) == rhs, [&] { return fmt({{"n", S(n)}, {"k", S(k)}}); });
            }
    }));
    out.properties.push_back(run_prop("vandermonde", [&](Prop& p) {
        for (std::int64_t a = -n_bound; a <= n_bound; ++a)
            for (std::int64_t b = -n_bound; b <= n_bound; ++b)
                for (std::int64_t u = 0; u <= kmax; ++u) {
                    Rational lhs(0);
                    for (std::int64_t i = 0; i <= u; ++i) lhs += gen_binomial(a, i) * gen_binomial(b, u - i);
                    p.expect(lhs == gen_binomial(a + b, u),
                             [&] { return fmt({{"a", S(a)}, {"b", S(b)}, {"u", S(u)}}); });
                }
    }));

    const std::int64_t h = std::max<std::int64_t>(n_bound - 1, 0);
    const std::vector<Rational> xis{R(0), make_rational(1, 2), make_rational(-1, 2), R(2)};
    out.properties.push_back(run_prop("hypergeometric_inversion", [&](Prop& p) {
        for (std::int64_t m = 0; m <= 6; ++m)
            for (std::int64_t b = -h; b <= h; ++b)
                for (std::int64_t c = -h; c <= h; ++c)
                    for (const auto& xi : xis) {
                        if (xi == 0) {
                            p.skip();
                            continue;
                        }
                        const Rational cm = pochhammer(R(c), m);
                        try {
                            if (cm == 0) throw DegenerateParameter(static_cast<std::uint64_t>(m));
                            const Rational lhs = hypergeom_terminating(m, R(b), R(c), xi);
                            const Rational rhs = pochhammer(R(b), m) * R(neg_one_pow(m)) * pow(xi, m) / cm *
                                                 hypergeom_terminating(m, R(1 - m - c), R(1 - m - b), 1 / xi);
                            p.expect(lhs == rhs, [&] {
                                return fmt({{"m", S(m)}, {"b", S(b)}, {"c", S(c)}, {"xi", S(xi)}});
                            });
                        } catch (const DegenerateParameter&) {
                            p.skip();
                        }
                    }
    }));
    out.properties.push_back(run_prop("jacobi_as_hypergeometric", [&](Prop& p) {
        for (std::int64_t n = 0; n <= 6; ++n)
            for (std::int64_t a = -h; a <= h; ++a)
                for (std::int64_t b = -h; b <= h; ++b)
                    for (const auto& xi : xis) {
                        try {
                            const Rational lhs = jacobi_standard({a, b, static_cast<std::uint64_t>(n), xi});
                            const Rational rhs = R(neg_one_pow(n)) * pochhammer(R(b + 1), n) /
                                                 Rational(factorial(n)) *
                                                 hypergeom_terminating(n, R(n + a + b + 1), R(b + 1), (1 + xi) / 2);
                            p.expect(lhs == rhs, [&] {
                                return fmt({{"n", S(n)}, {"a", S(a)}, {"b", S(b)}, {"xi", S(xi)}});
                            });
                        } catch (const DegenerateParameter&) {
                            p.skip();
                        }
                    }
    }));

    auto link_grid = [&](const std::string& name, auto&& other) {
        return run_prop(name, [&](Prop& p) {
            for (std::int64_t ns1 = -n_bound; ns1 <= n_bound; ++ns1)
                for (std::int64_t ns2 = -n_bound; ns2 <= n_bound; ++ns2)
                    for (std::int64_t dp = 0; dp <= 10; ++dp)
                        for (std::uint64_t d = 0; d <= 8; ++d) {
                            const Rational direct = link_constant_direct(ns2, ns1, dp, d);
                            p.expect(direct == other(ns2, ns1, dp, d), [&] {
                                return fmt({{"ns1", S(ns1)}, {"ns2", S(ns2)}, {"delta_p", S(dp)},
                                            {"d", S(static_cast<std::int64_t>(d))}});
                            });
                        }
        });
    };
    out.properties.push_back(link_grid("link_constant_closed_form", link_constant_closed));
    out.properties.push_back(link_grid("link_constant_double_sum", link_constant_double_sum));
    return out;
}

// segre ------------------------------------------------------------------------------------

SuiteResult segre_suite(std::int64_t n_bound, bool literal) {
    SuiteResult out{"segre", n_bound, {}};
    const SegreSumStart start = literal ? SegreSumStart::FromOne : SegreSumStart::FromZero;
    out.properties.push_back(run_prop(literal ? "closed_form_from_one_vs_inversion" : "closed_form_vs_inversion",
                                      [&](Prop& p) {
        for (std::int64_t ns1 = -n_bound; ns1 <= n_bound; ++ns1)
            for (std::int64_t ns2 = -n_bound; ns2 <= n_bound; ++ns2) {
                const auto inv = segre_by_inversion(ns1, ns2, 8);
                for (std::uint32_t i = 0; i <= 8; ++i) {
                    const Rational c = segre_closed_form(ns1, ns2, i, start);
                    p.expect(c == inv[i], [&] {
                        return fmt({{"ns1", S(ns1)}, {"ns2", S(ns2)}, {"i", S(i)}, {"closed", S(c)},
                                    {"inversion", S(inv[i])}});
                    });
                }
            }
    }));
    out.properties.push_back(run_prop("from_one_form_differs_at_0_1_1", [&](Prop& p) {
        const Rational lit = segre_closed_form(0, 1, 1, SegreSumStart::FromOne);
        const Rational inv = segre_by_inversion(0, 1, 1)[1];
        p.expect(lit != inv, [&] { return fmt({{"from_one", S(lit)}, {"inversion", S(inv)}}); });
    }));
    return out;
}

// pairing ----------------------------------------------------------------------------------

std::string describe_case(const RandomCase& c) {
    std::ostringstream os;
    os << "rank=" << c.x.lattice.rank() << ", b1=" << c.x.b1 << ", b2+=" << c.x.b2_plus
       << ", K=[";
    for (std::size_t i = 0; i < c.x.basic_classes[c.class_index].c1.size(); ++i)
        os << (i ? "," : "") << c.x.basic_classes[c.class_index].c1.coords[i];
    os << "], Lambda=[";
    for (std::size_t i = 0; i < c.t.lambda.size(); ++i) os << (i ? "," : "") << c.t.lambda.coords[i];
    os << "], z=(" << c.z.delta0 << "," << c.z.delta1 << "," << c.z.delta2 << "), delta_c=" << c.delta_c;
    return os.str();
}

SuiteResult pairing_suite(std::int64_t count, std::uint64_t seed) {
    SuiteResult out{"pairing", count, {}};
    std::mt19937_64 rng(seed);
    std::vector<RandomCase> cases;
    for (std::int64_t i = 0; i < count; ++i) cases.push_back(random_level_zero_case(rng));
    out.properties.push_back(run_prop("direct_equals_closed", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto& s = c.x.basic_classes[c.class_index];
            const Rational dir = link_pairing(c.x, c.t, s, c.z, c.delta_c, c.h, PairingMethod::Direct);
            const Rational clo = link_pairing(c.x, c.t, s, c.z, c.delta_c, c.h, PairingMethod::Closed);
            p.expect(dir == clo, [&] { return describe_case(c) + ", direct=" + S(dir) + ", closed=" + S(clo); });
        }
    }));
    out.properties.push_back(run_prop("segre_route_equals_single_sum", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto& k = c.x.basic_classes[c.class_index].c1;
            const std::int64_t d_s = sw_dimension(c.x, k);
            if (c.z.delta1 > d_s) {
                p.skip();
                continue;
            }
            const auto ns = normal_indices(c.x, c.t, k);
            const std::int64_t dp = c.z.delta2 + c.z.delta1 + 2 * c.z.delta0;
            const auto d = static_cast<std::uint64_t>((d_s - c.z.delta1) / 2);
            const Rational a = link_constant(c.x, c.t, k, c.z, c.delta_c, PairingMethod::Direct);
            const Rational b = link_constant_direct(ns.ns2, ns.ns1, dp, d);
            p.expect(a == b, [&] { return describe_case(c); });
        }
    }));
    return out;
}

// structure --------------------------------------------------------------------------------

SuiteResult structure_suite(std::int64_t count, std::uint64_t seed) {
    SuiteResult out{"structure", count, {}};
    std::mt19937_64 rng(seed ^ 0x5151);
    std::vector<RandomCase> cases;
    for (std::int64_t i = 0; i < count; ++i) cases.push_back(random_level_zero_case(rng, 2));

    out.properties.push_back(run_prop("index_identity", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto dr = dimension_report(c.x, c.t);
            p.expect(R(4 * dr.n_a) == make_rational(-dr.d_a, 2) + dr.i_lambda, [&] { return describe_case(c); });
        }
    }));
    out.properties.push_back(run_prop("level_identity", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto dr = dimension_report(c.x, c.t);
            for (const auto& s : c.x.basic_classes) {
                const auto lv = level(c.t, s.c1, c.x.lattice);
                if (!lv) {
                    p.skip();
                    continue;
                }
                p.expect(R(8 * *lv) == R(dr.d_a) - 2 * r_value(c.x, c.t.lambda, s.c1),
                         [&] { return describe_case(c); });
            }
        }
    }));
    out.properties.push_back(run_prop("wu_congruence", [&](Prop& p) {
        for (const auto& c : cases)
            for (const auto& s : c.x.basic_classes) {
                const std::int64_t diff = c.x.lattice.square(s.c1) - c.x.sigma();
                p.expect(diff % 8 == 0, [&] { return describe_case(c); });
            }
    }));
    out.properties.push_back(run_prop("jacobi_b_integral", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto dr = dimension_report(c.x, c.t);
            const std::int64_t d_s = sw_dimension(c.x, c.x.basic_classes[c.class_index].c1);
            const Rational b = make_rational(c.z.degree() - dr.d_a - d_s, 2) -
                               make_rational(c.x.chi_plus_sigma(), 4);
            p.expect(is_integer(b), [&] { return describe_case(c) + ", b=" + S(b); });
        }
    }));
    out.properties.push_back(run_prop("orientation_decomposition", [&](Prop& p) {
        for (const auto& c : cases)
            for (const auto& s : c.x.basic_classes)
                p.expect(orientation_sign(c.t, s.c1, c.x.lattice) == orientation_sign_decomposed(c.x, c.t, s.c1),
                         [&] { return describe_case(c); });
    }));
    out.properties.push_back(run_prop("normal_index_at_level_zero", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto dr = dimension_report(c.x, c.t);
            const auto ns = normal_indices(c.x, c.t, c.x.basic_classes[c.class_index].c1);
            p.expect(R(ns.ns1) == make_rational(dr.d_a, 2) + make_rational(c.x.chi_plus_sigma(), 4),
                     [&] { return describe_case(c); });
        }
    }));
    out.properties.push_back(run_prop("dimension_drop_by_level", [&](Prop& p) {
        for (const auto& c : cases) {
            const auto dr = dimension_report(c.x, c.t);
            for (std::int64_t l = 1; l <= 2; ++l) {
                SpinUData t = c.t;
                t.p1 += 4 * l;
                const auto dl = dimension_report(c.x, t);
                p.expect(dl.d_a + 2 * dl.n_a == dr.d_a + 2 * dr.n_a - 6 * l, [&] { return describe_case(c); });
            }
        }
    }));
    return out;
}

// blowup -----------------------------------------------------------------------------------

/// en_like(n) with Lambda = (1, -(n+5)) on the hyperbolic block and p1 = Lambda^2, so that
/// both basic classes sit at level 0 and d_a + 2 n_a - 2 = 8.
SpinUData blowup_spin_u(const ManifoldData& x, std::int64_t n) {
    std::vector<Coord> lam(x.lattice.rank(), 0);
    lam[0] = 1;
    lam[1] = -(n + 5);
    SpinUData t;
    t.lambda = CohClass(lam);
    t.p1 = x.lattice.square(t.lambda);
    std::vector<Coord> w = lam;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += x.w2.bits[i];
    t.w = CohClass(w);
    return t;
}

/// Monomials with delta1 = 0, no H_3 factor and deg z <= budget, budget - deg z even.
std::vector<MonomialZ> monomials_up_to(std::int64_t budget) {
    std::vector<MonomialZ> out;
    for (std::int64_t d0 = 0; 4 * d0 <= budget; ++d0)
        for (std::int64_t d2 = 0; 4 * d0 + 2 * d2 <= budget; ++d2) {
            MonomialZ z;
            z.delta0 = d0;
            z.delta2 = d2;
            if ((budget - z.degree()) % 2 == 0) out.push_back(z);
        }
    return out;
}

SuiteResult blowup_suite(std::int64_t n_max, std::uint64_t seed) {
    SuiteResult out{"blowup", n_max, {}};
    std::mt19937_64 rng(seed ^ 0xb10b);

    out.properties.push_back(run_prop("sw_dimension_preserved", [&](Prop& p) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto x = gen_fixture(FixtureKind::EnLike, n);
            const auto bu = blowup_transform(x, blowup_spin_u(x, n));
            for (const auto& m : bu.class_map) {
                const std::int64_t ds = sw_dimension(x, x.basic_classes[m.source].c1);
                for (std::size_t j : {m.plus, m.minus})
                    p.expect(sw_dimension(bu.manifold, bu.manifold.basic_classes[j].c1) == ds,
                             [&] { return fmt({{"n", S(n)}, {"class", S(static_cast<std::int64_t>(m.source))}}); });
            }
        }
    }));

    std::vector<RandomCase> randoms;
    for (int i = 0; i < 40; ++i) randoms.push_back(random_level_zero_case(rng));

    out.properties.push_back(run_prop("constant_invariance", [&](Prop& p) {
        auto compare = [&](const ManifoldData& x, const SpinUData& t, std::size_t ci, const MonomialZ& z,
                           std::int64_t delta_c, std::int64_t k, const std::string& where) {
            const std::int64_t d_s = sw_dimension(x, x.basic_classes[ci].c1);
            if (z.delta1 > d_s) {
                p.skip();
                return;
            }
            const auto bu = blowup_transform(x, t);
            const auto dr = dimension_report(x, t);
            const auto drb = dimension_report(bu.manifold, bu.spin_u);
            MonomialZ shifted = z;  // deg z + 2k on X
            shifted.delta2 += k;
            MonomialZ ze = z;  // e^{k+1} z on the blow-up
            ze.delta2 += k + 1;
            const Rational cx = jacobi_constant(shifted.degree(), delta_c, dr.d_a, d_s, z.delta1,
                                                x.chi_plus_sigma());
            const Rational cx_direct = link_constant(x, t, x.basic_classes[ci].c1, shifted, delta_c,
                                                     PairingMethod::Direct);
            for (std::size_t j : {bu.class_map[ci].plus, bu.class_map[ci].minus}) {
                const auto& kb = bu.manifold.basic_classes[j].c1;
                const Rational cb = jacobi_constant(ze.degree(), delta_c, drb.d_a, sw_dimension(bu.manifold, kb),
                                                    z.delta1, bu.manifold.chi_plus_sigma());
                const Rational cb_direct =
                    link_constant(bu.manifold, bu.spin_u, kb, ze, delta_c, PairingMethod::Direct);
                p.expect(cb == cx && cb_direct == cx_direct && cb == cb_direct,
                         [&] { return where + ", k=" + S(k) + ", X=" + S(cx) + ", blow-up=" + S(cb); });
            }
        };
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto x = gen_fixture(FixtureKind::EnLike, n);
            const auto t = blowup_spin_u(x, n);
            for (std::int64_t k = 0; k <= 3; ++k)
                for (const auto& z : monomials_up_to(8 - 2 * k))
                    for (std::size_t ci = 0; ci < x.basic_classes.size(); ++ci)
                        compare(x, t, ci, z, (8 - 2 * k - z.degree()) / 2, k, "en_like(" + S(n) + ")");
        }
        for (const auto& c : randoms)
            for (std::int64_t k = 0; k <= c.z.delta2; ++k) {
                MonomialZ z = c.z;
                z.delta2 -= k;
                compare(c.x, c.t, c.class_index, z, c.delta_c, k, describe_case(c));
            }
    }));

    out.properties.push_back(run_prop("blowup_pairing_formula", [&](Prop& p) {
        auto one = [&](const ManifoldData& x, const SpinUData& t, std::size_t ci, const MonomialZ& z,
                       std::int64_t delta_c, std::int64_t k, const RationalVector& h, const std::string& where) {
            try {
                const Rational pair = blowup_pairing_pair(x, t, ci, z, delta_c, k, h, PairingMethod::Both);
                p.expect(k % 2 == 0 || pair == 0, [&] { return where + ", k=" + S(k) + ", odd k gave " + S(pair); });
            } catch (const OracleMismatch& e) {
                p.fail(where + ", k=" + S(k) + ": " + e.what());
            }
        };
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto x = gen_fixture(FixtureKind::EnLike, n);
            const auto t = blowup_spin_u(x, n);
            const auto h = random_rational_vector(rng, x.lattice.rank(), 4, 3);
            for (std::int64_t k = 0; k <= 3; ++k)
                for (const auto& z : monomials_up_to(8 - 2 * k))
                    for (std::size_t ci = 0; ci < x.basic_classes.size(); ++ci)
                        one(x, t, ci, z, (8 - 2 * k - z.degree()) / 2, k, h, "en_like(" + S(n) + ")");
        }
        for (const auto& c : randoms)
            for (std::int64_t k = 0; k <= c.z.delta2; ++k) {
                MonomialZ z = c.z;
                z.delta2 -= k;
                one(c.x, c.t, c.class_index, z, c.delta_c, k, c.h, describe_case(c));
            }
    }));

    out.properties.push_back(run_prop("theorem_route_vs_blowup_cobordism", [&](Prop& p) {
        for (std::int64_t n = 2; n <= n_max; ++n) {
            const auto x = gen_fixture(FixtureKind::EnLike, n);
            const Request req = fixture_request(x);
            const SpinUData t{req.lambda, 0, req.w};
            const auto rv = r_values(x, t);
            const std::int64_t r = to_int64(*rv.r_min, "r");
            for (std::int64_t d0 = 0; 2 * d0 <= r; ++d0) {
                MonomialZ z;
                z.delta0 = d0;
                z.delta2 = r - 2 * d0;
                for (int trial = 0; trial < 20; ++trial) {
                    const auto h = random_rational_vector(rng, x.lattice.rank(), 5, 4);
                    const auto res = donaldson_invariant(x, t, z, h, std::nullopt);
                    if (res.label != CaseLabel::AtR || !res.value) {
                        p.fail("en_like(" + S(n) + "): expected AT_R, got " + std::string(to_string(res.label)));
                        continue;
                    }
                    const Rational via = donaldson_via_blowup(x, t, z, h, PairingMethod::Both);
                    p.expect(via == *res.value, [&] {
                        return "en_like(" + S(n) + "), delta0=" + S(d0) + ", theorem=" + S(*res.value) +
                               ", blow-up route=" + S(via);
                    });
                }
            }
        }
    }));
    return out;
}

// witten -----------------------------------------------------------------------------------

SuiteResult witten_suite(std::optional<std::int64_t> cap) {
    SuiteResult out{"witten", cap.value_or(-1), {}};
    auto run = [&](const std::string& name, const ManifoldData& x, bool expect_ok) {
        out.properties.push_back(run_prop(name, [&](Prop& p) {
            const Request req = fixture_request(x);
            const SpinUData t{req.lambda, 0, req.w};
            const std::int64_t c = to_int64(c_invariant(x), "c(X)");
            const auto use = static_cast<std::uint32_t>(std::max<std::int64_t>(cap.value_or(c - 1), c - 1));
            const WittenReport w = witten_compare(x, t, use);
            p.expect(w.congruence_ok == expect_ok, [&] {
                return fmt({{"sw_vanishes", w.sw_vanishes ? "true" : "false"},
                            {"d_vanishes", w.d_vanishes ? "true" : "false"},
                            {"congruence", w.congruence ? "true" : "false"},
                            {"relations_hold", w.relations_hold ? "true" : "false"}});
            });
        }));
    };
    run("congruence_en_like_3", gen_fixture(FixtureKind::EnLike, 3), true);
    run("congruence_k3_like", gen_fixture(FixtureKind::K3Like), true);
    run("congruence_empty", gen_fixture(FixtureKind::Empty), true);
    run("asymmetric_fixture_is_flagged", gen_fixture(FixtureKind::Asymmetric), false);
    return out;
}

// walls ------------------------------------------------------------------------------------

SuiteResult walls_suite(std::int64_t bound) {
    SuiteResult out{"walls", bound, {}};
    const IntegralLattice l(hyperbolic_gram(), 1, 1);
    struct Setup {
        CohClass w;
        CohClass lambda;
        std::int64_t p1;
    };
    std::vector<Setup> setups;
    for (const auto& w : {CohClass({1, 0}), CohClass({0, 1}), CohClass({1, 1})})
        for (std::int64_t p1 = -12; p1 <= 0; ++p1) setups.push_back({w, w, p1});
    const std::int64_t level_max = 3;

    out.properties.push_back(run_prop("enumeration_vs_brute_force", [&](Prop& p) {
        for (const auto& s : setups) {
            const auto got = enumerate_walls(l, s.w, s.p1, level_max, bound);
            std::vector<WallClass> want;
            for (Coord a = -bound; a <= bound; ++a)
                for (Coord b = -bound; b <= bound; ++b) {
                    const CohClass alpha({a, b});
                    if (alpha.is_zero() || !congruent_mod2(alpha, s.w)) continue;
                    const std::int64_t diff = l.square(alpha) - s.p1;
                    if (diff < 0 || diff % 4 != 0 || diff / 4 > level_max) continue;
                    want.push_back({alpha, diff / 4});
                }
            p.expect(got == want, [&] {
                return fmt({{"w", "(" + S(s.w.coords[0]) + "," + S(s.w.coords[1]) + ")"}, {"p1", S(s.p1)},
                            {"enumerated", S(static_cast<std::int64_t>(got.size()))},
                            {"brute_force", S(static_cast<std::int64_t>(want.size()))}});
            });
        }
    }));
    out.properties.push_back(run_prop("correspondence_bijective", [&](Prop& p) {
        for (const auto& s : setups) {
            const auto walls = enumerate_walls(l, s.w, s.p1, level_max, bound);
            const SpinUData t{s.lambda, s.p1, s.w};
            const auto images = wall_correspondence(l, t, walls);
            std::set<CohClass> seen;
            bool ok = images.size() == walls.size();
            for (std::size_t i = 0; ok && i < images.size(); ++i) {
                ok = l.is_characteristic(images[i].c1_s) && images[i].alpha == walls[i].alpha &&
                     wall_from_class(t, images[i].c1_s) == walls[i].alpha &&
                     l.square(s.lambda - images[i].c1_s) == s.p1 + 4 * walls[i].level &&
                     seen.insert(images[i].c1_s).second;
            }
            p.expect(ok, [&] { return fmt({{"p1", S(s.p1)}}); });
        }
    }));
    return out;
}

std::int64_t bound_or(const CheckOptions& o, std::int64_t def, std::int64_t min) {
    const std::int64_t b = o.grid_bound.value_or(def);
    if (b < min) throw InputError("grid bound must be at least " + std::to_string(min), "grid_bound");
    return b;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"identities", "segre", "pairing", "blowup", "witten", "structure", "walls"};
}

std::string suite_grid_help() {
    return "identities: |a|, |b|, |ns| <= N (default 6; hypergeometric grid N-1)\n"
           "segre: |ns1|, |ns2| <= N (default 6)\n"
           "pairing: N random level-0 cases (default 200)\n"
           "blowup: en_like(n) for 2 <= n <= N (default 4)\n"
           "witten: truncation degree, raised to c(X)-1 if smaller (default c(X)-1)\n"
           "structure: N random cases (default 500)\n"
           "walls: coefficient bound N on the hyperbolic plane (default 6)\n";
}

SuiteResult run_suite(const std::string& name, const CheckOptions& opts) {
    if (name == "identities") return identities_suite(bound_or(opts, 6, 0));
    if (name == "segre") return segre_suite(bound_or(opts, 6, 0), opts.literal_segre);
    if (name == "pairing") return pairing_suite(bound_or(opts, 200, 1), opts.seed);
    if (name == "blowup") return blowup_suite(bound_or(opts, 4, 2), opts.seed);
    if (name == "witten") return witten_suite(opts.grid_bound);
    if (name == "structure") return structure_suite(bound_or(opts, 500, 1), opts.seed);
    if (name == "walls") return walls_suite(bound_or(opts, 6, 0));
    throw InputError("unknown suite \"" + name + "\"", "suite");
}

}  // namespace monopole
