from fractions import Fraction

import pytest
import sympy

import monopole_ledger as ml


def dot(gram, u, v):
    return sum(Fraction(u[i]) * gram[i][j] * Fraction(v[j]) for i in range(len(u)) for j in range(len(v)))


def test_fixture_compute_matches_hand_formula():
    manifest, request = ml.fixture("en_like", 3)
    report, code = ml.compute(manifest, request)
    assert code == 0
    assert report["donaldson"]["case"] == "AT_R"
    assert report["derived"]["c_x"] == "3/1"

    g = manifest["gram"]
    lam, w = request["lambda"], request["w"]
    h = [Fraction(x) for x in request["h_pd"]]
    chi, sigma = 36, -24
    w2 = dot(g, w, w)
    # d = 0, delta = r = 1, i = 5: prefactor 2^{1 - (5-1)/4 - 1}
    total = Fraction(0)
    for cls in manifest["basic_classes"]:
        k = cls["c1"]
        e = (w2 + dot(g, k, [a - b for a, b in zip(w, lam)])) / 2
        kl = [a - b for a, b in zip(k, lam)]
        total += (-1) ** int(e) * cls["sw"] * dot(g, kl, h)
    expected = Fraction(1, 2) * (-1) ** int((sigma - w2) / 2 + 1) * total
    assert ml.to_fraction(report["donaldson"]["value"]) == expected
    assert report["witten"]["congruence_ok"] is True


def test_reports_are_deterministic():
    manifest, request = ml.fixture("k3_like")
    a, _ = ml.compute(manifest, request)
    b, _ = ml.compute(manifest, request)
    assert a == b


def test_check_suites_and_literal_segre():
    report, code = ml.check("segre")
    assert code == 0
    _, code = ml.check("segre", literal_segre=True)
    assert code == 3
    assert "identities" in ml.suite_names()


@pytest.mark.parametrize("ns1", range(-3, 4))
@pytest.mark.parametrize("ns2", range(-3, 4))
def test_link_constant_against_series(ns1, ns2):
    mu = sympy.symbols("mu")
    for dp in range(0, 4):
        expr = (1 + 2 * mu) ** (dp - ns1) * (1 + mu) ** (-ns2)
        coeffs = sympy.Poly(sympy.series(expr, mu, 0, 5).removeO(), mu).all_coeffs()[::-1]
        coeffs += [0] * (5 - len(coeffs))
        for d in range(0, 5):
            assert ml.link_constant(ns2, ns1, dp, d) == Fraction(str(coeffs[d]))


def test_segre_against_series():
    mu = sympy.symbols("mu")
    for ns1, ns2 in [(0, 1), (2, -3), (-4, 1), (3, 3)]:
        expr = (1 + 2 * mu) ** (-ns1) * (1 + mu) ** (-ns2)
        coeffs = sympy.Poly(sympy.series(expr, mu, 0, 7).removeO() + mu ** 7, mu).all_coeffs()[::-1]
        assert ml.segre_classes(ns1, ns2, 6) == [Fraction(str(c)) for c in coeffs[:7]]


def test_jacobi_against_sympy():
    x = sympy.symbols("x")
    for a in range(0, 4):
        for b in range(0, 4):
            for n in range(0, 5):
                for xi in (Fraction(0), Fraction(1, 2), Fraction(-3, 2)):
                    ref = sympy.jacobi(n, a, b, x).subs(x, sympy.Rational(xi.numerator, xi.denominator))
                    assert ml.jacobi(a, b, n, xi) == Fraction(str(sympy.expand(ref)))


def test_walls_report():
    manifest = {"name": "hyperbolic", "b1": 0, "b2_plus": 1, "b2_minus": 1, "gram": [[0, 1], [1, 0]],
                "w2": [0, 0], "basic_classes": [], "simple_type": True, "effective": True}
    report, code = ml.walls(manifest, [1, 1], -2, 1, 2, omega=["2", "1"])
    assert code == 0
    rows = {tuple(row["alpha"]): row for row in report["walls"]}
    assert set(rows) == {(-1, -1), (-1, 1), (1, -1), (1, 1)}
    assert rows[(1, -1)]["level"] == 0 and rows[(1, 1)]["level"] == 1
    # omega = (2, 1): Q(omega, alpha) = 2 alpha_2 + alpha_1
    for alpha, row in rows.items():
        q = 2 * alpha[1] + alpha[0]
        assert row["chamber_sign"] == (q > 0) - (q < 0)
        assert row["c1_s"] == [1 - alpha[0], 1 - alpha[1]]


def test_errors_carry_exit_code_and_path():
    manifest, request = ml.fixture("en_like", 3)
    manifest["basic_classes"][0]["c1"][2] = 2
    with pytest.raises(ml.MonopoleError) as info:
        ml.compute(manifest, request)
    message, code, path = info.value.args
    assert code == 1
    assert path == "basic_classes[0].c1"


def test_period_point_gate():
    manifest = {"name": "hyperbolic", "b1": 0, "b2_plus": 1, "b2_minus": 1, "gram": [[0, 1], [1, 0]],
                "w2": [0, 0], "basic_classes": [], "simple_type": True, "effective": True}
    request = {"w": [1, 0], "lambda": [1, 0], "p1": 0, "z": {"delta0": 0, "delta1": 0, "delta2": 0},
               "h_pd": ["1", "1"], "truncation": 0, "method": "both"}
    with pytest.raises(ml.MonopoleError) as info:
        ml.compute(manifest, request)
    assert info.value.args[1] == 2
