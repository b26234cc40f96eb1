import json
import random

from cornergap.correlation.expansion import Poly, expand_coefficients, pair_polynomial_value


def test_monomial_count():
    assert len(expand_coefficients()) == 120


def test_spot_terms():
    c = expand_coefficients()
    assert c.coefficient(5, 1) == 1
    assert c.coefficient(1, 5) == 1
    assert c.coefficient(3, 1) == -1
    assert c.coefficient(4, 1) == -2
    # the published table is in u = 2v: 3 a b^4 u
    assert c.coefficient(1, 4, 0, 1) == 3


def test_matches_published_table(datadir):
    rows = json.loads((datadir / "pair_polynomial_terms.json").read_text())
    table = {tuple(r[:4]): r[4] for r in rows}
    assert len(table) == 120
    assert dict(expand_coefficients().terms) == table


def test_reevaluates_exactly():
    c = expand_coefficients()
    rng = random.Random(2024)
    for _ in range(200):
        a, b, R, v = (rng.randint(-40, 40) for _ in range(4))
        assert c.evaluate(a, b, R, v) == pair_polynomial_value(a, b, R, v)


def test_swap_symmetry():
    c = expand_coefficients()
    poly = Poly(c.terms)
    assert poly.swap_ab() == poly


def test_degrees_at_most_five():
    c = expand_coefficients()
    assert max(l for l, _ in c.degrees()) == 5
    assert max(m for _, m in c.degrees()) == 5


def test_in_v_rescales():
    c = expand_coefficients()
    in_v = c.in_v()
    assert in_v[(1, 4, 0, 1)] == 6
    a, b, R, v = 3, -2, 5, 7
    total = sum(k * a**m[0] * b**m[1] * R**m[2] * v**m[3] for m, k in in_v.items())
    assert total == pair_polynomial_value(a, b, R, v)
