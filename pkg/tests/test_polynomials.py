import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ccarb.polynomials import (
    EvalGrid,
    IntPoly,
    ModPoly,
    crt_combine,
    interpolate,
    render_poly,
)

from support import poly_add, poly_mul


@st.composite
def mod_polys(draw, p=101, nvars=None, max_degree=3):
    k = draw(st.integers(0, 3)) if nvars is None else nvars
    n_terms = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(draw(st.integers(0, max_degree)) for _ in range(k))
        terms[exps] = draw(st.integers(0, p - 1))
    return ModPoly(p, terms)


class TestEvaluate:
    def test_linear(self):
        poly = ModPoly(7, {(1,): 1, (0,): 2})
        assert poly.evaluate((3,)) == 5

    def test_zero_poly(self):
        assert ModPoly(7, {}).evaluate((4,)) == 0

    def test_product_monomial(self):
        poly = ModPoly(5, {(1, 1): 1})
        assert poly.evaluate((2, 3)) == 1

    @given(mod_polys(nvars=2), mod_polys(nvars=2), st.tuples(st.integers(0, 100), st.integers(0, 100)))
    def test_ring_homomorphism(self, a, b, point):
        p = 101
        total = ModPoly(p, poly_add(a.terms, b.terms))
        assert total.evaluate(point) == (a.evaluate(point) + b.evaluate(point)) % p
        product = ModPoly(p, poly_mul(a.terms, b.terms))
        assert product.evaluate(point) == a.evaluate(point) * b.evaluate(point) % p


class TestInterpolate:
    def test_line_through_two_points(self):
        grid = EvalGrid(((0, 1),))
        poly = interpolate({(0,): 1, (1,): 2}, grid, 101)
        assert poly.terms == {(1,): 1, (0,): 1}

    def test_constant(self):
        grid = EvalGrid(((0, 1, 2), (0, 1)))
        values = {key: 9 for key in [(i, j) for i in range(3) for j in range(2)]}
        poly = interpolate(values, grid, 101)
        assert poly.terms == {(0, 0): 9}

    def test_two_variable_round_trip(self):
        p = 101
        target = ModPoly(p, {(1, 1): 1, (0, 0): 3})
        grid = EvalGrid(((0, 1), (0, 1)))
        values = {
            (i, j): target.evaluate((grid.points[0][i], grid.points[1][j]))
            for i in range(2)
            for j in range(2)
        }
        assert interpolate(values, grid, p) == target

    def test_shape_mismatch(self):
        grid = EvalGrid(((0, 1),))
        with pytest.raises(ValueError, match="grid shape mismatch"):
            interpolate({(0,): 1}, grid, 101)

    def test_points_must_be_distinct(self):
        grid = EvalGrid(((0, 101),))
        with pytest.raises(ValueError, match="distinct"):
            interpolate({(0,): 1, (1,): 2}, grid, 101)

    @given(mod_polys(max_degree=3))
    def test_round_trip_random(self, poly):
        p = poly.modulus
        nvars = len(next(iter(poly.terms))) if poly.terms else 2
        size = 4
        grid = EvalGrid(tuple(tuple(range(size)) for _ in range(nvars)))
        import itertools

        values = {
            idx: poly.evaluate(idx) if poly.terms else 0
            for idx in itertools.product(range(size), repeat=nvars)
        }
        recovered = interpolate(values, grid, p)
        if poly.terms:
            assert recovered == poly
        else:
            assert recovered.terms == {}


class TestCrt:
    def test_pair(self):
        combined = crt_combine([ModPoly(3, {(0,): 2}), ModPoly(5, {(0,): 3})])
        assert combined.terms == {(0,): 8}

    def test_zero_everywhere_absent(self):
        combined = crt_combine([ModPoly(3, {}), ModPoly(5, {})])
        assert combined.terms == {}

    def test_round_trip(self):
        rng = random.Random(7)
        primes = (10007, 10009, 10037)
        for _ in range(25):
            terms = {
                (rng.randint(0, 4), rng.randint(0, 4)): rng.randint(1, 10**6 - 1)
                for _ in range(rng.randint(0, 6))
            }
            original = IntPoly(terms)
            residues = [ModPoly(p, dict(original.terms)) for p in primes]
            assert crt_combine(residues) == original

    def test_duplicate_moduli_rejected(self):
        with pytest.raises(ValueError, match="duplicate moduli"):
            crt_combine([ModPoly(7, {}), ModPoly(7, {})])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            crt_combine([])


class TestIntPoly:
    def test_coeff_present(self):
        poly = IntPoly({(1,): 3, (0,): 5})
        assert poly.coeff((1,)) == 3

    def test_coeff_absent(self):
        assert IntPoly({(1,): 3}).coeff((7,)) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            IntPoly({(0,): -1})


class TestRender:
    def test_linear(self):
        assert render_poly(IntPoly({(1,): 3, (0,): 5})) == "5 + 3 * x1^1"

    def test_zero(self):
        assert render_poly(IntPoly({})) == "0"

    def test_multivariate_order(self):
        poly = IntPoly({(2, 0): 1, (0, 1): 4})
        assert render_poly(poly) == "4 * x2^1 + 1 * x1^2"

    def test_constant_only(self):
        assert render_poly(IntPoly({(0, 0): 7})) == "7"
