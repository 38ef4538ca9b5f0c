import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from parafock.scalars import RadicalScalar, pochhammer, sqrt_rational, squarefree_split


def rad(*terms):
    return RadicalScalar.from_terms(terms)


rationals = st.fractions(
    min_value=Fraction(-10**6), max_value=Fraction(10**6), max_denominator=10**6
)
radicands = st.integers(min_value=1, max_value=10**4)


@st.composite
def radical_values(draw, max_terms=3):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    return rad(*[(draw(rationals), draw(radicands)) for _ in range(n)])


class TestSquarefreeSplit:
    def test_basic(self):
        assert squarefree_split(1) == (1, 1)
        assert squarefree_split(4) == (2, 1)
        assert squarefree_split(60) == (2, 15)
        assert squarefree_split(97) == (1, 97)

    @given(st.integers(min_value=1, max_value=10**6))
    def test_reconstructs(self, n):
        s, r = squarefree_split(n)
        assert s * s * r == n
        # r squarefree: no prime square divides it
        d = 2
        while d * d <= r:
            assert r % (d * d) != 0
            d += 1

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            squarefree_split(0)


class TestAddition:
    def test_additive_inverse(self):
        assert sqrt_rational(2) + (-sqrt_rational(2)) == RadicalScalar(0)

    def test_like_term_merge(self):
        assert (1 + sqrt_rational(2)) + sqrt_rational(2) == rad((1, 1), (2, 2))

    def test_mixed_terms(self):
        # (1/2)sqrt3 + (1/4 sqrt3 + sqrt5) = 3/4 sqrt3 + sqrt5
        lhs = rad((Fraction(1, 2), 3)) + rad((Fraction(1, 4), 3), (1, 5))
        expected = rad((Fraction(3, 4), 3), (1, 5))
        assert lhs == expected
        assert math.isclose(lhs.to_float(), 0.75 * math.sqrt(3) + math.sqrt(5))


class TestMultiplication:
    def test_square(self):
        assert sqrt_rational(2) * sqrt_rational(2) == RadicalScalar(2)

    def test_gcd_reduction(self):
        # sqrt6 * sqrt10 = 2 sqrt15
        prod = sqrt_rational(6) * sqrt_rational(10)
        assert prod == rad((2, 15))
        assert math.isclose(prod.to_float(), math.sqrt(60))

    def test_conjugate_product(self):
        s = sqrt_rational(2)
        assert (1 + s) * (1 - s) == RadicalScalar(-1)


class TestSqrtRational:
    def test_perfect_square(self):
        assert sqrt_rational(4) == RadicalScalar(2)

    def test_half(self):
        assert sqrt_rational(Fraction(1, 2)) == rad((Fraction(1, 2), 2))

    def test_twelve_fifths(self):
        got = sqrt_rational(Fraction(12, 5))
        assert got == rad((Fraction(2, 5), 15))
        assert math.isclose(got.to_float(), math.sqrt(12 / 5))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            sqrt_rational(Fraction(-1, 3))

    @given(
        st.integers(min_value=0, max_value=10**4),
        st.integers(min_value=1, max_value=10**4),
    )
    def test_square_roundtrip(self, a, b):
        q = Fraction(a, b)
        r = sqrt_rational(q)
        assert (r * r).as_fraction() == q


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Fraction(7, 3), 0) == 1

    def test_integers(self):
        assert pochhammer(3, 2) == 12

    def test_half(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)

    @given(
        st.fractions(min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12),
        st.integers(min_value=0, max_value=8),
        st.integers(min_value=0, max_value=8),
    )
    def test_splitting(self, a, j, k):
        assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


class TestRingAxioms:
    @given(radical_values(), radical_values())
    @settings(max_examples=60)
    def test_commutativity(self, x, y):
        assert x + y == y + x
        assert x * y == y * x

    @given(radical_values(max_terms=2), radical_values(max_terms=2), radical_values(max_terms=2))
    @settings(max_examples=40, deadline=None)
    def test_associativity_distributivity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(radical_values())
    def test_canonical_idempotence(self, x):
        # re-normalizing the canonical terms changes nothing
        assert RadicalScalar.from_terms(x.terms) == x

    @given(radical_values())
    def test_additive_identity_inverse(self, x):
        assert x + RadicalScalar(0) == x
        assert x - x == RadicalScalar(0)


class TestConversionAndRendering:
    def test_zero(self):
        assert RadicalScalar(0).to_float() == 0.0
        assert str(RadicalScalar(0)) == "0"

    def test_sqrt2_float(self):
        assert abs(sqrt_rational(2).to_float() - 1.4142135623730951) < 1e-12

    def test_non_squarefree_input_canonicalized(self):
        x = RadicalScalar(2) + sqrt_rational(9)
        assert x == RadicalScalar(5)
        assert x.to_float() == 5.0

    def test_rendering(self):
        assert str(rad((Fraction(3, 4), 5), (2, 1))) == "2 + 3/4*sqrt(5)"
        assert str(rad((-1, 2))) == "-sqrt(2)"
        assert str(rad((1, 2), (Fraction(-1, 3), 3))) == "sqrt(2) - 1/3*sqrt(3)"

    def test_equality_structural(self):
        assert rad((1, 2)) != rad((1, 3))
        assert rad((1, 8)) == rad((2, 2))  # canonicalization at construction

    def test_hashable(self):
        assert len({rad((1, 2)), rad((1, 2)), rad((2, 2))}) == 2


class TestDivision:
    def test_by_rational(self):
        assert sqrt_rational(2) / 2 == sqrt_rational(Fraction(1, 2))

    def test_by_single_radical(self):
        x = rad((1, 6))
        assert x / sqrt_rational(2) == sqrt_rational(3)
        assert (1 / sqrt_rational(4)) == RadicalScalar(Fraction(1, 2))

    def test_multi_term_divisor_rejected(self):
        with pytest.raises(ValueError):
            sqrt_rational(2) / (1 + sqrt_rational(2))
