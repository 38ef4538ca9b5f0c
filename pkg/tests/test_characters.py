from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from parafock.characters import (
    base_series,
    character_series,
    check_partition,
    conjugate,
    enumerate_gz_general,
    hook_ok,
    hook_partitions,
    hw_from_partition,
    hw_valid,
    king_identity_check,
    partitions_of,
    pbw_multiplicities,
    principal_specialization,
    schur,
    skew_schur,
    super_schur,
    super_schur_skew_sum,
    super_schur_tableaux,
)


@st.composite
def partitions(draw, max_total=8):
    total = draw(st.integers(min_value=0, max_value=max_total))
    choices = list(partitions_of(total))
    return choices[draw(st.integers(min_value=0, max_value=len(choices) - 1))]


class TestPartitions:
    def test_conjugate_examples(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()
        assert conjugate((2, 2)) == (2, 2)

    @given(partitions())
    def test_conjugate_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)

    def test_check_partition_rejects(self):
        with pytest.raises(ValueError):
            check_partition((1, 2))

    def test_hook_condition(self):
        assert hook_ok((5,), 1, 1)
        assert not hook_ok((2, 2), 1, 1)
        assert hook_ok((3, 1, 1), 1, 1)
        assert hook_ok((4, 2, 2, 1), 2, 2)
        assert not hook_ok((3, 3, 3), 2, 2)

    def test_partitions_of(self):
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


class TestSchur:
    def test_single_row(self):
        # s_(2) in two variables: x^2 + xy + y^2
        assert schur((2,), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}

    def test_column_vanishes_beyond_vars(self):
        assert schur((1, 1, 1), 2) == {}

    def test_skew(self):
        # (2,1)/(1): two cells, disconnected row/column
        got = skew_schur((2, 1), (1,), 2)
        assert sum(got.values()) == 4  # free choice in each cell minus none

    @given(partitions(max_total=6))
    @settings(max_examples=30, deadline=None)
    def test_schur_symmetric(self, lam):
        poly = schur(lam, 2)
        assert all(poly.get((b, a), 0) == c for (a, b), c in poly.items())


class TestSuperSchur:
    def test_single_box(self):
        assert super_schur((1,), 1, 1) == {(1, 0): 1, (0, 1): 1}

    def test_column_pair(self):
        assert super_schur((1, 1), 1, 1) == {(1, 1): 1, (0, 2): 1}

    def test_row_pair_dimension(self):
        poly = super_schur((2,), 1, 1)
        assert poly == {(2, 0): 1, (1, 1): 1}
        assert principal_specialization(poly) == 2

    def test_non_hook_vanishes(self):
        assert super_schur((2, 2), 1, 1) == {}

    @pytest.mark.parametrize("mn", [(1, 1), (2, 1), (2, 2)])
    def test_routes_agree(self, mn):
        m, n = mn
        for lam in hook_partitions(6, m, n):
            assert super_schur_tableaux(lam, m, n) == super_schur_skew_sum(lam, m, n)

    def test_duality(self):
        # s_lam(x|y) = s_lam'(y|x) after swapping variable blocks
        for lam in hook_partitions(4, 2, 2):
            direct = super_schur(lam, 2, 2)
            swapped = {
                (e[2], e[3], e[0], e[1]): c
                for e, c in super_schur(conjugate(lam), 2, 2).items()
            }
            assert direct == swapped


class TestHighestWeights:
    def test_examples(self):
        assert hw_from_partition((3, 1), 1, 1) == (3, 1)
        assert hw_from_partition((1,), 1, 1) == (1, 0)
        assert hw_from_partition((2, 2, 1), 2, 2) == (2, 2, 1, 0)

    def test_hook_violation_rejected(self):
        with pytest.raises(ValueError):
            hw_from_partition((2, 2), 1, 1)

    def test_validity(self):
        assert hw_valid((2, 1, 1, 0), 2, 2)
        assert not hw_valid((1, 2, 0, 0), 2, 2)  # fermionic block not decreasing
        assert not hw_valid((1, 0, 2, 1), 2, 2)  # hook count fails


class TestGeneralPatterns:
    def test_trivial_module(self):
        assert enumerate_gz_general((0, 0), 1, 1) == [((0, 0), (0,))]

    def test_single_box_module(self):
        assert len(enumerate_gz_general((1, 0), 1, 1)) == 2

    def test_invalid_hw_rejected(self):
        with pytest.raises(ValueError):
            enumerate_gz_general((0, 1), 1, 1)

    def test_m1n1_matches_specialized_enumeration(self):
        from parafock import gz

        for top in [(0, 0), (1, 0), (2, 1), (3, 4)]:
            general = sorted(
                gz.GZPattern(rows[0][0], rows[0][1], rows[1][0])
                for rows in enumerate_gz_general(top, 1, 1)
            )
            specialized = sorted(
                pat
                for pat in gz.enumerate_patterns(sum(top))
                if (pat.m12, pat.m22) == top
            )
            assert general == specialized

    @pytest.mark.parametrize("mn", [(1, 1), (2, 1), (2, 2)])
    def test_counts_match_dimensions(self, mn):
        m, n = mn
        for lam in hook_partitions(5, m, n):
            hw = hw_from_partition(lam, m, n)
            assert len(enumerate_gz_general(hw, m, n)) == principal_specialization(
                super_schur(lam, m, n)
            )


class TestSeries:
    def test_degree_zero(self):
        s = character_series(1, 1, 2, 0)
        assert s.mult == {(0, 0): 1}

    def test_m1n1_through_level2(self):
        s = character_series(1, 1, Fraction(5, 2), 2)
        assert s.mult == {
            (0, 0): 1,
            (1, 0): 1,
            (0, 1): 1,
            (2, 0): 1,
            (1, 1): 2,
            (0, 2): 1,
        }
        assert s.prefactor() == "x1^(-5/4) y1^(5/4)"

    def test_prefactor_integer_order(self):
        assert character_series(1, 1, 1, 0).prefactor() == "x1^(-1/2) y1^(1/2)"

    def test_mixed_offset_multiplicity(self):
        assert base_series(2, 2, 2)[(1, 0, 1, 0)] == 2

    @pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2)])
    def test_series_equals_pbw(self, mn):
        m, n = mn
        assert base_series(m, n, 6) == pbw_multiplicities(m, n, 6)

    def test_pbw_degree_zero(self):
        assert pbw_multiplicities(2, 2, 0) == {(0, 0, 0, 0): 1}

    def test_multiplicities_independent_of_p(self):
        assert character_series(1, 1, 1, 4).mult == character_series(1, 1, 7, 4).mult


class TestKingIdentity:
    @pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2)])
    def test_holds(self, mn):
        report = king_identity_check(*mn, 6)
        assert report["equal"] and report["status"] == "equal"

    def test_degree_zero(self):
        assert king_identity_check(1, 1, 0)["equal"]
