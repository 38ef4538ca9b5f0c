from fractions import Fraction

import pytest

from parafock.defining import (
    SuperMatrix,
    build_generators,
    build_umn_basis,
    cartan_basis,
    check_umn_relations,
    even_subalgebra_report,
    super_bracket,
    verify_triple_relations,
    weight_consistency_violations,
    with_sign_flip,
)
from parafock.scalars import RadicalScalar, sqrt_rational

SQRT2 = sqrt_rational(2)


def test_generator_entries_m1n1():
    g = build_generators(1, 1)
    c1p, c2p = g.plus
    assert c1p.dim == 5
    assert c1p.entry(1, 3) == SQRT2
    assert c1p.entry(3, 2) == -SQRT2
    assert c1p.nonzero_count() == 2
    assert c2p.entry(3, 5) == SQRT2
    assert c2p.entry(4, 3) == SQRT2
    assert c2p.nonzero_count() == 2
    assert c1p.parity == 0 and c2p.parity == 1


def test_generator_shapes_m2n1():
    g = build_generators(2, 1)
    for mat in g.plus + g.minus:
        assert mat.dim == 7
        assert mat.nonzero_count() == 2


def test_self_bracket_of_even_vanishes():
    g = build_generators(1, 1)
    assert super_bracket(g.plus[0], g.plus[0]).is_zero()


def test_brackets_give_cartan():
    g = build_generators(1, 1)
    h1, h2 = cartan_basis(1, 1)
    assert super_bracket(g.minus[0], g.plus[0]) == h1.scale(Fraction(-2))
    assert super_bracket(g.minus[1], g.plus[1]) == h2.scale(Fraction(2))
    # h1 = e11 - e22, h2 = e44 - e55 in the 5-dimensional realization
    one = RadicalScalar(1)
    assert h1.entry(1, 1) == one and h1.entry(2, 2) == -one
    assert h2.entry(4, 4) == one and h2.entry(5, 5) == -one


def test_dimension_mismatch_rejected():
    a = SuperMatrix.zero(5)
    b = SuperMatrix.zero(7)
    with pytest.raises(ValueError):
        super_bracket(a, b)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_triple_relations_hold(mn):
    assert verify_triple_relations(build_generators(*mn)) == []


def test_triple_relations_mutated_negative_control():
    g = with_sign_flip(build_generators(1, 1))
    violations = verify_triple_relations(g)
    assert violations
    # report format carries the triple and a nonzero-entry count
    j, k, l, xi, eta, eps, nnz = violations[0]
    assert nnz > 0


def test_umn_basis_relations():
    g = build_generators(1, 1)
    e = build_umn_basis(g)
    assert len(e) == 4
    # diagonal element commutes with itself
    assert super_bracket(e[(1, 1)], e[(1, 1)]).is_zero()
    # odd-odd bracket picks up the plus sign
    e12 = SuperMatrix(g.dim, 1, e[(1, 2)].rows)
    e21 = SuperMatrix(g.dim, 1, e[(2, 1)].rows)
    assert super_bracket(e12, e21) == e[(1, 1)] + e[(2, 2)]
    assert check_umn_relations(g) == []


def test_umn_relations_m2n1():
    assert check_umn_relations(build_generators(2, 1)) == []


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (2, 2)])
def test_even_subalgebra_closure(mn):
    m, n = mn
    report = even_subalgebra_report(build_generators(m, n))
    assert report["closed"]
    assert report["span_dim"] == report["expected_dim"] == m * (2 * m + 1) + n * (2 * n + 1)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_weight_consistency(mn):
    assert weight_consistency_violations(build_generators(*mn)) == []


def test_bad_sizes_rejected():
    with pytest.raises(ValueError):
        build_generators(0, 1)
    with pytest.raises(ValueError):
        build_generators(1, 0)
