"""Shared structure of the parastatistics triple relations.

A system of m parafermion pairs and n paraboson pairs is generated by
creation/annihilation operators indexed by ``(j, sign)`` with j in 1..m+n
and sign in {+1, -1}; index j <= m is a parafermion (even grading), j > m a
paraboson (odd grading).  The defining relations fix every double bracket

    [[ c_j^xi , c_k^eta ]] , c_l^eps ]]

to a specific linear combination of generators; :func:`triple_rhs` returns
that combination, and each module checks it in its own realization.
"""

from __future__ import annotations

from itertools import product

SIGNS = (1, -1)


def grade(j: int, m: int) -> int:
    """Grading of generator j: 0 (even) for parafermions, 1 (odd) for parabosons."""
    return 0 if j <= m else 1


def bracket_sign(p1: int, p2: int) -> int:
    """Sign in [[a,b]] = ab - (-1)^(deg a * deg b) ba."""
    return -1 if (p1 and p2) else 1


def triple_rhs(j: int, xi: int, k: int, eta: int, l: int, eps: int, m: int):
    """Right side of the triple relation as [(gen_index, gen_sign, coefficient)].

    coefficient is a plain integer; the combination is
    -2 d_jl d_{eps,-xi} eps^<l> (-1)^(<k><l>) c_k^eta
    +2 eps^<l> d_kl d_{eps,-eta} c_j^xi.
    """
    el = eps if grade(l, m) else 1
    out = []
    if j == l and eps == -xi:
        c = -2 * el * (-1 if grade(k, m) and grade(l, m) else 1)
        out.append((k, eta, c))
    if k == l and eps == -eta:
        out.append((j, xi, 2 * el))
    return out


def signed_triples(num_gens: int):
    """All (j, xi, k, eta, l, eps) combinations, deterministic order."""
    idx = range(1, num_gens + 1)
    return product(idx, SIGNS, idx, SIGNS, idx, SIGNS)
