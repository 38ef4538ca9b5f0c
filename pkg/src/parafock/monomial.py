"""The induced module of order p for one parafermion and one paraboson pair,
in the monomial basis.

Basis vectors |k,l,t> are words (first creation operator)^k (second)^l
(commutator of the two)^t applied to the vacuum, with k, l nonnegative and
t in {0, 1}.  The level is k + l + 2t and the weight sits at offset
(k+t, l+t) from the lowest weight (-p/2 | p/2).  All coefficients are exact
rationals; p may be any positive rational, although submodule (rank-drop)
statements are only meaningful for positive integers p.

Inner products come in two independent routes: closed-form norms built from
Pochhammer symbols, and an oracle that applies the adjoint word of the bra
via the generator actions and reads off the vacuum coefficient.  Tests hold
the two routes against each other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .relations import bracket_sign, grade, signed_triples, triple_rhs
from .scalars import pochhammer

GENS = ("c1+", "c2+", "c1-", "c2-")


class MonomialState(NamedTuple):
    k: int
    l: int
    theta: int


MonomialVector = dict  # MonomialState -> Fraction, zero coefficients never stored


def level(s: MonomialState) -> int:
    return s.k + s.l + 2 * s.theta


def weight_offset(s: MonomialState) -> tuple[int, int]:
    return (s.k + s.theta, s.l + s.theta)


def weight(s: MonomialState, p) -> tuple[Fraction, Fraction]:
    a, b = weight_offset(s)
    p = Fraction(p)
    return (-p / 2 + a, p / 2 + b)


def _add(vec: MonomialVector, s: tuple, c: Fraction):
    if not c:
        return
    cur = vec.get(s)
    if cur is None:
        vec[s] = c
    else:
        cur += c
        if cur:
            vec[s] = cur
        else:
            del vec[s]


def apply_generator(gen: str, vec: MonomialVector, p) -> MonomialVector:
    """Linear extension of the six generator action rules; exact rationals.

    Raising: c1+ shifts k; c2+ shifts l and, from t=0 states, also produces
    the t=1 neighbour with a parity sign.  Lowering rules split on the parity
    of l and on t; every rule shifts the weight by the generator's root.
    """
    p = Fraction(p)
    out: MonomialVector = {}
    for (k, l, t), c in vec.items():
        if gen == "c1+":
            _add(out, MonomialState(k + 1, l, t), c)
        elif gen == "c2+":
            if t == 0:
                _add(out, MonomialState(k, l + 1, 0), c)
                if k:
                    sign = -1 if l % 2 == 0 else 1
                    _add(out, MonomialState(k - 1, l, 1), sign * k * c)
            else:
                _add(out, MonomialState(k, l + 1, 1), c)
        elif gen == "c1-":
            if t == 0:
                if k:
                    _add(out, MonomialState(k - 1, l, 0), k * (p - k + 1) * c)
            else:
                if k:
                    _add(out, MonomialState(k - 1, l, 1), k * (p - k - 1) * c)
                _add(out, MonomialState(k, l + 1, 0), (2 if l % 2 == 0 else -2) * c)
        elif gen == "c2-":
            half, odd = divmod(l, 2)
            if t == 0:
                if odd == 0:
                    if k and half:
                        _add(out, MonomialState(k - 1, l - 2, 1), -2 * k * half * c)
                    if half:
                        _add(out, MonomialState(k, l - 1, 0), 2 * half * c)
                else:
                    if k and half:
                        _add(out, MonomialState(k - 1, l - 2, 1), 2 * k * half * c)
                    _add(out, MonomialState(k, l - 1, 0), (p + 2 * half - 2 * k) * c)
            else:
                if odd == 0:
                    if half:
                        _add(out, MonomialState(k, l - 1, 1), 2 * half * c)
                    _add(out, MonomialState(k + 1, l, 0), -2 * c)
                else:
                    _add(out, MonomialState(k, l - 1, 1), (p + 2 * half - 2 * k) * c)
                    _add(out, MonomialState(k + 1, l, 0), 2 * c)
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return out


def apply_word(gens: Iterable[str], vec: MonomialVector, p) -> MonomialVector:
    """Apply generators right to left: the last list element acts first."""
    for gen in reversed(list(gens)):
        vec = apply_generator(gen, vec, p)
    return vec


_GEN_INDEX = {1: ("c1+", "c1-"), 2: ("c2+", "c2-")}


def gen_name(j: int, sign: int) -> str:
    return _GEN_INDEX[j][0 if sign == 1 else 1]


def apply_signed(j: int, sign: int, vec: MonomialVector, p) -> MonomialVector:
    return apply_generator(gen_name(j, sign), vec, p)


def apply_pair_bracket(j: int, sj: int, k: int, sk: int, vec: MonomialVector, p) -> MonomialVector:
    """[[c_j^sj, c_k^sk]] applied as an operator word."""
    first = apply_signed(j, sj, apply_signed(k, sk, vec, p), p)
    second = apply_signed(k, sk, apply_signed(j, sj, vec, p), p)
    sign = bracket_sign(grade(j, 1), grade(k, 1))
    out = dict(first)
    for s, c in second.items():
        _add(out, s, -sign * c)
    return out


def norm_squared_closed(s: MonomialState, p) -> Fraction:
    """Closed-form squared norm, split over the parity of l and the value of t."""
    p = Fraction(p)
    k, l, t = s
    half, odd = divmod(l, 2)
    kfact = Fraction(1)
    for i in range(1, k + 1):
        kfact *= i
    lfact = Fraction(1)
    for i in range(1, half + 1):
        lfact *= i
    if t == 0:
        base = kfact * pochhammer(p - k + 1, k)
        if odd == 0:
            return base * 2 ** (2 * half) * lfact * pochhammer(p / 2, half)
        return base * 2 ** (2 * half + 1) * lfact * pochhammer(p / 2, half + 1)
    base = 4 * kfact * pochhammer(p - k, k + 1) * 2 ** (2 * half) * lfact
    if odd == 0:
        return base * pochhammer(p / 2 + 1, half)
    return base * (p - k + 2 * half + 1) * pochhammer(p / 2 + 1, half)


def inner_product_oracle(a: MonomialState, vec: MonomialVector, p) -> Fraction:
    """<a|vec> by applying the adjoint word of a and reading the vacuum coefficient.

    The adjoint of the defining word of |k,l,t> is (c1-)^k preceded by
    (c2-)^l preceded, if t = 1, by [c2-, c1-]; only the Hermiticity rule
    (c_j^+)^dagger = c_j^- enters.
    """
    w = dict(vec)
    for _ in range(a.k):
        w = apply_generator("c1-", w, p)
    for _ in range(a.l):
        w = apply_generator("c2-", w, p)
    if a.theta:
        first = apply_word(["c2-", "c1-"], w, p)
        second = apply_word(["c1-", "c2-"], w, p)
        for s, c in second.items():
            _add(first, s, -c)
        w = first
    return w.get(MonomialState(0, 0, 0), Fraction(0))


def inner_product(u: MonomialVector, v: MonomialVector, p) -> Fraction:
    """Bilinear extension of the oracle (all coefficients are real rationals)."""
    total = Fraction(0)
    for s, c in u.items():
        total += c * inner_product_oracle(MonomialState(*s), v, p)
    return total


def states_of_weight(offset: tuple[int, int]) -> list[MonomialState]:
    """Monomial states at a weight offset, ordered by (theta, k, l)."""
    a, b = offset
    out = []
    if a >= 0 and b >= 0:
        out.append(MonomialState(a, b, 0))
    if a >= 1 and b >= 1:
        out.append(MonomialState(a - 1, b - 1, 1))
    return out


def states_up_to_level(max_level: int) -> list[MonomialState]:
    out = []
    for t in (0, 1):
        for k in range(max_level - 2 * t + 1):
            for l in range(max_level - 2 * t - k + 1):
                out.append(MonomialState(k, l, t))
    out.sort(key=lambda s: (level(s), s.theta, s.k, s.l))
    return out


def weight_offsets_up_to_level(max_level: int) -> list[tuple[int, int]]:
    return [(a, b) for tot in range(max_level + 1) for a in range(tot + 1) for b in [tot - a]]


def gram_matrix(offset: tuple[int, int], p) -> tuple[list[MonomialState], list[list[Fraction]]]:
    """Symmetric matrix of oracle inner products at one weight offset."""
    states = states_of_weight(offset)
    mat = [
        [inner_product_oracle(si, {sj: Fraction(1)}, p) for sj in states] for si in states
    ]
    return states, mat


def gram_rank_and_null(offset: tuple[int, int], p) -> tuple[int, list[dict]]:
    """Exact Gram rank and integer-coefficient null vectors at one weight.

    Null vectors are content-reduced with positive leading coefficient, in
    the documented (theta, k, l) state order, and span the weight's slice of
    the maximal submodule.
    """
    from .linalg import integerize, rank_and_nullspace

    states, mat = gram_matrix(offset, p)
    if not states:
        return 0, []
    rk, null = rank_and_nullspace(mat)
    vectors = []
    for basis_vec in null:
        ints = integerize(basis_vec)
        vectors.append({s: c for s, c in zip(states, ints) if c})
    return rk, vectors


def triple_relation_violations(p, max_level: int) -> list[tuple]:
    """Both sides of every signed triple relation, applied to monomial states."""
    p = Fraction(p)
    violations = []
    for s in states_up_to_level(max_level):
        base = {s: Fraction(1)}
        for j, xi, k, eta, l, eps in signed_triples(2):
            inner = apply_pair_bracket(j, xi, k, eta, apply_signed(l, eps, base, p), p)
            outer = apply_signed(l, eps, apply_pair_bracket(j, xi, k, eta, base, p), p)
            sign = bracket_sign((grade(j, 1) + grade(k, 1)) % 2, grade(l, 1))
            lhs = dict(inner)
            for st, c in outer.items():
                _add(lhs, st, -sign * c)
            rhs: MonomialVector = {}
            for gi, gsign, coeff in triple_rhs(j, xi, k, eta, l, eps, 1):
                for st, c in apply_signed(gi, gsign, base, p).items():
                    _add(rhs, st, coeff * c)
            for st, c in rhs.items():
                _add(lhs, st, -c)
            if lhs:
                violations.append((s, j, xi, k, eta, l, eps))
    return violations


def format_vector(vec: MonomialVector) -> str:
    """Render e.g. 2|1,1,0> - |0,0,1>, states in (theta, k, l) order."""
    if not vec:
        return "0"
    items = sorted(vec.items(), key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
    parts = []
    for (k, l, t), c in items:
        body = f"|{k},{l},{t}>"
        mag = abs(c)
        if mag != 1:
            body = f"{mag}{body}"
        parts.append((c < 0, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
