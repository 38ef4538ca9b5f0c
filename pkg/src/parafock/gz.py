"""Gelfand-Zetlin realization of the order-p Fock space for one parafermion
and one paraboson pair.

Basis vectors are triangular patterns (m12 m22 / m11) with m11 in
{m12, m12-1}, all entries nonnegative, and m12 >= 1 whenever m22 > 0.  The
generator action factorizes into a u(1|1) Clebsch-Gordan coefficient times a
reduced matrix element; the reduced elements g1/g2 (and their parity-signed
partners) are closed forms in (m12, m22, p).  The crucial factor (p - m12)
vanishes on the truncation boundary, so for positive integer p the patterns
with m12 <= p carry an orthonormal basis of the irreducible Fock space and
the action never leaves it.

The order-1 space admits a second, elementary realization by one fermion
and one boson that mutually anticommute; comparing matrix-element
magnitudes against it is an end-to-end oracle for the closed forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .relations import bracket_sign, grade, signed_triples, triple_rhs
from .scalars import RadicalScalar, sqrt_rational

GENS = ("c1+", "c2+", "c1-", "c2-")

_R0 = RadicalScalar(0)
_R1 = RadicalScalar(1)


class GZPattern(NamedTuple):
    m12: int
    m22: int
    m11: int


GZVector = dict  # GZPattern -> RadicalScalar, zero coefficients never stored


def pattern_ok(pat: GZPattern) -> bool:
    m12, m22, m11 = pat
    return (
        m12 >= 0
        and m22 >= 0
        and m11 >= 0
        and m11 in (m12, m12 - 1)
        and (m12 >= 1 or m22 == 0)
    )


def pattern_level(pat: GZPattern) -> int:
    return pat.m12 + pat.m22


def weight_offset(pat: GZPattern) -> tuple[int, int]:
    return (pat.m11, pat.m12 + pat.m22 - pat.m11)


def weight(pat: GZPattern, p) -> tuple[Fraction, Fraction]:
    a, b = weight_offset(pat)
    p = Fraction(p)
    return (-p / 2 + a, p / 2 + b)


def cartan_eigenvalues(pat: GZPattern, p) -> tuple[Fraction, Fraction]:
    """Eigenvalues of h1, h2 on |pat): (-p/2 + m11, p/2 + m12 + m22 - m11)."""
    w1, w2 = weight(pat, p)
    return w1, w2


def enumerate_patterns(max_level: int, cap: int | None = None) -> list[GZPattern]:
    """All admissible patterns with m12 + m22 <= max_level, ordered by
    (level, m12, m11); ``cap`` bounds m12 (the order-p truncation), None means
    no bound."""
    out = []
    for m12 in range(max_level + 1):
        if cap is not None and m12 > cap:
            break
        for m22 in range(max_level - m12 + 1):
            for m11 in (m12 - 1, m12):
                pat = GZPattern(m12, m22, m11)
                if pattern_ok(pat):
                    out.append(pat)
    out.sort(key=lambda q: (pattern_level(q), q.m12, q.m11))
    return out


@lru_cache(maxsize=None)
def g1(m12: int, m22: int, p: Fraction) -> RadicalScalar:
    """First reduced matrix element.

    Even m22: sqrt(m12*(m12+m22+1)*(p-m12)/(m12+m22)); odd m22:
    -sqrt(m12*(p-m12)).  The even form is 0/0 at the vacuum (0,0); the value
    there is pinned to sqrt(p) by the vacuum pairing <0|c1- c1+|0> = p, and
    the triple-relation and order-1 oracles confirm that choice.
    A negative radicand (m12 > p) raises: the formula was evaluated outside
    the truncated module.
    """
    if m22 < 0:
        return _R0
    if m22 % 2 == 0:
        if m12 == 0 and m22 == 0:
            return sqrt_rational(p)
        rad = Fraction(m12 * (m12 + m22 + 1), m12 + m22) * (p - m12)
        return sqrt_rational(rad)
    return -sqrt_rational(m12 * (p - m12))


@lru_cache(maxsize=None)
def g2(m12: int, m22: int, p: Fraction) -> RadicalScalar:
    """Second reduced matrix element; g2(., -1) is 0 (lowering boundary).

    Even m22: sqrt(m12+m22+1); odd m22: -sqrt((m22+1)*(p+m22+1)/(m12+m22)).
    """
    if m22 < 0:
        return _R0
    if m22 % 2 == 0:
        return sqrt_rational(m12 + m22 + 1)
    rad = Fraction(m22 + 1, m12 + m22) * (p + m22 + 1)
    return -sqrt_rational(rad)


def _parity_sign(m22: int) -> int:
    return 1 if m22 % 2 == 0 else -1


def g1_tilde(m12: int, m22: int, p: Fraction) -> RadicalScalar:
    return g1(m12, m22, p) * _parity_sign(m22)


def g2_tilde(m12: int, m22: int, p: Fraction) -> RadicalScalar:
    return g2(m12, m22, p) * _parity_sign(m22)


_REDUCED = {"g1": g1, "g2": g2, "g1~": g1_tilde, "g2~": g2_tilde}


def reduced_me(which: str, m12: int, m22: int, p) -> RadicalScalar:
    """Reduced matrix elements by name: g1, g2, g1~, g2~."""
    return _REDUCED[which](m12, m22, Fraction(p))


@lru_cache(maxsize=None)
def _sq(num: int, den: int) -> RadicalScalar:
    return sqrt_rational(Fraction(num, den))


def cgc_table(s: int) -> dict[str, RadicalScalar]:
    """The six u(1|1) Clebsch-Gordan coefficients at label sum s = m12 + m22.

    Keys encode (sublabel of source relative to its top, internal label of
    the coupled rank-one tensor component, which target representation):
    't' = sublabel equal to the top entry, 'l' = one lower; '1'/'0' the
    internal label; 'f'/'b' the target with raised first/second entry.
    """
    return {
        "t1f": _R1,
        "l1f": _sq(s, s + 1),
        "t0f": _sq(1, s + 1),
        "l1b": -_sq(1, s + 1),
        "t0b": _sq(s, s + 1),
        "l0b": _R1,
    }


def cgc_block(s: int) -> list[list[RadicalScalar]]:
    """The 2x2 coupling block at label sum s >= 1 (rows: source pairings,
    columns: the two target representations); orthogonal exactly."""
    t = cgc_table(s)
    return [[t["l1f"], t["l1b"]], [t["t0f"], t["t0b"]]]


def _raw_terms(gen: str, pat: GZPattern, p: Fraction):
    """Yield (target, reduced_element, cgc_factory) for one generator action.

    The reduced element is evaluated first; when it vanishes the whole term
    is zero and the (possibly singular) Clebsch-Gordan factor is never built.
    """
    a, b, c = pat
    s = a + b
    top = c == a
    sgn = _parity_sign(b)
    if gen == "c1+":
        if top:
            yield GZPattern(a + 1, b, a + 1), g1(a, b, p) * sgn, lambda: _R1
        else:
            yield GZPattern(a + 1, b, a), g1(a, b, p) * sgn, lambda: _sq(s, s + 1)
            yield GZPattern(a, b + 1, a), g2(a, b, p) * sgn, lambda: -_sq(1, s + 1)
    elif gen == "c2+":
        if top:
            yield GZPattern(a + 1, b, a), g1(a, b, p), lambda: _sq(1, s + 1)
            yield GZPattern(a, b + 1, a), g2(a, b, p), lambda: _sq(s, s + 1)
        else:
            yield GZPattern(a, b + 1, a - 1), g2(a, b, p), lambda: _R1
    elif gen == "c1-":
        if top:
            yield GZPattern(a - 1, b, a - 1), g1(a - 1, b, p) * sgn, lambda: _R1
            yield GZPattern(a, b - 1, a - 1), g2(a, b - 1, p) * sgn, lambda: _sq(1, s)
        else:
            yield GZPattern(a - 1, b, a - 2), g1(a - 1, b, p) * sgn, lambda: _sq(s - 1, s)
    elif gen == "c2-":
        if top:
            yield GZPattern(a, b - 1, a), g2(a, b - 1, p), lambda: _sq(s - 1, s)
        else:
            yield GZPattern(a - 1, b, a - 1), g1(a - 1, b, p), lambda: _sq(1, s)
            yield GZPattern(a, b - 1, a - 1), g2(a, b - 1, p), lambda: _R1
    else:
        raise ValueError(f"unknown generator {gen!r}")


def matrix_elements(gen: str, pat: GZPattern, p) -> list[tuple[GZPattern, RadicalScalar]]:
    """Nonzero matrix elements (target, value) of one generator on one pattern."""
    p = Fraction(p)
    out = []
    for target, reduced, cgc in _raw_terms(gen, pat, p):
        if not reduced:
            continue  # also keeps singular coupling factors from being built
        value = cgc() * reduced
        if not value:
            continue
        if not pattern_ok(target):
            raise ValueError(
                f"nonzero coefficient onto inadmissible pattern {target} "
                f"from {gen} on {pat}"
            )
        out.append((target, value))
    return out


def apply_c(gen: str, vec: GZVector, p) -> GZVector:
    """Linear extension of the generator action to pattern combinations."""
    p = Fraction(p)
    out: GZVector = {}
    for pat, coeff in vec.items():
        for target, value in matrix_elements(gen, GZPattern(*pat), p):
            cur = out.get(target, _R0) + value * coeff
            if cur:
                out[target] = cur
            elif target in out:
                del out[target]
    return out


_GEN_INDEX = {1: ("c1+", "c1-"), 2: ("c2+", "c2-")}


def gen_name(j: int, sign: int) -> str:
    return _GEN_INDEX[j][0 if sign == 1 else 1]


def apply_signed(j: int, sign: int, vec: GZVector, p) -> GZVector:
    return apply_c(gen_name(j, sign), vec, p)


def _vec_sub(u: GZVector, v: GZVector, scale=None) -> GZVector:
    out = dict(u)
    for s, c in v.items():
        cur = out.get(s, _R0) - (c if scale is None else c * scale)
        if cur:
            out[s] = cur
        elif s in out:
            del out[s]
    return out


def apply_pair_bracket(j: int, sj: int, k: int, sk: int, vec: GZVector, p) -> GZVector:
    first = apply_signed(j, sj, apply_signed(k, sk, vec, p), p)
    second = apply_signed(k, sk, apply_signed(j, sj, vec, p), p)
    sign = bracket_sign(grade(j, 1), grade(k, 1))
    return _vec_sub(first, second, RadicalScalar(sign))


def triple_relation_violations(p, max_level: int) -> list[tuple]:
    """Both sides of every signed triple relation on the truncated basis.

    For positive integer p, patterns are restricted to m12 <= p (the basis of
    the irreducible space); the action is closed there, so every word stays
    inside the basis.
    """
    p = Fraction(p)
    cap = int(p) if p.denominator == 1 else None
    violations = []
    for pat in enumerate_patterns(max_level, cap=cap):
        base = {pat: _R1}
        for j, xi, k, eta, l, eps in signed_triples(2):
            inner = apply_pair_bracket(j, xi, k, eta, apply_signed(l, eps, base, p), p)
            outer = apply_signed(l, eps, apply_pair_bracket(j, xi, k, eta, base, p), p)
            sign = bracket_sign((grade(j, 1) + grade(k, 1)) % 2, grade(l, 1))
            lhs = _vec_sub(inner, outer, RadicalScalar(sign))
            rhs: GZVector = {}
            for gi, gsign, coeff in triple_rhs(j, xi, k, eta, l, eps, 1):
                for st, c in apply_signed(gi, gsign, base, p).items():
                    cur = rhs.get(st, _R0) + c * coeff
                    if cur:
                        rhs[st] = cur
                    elif st in rhs:
                        del rhs[st]
            if _vec_sub(lhs, rhs):
                violations.append((pat, j, xi, k, eta, l, eps))
    return violations


def cartan_violations(p, max_level: int) -> list[tuple]:
    """[c1-,c1+] = -2 h1 and {c2-,c2+} = 2 h2 on every basis pattern.

    The eigenvalues are p - 2*m11 and p + 2*(m12 + m22 - m11); on patterns
    with m11 equal to the top entry the first reads p - 2*m12.
    """
    p = Fraction(p)
    cap = int(p) if p.denominator == 1 else None
    out = []
    for pat in enumerate_patterns(max_level, cap=cap):
        base = {pat: _R1}
        got1 = apply_pair_bracket(1, -1, 1, 1, base, p)
        want1 = p - 2 * pat.m11
        got2 = apply_pair_bracket(2, -1, 2, 1, base, p)
        want2 = p + 2 * (pat.m12 + pat.m22 - pat.m11)
        if _vec_sub(got1, {pat: RadicalScalar(want1)}):
            out.append((pat, "h1", got1))
        if _vec_sub(got2, {pat: RadicalScalar(want2)}):
            out.append((pat, "h2", got2))
    return out


def adjoint_symmetry_violations(p, max_level: int) -> list[tuple]:
    """(target|c_j^- |source) must equal (source|c_j^+ |target) pairwise."""
    p = Fraction(p)
    cap = int(p) if p.denominator == 1 else None
    pats = enumerate_patterns(max_level + 1, cap=cap)
    out = []
    for pat in pats:
        if pattern_level(pat) > max_level:
            continue
        for j in (1, 2):
            lowered = dict(matrix_elements(gen_name(j, -1), pat, p))
            for target in pats:
                lhs = lowered.get(target, _R0)
                raised = dict(matrix_elements(gen_name(j, 1), target, p))
                rhs = raised.get(pat, _R0)
                if lhs != rhs:
                    out.append((pat, target, j))
    return out


def truncation_violations(p: int, max_m22: int) -> list[tuple]:
    """Raising out of the m12 = p boundary must carry an exactly zero factor."""
    p = Fraction(p)
    cap = int(p)
    out = []
    for m22 in range(max_m22 + 1):
        for m11 in (cap - 1, cap):
            pat = GZPattern(cap, m22, m11)
            if not pattern_ok(pat):
                continue
            for gen in GENS:
                for target, value in matrix_elements(gen, pat, p):
                    if target.m12 > cap and value:
                        out.append((pat, gen, target, value))
    return out


def cgc_orthogonality_violations(max_sum: int) -> list[tuple]:
    """Rows and columns of each 2x2 coupling block must be orthonormal, and
    the two singleton couplings must be exactly 1."""
    out = []
    for m12 in range(max_sum + 1):
        for m22 in range(max_sum - m12 + 1):
            s = m12 + m22
            t = cgc_table(s)
            if t["t1f"] != _R1 or t["l0b"] != _R1:
                out.append((m12, m22, "unit"))
            if s < 1:
                continue
            block = cgc_block(s)
            for i in range(2):
                for j in range(2):
                    dot = block[i][0] * block[j][0] + block[i][1] * block[j][1]
                    if dot != (_R1 if i == j else _R0):
                        out.append((m12, m22, "row", i, j))
                    dot = block[0][i] * block[0][j] + block[1][i] * block[1][j]
                    if dot != (_R1 if i == j else _R0):
                        out.append((m12, m22, "col", i, j))
    return out


# -- recurrence relations for the reduced matrix elements -------------------


def _g1_sq(a: int, b: int, p: Fraction) -> Fraction:
    """Square of g1 as a rational function; the vacuum value squares to p."""
    if b < 0:
        return Fraction(0)
    if b % 2 == 0:
        if a == 0 and b == 0:
            return p
        return Fraction(a * (a + b + 1), a + b) * (p - a)
    return Fraction(a) * (p - a)


def _g2_sq(a: int, b: int, p: Fraction) -> Fraction:
    if b < 0:
        return Fraction(0)
    if b % 2 == 0:
        return Fraction(a + b + 1)
    return Fraction(b + 1, a + b) * (p + b + 1)


def check_recurrences(p_values: Iterable, max_label: int) -> list[tuple]:
    """Verify the six recurrence relations and the lowering boundary exactly.

    The squared relations are rational-function identities, linear or
    quadratic in p, so exact agreement at more sample points than the degree
    certifies them for all p.  The two product relations are additionally
    checked directly in radical arithmetic wherever every radicand is
    nonnegative (m12 <= p), which also pins the relative signs.
    """
    violations = []
    for p in p_values:
        p = Fraction(p)
        for a in range(max_label + 1):
            for b in range(max_label + 1):
                s = a + b
                # boundary convention: second element vanishes below b = 0
                if _g2_sq(a, -1, p) != 0:
                    violations.append((p, a, b, "boundary"))
                if b >= 1 and s >= 1:
                    # squared product relation shared by both signed families
                    lhs = _g1_sq(a, b, p) * _g2_sq(a + 1, b - 1, p) * Fraction(1, s + 1)
                    rhs = (
                        _g1_sq(a, b - 1, p)
                        * _g2_sq(a, b - 1, p)
                        * Fraction(s - 1, s * s)
                    )
                    if lhs != rhs:
                        violations.append((p, a, b, "product-squared"))
                    if p >= a:  # real domain: direct radical check of both forms
                        t1 = g1(a, b, p) * g2(a + 1, b - 1, p) * _sq(1, s + 1)
                        t2 = g1(a, b - 1, p) * g2(a, b - 1, p) * sqrt_rational(s - 1) / s
                        if t1 + t2:
                            violations.append((p, a, b, "product-direct"))
                        u1 = g1_tilde(a, b, p) * g2_tilde(a + 1, b - 1, p) * _sq(1, s + 1)
                        u2 = (
                            g1_tilde(a, b - 1, p)
                            * g2_tilde(a, b - 1, p)
                            * sqrt_rational(s - 1)
                            / s
                        )
                        if u1 - u2:
                            violations.append((p, a, b, "product-direct-signed"))
                if s >= 1:
                    lhs = (
                        _g1_sq(a, b, p) / (s + 1)
                        + Fraction(s - 1, s) * _g2_sq(a, b - 1, p)
                        + Fraction(s, s + 1) * _g2_sq(a, b, p)
                    )
                    if lhs != p + 2 * b:
                        violations.append((p, a, b, "sum-even"))
                if a >= 1:
                    lhs = _g1_sq(a - 1, b, p) / s + _g2_sq(a, b - 1, p) + _g2_sq(a, b, p)
                    if lhs != p + 2 * b + 2:
                        violations.append((p, a, b, "sum-shifted"))
                    lhs = (
                        Fraction(s, s + 1) * _g1_sq(a, b, p)
                        - Fraction(s - 1, s) * _g1_sq(a - 1, b, p)
                        + _g2_sq(a, b, p) / (s + 1)
                    )
                    if lhs != p - 2 * a + 2:
                        violations.append((p, a, b, "sum-signed"))
                    lhs = _g1_sq(a, b, p) - _g1_sq(a - 1, b, p) - _g2_sq(a, b - 1, p) / s
                    if lhs != p - 2 * a:
                        violations.append((p, a, b, "sum-signed-shifted"))
    return violations


# -- order-1 oracle: one fermion and one boson that anticommute -------------


class FockState(NamedTuple):
    t: int  # fermion occupation, 0 or 1
    k: int  # boson occupation


def fock_apply(gen: str, state: FockState) -> list[tuple[FockState, RadicalScalar]]:
    """Ordinary fermion-boson Fock space actions (normalized basis)."""
    t, k = state
    sign = -1 if t else 1
    if gen == "c1+":
        return [] if t else [(FockState(1, k), _R1)]
    if gen == "c1-":
        return [(FockState(0, k), _R1)] if t else []
    if gen == "c2+":
        return [(FockState(t, k + 1), sqrt_rational(k + 1) * sign)]
    if gen == "c2-":
        return [] if k == 0 else [(FockState(t, k - 1), sqrt_rational(k) * sign)]
    raise ValueError(f"unknown generator {gen!r}")


def fock_weight_offset(state: FockState) -> tuple[int, int]:
    return (state.t, state.k)


def p1_oracle_violations(max_level: int) -> list[tuple]:
    """Match the order-1 pattern basis against the fermion-boson model.

    Both models must have every weight space one-dimensional, the weights
    must coincide, and every generator matrix element must agree in absolute
    value under the weight bijection.
    """
    p = Fraction(1)
    out = []
    pats = enumerate_patterns(max_level + 1, cap=1)
    pat_by_offset: dict[tuple[int, int], GZPattern] = {}
    for pat in pats:
        off = weight_offset(pat)
        if off in pat_by_offset:
            out.append(("pattern-multiplicity", off))
        pat_by_offset[off] = pat
    fock_by_offset: dict[tuple[int, int], FockState] = {}
    for t in (0, 1):
        for k in range(max_level + 2 - t):
            st = FockState(t, k)
            off = fock_weight_offset(st)
            if off in fock_by_offset:
                out.append(("fock-multiplicity", off))
            fock_by_offset[off] = st
    reachable = {off for off in pat_by_offset if sum(off) <= max_level + 1}
    for off in sorted(reachable):
        if off not in fock_by_offset:
            out.append(("missing-fock-state", off))
    for pat in pats:
        if pattern_level(pat) > max_level:
            continue
        st = fock_by_offset[weight_offset(pat)]
        for gen in GENS:
            gz_terms = {weight_offset(q): v for q, v in matrix_elements(gen, pat, p)}
            fb_terms = {fock_weight_offset(q): v for q, v in fock_apply(gen, st)}
            if set(gz_terms) != set(fb_terms):
                out.append((pat, gen, "support"))
                continue
            for off, v in gz_terms.items():
                if v * v != fb_terms[off] * fb_terms[off]:
                    out.append((pat, gen, off, "magnitude"))
    return out


def format_pattern(pat: GZPattern) -> str:
    return f"({pat.m12},{pat.m22},{pat.m11})"
