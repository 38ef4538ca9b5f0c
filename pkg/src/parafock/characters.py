"""Character and branching machinery for m parafermion and n paraboson pairs.

Weight bookkeeping uses nonnegative integer offsets from the lowest weight
(-p/2,...,-p/2 | p/2,...,p/2); the half-integer prefactor is carried as
metadata and never expanded, which keeps every multiplicity an integer and
makes their independence of p explicit.

Two independent routes to the weight multiplicities of the induced module
are provided: expanding the closed product form of the character, and
enumerating the monomial basis directly.  The product form also expands as
the sum of supersymmetric Schur functions over hook partitions (the
Cummins-King identity), which encodes the branching to the u(m|n)
subalgebra; supersymmetric Schur functions are themselves computed by two
independent routes (super-semistandard tableaux and the skew-Schur double
sum).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

Partition = tuple[int, ...]
Poly = dict  # exponent tuple -> int coefficient


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam if x)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def hook_ok(lam: Partition, m: int, n: int) -> bool:
    """Hook condition: the (m+1)-th part is at most n (missing parts are 0)."""
    lam = check_partition(lam)
    return (lam[m] if len(lam) > m else 0) <= n


def partitions_of(size: int, max_part: int | None = None):
    """Partitions of ``size``, parts bounded by ``max_part``, lexicographic."""
    if size == 0:
        yield ()
        return
    top = size if max_part is None else min(size, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(size - first, first):
            yield (first,) + rest


def hook_partitions(max_size: int, m: int, n: int) -> list[Partition]:
    out = []
    for size in range(max_size + 1):
        for lam in partitions_of(size):
            if hook_ok(lam, m, n):
                out.append(lam)
    return out


# -- ordinary and supersymmetric Schur polynomials ---------------------------


def _skew_cells(outer: Partition, inner: Partition) -> list[tuple[int, int]]:
    if any(i > o for i, o in zip(inner, outer)) or len(inner) > len(outer):
        raise ValueError(f"{inner} is not contained in {outer}")
    cells = []
    for r, width in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        cells.extend((r, c) for c in range(start, width))
    return cells


def skew_schur(outer: Partition, inner: Partition, nvars: int) -> Poly:
    """Skew Schur polynomial by semistandard tableau enumeration.

    Rows weakly increase, columns strictly increase; comparisons only apply
    between cells that are both inside the skew shape.
    """
    outer, inner = check_partition(outer), check_partition(inner)
    cells = _skew_cells(outer, inner)
    present = set(cells)
    poly: Poly = {}
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            expo = [0] * nvars
            for v in fill.values():
                expo[v - 1] += 1
            key = tuple(expo)
            poly[key] = poly.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in present:
            lo = max(lo, fill[(r, c - 1)])
        if (r - 1, c) in present:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            fill[(r, c)] = v
            rec(idx + 1)
        fill.pop((r, c), None)

    if not cells:
        return {(0,) * nvars: 1}
    rec(0)
    return poly


def schur(lam: Partition, nvars: int) -> Poly:
    return skew_schur(lam, (), nvars)


def super_schur_tableaux(lam: Partition, m: int, n: int) -> Poly:
    """Supersymmetric Schur polynomial by super-semistandard tableaux.

    Letters are 1 < ... < m < 1' < ... < n'.  Unprimed letters may repeat
    along rows but not down columns; primed letters may repeat down columns
    but not along rows.  Exponent tuples list the m unprimed counts first.
    """
    lam = check_partition(lam)
    cells = _skew_cells(lam, ())
    letters = [(0, v) for v in range(1, m + 1)] + [(1, w) for w in range(1, n + 1)]
    poly: Poly = {}
    fill: dict[tuple[int, int], tuple[int, int]] = {}

    def rec(idx: int):
        if idx == len(cells):
            expo = [0] * (m + n)
            for prim, v in fill.values():
                expo[v - 1 if prim == 0 else m + v - 1] += 1
            key = tuple(expo)
            poly[key] = poly.get(key, 0) + 1
            return
        r, c = cells[idx]
        for letter in letters:
            if c > 0:
                left = fill[(r, c - 1)]
                if letter < left or (letter == left and letter[0] == 1):
                    continue
            if r > 0 and (r - 1, c) in fill:
                up = fill[(r - 1, c)]
                if letter < up or (letter == up and letter[0] == 0):
                    continue
            fill[(r, c)] = letter
            rec(idx + 1)
        fill.pop((r, c), None)

    if not cells:
        return {(0,) * (m + n): 1}
    rec(0)
    return poly


def _sub_partitions(lam: Partition):
    """All partitions whose diagram fits inside lam."""
    if not lam:
        yield ()
        return
    rows = len(lam)

    def rec(r: int, prev: int, acc: tuple[int, ...]):
        if r == rows:
            yield check_partition(acc)
            return
        for v in range(min(lam[r], prev), -1, -1):
            yield from rec(r + 1, v, acc + (v,))

    yield from rec(0, lam[0], ())


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def super_schur_skew_sum(lam: Partition, m: int, n: int) -> Poly:
    """Supersymmetric Schur polynomial via the skew-Schur double sum:
    sum over inner shapes tau of s_{lam/tau}(x) * s_{tau'}(y)."""
    lam = check_partition(lam)
    total: Poly = {}
    for tau in _sub_partitions(lam):
        tau_conj = conjugate(tau)
        xpart = skew_schur(lam, tau, m)
        if not xpart:
            continue
        ypart = schur(tau_conj, n)
        if not ypart:
            continue
        for ex, cx in xpart.items():
            for ey, cy in ypart.items():
                key = ex + ey
                total[key] = total.get(key, 0) + cx * cy
    return {k: v for k, v in total.items() if v}


def super_schur(lam: Partition, m: int, n: int, cross_check: bool = True) -> Poly:
    """Supersymmetric Schur polynomial; zero (empty) when the hook condition
    fails.  With cross_check the tableau and skew-sum routes are compared."""
    tab = super_schur_tableaux(lam, m, n)
    if cross_check:
        alt = super_schur_skew_sum(lam, m, n)
        if tab != alt:
            raise AssertionError(f"tableau and skew-sum routes disagree for {lam}")
    return tab


def principal_specialization(poly: Poly) -> int:
    """All variables set to 1: the dimension of the corresponding module."""
    return sum(poly.values())


# -- highest weights and general Gelfand-Zetlin patterns ---------------------


def hw_from_partition(lam: Partition, m: int, n: int) -> tuple[int, ...]:
    """Highest weight [lam_1..lam_m | max(0, lam'_j - m) ...] of the covariant
    module labeled by a hook partition."""
    lam = check_partition(lam)
    if not hook_ok(lam, m, n):
        raise ValueError(f"{lam} violates the hook condition for ({m},{n})")
    conj = conjugate(lam)
    row = [lam[i] if i < len(lam) else 0 for i in range(m)]
    row += [max(0, (conj[j] if j < len(conj) else 0) - m) for j in range(n)]
    return tuple(row)


def hw_valid(hw: tuple[int, ...], m: int, n: int) -> bool:
    r = m + n
    if len(hw) != r or any(x < 0 for x in hw):
        return False
    for j in range(r - 1):
        if j + 1 == m:
            continue
        if hw[j] < hw[j + 1]:
            return False
    return hw[m - 1] >= sum(1 for x in hw[m:] if x > 0)


def enumerate_gz_general(hw: tuple[int, ...], m: int, n: int) -> list[tuple]:
    """All triangular patterns below a covariant highest weight.

    A pattern is a tuple of rows, top row (the highest weight, length m+n)
    first, down to the single-entry bottom row.  Between consecutive rows in
    the band that still has bosonic entries, the m fermionic labels each drop
    by 0 or 1 and the bosonic labels interlace; each such row keeps its
    fermionic part weakly decreasing and satisfies the hook inequality.  The
    rows of length at most m interlace in the ordinary Gelfand-Zetlin way.
    """
    hw = tuple(int(x) for x in hw)
    if not hw_valid(hw, m, n):
        raise ValueError(f"invalid covariant highest weight {hw} for ({m},{n})")
    r = m + n

    def extend(partial: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
        row = partial[-1]
        size = len(row) - 1  # length of the row being generated
        if size == 0:
            return [partial]
        out = []
        if size >= m + 1:
            ferm_choices = product(*[(row[i] - 1, row[i]) for i in range(m)])
            for ferm in ferm_choices:
                if any(x < 0 for x in ferm):
                    continue
                if any(ferm[i] < ferm[i + 1] for i in range(m - 1)):
                    continue
                bos_ranges = [range(row[i + 1], row[i] + 1) for i in range(m, size)]
                for bos in product(*bos_ranges):
                    new = ferm + bos
                    if new[m - 1] < sum(1 for x in new[m:] if x > 0):
                        continue
                    out.extend(extend(partial + [new]))
        elif size == m:
            ferm_choices = product(*[(row[i] - 1, row[i]) for i in range(m)])
            for ferm in ferm_choices:
                if any(x < 0 for x in ferm):
                    continue
                out.extend(extend(partial + [tuple(ferm)]))
        else:
            ranges = [range(row[i + 1], row[i] + 1) for i in range(size)]
            for new in product(*ranges):
                out.extend(extend(partial + [tuple(new)]))
        return out

    completed = extend([hw])
    return sorted(tuple(rows) for rows in completed)


# -- weight multiplicity series ----------------------------------------------


def _mul_trunc(a: Poly, b: Poly, degree: int) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > degree:
                continue
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _unit(i: int, r: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(r))


def _series_factors(m: int, n: int):
    """Factors of the product character: (1 + x_i y_j) numerators and the
    geometric denominators 1/(1-x_i), 1/(1-x_i x_k), 1/(1-y_j), 1/(1-y_j y_l)."""
    r = m + n
    zero = (0,) * r
    numerators, denominators = [], []
    for i in range(m):
        for j in range(n):
            mono = tuple(a + b for a, b in zip(_unit(i, r), _unit(m + j, r)))
            numerators.append({zero: 1, mono: 1})
    for i in range(m):
        denominators.append(_unit(i, r))
    for i in range(m):
        for k in range(i + 1, m):
            denominators.append(tuple(a + b for a, b in zip(_unit(i, r), _unit(k, r))))
    for j in range(n):
        denominators.append(_unit(m + j, r))
    for j in range(n):
        for l in range(j + 1, n):
            denominators.append(
                tuple(a + b for a, b in zip(_unit(m + j, r), _unit(m + l, r)))
            )
    return numerators, denominators


def base_series(m: int, n: int, degree: int) -> Poly:
    """Truncated expansion of the product character (prefactor omitted)."""
    r = m + n
    poly: Poly = {(0,) * r: 1}
    numerators, denominators = _series_factors(m, n)
    for f in numerators:
        poly = _mul_trunc(poly, f, degree)
    for mono in denominators:
        step = sum(mono)
        geom: Poly = {}
        reps = degree // step
        for t in range(reps + 1):
            geom[tuple(t * x for x in mono)] = 1
        poly = _mul_trunc(poly, geom, degree)
    return poly


@dataclass(frozen=True)
class WeightSeries:
    """Truncated formal character: weight offsets against multiplicities.

    The lowest-weight prefactor is symbolic metadata; offsets are integer
    vectors (first m slots, then n slots) and multiplicities are positive
    integers independent of p.
    """

    m: int
    n: int
    p: Fraction
    degree: int
    mult: dict = field(compare=False)

    def prefactor(self) -> str:
        lo, hi = -self.p / 2, self.p / 2
        xs = " ".join(f"x{i+1}^({lo})" for i in range(self.m))
        ys = " ".join(f"y{j+1}^({hi})" for j in range(self.n))
        return f"{xs} {ys}".strip()

    def sorted_items(self):
        return sorted(self.mult.items(), key=lambda kv: (sum(kv[0]), kv[0]))


def character_series(m: int, n: int, p, degree: int) -> WeightSeries:
    """Weight multiplicities of the induced module up to total degree."""
    return WeightSeries(m, n, Fraction(p), degree, base_series(m, n, degree))


def pbw_multiplicities(m: int, n: int, degree: int) -> dict:
    """Weight histogram of the monomial basis, enumerated directly.

    Monomials carry one exponent per single creation operator (any
    nonnegative integer) and one per ordered pair: nonnegative for pairs of
    equal grading, 0 or 1 for mixed fermion-boson pairs.  A pair contributes
    2 to the degree, a single contributes 1.
    """
    r = m + n
    pairs = []
    for i in range(r):
        for j in range(i + 1, r):
            pairs.append((i, j, i < m <= j))
    counts: Counter = Counter()

    def rec_pairs(idx: int, left: int, wt: tuple[int, ...]):
        if idx == len(pairs):
            rec_singles(0, left, wt)
            return
        i, j, mixed = pairs[idx]
        emax = min(1, left // 2) if mixed else left // 2
        for e in range(emax + 1):
            new = list(wt)
            new[i] += e
            new[j] += e
            rec_pairs(idx + 1, left - 2 * e, tuple(new))

    def rec_singles(i: int, left: int, wt: tuple[int, ...]):
        if i == r:
            counts[wt] += 1
            return
        for e in range(left + 1):
            new = list(wt)
            new[i] += e
            rec_singles(i + 1, left - e, tuple(new))

    rec_pairs(0, degree, (0,) * r)
    return dict(counts)


def king_identity_check(m: int, n: int, degree: int) -> dict:
    """Product form against the hook-partition sum of supersymmetric Schur
    functions, compared exactly as truncated polynomials."""
    lhs = base_series(m, n, degree)
    rhs: Poly = {}
    for lam in hook_partitions(degree, m, n):
        for expo, coeff in super_schur(lam, m, n).items():
            rhs[expo] = rhs.get(expo, 0) + coeff
    rhs = {k: v for k, v in rhs.items() if v}
    return {
        "identity": "hook-schur-expansion",
        "m": m,
        "n": n,
        "degree": degree,
        "status": "equal" if lhs == rhs else "DIFFER",
        "equal": lhs == rhs,
    }
