"""Matrix realization of the parastatistics generators, used as an oracle.

The orthosymplectic superalgebra osp(2m+1|2n) acts on a graded space of
dimension 2m+1+2n; rows and columns are numbered 1..2m+1+2n, with indices
up to 2m+1 on the orthogonal (even) side and the rest on the symplectic
side.  The 2(m+n) creation/annihilation generators are particular root
vectors with exactly two entries of magnitude sqrt(2) each; checking the
triple relations entrywise on these matrices is a theorem-level oracle that
is independent of any module construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import in_row_span, rank
from .relations import SIGNS, bracket_sign, grade, signed_triples, triple_rhs
from .scalars import RadicalScalar, sqrt_rational

_ZERO = RadicalScalar(0)
_SQRT2 = sqrt_rational(2)


class SuperMatrix:
    """Dense square matrix of RadicalScalar entries with a declared parity.

    Parity is declared rather than inferred from the block structure so that
    deliberately corrupted matrices (negative controls) stay representable.
    """

    __slots__ = ("dim", "parity", "rows")

    def __init__(self, dim: int, parity: int, rows: tuple[tuple[RadicalScalar, ...], ...]):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("SuperMatrix is immutable")

    @classmethod
    def from_entries(cls, dim: int, parity: int, entries: dict[tuple[int, int], RadicalScalar]):
        """Build from 1-based (row, col) -> value entries."""
        rows = [[_ZERO] * dim for _ in range(dim)]
        for (i, j), v in entries.items():
            rows[i - 1][j - 1] = v
        return cls(dim, parity, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, dim: int, parity: int = 0):
        row = (_ZERO,) * dim
        return cls(dim, parity, (row,) * dim)

    def entry(self, i: int, j: int) -> RadicalScalar:
        """1-based access, matching the e_ij index convention."""
        return self.rows[i - 1][j - 1]

    def _check_dim(self, other: "SuperMatrix"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "SuperMatrix"):
        self._check_dim(other)
        rows = tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        )
        return SuperMatrix(self.dim, self.parity, rows)

    def __sub__(self, other: "SuperMatrix"):
        self._check_dim(other)
        rows = tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)
        )
        return SuperMatrix(self.dim, self.parity, rows)

    def __neg__(self):
        return SuperMatrix(self.dim, self.parity, tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, q) -> "SuperMatrix":
        return SuperMatrix(self.dim, self.parity, tuple(tuple(a * q for a in r) for r in self.rows))

    def __matmul__(self, other: "SuperMatrix"):
        self._check_dim(other)
        d = self.dim
        out = [[_ZERO] * d for _ in range(d)]
        for i in range(d):
            arow = self.rows[i]
            for k in range(d):
                a = arow[k]
                if not a:
                    continue  # generators are very sparse; skip zero entries
                brow = other.rows[k]
                orow = out[i]
                for j in range(d):
                    b = brow[j]
                    if b:
                        orow[j] = orow[j] + a * b
        return SuperMatrix(d, (self.parity + other.parity) % 2, tuple(tuple(r) for r in out))

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def nonzero_count(self) -> int:
        return sum(1 for r in self.rows for a in r if a)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.dim, self.rows))


def super_bracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """[[a,b]] = ab - (-1)^(deg a deg b) ba for homogeneous a, b."""
    ab = a @ b
    ba = b @ a
    return ab + ba if bracket_sign(a.parity, b.parity) == -1 else ab - ba


@dataclass(frozen=True)
class GeneratorSet:
    """The 2(m+n) generator matrices c_j^+/c_j^- of one (m, n) system."""

    m: int
    n: int
    plus: tuple[SuperMatrix, ...]
    minus: tuple[SuperMatrix, ...]

    @property
    def dim(self) -> int:
        return 2 * self.m + 1 + 2 * self.n

    def gen(self, j: int, sign: int) -> SuperMatrix:
        return self.plus[j - 1] if sign == 1 else self.minus[j - 1]

    def grade(self, j: int) -> int:
        return grade(j, self.m)


def build_generators(m: int, n: int) -> GeneratorSet:
    """Generator matrices for m parafermion and n paraboson pairs.

    Parafermions (even, indices j <= m):
        c_j^+ = sqrt(2)(e_{j,2m+1} - e_{2m+1,j+m})
        c_j^- = sqrt(2)(e_{2m+1,j} - e_{j+m,2m+1})
    Parabosons (odd, indices m+1..m+n, written via s = j-m):
        c_{m+s}^+ = sqrt(2)(e_{2m+1,2m+1+n+s} + e_{2m+1+s,2m+1})
        c_{m+s}^- = sqrt(2)(e_{2m+1,2m+1+s} - e_{2m+1+n+s,2m+1})
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    dim = 2 * m + 1 + 2 * n
    mid = 2 * m + 1
    plus, minus = [], []
    for j in range(1, m + 1):
        plus.append(SuperMatrix.from_entries(dim, 0, {(j, mid): _SQRT2, (mid, j + m): -_SQRT2}))
        minus.append(SuperMatrix.from_entries(dim, 0, {(mid, j): _SQRT2, (j + m, mid): -_SQRT2}))
    for s in range(1, n + 1):
        plus.append(
            SuperMatrix.from_entries(dim, 1, {(mid, mid + n + s): _SQRT2, (mid + s, mid): _SQRT2})
        )
        minus.append(
            SuperMatrix.from_entries(dim, 1, {(mid, mid + s): _SQRT2, (mid + n + s, mid): -_SQRT2})
        )
    return GeneratorSet(m, n, tuple(plus), tuple(minus))


def cartan_basis(m: int, n: int) -> list[SuperMatrix]:
    """Diagonal basis h_1..h_{m+n} of the Cartan subalgebra."""
    dim = 2 * m + 1 + 2 * n
    one = RadicalScalar(1)
    out = []
    for i in range(1, m + 1):
        out.append(SuperMatrix.from_entries(dim, 0, {(i, i): one, (i + m, i + m): -one}))
    for j in range(1, n + 1):
        a, b = 2 * m + 1 + j, 2 * m + 1 + n + j
        out.append(SuperMatrix.from_entries(dim, 0, {(a, a): one, (b, b): -one}))
    return out


def with_sign_flip(gs: GeneratorSet) -> GeneratorSet:
    """Negative control: flip the sign of the first nonzero entry of c_1^+."""
    target = gs.plus[0]
    rows = [list(r) for r in target.rows]
    done = False
    for i in range(target.dim):
        for j in range(target.dim):
            if rows[i][j] and not done:
                rows[i][j] = -rows[i][j]
                done = True
    bad = SuperMatrix(target.dim, target.parity, tuple(tuple(r) for r in rows))
    return GeneratorSet(gs.m, gs.n, (bad,) + gs.plus[1:], gs.minus)


def verify_triple_relations(gs: GeneratorSet) -> list[tuple]:
    """Check every signed triple of the defining relations entrywise.

    Returns violations as (j, k, l, xi, eta, eps, nonzero_entries); the empty
    list certifies the relations hold exactly in this realization.
    """
    r = gs.m + gs.n
    pair = {}
    for j in range(1, r + 1):
        for xi in SIGNS:
            for k in range(1, r + 1):
                for eta in SIGNS:
                    pair[(j, xi, k, eta)] = super_bracket(gs.gen(j, xi), gs.gen(k, eta))
    violations = []
    for j, xi, k, eta, l, eps in signed_triples(r):
        lhs = super_bracket(pair[(j, xi, k, eta)], gs.gen(l, eps))
        rhs = SuperMatrix.zero(gs.dim, lhs.parity)
        for gi, gsign, coeff in triple_rhs(j, xi, k, eta, l, eps, gs.m):
            rhs = rhs + gs.gen(gi, gsign).scale(Fraction(coeff))
        diff = lhs - rhs
        if not diff.is_zero():
            violations.append((j, k, l, xi, eta, eps, diff.nonzero_count()))
    return violations


def build_umn_basis(gs: GeneratorSet) -> dict[tuple[int, int], SuperMatrix]:
    """The (m+n)^2 elements E_jk = (1/2)[[c_j^+, c_k^-]], a gl(m|n) basis."""
    r = gs.m + gs.n
    half = Fraction(1, 2)
    return {
        (j, k): super_bracket(gs.gen(j, 1), gs.gen(k, -1)).scale(half)
        for j in range(1, r + 1)
        for k in range(1, r + 1)
    }


def check_umn_relations(gs: GeneratorSet) -> list[tuple]:
    """gl(m|n) relations [[E_ij,E_kl]] = d_jk E_il - (-1)^(..) d_li E_kj."""
    r = gs.m + gs.n
    e = build_umn_basis(gs)
    deg = {key: (gs.grade(key[0]) + gs.grade(key[1])) % 2 for key in e}
    violations = []
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            a = SuperMatrix(gs.dim, deg[(i, j)], e[(i, j)].rows)
            for k in range(1, r + 1):
                for l in range(1, r + 1):
                    b = SuperMatrix(gs.dim, deg[(k, l)], e[(k, l)].rows)
                    lhs = super_bracket(a, b)
                    rhs = SuperMatrix.zero(gs.dim)
                    if j == k:
                        rhs = rhs + e[(i, l)]
                    if l == i:
                        s = -1 if (deg[(i, j)] and deg[(k, l)]) else 1
                        rhs = rhs - e[(k, j)].scale(Fraction(s))
                    if not (lhs - rhs).is_zero():
                        violations.append((i, j, k, l))
    return violations


def _matrices_to_rows(mats: list[SuperMatrix]) -> list[list[Fraction]]:
    """Flatten matrices to rational coordinate rows over a shared radical basis."""
    rads = sorted({d for mat in mats for row in mat.rows for v in row for _, d in v.terms})
    if not rads:
        rads = [1]
    pos = {d: i for i, d in enumerate(rads)}
    rows = []
    for mat in mats:
        vec = [Fraction(0)] * (mat.dim * mat.dim * len(rads))
        for i, row in enumerate(mat.rows):
            for j, v in enumerate(row):
                for c, d in v.terms:
                    vec[(i * mat.dim + j) * len(rads) + pos[d]] = c
        rows.append(vec)
    return rows


def even_subalgebra_report(gs: GeneratorSet) -> dict:
    """Closure of the stated even-subalgebra spanning set under brackets.

    The set {[c_i^xi, c_k^eta], c_l^eps : i,k,l <= m} u {{c_{m+j}^xi, c_{m+s}^eta}}
    must close onto its own rational span, of dimension
    dim so(2m+1) + dim sp(2n) = m(2m+1) + n(2n+1).
    """
    m, n = gs.m, gs.n
    span: list[SuperMatrix] = []
    for i in range(1, m + 1):
        for k in range(1, m + 1):
            for xi in SIGNS:
                for eta in SIGNS:
                    span.append(super_bracket(gs.gen(i, xi), gs.gen(k, eta)))
    for l in range(1, m + 1):
        for eps in SIGNS:
            span.append(gs.gen(l, eps))
    for j in range(m + 1, m + n + 1):
        for s in range(m + 1, m + n + 1):
            for xi in SIGNS:
                for eta in SIGNS:
                    span.append(super_bracket(gs.gen(j, xi), gs.gen(s, eta)))
    brackets = []
    for a in span:
        for b in span:
            br = super_bracket(a, b)
            if not br.is_zero():
                brackets.append(br)
    # flatten everything against one shared radical basis so rows align;
    # closure holds iff adjoining all brackets does not grow the span
    all_rows = _matrices_to_rows(span + brackets)
    rows = all_rows[: len(span)]
    span_rank = rank(rows)
    expected = m * (2 * m + 1) + n * (2 * n + 1)
    closed = rank(all_rows) == span_rank
    return {"span_dim": span_rank, "expected_dim": expected, "closed": closed}


def weight_consistency_violations(gs: GeneratorSet) -> list[tuple]:
    """[h_i, c_j^s] must equal s*delta_ij*c_j^s for every Cartan element."""
    hs = cartan_basis(gs.m, gs.n)
    out = []
    for i, h in enumerate(hs, start=1):
        for j in range(1, gs.m + gs.n + 1):
            for sign in SIGNS:
                c = gs.gen(j, sign)
                lhs = super_bracket(h, c)
                coeff = Fraction(sign if i == j else 0)
                if not (lhs - c.scale(coeff)).is_zero():
                    out.append((i, j, sign))
    return out
