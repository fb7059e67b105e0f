"""Exact linear algebra over the residue rings ``Z/nZ``.

Row conventions are used throughout: a matrix acts on row vectors from the
right, so the row span of ``A`` is ``{x A}`` and the kernel of ``A`` is
``{x : x A = 0}``.

Canonical forms are Howell forms. Over ``Z/n`` with composite ``n`` an
echelon form does not determine the row span; the Howell form does, so two
matrices have the same row span exactly when their Howell forms coincide.
The raw helpers (``howell_rows``, ``reduce_vector`` ...) work on tuples of
tuples and are memoised; ``ZnMatrix`` is the public value type.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ContractViolation

Row = tuple[int, ...]
Rows = tuple[Row, ...]

MAX_MODULUS = 2**31


@dataclass(frozen=True)
class ZnMatrix:
    """An immutable matrix with entries reduced modulo ``modulus``."""

    modulus: int
    rows: Rows
    ncols: int

    def __post_init__(self):
        if not 2 <= self.modulus <= MAX_MODULUS:
            raise ContractViolation(f"modulus must lie in [2, 2^31], got {self.modulus}")
        if self.ncols < 0:
            raise ContractViolation("ncols must be nonnegative")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ContractViolation(
                    f"row {row} has length {len(row)}, expected {self.ncols}"
                )
            if any(not 0 <= x < self.modulus for x in row):
                raise ContractViolation(f"row {row} is not reduced mod {self.modulus}")

    @classmethod
    def from_rows(cls, modulus: int, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> ZnMatrix:
        rows = [tuple(int(x) % modulus for x in row) for row in rows]
        if ncols is None:
            if not rows:
                raise ContractViolation("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(modulus, tuple(rows), ncols)

    @classmethod
    def zeros(cls, modulus: int, nrows: int, ncols: int) -> ZnMatrix:
        return cls(modulus, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, modulus: int, size: int) -> ZnMatrix:
        return cls(modulus, _identity_rows(size), size)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def row_span(self) -> frozenset[Row]:
        """Enumerate the row span (use only at small sizes)."""
        return frozenset(span_elements(self.modulus, howell_rows(self.modulus, self.rows, self.ncols), self.ncols))

    def __matmul__(self, other: ZnMatrix) -> ZnMatrix:
        if self.modulus != other.modulus or self.ncols != other.nrows:
            raise ContractViolation("incompatible matrices")
        n = self.modulus
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % n for col in cols)
            for row in self.rows
        )
        return ZnMatrix(n, out, other.ncols)


# --------------------------------------------------------------------------
# integer helpers


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b)``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def unit_normalizer(a: int, n: int) -> int:
    """A unit ``u`` of ``Z/n`` with ``u*a = gcd(a, n) (mod n)``."""
    a %= n
    if a == 0:
        return 1
    g = math.gcd(a, n)
    n1 = n // g
    u = pow(a // g, -1, n1) if n1 > 1 else 1
    while math.gcd(u, n) != 1:
        u += n1
    return u % n


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _identity_rows(size: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def _pivot(row: Row) -> int:
    for c, x in enumerate(row):
        if x:
            return c
    return -1


# --------------------------------------------------------------------------
# raw Howell machinery


@lru_cache(maxsize=200_000)
def howell_rows(n: int, rows: Rows, ncols: int) -> Rows:
    """Howell form of the row span of ``rows`` (zero rows dropped)."""
    pending = [[x % n for x in r] for r in rows]
    pending = [r for r in pending if any(r)]
    out: list[list[int]] = []
    for c in range(ncols):
        pivot = None
        rest = []
        for row in pending:
            if row[c] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[c], row[c]
            g, s, t = xgcd(a, b)
            u, v = b // g, a // g
            new_pivot = [(s * x + t * y) % n for x, y in zip(pivot, row)]
            new_row = [(v * y - u * x) % n for x, y in zip(pivot, row)]
            pivot = new_pivot
            if any(new_row):
                rest.append(new_row)
        if pivot is None:
            pending = rest
            continue
        unit = unit_normalizer(pivot[c], n)
        if unit != 1:
            pivot = [(unit * x) % n for x in pivot]
        # The annihilator multiple keeps the span saturated below this pivot.
        ann = n // pivot[c]
        if ann != n:
            extra = [(ann * x) % n for x in pivot]
            if any(extra):
                rest.append(extra)
        out.append(pivot)
        pending = rest
    pivots = [_pivot(r) for r in out]
    for i, row in enumerate(out):
        c, g = pivots[i], row[pivots[i]]
        for j in range(i):
            q = out[j][c] // g
            if q:
                out[j] = [(x - q * y) % n for x, y in zip(out[j], row)]
    return tuple(tuple(r) for r in out)


def reduce_vector(n: int, hrows: Rows, v: Sequence[int]) -> Row:
    """Canonical representative of ``v`` modulo the span of Howell rows."""
    v = [x % n for x in v]
    for row in hrows:
        c = _pivot(row)
        q = v[c] // row[c]
        if q:
            v = [(x - q * y) % n for x, y in zip(v, row)]
    return tuple(v)


def in_span(n: int, hrows: Rows, v: Sequence[int]) -> bool:
    v = [x % n for x in v]
    for row in hrows:
        c = _pivot(row)
        if v[c] % row[c]:
            return False
        q = v[c] // row[c]
        if q:
            v = [(x - q * y) % n for x, y in zip(v, row)]
    return not any(v)


def span_size(n: int, hrows: Rows) -> int:
    size = 1
    for row in hrows:
        size *= n // row[_pivot(row)]
    return size


def span_elements(n: int, hrows: Rows, ncols: int) -> Iterator[Row]:
    """Each element of a Howell span exactly once."""
    ranges = [range(n // row[_pivot(row)]) for row in hrows]
    for coeffs in itertools.product(*ranges):
        v = [0] * ncols
        for q, row in zip(coeffs, hrows):
            if q:
                v = [(x + q * y) % n for x, y in zip(v, row)]
        yield tuple(v)


def quotient_reps(n: int, hrows: Rows, ncols: int) -> Iterator[Row]:
    """Canonical coset representatives of ``(Z/n)^ncols`` modulo a Howell span,
    in lexicographic order."""
    bounds = [n] * ncols
    for row in hrows:
        c = _pivot(row)
        bounds[c] = row[c]
    return itertools.product(*(range(b) for b in bounds))


@lru_cache(maxsize=100_000)
def kernel_rows(n: int, rows: Rows, ncols: int) -> Rows:
    """Howell rows of ``{x : x A = 0}`` where ``A`` has the given rows."""
    m = len(rows)
    if m == 0:
        return ()
    aug = tuple(tuple(r) + e for r, e in zip(rows, _identity_rows(m)))
    h = howell_rows(n, aug, ncols + m)
    ker = tuple(r[ncols:] for r in h if not any(r[:ncols]))
    return howell_rows(n, ker, m)


def solve_rows(n: int, rows: Rows, ncols: int, b: Sequence[int]) -> Optional[Row]:
    """One ``x`` with ``x A = b``, or ``None``."""
    m = len(rows)
    if len(b) != ncols:
        raise ContractViolation(f"right-hand side has length {len(b)}, expected {ncols}")
    if m == 0:
        return () if not any(x % n for x in b) else None
    aug = tuple(tuple(r) + e for r, e in zip(rows, _identity_rows(m)))
    h = howell_rows(n, aug, ncols + m)
    v = [x % n for x in b] + [0] * m
    for row in h:
        c = _pivot(row)
        if c >= ncols:
            break
        if v[c] % row[c]:
            return None
        q = v[c] // row[c]
        if q:
            v = [(x - q * y) % n for x, y in zip(v, row)]
    if any(v[:ncols]):
        return None
    return tuple((-x) % n for x in v[ncols:])


def intersect_rows(n: int, a: Rows, b: Rows, ncols: int) -> Rows:
    """Howell rows of ``span(a) ∩ span(b)``."""
    if not a or not b:
        return ()
    stacked = tuple(a) + tuple(b)
    ker = kernel_rows(n, stacked, ncols)
    k = len(a)
    out = []
    for x in ker:
        xa = x[:k]
        out.append(tuple(sum(c * r[j] for c, r in zip(xa, a)) % n for j in range(ncols)))
    return howell_rows(n, tuple(out), ncols)


# --------------------------------------------------------------------------
# integer Smith normal form


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, as a divisor chain."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    k = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(m, k):
        entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, k) if a[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, k):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t, k) if a[t][j]]
                _, pi, pj = min(cands)
                a[t], a[pi] = a[pi], a[t]
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, k) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


# --------------------------------------------------------------------------
# public operations


def _check(A: ZnMatrix) -> ZnMatrix:
    if not isinstance(A, ZnMatrix):
        raise ContractViolation(f"expected a ZnMatrix, got {type(A).__name__}")
    return A


def howell_form(A: ZnMatrix) -> ZnMatrix:
    """The unique Howell form of ``A``'s row span, zero rows removed.

    >>> howell_form(ZnMatrix.from_rows(4, [[2, 2], [0, 2]])).tolist()
    [[2, 0], [0, 2]]
    """
    A = _check(A)
    return ZnMatrix(A.modulus, howell_rows(A.modulus, A.rows, A.ncols), A.ncols)


def kernel(A: ZnMatrix) -> ZnMatrix:
    """Rows generating ``{x : x A = 0}``, in Howell form."""
    A = _check(A)
    return ZnMatrix(A.modulus, kernel_rows(A.modulus, A.rows, A.ncols), A.nrows)


def solve(A: ZnMatrix, b: Sequence[int]) -> Optional[tuple[Row, ZnMatrix]]:
    """Solve ``x A = b``.

    Returns ``(particular, kernel(A))`` or ``None`` when there is no
    solution. The full solution set is ``particular + rowspan(kernel)``.
    """
    A = _check(A)
    if len(b) != A.ncols:
        raise ContractViolation(f"b has length {len(b)} but A has {A.ncols} columns")
    x = solve_rows(A.modulus, A.rows, A.ncols, b)
    if x is None:
        return None
    return x, kernel(A)


def invariant_factors(A: ZnMatrix) -> list[int]:
    """Invariant factors of the cokernel of ``A`` on ``A.ncols`` generators.

    The cokernel ``(Z/n)^k / rowspan(A)`` is isomorphic to the direct sum of
    ``Z/d`` over the returned chain ``d_1 | d_2 | ...``; trivial factors are
    omitted and free summands appear as ``n``.
    """
    A = _check(A)
    n, k = A.modulus, A.ncols
    lifted = [list(r) for r in A.rows] + [[n if i == j else 0 for j in range(k)] for i in range(k)]
    diag = smith_diagonal(lifted) if k else []
    return sorted(math.gcd(d, n) for d in diag if math.gcd(d, n) != 1)
