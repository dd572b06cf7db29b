"""Deterministic exact linear algebra over the rationals.

Dense matrices of exact rationals, reduced row echelon form, kernels and
the subspace lattice (sum, intersection, membership, quotient coordinates).
RREF is the canonical form everywhere: two subspaces are equal iff their
basis matrices are identical, so no tolerance parameter exists anywhere.

All public values are immutable; operations are pure functions.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .scalars import ONE, ZERO, Q

Vector = tuple  # tuple of Q, used descriptively in signatures


def _as_q_row(row) -> tuple:
    return tuple(Q(x) for x in row)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "Matrix":
        rows = [_as_q_row(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return Matrix(len(rows), cols, tuple(rows))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            n, n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)))

    def apply(self, v) -> list:
        """Matrix-vector product (v has ``cols`` coordinates)."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return out

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]


def _rref_rows(rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place RREF of a list of row lists; returns (rows, pivot columns).

    Zero rows are dropped; remaining rows are sorted by pivot column and
    fully reduced (unit pivots, zeros above and below).
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    piv_row = 0
    nrows = len(rows)
    for col in range(ncols):
        sel = None
        for i in range(piv_row, nrows):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[piv_row], rows[sel] = rows[sel], rows[piv_row]
        inv = rows[piv_row][col]
        if inv != 1:
            row = rows[piv_row]
            for c in range(col, ncols):
                if row[c]:
                    row[c] /= inv
        prow = rows[piv_row]
        for i in range(nrows):
            if i == piv_row:
                continue
            f = rows[i][col]
            if f:
                ri = rows[i]
                for c in range(col, ncols):
                    if prow[c]:
                        ri[c] -= f * prow[c]
        pivots.append(col)
        piv_row += 1
        if piv_row == nrows:
            break
    return [rows[i] for i in range(piv_row)], pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Unique RREF of ``m`` with its pivot columns and rank.

    The returned matrix keeps the shape of ``m``; trailing zero rows are
    retained so that ``rref(rref(m)) == rref(m)`` entrywise.
    """
    work = [list(row) for row in m.entries]
    reduced, pivots = _rref_rows(work)
    zero_row = tuple(ZERO for _ in range(m.cols))
    padded = [tuple(r) for r in reduced] + [zero_row] * (m.rows - len(reduced))
    return Matrix(m.rows, m.cols, tuple(padded)), tuple(pivots), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held as an RREF basis matrix with no zero rows."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise ValueError("basis width differs from ambient dimension")

    @staticmethod
    def from_vectors(ambient_dim: int, vectors) -> "Subspace":
        work = [list(_as_q_row(v)) for v in vectors]
        for v in work:
            if len(v) != ambient_dim:
                raise ValueError("vector length differs from ambient dimension")
        reduced, _ = _rref_rows(work)
        return Subspace(ambient_dim, Matrix.from_rows(reduced, ambient_dim))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix(0, ambient_dim, ()))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis.entries:
            for c, x in enumerate(row):
                if x:
                    out.append(c)
                    break
        return tuple(out)

    def reduce(self, v) -> list:
        """Remainder of v after eliminating this subspace's pivots."""
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from ambient dimension")
        w = [Q(x) for x in v]
        for row, p in zip(self.basis.entries, self.pivots):
            f = w[p]
            if f:
                for c in range(p, self.ambient_dim):
                    if row[c]:
                        w[c] -= f * row[c]
        return w

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.entries)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(
        a.ambient_dim, list(a.basis.entries) + list(b.basis.entries)
    )


def kernel_basis(m: Matrix) -> Subspace:
    """Exact kernel {v : m v = 0} as a subspace of Q^cols."""
    reduced, pivots, _ = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -reduced.entries[r][f]
        vectors.append(v)
    return Subspace.from_vectors(m.cols, vectors)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Exact intersection of two subspaces of the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    qb = quotient_coords(b.ambient_dim, b)
    if qb.dim == 0:
        return a
    # columns: coefficients over a's basis rows; rows: quotient-by-b coords
    cols = [qb.apply(row) for row in a.basis.entries]
    sys = Matrix.from_rows(
        [[cols[j][i] for j in range(a.dim)] for i in range(qb.dim)], a.dim
    )
    coeff_kernel = kernel_basis(sys)
    vectors = []
    for coeffs in coeff_kernel.basis.entries:
        v = [ZERO] * a.ambient_dim
        for c, row in zip(coeffs, a.basis.entries):
            if c:
                for k, x in enumerate(row):
                    if x:
                        v[k] += c * x
        vectors.append(v)
    return Subspace.from_vectors(a.ambient_dim, vectors)


@dataclass(frozen=True)
class QuotientMap:
    """Surjective linear map Q^n -> Q^(n-dim s) whose kernel is exactly s.

    Coordinates of the quotient are the non-pivot coordinates of the RREF
    complement, taken in increasing column order, so the map is canonical.
    ``lift`` is the right inverse sending quotient unit k to the ambient
    unit vector at ``lift_cols[k]``.
    """

    ambient_dim: int
    dim: int
    matrix: Matrix  # dim x ambient_dim
    lift_cols: tuple[int, ...]

    def apply(self, v) -> list:
        return self.matrix.apply(v)

    def lift(self, qv) -> list:
        if len(qv) != self.dim:
            raise ValueError("vector length does not match quotient dimension")
        out = [ZERO] * self.ambient_dim
        for k, col in enumerate(self.lift_cols):
            out[col] = Q(qv[k])
        return out


def quotient_coords(ambient_dim: int, s: Subspace) -> QuotientMap:
    if s.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    pivots = s.pivots
    pivot_set = set(pivots)
    free = [c for c in range(ambient_dim) if c not in pivot_set]
    rows = []
    for f in free:
        row = [ZERO] * ambient_dim
        row[f] = ONE
        for r, p in enumerate(pivots):
            row[p] = -s.basis.entries[r][f]
        rows.append(tuple(row))
    return QuotientMap(
        ambient_dim, len(free), Matrix(len(free), ambient_dim, tuple(rows)), tuple(free)
    )


class SpanBuilder:
    """Incrementally grown subspace kept in RREF after every insertion.

    The resulting basis is the canonical RREF of the span, so the final
    value does not depend on insertion order.
    """

    def __init__(self, ambient_dim: int, start: Subspace | None = None):
        self.ambient_dim = ambient_dim
        self._rows: list[list] = []
        self._pivots: list[int] = []
        if start is not None:
            for row in start.basis.entries:
                self.add(row)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v) -> list:
        w = [Q(x) for x in v]
        for row, p in zip(self._rows, self._pivots):
            f = w[p]
            if f:
                for c in range(p, self.ambient_dim):
                    if row[c]:
                        w[c] -= f * row[c]
        return w

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        """Insert v into the span; returns True iff the dimension grew."""
        w = self.reduce(v)
        lead = None
        for c, x in enumerate(w):
            if x:
                lead = c
                break
        if lead is None:
            return False
        inv = w[lead]
        if inv != 1:
            for c in range(lead, self.ambient_dim):
                if w[c]:
                    w[c] /= inv
        for row in self._rows:
            f = row[lead]
            if f:
                for c in range(lead, self.ambient_dim):
                    if w[c]:
                        row[c] -= f * w[c]
        at = bisect.bisect_left(self._pivots, lead)
        self._pivots.insert(at, lead)
        self._rows.insert(at, w)
        return True

    def subspace(self) -> Subspace:
        return Subspace(
            self.ambient_dim, Matrix.from_rows([tuple(r) for r in self._rows], self.ambient_dim)
        )
