"""Finite-dimensional Lie superalgebras given by exact structure constants.

A ``SuperAlgebra`` stores a Z2-graded basis (even block first, odd block
second; all parity bookkeeping is positional) and the full table of basis
brackets.  ``validate`` checks the three defining identity families --
grading, super-skew-symmetry (with vanishing even self-brackets) and the
graded Jacobi identity -- exactly, reporting violations as data.

Structural invariants (center, derived subalgebra, lower central series),
graded ideals, quotients and direct sums all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    Matrix,
    QuotientMap,
    Subspace,
    kernel_basis,
    quotient_coords,
)
from .scalars import ONE, ZERO, Q

EVEN = 0
ODD = 1

_PARITY_NAMES = {EVEN: "even", ODD: "odd"}


def parity_name(p: int | None) -> str:
    return "mixed" if p is None else _PARITY_NAMES[p]


class NotIdealError(ValueError):
    """A subspace failed the graded-ideal check; carries a witness pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Violation:
    """One failed defining identity, with the indices and exact residual."""

    identity: str  # grading | super-skew-symmetry | even-self-bracket | graded-jacobi
    indices: tuple
    residual: tuple

    def describe(self, names) -> str:
        where = ",".join(names[i] for i in self.indices)
        res = "(" + ", ".join(str(x) for x in self.residual) + ")"
        return f"{self.identity} violated at ({where}): residual {res}"


@dataclass(frozen=True)
class SuperAlgebra:
    """Z2-graded algebra with super bracket, in structure-constant form.

    ``structure[i][j]`` is the coordinate vector of the bracket of basis
    elements i and j.  Immutable after construction; every operation on it
    is a pure function.
    """

    name: str
    basis_names: tuple
    parities: tuple  # 0 even / 1 odd, even block first
    structure: tuple  # structure[i][j] = tuple of Q, length dim

    def __post_init__(self):
        d = len(self.basis_names)
        if len(self.parities) != d or len(self.structure) != d:
            raise ValueError("table sizes disagree with basis size")
        if list(self.parities) != sorted(self.parities):
            raise ValueError("basis must list the even block before the odd block")
        if len(set(self.basis_names)) != d:
            raise ValueError("duplicate basis names")
        sparse = []
        for row in self.structure:
            if len(row) != d or any(len(v) != d for v in row):
                raise ValueError("structure table is not dim x dim x dim")
            per_i = []
            for j, vec in enumerate(row):
                terms = tuple((k, c) for k, c in enumerate(vec) if c)
                if terms:
                    per_i.append((j, terms))
            sparse.append(tuple(per_i))
        # derived sparse view; excluded from equality and representation
        object.__setattr__(self, "_sparse", tuple(sparse))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def even_dim(self) -> int:
        return sum(1 for p in self.parities if p == EVEN)

    @property
    def odd_dim(self) -> int:
        return self.dim - self.even_dim

    def parity(self, i: int) -> int:
        return self.parities[i]

    def block(self, parity: int) -> range:
        m = self.even_dim
        return range(m) if parity == EVEN else range(m, self.dim)

    def vector_parity(self, v) -> int | None:
        """Parity of a homogeneous coordinate vector, None if mixed/zero."""
        m = self.even_dim
        has_even = any(v[:m])
        has_odd = any(v[m:])
        if has_even and has_odd:
            return None
        if has_odd:
            return ODD
        if has_even:
            return EVEN
        return None

    def basis_vector(self, i: int) -> tuple:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))


def bracket(a: SuperAlgebra, u, v) -> list:
    """Bilinear extension of the structure table to coordinate vectors."""
    d = a.dim
    if len(u) != d or len(v) != d:
        raise ValueError("vector length differs from algebra dimension")
    out = [ZERO] * d
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, terms in a._sparse[i]:
            vj = v[j]
            if not vj:
                continue
            f = ui * vj
            for k, c in terms:
                out[k] += f * c
    return out


def _sign(pi: int, pj: int) -> Q:
    return -ONE if (pi and pj) else ONE


def validate(a: SuperAlgebra) -> list[Violation]:
    """Exact check of all defining identities; empty list means valid."""
    violations: list[Violation] = []
    d = a.dim
    par = a.parities
    # grading: the bracket of parities (p,q) may only hit coordinates of parity p+q
    for i in range(d):
        for j in range(d):
            want = (par[i] + par[j]) & 1
            bad = [a.structure[i][j][k] if par[k] != want else ZERO for k in range(d)]
            if any(bad):
                violations.append(Violation("grading", (i, j), tuple(bad)))
    # super-skew-symmetry: [x,y] + (-1)^{|x||y|}[y,x] = 0
    for i in range(d):
        for j in range(i, d):
            s = _sign(par[i], par[j])
            res = [a.structure[i][j][k] + s * a.structure[j][i][k] for k in range(d)]
            if any(res):
                violations.append(Violation("super-skew-symmetry", (i, j), tuple(res)))
    # even self-brackets vanish
    for i in range(d):
        if par[i] == EVEN and any(a.structure[i][i]):
            violations.append(
                Violation("even-self-bracket", (i,), tuple(a.structure[i][i]))
            )
    # graded Jacobi:
    # (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
    basis = [a.basis_vector(i) for i in range(d)]
    for i in range(d):
        for j in range(i, d):
            for k in range(j, d):
                t1 = bracket(a, basis[i], a.structure[j][k])
                t2 = bracket(a, basis[j], a.structure[k][i])
                t3 = bracket(a, basis[k], a.structure[i][j])
                s1 = _sign(par[i], par[k])
                s2 = _sign(par[j], par[i])
                s3 = _sign(par[k], par[j])
                res = [s1 * t1[c] + s2 * t2[c] + s3 * t3[c] for c in range(d)]
                if any(res):
                    violations.append(Violation("graded-jacobi", (i, j, k), tuple(res)))
    return violations


@dataclass(frozen=True)
class GradedSubspace:
    """Pair of ordinary subspaces, one per parity block."""

    even: Subspace
    odd: Subspace

    @property
    def dim(self) -> int:
        return self.even.dim + self.odd.dim

    @staticmethod
    def zero(a: SuperAlgebra) -> "GradedSubspace":
        return GradedSubspace(Subspace.zero(a.even_dim), Subspace.zero(a.odd_dim))

    @staticmethod
    def full(a: SuperAlgebra) -> "GradedSubspace":
        return GradedSubspace(Subspace.full(a.even_dim), Subspace.full(a.odd_dim))

    @staticmethod
    def from_homogeneous_vectors(a: SuperAlgebra, vectors) -> "GradedSubspace":
        """Split full-space vectors by parity block and span each block.

        Every vector must be homogeneous (supported in a single block).
        """
        m = a.even_dim
        evens, odds = [], []
        for v in vectors:
            p = a.vector_parity(v)
            if p == EVEN:
                evens.append(v[:m])
            elif p == ODD:
                odds.append(v[m:])
            elif any(v):
                raise ValueError("mixed-parity vector in graded span")
        return GradedSubspace(
            Subspace.from_vectors(m, evens), Subspace.from_vectors(a.dim - m, odds)
        )

    def embedded_basis(self, a: SuperAlgebra) -> list[tuple]:
        """Basis as full-space vectors: even rows first, then odd rows."""
        m = a.even_dim
        n = a.dim - m
        out = []
        for row in self.even.basis.entries:
            out.append(tuple(row) + tuple(ZERO for _ in range(n)))
        for row in self.odd.basis.entries:
            out.append(tuple(ZERO for _ in range(m)) + tuple(row))
        return out

    def embedded_parities(self, a: SuperAlgebra) -> list[int]:
        return [EVEN] * self.even.dim + [ODD] * self.odd.dim

    def to_full_subspace(self, a: SuperAlgebra) -> Subspace:
        return Subspace.from_vectors(a.dim, self.embedded_basis(a))

    def contains_full(self, a: SuperAlgebra, v) -> bool:
        m = a.even_dim
        return self.even.contains(v[:m]) and self.odd.contains(v[m:])


def center(a: SuperAlgebra) -> GradedSubspace:
    """Exact kernel of the joint adjoint map, split by parity."""
    d = a.dim
    parts = []
    for parity in (EVEN, ODD):
        block = list(a.block(parity))
        rows = []
        for j in range(d):
            for k in range(d):
                rows.append([a.structure[i][j][k] for i in block])
        mat = Matrix.from_rows(rows, len(block)) if block else Matrix(0, 0, ())
        parts.append(kernel_basis(mat) if block else Subspace.zero(0))
    return GradedSubspace(parts[0], parts[1])


def derived(a: SuperAlgebra) -> GradedSubspace:
    """Span of all basis brackets: the derived subalgebra."""
    vectors = [a.structure[i][j] for i in range(a.dim) for j in range(a.dim)]
    return GradedSubspace.from_homogeneous_vectors(a, vectors)


def _bracket_span(a: SuperAlgebra, s: GradedSubspace) -> GradedSubspace:
    """Span of brackets of s-basis vectors with all basis elements."""
    vectors = []
    for v in s.embedded_basis(a):
        for j in range(a.dim):
            vectors.append(bracket(a, v, a.basis_vector(j)))
    return GradedSubspace.from_homogeneous_vectors(a, vectors)


def lower_central_series(a: SuperAlgebra) -> tuple[list[GradedSubspace], int | None]:
    """Terms of the descending central series and the nilpotency class.

    Returns (series, c) with series = [L^1, L^2, ...]; c is None when the
    series stabilises at a nonzero term (not nilpotent).
    """
    series = [GradedSubspace.full(a)]
    current = series[0]
    while True:
        nxt = _bracket_span(a, current)
        if nxt.dim == 0:
            series.append(nxt)
            return series, len(series) - 1
        if nxt.dim == current.dim:
            return series, None
        series.append(nxt)
        current = nxt


def is_graded_ideal(a: SuperAlgebra, s: GradedSubspace) -> bool:
    return _ideal_witness(a, s) is None


def _ideal_witness(a: SuperAlgebra, s: GradedSubspace):
    for v in s.embedded_basis(a):
        for j in range(a.dim):
            w = bracket(a, v, a.basis_vector(j))
            if not s.contains_full(a, w):
                return (v, j, tuple(w))
    return None


def direct_sum(a: SuperAlgebra, b: SuperAlgebra) -> SuperAlgebra:
    """Block-diagonal sum with the basis reordered even-first."""
    ma, mb = a.even_dim, b.even_dim
    na, nb = a.odd_dim, b.odd_dim
    d = a.dim + b.dim

    def a_index(i: int) -> int:
        return i if i < ma else ma + mb + (i - ma)

    def b_index(i: int) -> int:
        return ma + i if i < mb else ma + mb + na + (i - mb)

    names = [""] * d
    for i, nm in enumerate(a.basis_names):
        names[a_index(i)] = f"{nm}.1"
    for i, nm in enumerate(b.basis_names):
        names[b_index(i)] = f"{nm}.2"
    parities = tuple([EVEN] * (ma + mb) + [ODD] * (na + nb))
    table = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for src, ix in ((a, a_index), (b, b_index)):
        for i in range(src.dim):
            for j in range(src.dim):
                cij = src.structure[i][j]
                row = table[ix(i)][ix(j)]
                for k, c in enumerate(cij):
                    if c:
                        row[ix(k)] = c
    structure = tuple(tuple(tuple(v) for v in row) for row in table)
    return SuperAlgebra(f"{a.name}(+){b.name}", tuple(names), parities, structure)


@dataclass(frozen=True)
class GradedQuotientMap:
    """Projection of a graded space modulo a graded subspace, per block."""

    source_even_dim: int
    even: QuotientMap
    odd: QuotientMap

    @property
    def dim(self) -> int:
        return self.even.dim + self.odd.dim

    def apply(self, v) -> list:
        m = self.source_even_dim
        return self.even.apply(v[:m]) + self.odd.apply(v[m:])

    def lift(self, qv) -> list:
        me = self.even.dim
        return self.even.lift(qv[:me]) + self.odd.lift(qv[me:])


def quotient(
    a: SuperAlgebra,
    ideal: GradedSubspace,
    name: str | None = None,
    check: bool = True,
) -> tuple[SuperAlgebra, GradedQuotientMap]:
    """Quotient superalgebra by a graded ideal, with its projection.

    ``check=False`` skips the exact ideal verification; callers may pass it
    only for subspaces that are ideals by construction.
    """
    if check:
        witness = _ideal_witness(a, ideal)
        if witness is not None:
            _, j, _ = witness
            raise NotIdealError(
                f"not an ideal of {a.name}: bracket with basis element "
                f"{a.basis_names[j]} escapes the subspace",
                witness=witness,
            )
    m = a.even_dim
    qe = quotient_coords(m, ideal.even)
    qo = quotient_coords(a.dim - m, ideal.odd)
    proj = GradedQuotientMap(m, qe, qo)
    d = proj.dim
    names = [f"[{a.basis_names[c]}]" for c in qe.lift_cols]
    names += [f"[{a.basis_names[m + c]}]" for c in qo.lift_cols]
    parities = tuple([EVEN] * qe.dim + [ODD] * qo.dim)
    lifts = [proj.lift([ONE if t == s else ZERO for t in range(d)]) for s in range(d)]
    structure = tuple(
        tuple(tuple(proj.apply(bracket(a, lifts[i], lifts[j]))) for j in range(d))
        for i in range(d)
    )
    out = SuperAlgebra(
        name or f"{a.name}/I", tuple(names), parities, structure
    )
    return out, proj


class BracketTableError(ValueError):
    """Inconsistent or ill-formed explicit bracket table."""


def algebra_from_brackets(name, even_names, odd_names, brackets) -> SuperAlgebra:
    """Build a SuperAlgebra from sparse bracket data.

    ``brackets`` maps (left_symbol, right_symbol) to {target_symbol: value};
    omitted brackets are zero.  The mirror of every listed pair is filled in
    by the super-skew rule; listing both orders is allowed only when the two
    entries already satisfy it.
    """
    even_names = tuple(even_names)
    odd_names = tuple(odd_names)
    names = even_names + odd_names
    if len(set(names)) != len(names):
        raise BracketTableError("duplicate basis symbols")
    index = {nm: i for i, nm in enumerate(names)}
    parities = tuple([EVEN] * len(even_names) + [ODD] * len(odd_names))
    d = len(names)
    explicit: dict[tuple[int, int], list] = {}
    for (left, right), value in brackets.items():
        for sym in (left, right):
            if sym not in index:
                raise BracketTableError(f"unknown basis symbol {sym!r}")
        vec = [ZERO] * d
        for target, coeff in value.items():
            if target not in index:
                raise BracketTableError(f"unknown basis symbol {target!r}")
            vec[index[target]] = Q(coeff)
        key = (index[left], index[right])
        if key in explicit:
            raise BracketTableError(f"bracket [{left},{right}] listed twice")
        explicit[key] = vec
    table = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for (i, j), vec in explicit.items():
        table[i][j] = list(vec)
    for (i, j), vec in explicit.items():
        if i == j:
            continue
        s = _sign(parities[i], parities[j])
        mirror = [-s * x for x in vec]
        if (j, i) in explicit:
            if explicit[(j, i)] != mirror:
                raise BracketTableError(
                    f"brackets [{names[i]},{names[j]}] and [{names[j]},{names[i]}] "
                    "are inconsistent with the super-skew rule"
                )
        else:
            table[j][i] = mirror
    structure = tuple(tuple(tuple(v) for v in row) for row in table)
    return SuperAlgebra(name, names, parities, structure)
