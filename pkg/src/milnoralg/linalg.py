"""Exact rational linear algebra and canonical subspaces of graded pieces.

Matrices are plain lists of rows with exact rational entries; no rounding
happens anywhere. A linear map between graded pieces is stored in the
column convention: the matrix of phi: S_k -> S_m has dim(S_m) rows and
dim(S_k) columns, and column j is phi applied to the j-th basis monomial.

Subspaces of a graded piece S_k are always kept with a basis in reduced
row-echelon form. RREF is the unique canonical basis of a row space, so
two subspaces are equal exactly when their basis matrices are identical
entry for entry; this is what makes bit-exact equality of graded pieces,
and hence injectivity tests for the maps built on them, meaningful.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .monomials import dim_graded, factorial_weights
from .polynomials import HomogeneousPolynomial
from .rationals import ONE, Q, ZERO


class SpanBuilder:
    """Incremental reduced row-echelon basis of a growing row space.

    Rows are inserted one at a time; the internal state is always a full
    RREF (pivot columns strictly increasing, pivots 1, pivot columns
    cleared elsewhere, no zero rows). The final basis is the unique RREF
    of the row space, independent of insertion order, so results are
    deterministic and canonical by construction.
    """

    __slots__ = ("length", "rows", "pivots")

    def __init__(self, length: int):
        self.length = length
        self.rows: list = []
        self.pivots: list = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.length

    def reduce(self, vec) -> list:
        """Residual of ``vec`` after eliminating all pivot components."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.length):
                    rj = row[j]
                    if rj:
                        v[j] -= c * rj
        return v

    def insert(self, vec) -> bool:
        """Add a vector to the span; True if the dimension grew."""
        v = self.reduce(vec)
        pivot = None
        for j, c in enumerate(v):
            if c:
                pivot = j
                break
        if pivot is None:
            return False
        inv = ONE / v[pivot]
        if inv != 1:
            v = [c * inv for c in v]
        v[pivot] = ONE  # guard against any residual scaling artifacts
        for row in self.rows:
            c = row[pivot]
            if c:
                for j in range(pivot, self.length):
                    vj = v[j]
                    if vj:
                        row[j] -= c * vj
        at = 0
        while at < len(self.pivots) and self.pivots[at] < pivot:
            at += 1
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def insert_many(self, vectors) -> None:
        for vec in vectors:
            self.insert(vec)

    def rows_tuple(self) -> tuple:
        return tuple(tuple(row) for row in self.rows)


def rref(rows: Iterable) -> tuple:
    """Reduced row-echelon form of a matrix given as a list of rows.

    Returns (reduced rows, pivot columns); zero rows are dropped. The
    result depends only on the row space, hence is deterministic.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    builder = SpanBuilder(len(rows[0]))
    for r in rows:
        builder.insert([Q(x) for x in r])
    return [list(r) for r in builder.rows], list(builder.pivots)


def nullspace(rows: Iterable, ncols: int) -> list:
    """Canonical basis of {x : M x = 0} for M given by ``rows``.

    Standard free-variable construction followed by a canonicalizing
    re-reduction, so the result is the RREF basis of the kernel.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    builder = SpanBuilder(ncols)
    for j in free:
        v = [ZERO] * ncols
        v[j] = ONE
        for r, p in enumerate(pivots):
            c = reduced[r][j]
            if c:
                v[p] = -c
        builder.insert(v)
    return [list(r) for r in builder.rows]


def solve_columns(rows: Iterable, ncols: int, rhs_columns: Iterable) -> list:
    """Solve M x = b for each right-hand side b in ``rhs_columns``.

    ``rows`` is the matrix M (each row of length ``ncols``); each b has one
    entry per row. Returns one solution per b with free variables set to
    zero, or None where the system is inconsistent.
    """
    rows = [list(r) for r in rows]
    rhs = [list(b) for b in rhs_columns]
    nrhs = len(rhs)
    if any(len(b) != len(rows) for b in rhs):
        raise ValueError("right-hand side length does not match row count")
    aug = [rows[i] + [rhs[j][i] for j in range(nrhs)] for i in range(len(rows))]

    pivots = []
    pr = 0
    for pc in range(ncols):
        hit = None
        for i in range(pr, len(aug)):
            if aug[i][pc]:
                hit = i
                break
        if hit is None:
            continue
        aug[pr], aug[hit] = aug[hit], aug[pr]
        inv = ONE / aug[pr][pc]
        if inv != 1:
            aug[pr] = [x * inv for x in aug[pr]]
        prow = aug[pr]
        for i in range(len(aug)):
            if i != pr and aug[i][pc]:
                c = aug[i][pc]
                row = aug[i]
                for j in range(pc, ncols + nrhs):
                    pj = prow[j]
                    if pj:
                        row[j] -= c * pj
        pivots.append(pc)
        pr += 1
        if pr == len(aug):
            break

    solutions = []
    for j in range(nrhs):
        col = ncols + j
        consistent = all(not aug[i][col] for i in range(pr, len(aug)))
        if not consistent:
            solutions.append(None)
            continue
        x = [ZERO] * ncols
        for r, p in enumerate(pivots):
            x[p] = aug[r][col]
        solutions.append(x)
    return solutions


class Subspace:
    """A linear subspace of the graded piece S_k, canonical RREF basis.

    ``rows`` are the basis vectors in mono_basis(n, k) coordinates. Because
    RREF is unique, equality of subspaces is entry-wise equality of their
    basis matrices, and hashing is consistent with that.
    """

    __slots__ = ("n", "k", "rows", "pivots")

    def __init__(self, n: int, k: int, rows: tuple, pivots: tuple):
        self.n = n
        self.k = k
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        if len(self.rows) != len(self.pivots):
            raise ValueError("row/pivot count mismatch")
        if any(self.pivots[i] >= self.pivots[i + 1] for i in range(len(self.pivots) - 1)):
            raise ValueError("pivot columns must strictly increase")

    @classmethod
    def from_builder(cls, n: int, k: int, builder: SpanBuilder) -> "Subspace":
        if builder.length != dim_graded(n, k):
            raise ValueError("builder length does not match ambient dimension")
        return cls(n, k, builder.rows_tuple(), tuple(builder.pivots))

    @property
    def ambient(self) -> tuple:
        return (self.n, self.k)

    @property
    def ambient_dim(self) -> int:
        return dim_graded(self.n, self.k)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def reduce(self, vec) -> list:
        """Residual of a coordinate vector modulo this subspace."""
        v = [Q(x) for x in vec]
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                for j in range(p, len(v)):
                    rj = row[j]
                    if rj:
                        v[j] -= c * rj
        return v

    def contains_vector(self, vec) -> bool:
        return not any(self.reduce(vec))

    def contains_poly(self, f: HomogeneousPolynomial) -> bool:
        if (f.n, f.degree) != self.ambient:
            raise ValueError(f"ambient mismatch: {(f.n, f.degree)} vs {self.ambient}")
        return self.contains_vector(f.coords())

    def basis_polynomials(self) -> tuple:
        return tuple(HomogeneousPolynomial.from_coords(self.n, self.k, row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(n={self.n}, k={self.k}, dim={self.dim})"


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.ambient != b.ambient:
        raise ValueError(f"ambient mismatch: {a.ambient} vs {b.ambient}")


def zero_subspace(n: int, k: int) -> Subspace:
    return Subspace(n, k, (), ())


def full_subspace(n: int, k: int) -> Subspace:
    d = dim_graded(n, k)
    rows = tuple(tuple(ONE if j == i else ZERO for j in range(d)) for i in range(d))
    return Subspace(n, k, rows, tuple(range(d)))


def span_vectors(n: int, k: int, vectors: Iterable) -> Subspace:
    """Canonical subspace spanned by coordinate vectors in S_k."""
    builder = SpanBuilder(dim_graded(n, k))
    for v in vectors:
        builder.insert([Q(x) for x in v])
    return Subspace.from_builder(n, k, builder)


def span_polys(polys, n: Optional[int] = None, k: Optional[int] = None) -> Subspace:
    """Canonical subspace spanned by forms (ambient inferred when possible)."""
    polys = list(polys)
    if polys:
        n = polys[0].n if n is None else n
        k = polys[0].degree if k is None else k
        for f in polys:
            if (f.n, f.degree) != (n, k):
                raise ValueError(f"ambient mismatch: {(f.n, f.degree)} vs {(n, k)}")
    elif n is None or k is None:
        raise ValueError("empty span needs explicit ambient (n, k)")
    return span_vectors(n, k, (f.coords() for f in polys))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    builder = SpanBuilder(a.ambient_dim)
    for row in a.rows:
        builder.insert(list(row))
    for row in b.rows:
        builder.insert(list(row))
    return Subspace.from_builder(a.n, a.k, builder)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus double-block reduction."""
    _check_same_ambient(a, b)
    amb = a.ambient_dim
    builder = SpanBuilder(2 * amb)
    for row in a.rows:
        builder.insert(list(row) + list(row))
    for row in b.rows:
        builder.insert(list(row) + [ZERO] * amb)
    rows = []
    pivots = []
    for row, p in zip(builder.rows, builder.pivots):
        if p >= amb:
            rows.append(tuple(row[amb:]))
            pivots.append(p - amb)
    return Subspace(a.n, a.k, tuple(rows), tuple(pivots))


def contains(a: Subspace, b: Subspace) -> bool:
    """Whether a contains b (decided on canonical bases)."""
    _check_same_ambient(a, b)
    if b.dim > a.dim:
        return False
    return all(a.contains_vector(row) for row in b.rows)


def orthogonal_complement(e: Subspace) -> Subspace:
    """Complement under the apolar inner product on S_k.

    The pairing is diagonal on monomials with weights alpha!, so the
    complement is the kernel of the weighted basis matrix. Involutive:
    the complement of the complement is the original subspace.
    """
    amb = e.ambient_dim
    weights = factorial_weights(e.n, e.k)
    rows = [[row[j] * weights[j] for j in range(amb)] for row in e.rows]
    return span_vectors(e.n, e.k, nullspace(rows, amb))


def map_kernel(matrix_rows, n: int, k: int) -> Subspace:
    """Kernel in S_k of a map given by a matrix with dim(S_k) columns."""
    return span_vectors(n, k, nullspace(matrix_rows, dim_graded(n, k)))


def map_image(matrix_rows, n: int, m: int) -> Subspace:
    """Image in S_m of a map given by a matrix with dim(S_m) rows."""
    if not matrix_rows:
        return zero_subspace(n, m)
    ncols = len(matrix_rows[0])
    cols = ([row[j] for row in matrix_rows] for j in range(ncols))
    return span_vectors(n, m, cols)


class QuotientMap:
    """Canonical coordinates on S_k / E for a subspace E in RREF.

    The coordinates of a vector are the non-pivot positions of its
    residual modulo E; they vanish exactly on E, and there are
    dim(S_k) - dim(E) of them.
    """

    __slots__ = ("subspace", "pivots", "nonpivots", "_restricted", "_unit_cache")

    def __init__(self, subspace: Subspace):
        self.subspace = subspace
        self.pivots = subspace.pivots
        pivset = set(subspace.pivots)
        self.nonpivots = tuple(j for j in range(subspace.ambient_dim) if j not in pivset)
        self._restricted = [
            [row[j] for j in self.nonpivots] for row in subspace.rows
        ]
        self._unit_cache: dict = {}

    @property
    def dim(self) -> int:
        return len(self.nonpivots)

    def coords(self, vec) -> list:
        """Quotient coordinates of an ambient coordinate vector."""
        out = [vec[j] for j in self.nonpivots]
        for r, p in enumerate(self.pivots):
            c = vec[p]
            if c:
                row = self._restricted[r]
                for q in range(len(out)):
                    rq = row[q]
                    if rq:
                        out[q] -= c * rq
        return out

    def unit_coords(self, j: int) -> tuple:
        """Quotient coordinates of the j-th ambient basis vector (cached)."""
        cached = self._unit_cache.get(j)
        if cached is None:
            vec = [ZERO] * self.subspace.ambient_dim
            vec[j] = ONE
            cached = tuple(self.coords(vec))
            self._unit_cache[j] = cached
        return cached
