"""Tangent maps of the graded piece assignments, and their kernels.

Moving a generator tuple W infinitesimally by h = (h_0, ..., h_n), taken
modulo span(W) componentwise, moves the degree-k ideal piece inside the
quotient S_k / (I_W)_k. Writing each basis vector of (I_W)_k as
b = sum_i u_i g_i, the induced map sends b to sum_i u_i h_i modulo
(I_W)_k. The choice of the u_i is immaterial: two representations differ
by a syzygy of the g_i, and for a complete intersection all syzygies in
these degrees are Koszul, so the ambiguity sum_i u_i h_i lands inside
(I_W)_k and dies in the quotient.

Moving a polynomial f by h in S_d modulo the line through f does the same
with g_i the partials of f and u_i h_i replaced by u_i (dh/dx_i). The
kernels of these assembled exact matrices are what an immersion statement
predicts to vanish; for a direct sum the second kernel picks up the fiber
directions instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .ideals import (
    GeneratorTuple,
    ideal_piece,
    is_complete_intersection,
    is_smooth,
    jacobian_gens,
    socle_degree,
)
from .linalg import QuotientMap, nullspace, solve_columns, span_polys
from .monomials import derivative_table, dim_graded, mono_basis, mono_index, product_index_table
from .polynomials import HomogeneousPolynomial
from .rationals import ZERO


class TupleTangentVector:
    """A tangent direction at a generator tuple: n+1 forms modulo span(W).

    The stored parts are the canonical representatives, each reduced
    against the echelon basis of span(W), so a direction is zero exactly
    when every stored part is the zero form.
    """

    __slots__ = ("w", "parts")

    def __init__(self, w: GeneratorTuple, parts):
        parts = tuple(parts)
        if len(parts) != w.n + 1:
            raise ValueError(f"expected {w.n + 1} parts, got {len(parts)}")
        span = w.span
        reduced = []
        for p in parts:
            if p.n != w.n or p.degree != w.d - 1:
                raise ValueError("tangent parts must be forms of the generator degree")
            reduced.append(
                HomogeneousPolynomial.from_coords(w.n, w.d - 1, span.reduce(p.coords()))
            )
        self.w = w
        self.parts = tuple(reduced)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def __repr__(self):
        return f"TupleTangentVector({', '.join(str(p) for p in self.parts)})"


class PolyTangentVector:
    """A tangent direction at a polynomial: a form in S_d modulo the line f.

    Canonical representative: the coefficient of f's leading monomial is
    zero after reduction.
    """

    __slots__ = ("f", "h")

    def __init__(self, f: HomogeneousPolynomial, h: HomogeneousPolynomial):
        if (h.n, h.degree) != (f.n, f.degree):
            raise ValueError("tangent representative must share the ambient of f")
        line = span_polys([f])
        self.f = f
        self.h = HomogeneousPolynomial.from_coords(f.n, f.degree, line.reduce(h.coords()))

    def is_zero(self) -> bool:
        return self.h.is_zero()

    def __repr__(self):
        return f"PolyTangentVector({self.h})"


@dataclass(frozen=True)
class KernelReport:
    """Exact kernel of an assembled tangent map at one degree k."""

    k: int
    tangent_dim: int
    kernel_dim: int
    basis: tuple


def multiplication_matrix(w: GeneratorTuple, k: int) -> list:
    """Matrix of (u_0, ..., u_n) |-> sum_i u_i g_i into S_k.

    dim(S_k) rows; columns indexed by (i, u) as i * dim_u + u over the
    monomials u of degree k - (d-1).
    """
    n, d = w.n, w.d
    if k < d - 1:
        raise ValueError(f"need k >= {d - 1}, got {k}")
    dim_u = dim_graded(n, k - (d - 1))
    dim_t = dim_graded(n, k)
    table = product_index_table(n, k - (d - 1), d - 1)
    idx = mono_index(n, d - 1)
    mat = [[ZERO] * ((n + 1) * dim_u) for _ in range(dim_t)]
    for i, g in enumerate(w.gens):
        sparse = [(idx[alpha], c) for alpha, c in g.terms.items()]
        base = i * dim_u
        for u in range(dim_u):
            tu = table[u]
            col = base + u
            for j, c in sparse:
                mat[tu[j]][col] = c
    return mat


@lru_cache(maxsize=None)
def membership_solutions(w: GeneratorTuple, k: int):
    """One representation b = sum_i u_i g_i per basis vector of (I_W)_k.

    Returns (piece, solutions) where solutions[j][i] is the sparse
    coordinate list [(u_index, coeff), ...] of u_i over the degree
    k-(d-1) monomials. Any solution of the linear system is accepted;
    well-definedness of everything built on top makes the choice
    immaterial.
    """
    piece = ideal_piece(w, k)
    mat = multiplication_matrix(w, k)
    ncols = (w.n + 1) * dim_graded(w.n, k - (w.d - 1))
    sols = solve_columns(mat, ncols, [list(row) for row in piece.rows])
    dim_u = dim_graded(w.n, k - (w.d - 1))
    packed = []
    for sol in sols:
        assert sol is not None  # basis rows lie in the image by construction
        packed.append(
            tuple(
                tuple((u, sol[i * dim_u + u]) for u in range(dim_u) if sol[i * dim_u + u])
                for i in range(w.n + 1)
            )
        )
    return piece, tuple(packed)


def _check_tuple_pre(w: GeneratorTuple, k: int):
    top = socle_degree(w.n, w.d)
    if not w.d - 1 <= k <= top:
        raise ValueError(f"need d-1 <= k <= {top}, got k={k}")
    if not is_complete_intersection(w):
        raise PreconditionError("generator tuple is not a complete intersection")


def tangent_image(w: GeneratorTuple, h, k: int) -> tuple:
    """Matrix of the induced map (I_W)_k -> S_k / (I_W)_k for direction h.

    One row per canonical basis vector of (I_W)_k, in the quotient
    coordinates of S_k / (I_W)_k; the zero matrix means h is killed at
    degree k.
    """
    _check_tuple_pre(w, k)
    if not isinstance(h, TupleTangentVector):
        h = TupleTangentVector(w, h)
    piece, sols = membership_solutions(w, k)
    qm = QuotientMap(piece)
    table = product_index_table(w.n, k - (w.d - 1), w.d - 1)
    idx = mono_index(w.n, w.d - 1)
    unit = qm.unit_coords
    quot = qm.dim

    sparse_parts = [
        [(idx[alpha], c) for alpha, c in p.terms.items()] for p in h.parts
    ]
    rows = []
    for sol in sols:
        acc = [ZERO] * quot
        for i, hp in enumerate(sparse_parts):
            if not hp:
                continue
            for u_idx, uc in sol[i]:
                tu = table[u_idx]
                for j, hc in hp:
                    weight = uc * hc
                    uvec = unit(tu[j])
                    for q in range(quot):
                        uq = uvec[q]
                        if uq:
                            acc[q] += weight * uq
        rows.append(tuple(acc))
    return tuple(rows)


def tangent_kernel_at_tuple(w: GeneratorTuple, k: int) -> KernelReport:
    """Kernel of the tangent map of W |-> (I_W)_k at a complete intersection.

    The tangent space has dimension (n+1) * (dim S_{d-1} - (n+1)); the
    kernel is expected to vanish for every complete intersection and every
    k between d-1 and the socle degree.
    """
    _check_tuple_pre(w, k)
    n = w.n
    piece, sols = membership_solutions(w, k)
    qm = QuotientMap(piece)
    gq = QuotientMap(w.span)
    table = product_index_table(n, k - (w.d - 1), w.d - 1)
    unit = qm.unit_coords
    quot = qm.dim
    per_part = gq.dim
    tangent_dim = (n + 1) * per_part

    columns = []
    for i in range(n + 1):
        for mono_pos in gq.nonpivots:
            col = []
            for sol in sols:
                acc = [ZERO] * quot
                for u_idx, uc in sol[i]:
                    uvec = unit(table[u_idx][mono_pos])
                    for q in range(quot):
                        uq = uvec[q]
                        if uq:
                            acc[q] += uc * uq
                col.extend(acc)
            columns.append(col)

    constraint_rows = [
        [columns[c][r] for c in range(tangent_dim)] for r in range(len(sols) * quot)
    ]
    kernel_vectors = nullspace(constraint_rows, tangent_dim)

    basis_monos = mono_basis(n, w.d - 1)
    basis = []
    for vec in kernel_vectors:
        parts = []
        for i in range(n + 1):
            terms = {}
            for c, mono_pos in enumerate(gq.nonpivots):
                val = vec[i * per_part + c]
                if val:
                    terms[basis_monos[mono_pos]] = val
            parts.append(HomogeneousPolynomial(n, w.d - 1, terms))
        basis.append(TupleTangentVector(w, parts))
    return KernelReport(k, tangent_dim, len(kernel_vectors), tuple(basis))


def tangent_kernel_at_poly(f: HomogeneousPolynomial, k: int) -> KernelReport:
    """Kernel of the tangent map of f |-> degree-k Jacobian piece.

    Computed in S_d modulo the line through f, so the tangent space has
    dimension dim(S_d) - 1. Zero kernel is the expected outcome for a
    smooth non-direct-sum f; for a direct sum with s summands the kernel
    contains the fiber directions and so has dimension at least s - 1.
    """
    n, d = f.n, f.degree
    top = socle_degree(n, d)
    if not d - 1 <= k <= top:
        raise ValueError(f"need d-1 <= k <= {top}, got k={k}")
    if not is_smooth(f):
        raise PreconditionError("polynomial is not smooth")

    w = jacobian_gens(f)
    piece, sols = membership_solutions(w, k)
    qm = QuotientMap(piece)
    fq = QuotientMap(span_polys([f]))
    table = product_index_table(n, k - (d - 1), d - 1)
    dtab = derivative_table(n, d)
    unit = qm.unit_coords
    quot = qm.dim
    tangent_dim = fq.dim  # = dim(S_d) - 1

    columns = []
    for mono_pos in fq.nonpivots:
        col = []
        for sol in sols:
            acc = [ZERO] * quot
            for i in range(n + 1):
                hit = dtab[i][mono_pos]
                if hit is None:
                    continue
                tj, factor = hit
                for u_idx, uc in sol[i]:
                    weight = uc * factor
                    uvec = unit(table[u_idx][tj])
                    for q in range(quot):
                        uq = uvec[q]
                        if uq:
                            acc[q] += weight * uq
            col.extend(acc)
        columns.append(col)

    constraint_rows = [
        [columns[c][r] for c in range(tangent_dim)] for r in range(len(sols) * quot)
    ]
    kernel_vectors = nullspace(constraint_rows, tangent_dim)

    basis_monos = mono_basis(n, d)
    basis = []
    for vec in kernel_vectors:
        terms = {}
        for c, mono_pos in enumerate(fq.nonpivots):
            if vec[c]:
                terms[basis_monos[mono_pos]] = vec[c]
        basis.append(PolyTangentVector(f, HomogeneousPolynomial(n, d, terms)))
    return KernelReport(k, tangent_dim, len(kernel_vectors), tuple(basis))
