"""Batch verification battery at a single size (n, d).

Runs the same checks the acceptance tests make, parameterized by one
ambient size and a base seed: Hilbert profile invariants, Jacobian piece
dimensions, round trips through one graded piece, fibers and summand
counts, inverse systems, tangent kernels, containment, and the
well-definedness of tangent images. Each check reports pass/fail plus
wall time; an optional wall-clock budget stops starting new phases once
exceeded (which checks run then depends on the clock, so omit the budget
when byte-identical output matters).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .deformation import (
    membership_solutions,
    multiplication_matrix,
    tangent_kernel_at_poly,
    tangent_kernel_at_tuple,
)
from .ideals import (
    hilbert_profile,
    ideal_piece,
    jacobian_gens,
    jacobian_piece,
    socle_degree,
)
from .inverse_systems import verify_inverse_system
from .linalg import nullspace
from .monomials import dim_graded, mono_basis
from .polynomials import HomogeneousPolynomial, fermat, multiply
from .rationals import Q
from .reconstruction import (
    containment_implies_equal,
    fiber,
    reconstruct_poly,
    recover_generators,
)
from .st_analysis import random_ci_tuple, random_smooth


@dataclass
class SuiteCheck:
    name: str
    ok: Optional[bool]  # None means skipped (budget exhausted)
    seconds: float
    detail: str = ""


def _k_range(n: int, d: int):
    return range(d - 1, socle_degree(n, d) + 1)


def run_suite(
    n: int,
    d: int,
    seed: int = 0,
    polys: int = 20,
    tuples: int = 10,
    budget: Optional[float] = None,
    progress: Optional[Callable[[SuiteCheck], None]] = None,
) -> list:
    """Run the verification battery at size (n, d); returns SuiteCheck list."""
    if n < 1 or d < 3:
        raise ValueError(f"suite needs n >= 1 and d >= 3, got n={n}, d={d}")
    started = time.monotonic()
    results: list = []
    profile = hilbert_profile(n, d)
    top = profile.socle

    smooth_pool: list = []
    nonst_pool: list = []
    tuple_pool: list = []

    def phase(name: str, body: Callable[[], str]):
        if budget is not None and time.monotonic() - started > budget:
            check = SuiteCheck(name, None, 0.0, "skipped: budget exhausted")
        else:
            t0 = time.monotonic()
            try:
                detail = body()
                check = SuiteCheck(name, True, time.monotonic() - t0, detail)
            except Exception as exc:  # report, keep running later phases
                check = SuiteCheck(name, False, time.monotonic() - t0, str(exc))
        results.append(check)
        if progress is not None:
            progress(check)

    def check_hilbert() -> str:
        assert profile.values[0] == 1 and profile.values[top] == 1
        assert profile.values[top + 1] == 0
        assert all(profile.a(k) == profile.a(top - k) for k in range(top + 1))
        assert profile.total == (d - 1) ** (n + 1)
        return f"T={top}, total={(d - 1) ** (n + 1)}"

    def check_dimensions() -> str:
        for i in range(polys):
            f = random_smooth(n, d, seed * 1_000_003 + 100 + i)
            smooth_pool.append(f)
            for k in range(top + 2):
                expect = profile.b(k)
                got = jacobian_piece(f, k).dim
                assert got == expect, f"dim E_{k} = {got}, expected {expect}"
        return f"{polys} forms, k = 0..{top + 1}"

    def check_tuple_round_trip() -> str:
        for i in range(tuples):
            w = random_ci_tuple(n, d, seed * 1_000_003 + 300 + i)
            tuple_pool.append(w)
        for w in tuple_pool:
            for k in _k_range(n, d):
                back = recover_generators(ideal_piece(w, k), k, n, d)
                assert back.span == w.span, "recovered span differs"
        for u, w in zip(tuple_pool, tuple_pool[1:]):
            assert u.span != w.span
            for k in _k_range(n, d):
                assert ideal_piece(u, k) != ideal_piece(w, k)
        return f"{tuples} tuples, k = {d - 1}..{top}"

    def check_poly_round_trip() -> str:
        for i in range(polys):
            f = random_smooth(n, d, seed * 1_000_003 + 500 + i, require_non_st=True)
            nonst_pool.append(f)
        for f in nonst_pool:
            target = f.normalized()
            for k in _k_range(n, d):
                result = reconstruct_poly(jacobian_piece(f, k), k, n, d)
                assert result.s == 1, f"s = {result.s}, expected 1"
                assert result.basis[0].normalized() == target
        return f"{polys} forms, k = {d - 1}..{top}"

    def check_fermat_fiber() -> str:
        f = fermat(n, d)
        result = fiber(jacobian_gens(f), d)
        powers = {
            HomogeneousPolynomial.monomial(n, tuple(d if j == i else 0 for j in range(n + 1)))
            for i in range(n + 1)
        }
        assert result.s == n + 1
        assert set(result.basis) == powers
        return f"s = {n + 1}"

    def check_inverse_systems() -> str:
        pool = tuple_pool or [random_ci_tuple(n, d, seed * 1_000_003 + 300)]
        for w in pool:
            assert verify_inverse_system(w)
        return f"{len(pool)} tuples"

    def check_tangent_tuples() -> str:
        pool = tuple_pool or [random_ci_tuple(n, d, seed * 1_000_003 + 300)]
        for w in pool:
            for k in _k_range(n, d):
                report = tangent_kernel_at_tuple(w, k)
                assert report.kernel_dim == 0, f"kernel dim {report.kernel_dim} at k={k}"
        return f"{len(pool)} tuples, k = {d - 1}..{top}"

    def check_tangent_polys() -> str:
        pool = nonst_pool or [random_smooth(n, d, seed * 1_000_003 + 500, require_non_st=True)]
        for f in pool:
            for k in _k_range(n, d):
                report = tangent_kernel_at_poly(f, k)
                assert report.kernel_dim == 0, f"kernel dim {report.kernel_dim} at k={k}"
        return f"{len(pool)} forms, k = {d - 1}..{top}"

    def check_containment() -> str:
        pool = nonst_pool or [random_smooth(n, d, seed * 1_000_003 + 500, require_non_st=True)]
        rng = random.Random(seed * 1_000_003 + 700)
        monomials = mono_basis(n, d)
        k = d - 1
        hits = 0
        for f in pool:
            for _ in range(30):
                h = HomogeneousPolynomial(
                    n, d, {alpha: rng.randint(-3, 3) for alpha in monomials}
                )
                if h.is_zero():
                    continue
                outcome = containment_implies_equal(h, f, k)
                if outcome.hypothesis_holds:
                    hits += 1
                    assert outcome.conclusion_holds
            scaled = containment_implies_equal(f * Q(5, 7), f, k)
            assert scaled.hypothesis_holds and scaled.conclusion_holds
        return f"{hits} containments among random forms"

    def check_well_defined() -> str:
        pool = tuple_pool or [random_ci_tuple(n, d, seed * 1_000_003 + 300)]
        syzygy_ks = [
            k
            for k in _k_range(n, d)
            if (n + 1) * dim_graded(n, k - (d - 1)) > profile.b(k)
        ]
        if not syzygy_ks:
            return "vacuous: no syzygies in range at this size"
        rng = random.Random(seed * 1_000_003 + 900)
        monomials = mono_basis(n, d - 1)
        checked = 0
        for trial in range(20):
            w = pool[trial % len(pool)]
            k = syzygy_ks[trial % len(syzygy_ks)]
            piece, sols = membership_solutions(w, k)
            mat = multiplication_matrix(w, k)
            dim_u = dim_graded(n, k - (d - 1))
            syzygies = nullspace(mat, (n + 1) * dim_u)
            if not syzygies:
                continue
            offset = syzygies[rng.randrange(len(syzygies))]
            parts = [
                HomogeneousPolynomial(
                    n, d - 1, {alpha: rng.randint(-2, 2) for alpha in monomials}
                )
                for _ in range(n + 1)
            ]
            bi = rng.randrange(piece.dim)
            u_basis = mono_basis(n, k - (d - 1))

            def image(dense):
                acc = HomogeneousPolynomial.zero(n, k)
                for i in range(n + 1):
                    ui = HomogeneousPolynomial(
                        n,
                        k - (d - 1),
                        {u_basis[u]: dense[i * dim_u + u] for u in range(dim_u)},
                    )
                    acc = acc + multiply(ui, parts[i])
                return acc

            dense1 = [Q(0)] * ((n + 1) * dim_u)
            for i in range(n + 1):
                for u, c in sols[bi][i]:
                    dense1[i * dim_u + u] = c
            dense2 = [a + b for a, b in zip(dense1, offset)]
            diff = image(dense1) - image(dense2)
            assert piece.contains_vector(diff.coords())
            checked += 1
        assert checked > 0
        return f"{checked} representation pairs"

    phase("hilbert-profile", check_hilbert)
    phase("jacobian-dimensions", check_dimensions)
    phase("piece-round-trip", check_tuple_round_trip)
    phase("polynomial-round-trip", check_poly_round_trip)
    phase("fermat-fiber", check_fermat_fiber)
    phase("inverse-systems", check_inverse_systems)
    phase("tangent-kernel-tuples", check_tangent_tuples)
    phase("tangent-kernel-polys", check_tangent_polys)
    phase("containment", check_containment)
    phase("well-definedness", check_well_defined)
    return results
