"""Direct sums and the fibers of the piece map.

Two forms share the same degree-k Jacobian piece exactly when they are
built from the same maximal direct-sum decomposition: the fiber through f
is the set of combinations lambda_1 f_1 + ... + lambda_s f_s of its
summands (all lambda_i nonzero for the smooth members). Computing the
linear span of that fiber therefore counts the summands, even when the
splitting is hidden behind a change of coordinates.

Run from the repository root:

    python demos/direct_sums_and_fibers.py
"""

from milnoralg import (
    HomogeneousPolynomial,
    coordinate_split,
    fermat,
    fiber,
    jacobian_gens,
    linear_change,
    random_smooth,
    span_polys,
    st_report,
)


def embed(f, n_target, positions):
    terms = {}
    for alpha, c in f.terms.items():
        beta = [0] * (n_target + 1)
        for pos, e in zip(positions, alpha):
            beta[pos] = e
        terms[tuple(beta)] = c
    return HomogeneousPolynomial(n_target, f.degree, terms)


def main() -> None:
    f = fermat(2, 3)
    print(f"f = {f}")
    result = fiber(jacobian_gens(f), 3)
    print(f"  fiber basis: {[str(g) for g in result.basis]}")
    print(f"  summand count s = {result.s}")
    print()

    mixed = linear_change(f, [[1, 1, 0], [0, 1, 0], [0, 1, 1]])
    print(f"after an invertible coordinate change: {mixed}")
    print(f"  visible split: {coordinate_split(mixed)} (nothing visible)")
    print(f"  s = {st_report(mixed).s} (the hidden split is still found)")
    print()

    g = random_smooth(1, 4, seed=41, require_non_st=True)
    h = random_smooth(1, 4, seed=43, require_non_st=True)
    block = embed(g, 3, (0, 1)) + embed(h, 3, (2, 3))
    print("sum of two non-direct-sum binary quartics in disjoint variables:")
    print(f"  f = {block}")
    result = fiber(jacobian_gens(block), 4)
    blocks_span = span_polys([embed(g, 3, (0, 1)), embed(h, 3, (2, 3))])
    print(f"  s = {result.s}; fiber spanned by the two blocks: "
          f"{result.spanned() == blocks_span}")
    for basis_form in result.basis:
        print(f"    {basis_form}")
    print()

    single = random_smooth(2, 4, seed=47, require_non_st=True)
    print(f"generic smooth quartic: s = {st_report(single).s} "
          "(not a direct sum, so the fiber is a single line)")


if __name__ == "__main__":
    main()
