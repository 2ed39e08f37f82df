"""Macaulay inverse systems of complete intersections.

The quotient by a complete-intersection ideal generated in degree d-1 is
Artinian Gorenstein with socle degree T = (n+1)(d-2). Under the apolar
pairing (the inner product with alpha! weights on monomials), the
degree-T piece of the ideal has a one-dimensional complement, and the
form spanning it is the Macaulay inverse system: the ideal is exactly the
annihilator of that one form under polar differentiation.

Run from the repository root:

    python demos/inverse_systems.py
"""

from milnoralg import (
    GeneratorTuple,
    apolar_piece,
    associated_form,
    ideal_piece,
    parse_poly,
    random_ci_tuple,
    socle_degree,
    verify_inverse_system,
)


def main() -> None:
    squares = GeneratorTuple(2, 3, [parse_poly(t, n=2) for t in ("x0^2", "x1^2", "x2^2")])
    af = associated_form(squares)
    print("generators: x0^2, x1^2, x2^2 (n=2, d=3, T=3)")
    print(f"  associated form: {af.form}")
    print("  (the one degree-3 monomial missing from the ideal)")
    print()

    top = socle_degree(2, 3)
    print("degree-by-degree comparison, ideal piece vs apolar piece:")
    for k in range(top + 2):
        left = ideal_piece(squares, k)
        right = apolar_piece(af.form, k)
        print(f"  k = {k}: dims {left.dim} / {right.dim}, equal = {left == right}")
    print()

    w = random_ci_tuple(2, 4, seed=17)
    print("a random complete intersection of three cubics (n=2, d=4):")
    bw = associated_form(w)
    print(f"  associated form has degree {bw.socle} and {len(bw.form.terms)} terms")
    print(f"  ideal recovered as the annihilator in every degree: {verify_inverse_system(w)}")


if __name__ == "__main__":
    main()
