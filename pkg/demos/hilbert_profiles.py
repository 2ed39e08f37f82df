"""Hilbert profiles of Milnor algebras.

For a smooth degree-d form in n+1 variables, the dimensions of the graded
pieces of its Milnor algebra do not depend on the form, only on (n, d):
they are the coefficients of ((1 - t^(d-1)) / (1 - t))^(n+1). This script
prints a few profiles, checks the Gorenstein symmetry a(k) = a(T-k)
around the socle degree T = (n+1)(d-2), and confirms the dimensions
against an actual Jacobian ideal, computed by exact linear algebra.

Run from the repository root:

    python demos/hilbert_profiles.py
"""

from milnoralg import dim_graded, fermat, hilbert_profile, jacobian_piece


def main() -> None:
    for n, d in [(1, 3), (2, 3), (2, 4), (3, 3)]:
        profile = hilbert_profile(n, d)
        print(f"(n, d) = ({n}, {d}):  T = {profile.socle}")
        print(f"  a(k) for k = 0..T+1: {list(profile.values)}")
        print(f"  total = {profile.total} = (d-1)^(n+1) = {(d - 1) ** (n + 1)}")
        symmetric = all(profile.a(k) == profile.a(profile.socle - k) for k in range(profile.socle + 1))
        print(f"  symmetric around T/2: {symmetric}")

    print()
    print("Cross-check against the Fermat quartic (n=2, d=4):")
    f = fermat(2, 4)
    profile = hilbert_profile(2, 4)
    header = f"  {'k':>2} {'dim S_k':>8} {'dim E_k(f)':>11} {'codim':>6} {'a(k)':>5}"
    print(header)
    for k in range(profile.socle + 2):
        ambient = dim_graded(2, k)
        piece = jacobian_piece(f, k).dim
        print(f"  {k:>2} {ambient:>8} {piece:>11} {ambient - piece:>6} {profile.a(k):>5}")
    print("  codimension of the Jacobian piece equals a(k) in every degree.")


if __name__ == "__main__":
    main()
