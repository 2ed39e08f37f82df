import random

import pytest

from milnoralg import (
    GeneratorTuple,
    PreconditionError,
    apolar_piece,
    associated_form,
    catalecticant_matrix,
    dim_graded,
    full_subspace,
    hilbert_profile,
    ideal_piece,
    jacobian_gens,
    lift_piece,
    mono_basis,
    orthogonal_complement,
    parse_poly,
    polar_apply,
    random_ci_tuple,
    random_smooth,
    socle_degree,
    span_polys,
    verify_inverse_system,
)
from milnoralg.polynomials import HomogeneousPolynomial

from oracles import sympy_rank


def tuple_of(*texts, n=None):
    polys = [parse_poly(t, n=n) for t in texts]
    n = max(p.n for p in polys) if n is None else n
    polys = [parse_poly(t, n=n) for t in texts]
    return GeneratorTuple(n, polys[0].degree + 1, polys)


def test_associated_form_of_squares():
    # (I_W)_3 spans everything except x0*x1*x2; the diagonal pairing makes
    # the complement exactly that missing monomial
    w = tuple_of("x0^2", "x1^2", "x2^2")
    af = associated_form(w)
    assert af.form == parse_poly("x0*x1*x2")
    assert af.socle == 3 and af.d == 3 and af.n == 2


def test_associated_form_binary():
    w = tuple_of("x0^2", "x1^2")
    af = associated_form(w)
    assert af.form == parse_poly("x0*x1", n=1)
    assert af.socle == socle_degree(1, 3) == 2


def test_associated_form_rejects_non_ci():
    w = tuple_of("x0^2", "x0*x1", "x0*x2")
    with pytest.raises(PreconditionError):
        associated_form(w)


def test_associated_form_is_normalized():
    w = random_ci_tuple(2, 3, seed=5)
    af = associated_form(w)
    assert af.form.leading_coefficient() == 1


def test_apolar_piece_of_triple_product():
    b = parse_poly("x0*x1*x2")
    piece = apolar_piece(b, 2)
    # second-order operators killing x0*x1*x2 are exactly the squares
    assert piece == span_polys([parse_poly(t, n=2) for t in ("x0^2", "x1^2", "x2^2")])
    for g in piece.basis_polynomials():
        assert polar_apply(g, b).is_zero()


def test_apolar_piece_above_degree_is_everything():
    b = parse_poly("x0*x1*x2")
    assert apolar_piece(b, 4) == full_subspace(2, 4)


def test_apolar_piece_binary_square():
    b = parse_poly("x0^2", n=1)
    piece = apolar_piece(b, 1)
    assert piece == span_polys([parse_poly("x1", n=1)])


def test_catalecticant_matrix_against_polar_action():
    rng = random.Random(7)
    terms = {alpha: rng.randint(-3, 3) for alpha in mono_basis(2, 4)}
    b = HomogeneousPolynomial(2, 4, terms)
    mat = catalecticant_matrix(b, 2)
    src = mono_basis(2, 2)
    tgt = mono_basis(2, 2)
    for s, alpha in enumerate(src):
        image = polar_apply(HomogeneousPolynomial.monomial(2, alpha), b)
        coords = image.coords()
        for t in range(len(tgt)):
            assert mat[t][s] == coords[t]


def test_verify_inverse_system_squares():
    assert verify_inverse_system(tuple_of("x0^2", "x1^2", "x2^2"))


def test_verify_inverse_system_random_smooth_quartic():
    f = random_smooth(2, 4, seed=19)
    assert verify_inverse_system(jacobian_gens(f))


def test_inverse_system_equality_above_socle():
    # at degree T+1 both sides are all of S_{T+1}
    w = random_ci_tuple(2, 3, seed=2)
    top = socle_degree(2, 3)
    b = associated_form(w)
    assert apolar_piece(b, top + 1) == ideal_piece(w, top + 1) == full_subspace(2, top + 1)


def test_socle_is_one_dimensional_for_ci():
    for seed in range(4):
        w = random_ci_tuple(2, 3, seed=seed)
        top = socle_degree(2, 3)
        comp = orthogonal_complement(ideal_piece(w, top))
        assert comp.dim == 1


def test_apolar_dimensions_match_profile():
    w = random_ci_tuple(2, 4, seed=3)
    b = associated_form(w)
    profile = hilbert_profile(2, 4)
    for k in range(3, profile.socle + 1):
        assert apolar_piece(b, k).dim == profile.b(k)


def test_apolar_pieces_form_an_ideal():
    # S_1 * (apolar piece at k) stays inside the apolar piece at k+1
    w = random_ci_tuple(2, 3, seed=9)
    b = associated_form(w)
    for k in range(0, socle_degree(2, 3) + 1):
        piece = apolar_piece(b, k)
        lifted = lift_piece(piece, k + 1)
        bigger = apolar_piece(b, k + 1)
        for row in lifted.rows:
            assert bigger.contains_vector(row)


def test_catalecticant_rank_matches_sympy():
    rng = random.Random(13)
    terms = {alpha: rng.randint(-2, 2) for alpha in mono_basis(2, 4)}
    b = HomogeneousPolynomial(2, 4, terms)
    for k in range(5):
        mat = catalecticant_matrix(b, k)
        rank = sympy_rank([[str(x) for x in row] for row in mat])
        assert apolar_piece(b, k).dim == dim_graded(2, k) - rank
