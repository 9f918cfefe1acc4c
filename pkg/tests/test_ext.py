import pytest

from hesse_moore import linalg
from hesse_moore.ext import (
    RepresentationError,
    _unit_matrix,
    _vectorize,
    divergence_class,
    ext_space,
    moore_representative,
    moore_span_basis,
    verify_moore_span,
)
from hesse_moore.field import FieldElement, zero
from hesse_moore.hesse import extension_representative
from hesse_moore.moore import coordinate_vars, moore
from hesse_moore.ulrich import moore_factorization, trace_criterion

P = 13


def F(v):
    return FieldElement(v, P)


A_POINT = tuple(F(v) for v in (1, 2, 3))


def test_dimension_table():
    dims = {m: ext_space(A_POINT, m).quotient_dimension for m in (-2, -1, 0, 1)}
    assert dims == {-2: 0, -1: 3, 0: 1, 1: 0}


def test_solution_basis_satisfies_trace_condition():
    fac = moore_factorization(A_POINT)
    for m in (-1, 0):
        space = ext_space(A_POINT, m)
        for C in space.solution_basis:
            assert trace_criterion(fac, C)


def test_homotopies_inside_solutions():
    space = ext_space(A_POINT, 0)
    sols = [_vectorize(C, 1) for C in space.solution_basis]
    for h in space.homotopy_basis:
        assert linalg.in_span(sols, _vectorize(h, 1))


def test_homotopy_form():
    # each homotopy generator U*A - A*V is reproduced by the basis span
    fac = moore_factorization(A_POINT)
    space = ext_space(A_POINT, 0)
    hom = [_vectorize(C, 1) for C in space.homotopy_basis]
    u = _unit_matrix(0, 1, (0, 0, 0), P)
    gen = u @ fac.A - fac.A @ u
    assert linalg.in_span(hom, _vectorize(gen, 1))


def test_moore_span():
    basis = moore_span_basis(A_POINT)
    vecs = [_vectorize(m, 0) for m in basis]
    assert linalg.span_dim(vecs) == 3
    assert verify_moore_span(A_POINT)


def test_moore_span_heisenberg_stable():
    from hesse_moore.heisenberg import sigma_action, t_action

    assert verify_moore_span(sigma_action(A_POINT))
    assert verify_moore_span(t_action(A_POINT))


def test_moore_representative_of_moore_matrix():
    b = extension_representative(A_POINT)
    C = moore(b)
    y, U, V = moore_representative(A_POINT, C)
    # reconstruct: C = M_{b,y} + U*A - A*V
    fac = moore_factorization(A_POINT)
    from hesse_moore.moore import FormMatrix

    u_mat = FormMatrix.from_scalars(U, P)
    v_mat = FormMatrix.from_scalars(V, P)
    rebuilt = moore(b, variables=y) + u_mat @ fac.A - fac.A @ v_mat
    assert rebuilt == C
    from hesse_moore.ulrich import divergence

    assert divergence(y) == F(3)


def test_divergence_class_values():
    b = extension_representative(A_POINT)
    C = moore(b)
    assert divergence_class(A_POINT, C) == F(3)
    # linearity under scaling
    assert divergence_class(A_POINT, C.scale(F(5))) == F(5) * F(3)
    # homotopy elements map to zero
    space = ext_space(A_POINT, 0)
    for h in space.homotopy_basis[:3]:
        assert divergence_class(A_POINT, h).is_zero()


def test_divergence_class_rejects_non_solutions():
    x = coordinate_vars(P)
    from hesse_moore.moore import FormMatrix
    from hesse_moore.poly import HomForm

    z = HomForm.zero(1, P)
    C = FormMatrix([[x[0], z, z], [z, x[1], z], [z, z, x[2]]])
    fac = moore_factorization(A_POINT)
    assert not trace_criterion(fac, C)
    with pytest.raises(RepresentationError):
        divergence_class(A_POINT, C)


def test_representatives_extend_homotopies():
    space = ext_space(A_POINT, 0)
    assert len(space.representatives) == space.quotient_dimension == 1
    hom = [_vectorize(C, 1) for C in space.homotopy_basis]
    rep = _vectorize(space.representatives[0], 1)
    assert not linalg.in_span(hom, rep)


def test_dimension_table_other_points():
    for vals in ((1, 1, 2), (1, 5, 9)):
        a = tuple(F(v) for v in vals)
        assert ext_space(a, -1).quotient_dimension == 3
        assert ext_space(a, 0).quotient_dimension == 1
        assert verify_moore_span(a)
