import pytest

from hesse_moore import linalg
from hesse_moore.field import FieldElement, zero
from hesse_moore.moore import (
    FormMatrix,
    KernelError,
    ProjectivePoint,
    cofactor_adjugate,
    coordinate_vars,
    det3_form,
    left_kernel_point,
    moore,
    moore_adjugate,
    moore_det,
    moore_scalar,
    right_kernel_point,
    scalar_adjugate,
)
from hesse_moore.poly import HomForm

P = 13


def F(v):
    return FieldElement(v, P)


def T(vals):
    return tuple(F(v) for v in vals)


def random_triple(rng, p=P):
    while True:
        a = tuple(FieldElement(rng.randrange(p), p) for _ in range(3))
        if any(c.value for c in a):
            return a


class TestProjectivePoint:
    def test_normalization(self):
        assert ProjectivePoint.from_ints((2, 4, 6), P).as_ints() == [1, 2, 3]
        assert ProjectivePoint.from_ints((0, 5, 10), P).as_ints() == [0, 1, 2]
        assert ProjectivePoint.from_ints((0, 0, 7), P).as_ints() == [0, 0, 1]

    def test_equality_up_to_scale(self):
        a = ProjectivePoint.from_ints((1, 2, 3), P)
        b = ProjectivePoint.from_ints((5, 10, 15), P)
        assert a == b
        assert hash(a) == hash(b)
        assert a != ProjectivePoint.from_ints((1, 2, 4), P)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjectivePoint.from_ints((0, 0, 0), P)

    def test_coordinate_product(self):
        assert ProjectivePoint.from_ints((1, 2, 3), P).coordinate_product() == F(6)
        assert ProjectivePoint.from_ints((0, 1, 1), P).coordinate_product().is_zero()


def test_moore_displayed_entries():
    # rows: [a0 x0, a1 x2, a2 x1; a1 x1, a2 x0, a0 x2; a2 x2, a0 x1, a1 x0]
    m = moore(T((1, 2, 3)))
    assert m.serialize() == [
        ["1*x0^1", "2*x2^1", "3*x1^1"],
        ["2*x1^1", "3*x0^1", "1*x2^1"],
        ["3*x2^1", "1*x1^1", "2*x0^1"],
    ]


def test_moore_scalar_is_specialization():
    a, b = T((1, 2, 3)), T((4, 5, 6))
    assert moore_scalar(a, b) == moore(a).specialize(b)


def test_moore_det_closed_form_frozen():
    # a0a1a2 = 6, sum of cubes = 36 = 10, so -10 = 3 mod 13
    det = moore_det(T((1, 2, 3)))
    assert det.serialize() == "6*x0^3 + 3*x0^1*x1^1*x2^1 + 6*x1^3 + 6*x2^3"


def test_det_matches_leibniz_oracle(rng):
    for _ in range(50):
        a = random_triple(rng)
        assert moore_det(a) == det3_form(moore(a))


def test_adjugate_matches_cofactor_oracle(rng):
    for _ in range(50):
        a = random_triple(rng)
        assert moore_adjugate(a) == cofactor_adjugate(moore(a))


def test_mul_by_adjugate_gives_det(rng):
    for _ in range(20):
        a = random_triple(rng)
        m, adj = moore(a), moore_adjugate(a)
        det = moore_det(a)
        expect = FormMatrix(
            [[det if i == j else HomForm.zero(3, P) for j in range(3)] for i in range(3)]
        )
        assert m @ adj == expect
        assert adj @ m == expect


def test_form_matrix_algebra():
    a = moore(T((1, 2, 3)))
    assert a - a == a.scale(zero(P))
    assert (a + a) == a.scale(F(2))
    assert a.transpose().transpose() == a
    assert (-a) + a == a.scale(zero(P))
    assert a.trace() == HomForm.parse("6*x0^1", 1, P)
    x0 = HomForm.variable(0, P)
    assert a.scale_form(x0).entries[0][0] == x0 * x0


def test_left_kernel_point():
    # on the curve through (1,2,3): kernel of M_{a,a} is the identity o
    a = T((1, 2, 3))
    pt = left_kernel_point(moore_scalar(a, a))
    assert pt.as_ints() == [0, 1, 12]
    # the kernel vector is genuinely annihilated
    m = moore_scalar(a, a)
    assert all(x.is_zero() for x in linalg.mat_vec(m, list(pt.coords)))


def test_left_kernel_requires_rank_two():
    a, b = T((1, 2, 3)), T((1, 1, 2))  # b is not on the curve of a
    assert linalg.rank(moore_scalar(a, b)) == 3
    with pytest.raises(KernelError):
        left_kernel_point(moore_scalar(a, b))
    with pytest.raises(KernelError):
        left_kernel_point(linalg.identity(3, P))


def test_right_kernel_is_left_of_transpose():
    a = T((1, 2, 3))
    m = moore_scalar(a, a)
    d = right_kernel_point(m)
    assert all(
        x.is_zero()
        for x in linalg.mat_vec(linalg.transpose(m), list(d.coords))
    )


def test_scalar_adjugate_identity(rng):
    for _ in range(20):
        m = [[FieldElement(rng.randrange(P), P) for _ in range(3)] for _ in range(3)]
        adj = scalar_adjugate(m)
        prod = linalg.mat_mul(m, adj)
        det = prod[0][0]
        assert prod == [
            [det if i == j else zero(P) for j in range(3)] for i in range(3)
        ]


def test_moore_rejects_zero_triple():
    with pytest.raises(ValueError):
        moore(T((0, 0, 0)))


def test_coordinate_vars():
    x = coordinate_vars(P)
    assert [v.serialize() for v in x] == ["1*x0^1", "1*x1^1", "1*x2^1"]
