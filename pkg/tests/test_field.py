import pytest

from hesse_moore.field import (
    FieldElement,
    is_prime,
    one,
    primitive_root_of_unity,
    validate_modulus,
    zero,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
    assert {n for n in range(2, 32) if is_prime(n)} == primes
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43])
def test_validate_modulus_accepts(p):
    validate_modulus(p)


@pytest.mark.parametrize("p", [2, 3, 5, 11, 17, 23, 9, 12, 25, 49, 0, -7])
def test_validate_modulus_rejects(p):
    with pytest.raises(ValueError):
        validate_modulus(p)


def test_arithmetic_matches_ints():
    p = 13
    for a in range(p):
        for b in range(p):
            x, y = FieldElement(a, p), FieldElement(b, p)
            assert (x + y).value == (a + b) % p
            assert (x - y).value == (a - b) % p
            assert (x * y).value == (a * b) % p
    assert (-FieldElement(5, p)).value == 8


def test_inverses():
    p = 13
    for a in range(1, p):
        x = FieldElement(a, p)
        assert (x * x.inv()) == one(p)
        assert (one(p) / x) == x.inv()
    with pytest.raises(ZeroDivisionError):
        zero(p).inv()


def test_pow_including_negative():
    x = FieldElement(2, 13)
    assert (x ** 6).value == 64 % 13
    assert (x ** 0) == one(13)
    assert (x ** -1) == x.inv()
    assert (x ** -3) == (x ** 3).inv()


def test_modulus_mismatch_is_error():
    with pytest.raises(ValueError):
        FieldElement(1, 13) + FieldElement(1, 7)
    with pytest.raises(TypeError):
        FieldElement(1, 13) + 1


def test_bool_hash_repr():
    assert not zero(13)
    assert FieldElement(5, 13)
    assert FieldElement(5, 13) == FieldElement(18, 13)
    assert hash(FieldElement(5, 13)) == hash(FieldElement(18, 13))
    assert FieldElement(5, 13) != FieldElement(5, 7)
    assert zero(13).is_zero()


def test_primitive_roots_frozen():
    # smallest residues of exact order n
    assert primitive_root_of_unity(13, 3).value == 3
    assert primitive_root_of_unity(13, 6).value == 4
    assert primitive_root_of_unity(7, 3).value == 2
    assert primitive_root_of_unity(13, 1) == one(13)


@pytest.mark.parametrize("p,n", [(13, 3), (13, 6), (13, 4), (7, 3), (7, 6), (31, 6)])
def test_primitive_root_has_exact_order(p, n):
    z = primitive_root_of_unity(p, n)
    assert (z ** n) == one(p)
    for k in range(1, n):
        assert (z ** k) != one(p)


def test_primitive_root_requires_divisibility():
    with pytest.raises(ValueError):
        primitive_root_of_unity(13, 5)
    with pytest.raises(ValueError):
        primitive_root_of_unity(7, 4)
