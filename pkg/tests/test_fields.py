import random
from fractions import Fraction as Q

import pytest

from adw.fields import (GFElement, InputError, PrimeField, RATIONALS,
                        field_from_name)


def test_rational_parse_and_canonical_str():
    f = RATIONALS
    assert f.parse("3/6") == Q(1, 2)
    assert f.to_str(Q(2, 4)) == "1/2"
    assert f.to_str(Q(-8, 2)) == "-4"
    assert f.parse("-7") == Q(-7)
    with pytest.raises(InputError):
        f.parse("1/0")
    with pytest.raises(InputError):
        f.parse("x")


def test_rational_field_exactness():
    # recomputing a sum along two different groupings agrees bit-exactly
    rng = random.Random(1)
    for _ in range(200):
        vals = [Q(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(6)]
        left = ((vals[0] + vals[1]) + (vals[2] + vals[3])) + (vals[4] + vals[5])
        right = vals[5] + (vals[4] + (vals[3] + (vals[2] + (vals[1] + vals[0]))))
        assert left == right
        assert left.denominator > 0


def test_prime_field_arithmetic():
    f = PrimeField(7)
    a, b = f.parse("3"), f.parse("5")
    assert a + b == 1
    assert a * b == 1
    assert a - b == 5
    assert (a / b) * b == a
    assert -a == 4
    assert f.parse("1/2") * 2 == 1
    assert bool(f.zero) is False and bool(f.one) is True
    with pytest.raises(ZeroDivisionError):
        _ = a / f.zero


def test_prime_field_int_mixing():
    f = PrimeField(5)
    a = f.parse("3")
    assert 1 + a == 4 and a + 1 == 4
    assert 2 * a == 1
    assert 0 == f.zero
    assert sum([f.one, f.one, f.one, f.one, f.one]) == 0


def test_mixed_fields_rejected():
    a = PrimeField(5).one
    b = PrimeField(7).one
    with pytest.raises(InputError):
        _ = a + b


def test_field_from_name():
    assert field_from_name("rational") is RATIONALS
    assert field_from_name("fp11").p == 11
    with pytest.raises(InputError):
        field_from_name("fp10")        # not prime
    with pytest.raises(InputError):
        field_from_name("fp257")       # above the cap
    with pytest.raises(InputError):
        field_from_name("real")


def test_prime_field_enumeration():
    f = PrimeField(3)
    assert [e.v for e in f.elements()] == [0, 1, 2]
    with pytest.raises(InputError):
        RATIONALS.elements()
