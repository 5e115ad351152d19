from fractions import Fraction

import pytest

from rayclass import theta_params, validate_discriminant
from rayclass.cmfield import is_fundamental
from rayclass.errors import ExcludedField, NotFundamental, NotImaginary


def test_validate_example():
    assert validate_discriminant(-40).value == -40


@pytest.mark.parametrize("d", [-3, -4])
def test_excluded_fields(d):
    with pytest.raises(ExcludedField):
        validate_discriminant(d)


@pytest.mark.parametrize("d", [0, 5, 1])
def test_not_imaginary(d):
    with pytest.raises(NotImaginary):
        validate_discriminant(d)


@pytest.mark.parametrize("d", [-12, -9, -5, -16, -25, -18, -27, -44, -45])
def test_not_fundamental(d):
    with pytest.raises(NotFundamental):
        validate_discriminant(d)


def test_fundamental_against_brute_force():
    # d fundamental iff d = 1 mod 4 squarefree, or d = 4m, m = 2,3 mod 4 squarefree
    def squarefree(n):
        n = abs(n)
        k = 2
        while k * k <= n:
            if n % (k * k) == 0:
                return False
            k += 1
        return True

    for d in range(-200, 0):
        expected = (d % 4 == 1 and squarefree(d)) or (
            d % 4 == 0 and (d // 4) % 4 in (2, 3) and squarefree(d // 4)
        )
        assert is_fundamental(d) == expected, d


@pytest.mark.parametrize(
    "d,b,c,re",
    [
        (-40, 0, 10, Fraction(0)),
        (-7, 1, 2, Fraction(-1, 2)),
        (-8, 0, 2, Fraction(0)),
    ],
)
def test_theta_params_examples(d, b, c, re):
    tp = theta_params(validate_discriminant(d))
    assert (tp.b_theta, tp.c_theta, tp.theta_re) == (b, c, re)
    assert tp.theta_im_sq == Fraction(-d, 4)


def test_theta_params_identity():
    for d in range(-400, -6):
        if not is_fundamental(d):
            continue
        tp = theta_params(validate_discriminant(d))
        assert tp.b_theta**2 - 4 * tp.c_theta == d
        assert tp.theta_im_sq > 0
