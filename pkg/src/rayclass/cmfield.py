"""Validation of imaginary quadratic discriminants and the standard CM point.

For a fundamental discriminant d <= -7 the ring of integers is Z[theta] with

    theta = sqrt(d)/2            if d = 0 (mod 4)
    theta = (-1 + sqrt(d))/2     if d = 1 (mod 4)

and min(theta, Q) = X^2 + B*X + C with B^2 - 4C = d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .errors import ExcludedField, NotFundamental, NotImaginary

# Reduced-form enumeration is O(|d|); larger inputs are a usage error, not a
# silent hang.
MAX_ABS_DISC = 2**63


@dataclass(frozen=True)
class Discriminant:
    value: int

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class ThetaParams:
    """Coefficients of min(theta, Q) = X^2 + b_theta*X + c_theta and theta itself.

    theta = theta_re + sqrt(theta_im_sq) * i with both parts exact rationals.
    """

    b_theta: int
    c_theta: int
    theta_re: Fraction
    theta_im_sq: Fraction


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def is_fundamental(d: int) -> bool:
    """True iff d is the discriminant of an imaginary/real quadratic field."""
    if d == 1 or d == 0:
        return False
    if d % 4 == 1:
        return _is_squarefree(abs(d))
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _is_squarefree(abs(m))
    return False


def validate_discriminant(d: int) -> Discriminant:
    """Check that d is a fundamental discriminant <= -7 and wrap it.

    Raises NotImaginary, ExcludedField or NotFundamental otherwise.
    """
    if d >= 0:
        raise NotImaginary(f"discriminant must be negative, got {d}")
    if abs(d) >= MAX_ABS_DISC:
        raise NotFundamental(f"|d| must be < 2^63, got {d}")
    if d in (-3, -4):
        raise ExcludedField(f"d = {d} corresponds to an excluded field")
    if not is_fundamental(d):
        raise NotFundamental(f"{d} is not a fundamental discriminant")
    return Discriminant(d)


def theta_params(d: Discriminant) -> ThetaParams:
    """CM point theta and its minimal polynomial coefficients for d."""
    dk = d.value
    if dk % 4 == 0:
        b, c = 0, -dk // 4
        re = Fraction(0)
    else:
        b, c = 1, (1 - dk) // 4
        re = Fraction(-1, 2)
    return ThetaParams(b_theta=b, c_theta=c, theta_re=re, theta_im_sq=Fraction(-dk, 4))
