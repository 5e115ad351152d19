"""Reduced primitive positive definite binary quadratic forms of discriminant d_K.

The set of reduced forms represents the form class group C(d_K); one form per
ideal class. Reduction: (-a < b <= a < c) or (0 <= b <= a = c), which forces
a <= sqrt(-d_K/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cmfield import Discriminant


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return (-a < b <= a < c) or (0 <= b <= a == c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def reduced_forms(d: Discriminant) -> list[QuadForm]:
    """All reduced primitive forms of discriminant d, sorted by (a, b, c)."""
    dk = d.value
    forms = []
    a_max = math.isqrt(-dk // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - dk
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            q = QuadForm(a, b, c)
            if q.is_reduced() and q.is_primitive():
                forms.append(q)
    forms.sort()
    return forms


def unit_form(d: Discriminant) -> QuadForm:
    """The form representing the unit class of C(d_K)."""
    dk = d.value
    if dk % 4 == 0:
        return QuadForm(1, 0, -dk // 4)
    return QuadForm(1, 1, (1 - dk) // 4)


def class_number(d: Discriminant) -> int:
    return len(reduced_forms(d))
