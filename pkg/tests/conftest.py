import math

import pytest

from rayclass import QuadForm

# Worked-example class polynomial for (d, N) = (-40, 6), reduced exponent 12,
# coefficients leading-first.
EXAMPLE_COEFFS = (
    1,
    20560,
    -1252488,
    -829016560,
    -8751987701092,
    217535583987600,
    181262520621110344,
    43806873084101200,
    -278616280004972730,
    139245187265282800,
    -8883048242697656,
    352945014869040,
    23618989732508,
    -1848032773840,
    49965941112,
    -425670800,
    1,
)

# W_{6,theta}/{±1} for d = -40 as printed, row-major.
EXAMPLE_W_MATRICES = [
    (1, 0, 0, 1),
    (1, 2, 1, 1),
    (1, 4, 2, 1),
    (1, 0, 3, 1),
    (1, 2, 4, 1),
    (1, 4, 5, 1),
    (3, 2, 1, 3),
    (3, 4, 2, 3),
]


def canon_pm_matrix(entries, n):
    plus = tuple(e % n for e in entries)
    minus = tuple((-e) % n for e in entries)
    return min(plus, minus)


def canon_pm_index(r, s, n):
    return min(((r % n), (s % n)), (((-r) % n), ((-s) % n)))


def brute_force_reduced_forms(dk):
    """Independent oracle: scan every (a, b) against the reduced predicate."""
    out = []
    a_max = math.isqrt(-dk // 3)
    for a in range(1, a_max + 1):
        for b in range(-a, a + 1):
            num = b * b - dk
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if math.gcd(a, math.gcd(b, c)) != 1:
                continue
            if (-a < b <= a < c) or (0 <= b <= a == c):
                out.append(QuadForm(a, b, c))
    return sorted(out)


@pytest.fixture(scope="session")
def example_poly():
    from rayclass import class_polynomial

    return class_polynomial(-40, 6, mode="reduced", power=1, precision=384)
