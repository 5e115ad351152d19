import warnings

import pytest
from mpmath import mp, mpf, workprec

from rayclass import (
    class_polynomial,
    expected_degree,
    integrality_round,
    is_unit,
    root_membership_residual,
    validate_discriminant,
    verify_generator,
)
from rayclass.classpoly import classify_region, conjugate_values, exponent_for
from rayclass.errors import IntegralityFailure, RegionUnknownWarning

from conftest import EXAMPLE_COEFFS


def test_example_polynomial(example_poly):
    assert example_poly.coefficients == EXAMPLE_COEFFS
    assert example_poly.degree == 16
    assert example_poly.meta.exponent == 12
    assert example_poly.meta.max_rounding_residual < 1e-10
    assert example_poly.meta.max_imag_residual < 1e-10


def test_monic_and_degree_law(example_poly):
    assert example_poly.coefficients[0] == 1
    assert example_poly.degree == expected_degree(-40, 6)


def test_exponent_modes():
    assert exponent_for("reduced", 6) == 12
    assert exponent_for("full", 6) == 72
    assert exponent_for("reduced", 5) == 60
    assert exponent_for("reduced", 6, power=2) == 24
    with pytest.raises(ValueError):
        exponent_for("other", 6)


def test_region_classification():
    assert classify_region(-40, 21) == "theorem"
    assert classify_region(-40, 6) == "alternate"
    assert classify_region(-43, 2) == "alternate"
    assert classify_region(-8, 5) == "finite"
    assert classify_region(-23, 5) == "finite"
    with pytest.warns(RegionUnknownWarning):
        assert classify_region(-28, 5) == "unknown"


def test_integrality_round_examples():
    ints, max_res, max_imag = integrality_round([1.0 + 0j, 20559.99999999999 + 0j])
    assert ints == [1, 20560]
    assert max_res < 1e-10
    exact, res, imag = integrality_round([3 + 0j, -7 + 0j])
    assert exact == [3, -7] and res == 0.0
    with pytest.raises(IntegralityFailure):
        integrality_round([0.5 + 0j])
    with pytest.raises(IntegralityFailure):
        integrality_round([1.0 + 1e-5j])


def test_full_mode_roots_are_powers_of_reduced_roots():
    # exponent 72 values are the 6th powers of the exponent 12 values
    d = validate_discriminant(-40)
    reduced = conjugate_values(d, 6, 12, 256)
    full = conjugate_values(d, 6, 72, 256)
    with workprec(280):
        for a, b in zip(reduced, full):
            assert abs(a**6 - b) / abs(b) < mpf(2) ** -64


def test_full_mode_polynomial_is_integral_and_unit():
    p = class_polynomial(-40, 6, mode="full")
    assert p.degree == 16
    assert p.coefficients[0] == 1
    assert is_unit(p)


def test_power_two():
    p = class_polynomial(-40, 6, mode="reduced", power=2)
    assert p.meta.exponent == 24
    assert p.degree == 16
    assert p.coefficients[0] == 1


def test_root_membership(example_poly):
    assert root_membership_residual(example_poly) < 2.0**-64


def test_verify_generator_example():
    report = verify_generator(-40, 6)
    assert report.count == 16
    assert report.distinct
    assert report.min_gap > report.separation_threshold


def test_verify_generator_alternate_region():
    report = verify_generator(-31, 4, precision=256)
    assert report.distinct
    assert report.count == expected_degree(-31, 4)


def test_verify_generator_single_conjugate_vacuous():
    report = verify_generator(-7, 2)
    assert report.count == 1
    assert report.distinct


def test_degree_law_cases():
    for d, n in [(-40, 6), (-23, 5), (-8, 5), (-31, 4)]:
        with warnings.catch_warnings():
            warnings.simplefilter("error", RegionUnknownWarning)
            p = class_polynomial(d, n)
        assert p.degree == expected_degree(d, n)
        assert p.coefficients[0] == 1


def test_precision_stability(example_poly):
    doubled = class_polynomial(
        -40, 6, precision=example_poly.meta.precision_bits
    )
    assert doubled.coefficients == example_poly.coefficients
