"""Ray class invariants over imaginary quadratic fields.

Singular values of Siegel functions g_{(0,1/N)}^{12Nn}(theta), their Galois
conjugates via the explicit form-class / W-group correspondence, certified
integer class polynomials, and numeric verification of the inequality lemmas
that make these values primitive generators of the ray class field.
"""

from .bounds import LemmaReport, lemma31_check, lemma_comparison_scan
from .classpoly import (
    ClassPolynomial,
    GeneratorReport,
    class_polynomial,
    expected_degree,
    integrality_round,
    is_unit,
    root_membership_residual,
    verify_generator,
)
from .cmfield import Discriminant, ThetaParams, theta_params, validate_discriminant
from .quadforms import QuadForm, class_number, reduced_forms, unit_form
from .shimura import (
    CMPoint,
    ConjugateDescriptor,
    Mat2N,
    SiegelIndex,
    act_on_index,
    base_index,
    conjugate_set,
    theta_point,
    u_matrix,
    w_group,
)
from .siegel import (
    EvalRequest,
    bernoulli2,
    siegel_eval,
    siegel_power,
    truncation_cutoff,
)

__all__ = [
    "ClassPolynomial",
    "CMPoint",
    "ConjugateDescriptor",
    "Discriminant",
    "EvalRequest",
    "GeneratorReport",
    "LemmaReport",
    "Mat2N",
    "QuadForm",
    "SiegelIndex",
    "ThetaParams",
    "act_on_index",
    "base_index",
    "bernoulli2",
    "class_number",
    "class_polynomial",
    "conjugate_set",
    "expected_degree",
    "integrality_round",
    "is_unit",
    "lemma31_check",
    "lemma_comparison_scan",
    "reduced_forms",
    "root_membership_residual",
    "siegel_eval",
    "siegel_power",
    "theta_params",
    "theta_point",
    "truncation_cutoff",
    "u_matrix",
    "unit_form",
    "validate_discriminant",
    "verify_generator",
    "w_group",
]

__version__ = "0.1.0"
