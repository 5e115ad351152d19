"""Assembly and certification of class polynomials.

The class polynomial of the ray class invariant is the monic product of
(X - v) over all Galois conjugate values v delivered by the shimura module.
Coefficients are computed in big-float arithmetic, rounded to integers, and
certified: rounding residuals and imaginary parts must stay below tolerance
and the integers must be reproduced at a doubled precision.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from mpmath import mp, mpf, mpmathify, workprec

from .cmfield import Discriminant, theta_params, validate_discriminant
from .errors import (
    IntegralityFailure,
    PrecisionExhausted,
    RegionUnknownWarning,
    SeparationFailure,
)
from .quadforms import class_number
from .shimura import CMPoint, base_index, conjugate_set
from .siegel import GUARD_BITS, EvalRequest, precision_cap, siegel_power

DEFAULT_TOLERANCE = 1e-10

FULL = "full"
REDUCED = "reduced"


@dataclass(frozen=True)
class PolyMeta:
    discriminant: int
    level: int
    exponent: int
    power: int
    precision_bits: int
    max_rounding_residual: float
    max_imag_residual: float
    region: str


@dataclass(frozen=True)
class ClassPolynomial:
    """Monic integer polynomial; coefficients stored leading-first."""

    coefficients: tuple[int, ...]
    degree: int
    meta: PolyMeta

    @property
    def constant_term(self) -> int:
        return self.coefficients[-1]


@dataclass(frozen=True)
class GeneratorReport:
    discriminant: int
    level: int
    count: int
    min_gap: float
    separation_threshold: float
    distinct: bool


def exponent_for(mode: str, level: int, power: int = 1) -> int:
    """Total exponent 12*N*n, divided by gcd(6, N) in reduced mode."""
    if power < 1:
        raise ValueError("power must be >= 1")
    if mode == FULL:
        return 12 * level * power
    if mode == REDUCED:
        return 12 * level * power // math.gcd(6, level)
    raise ValueError(f"unknown exponent mode {mode!r}")


def classify_region(dk: int, level: int) -> str:
    """Which validity region of the generator theorem (N, d_K) falls in.

    "theorem": N >= 21; "alternate": the shifted-discriminant ranges;
    "finite": the residual finite list, verified numerically; "unknown"
    (warned) otherwise.
    """
    n = level
    if n >= 21:
        return "theorem"
    if (n == 2 and dk <= -43) or (n == 3 and dk <= -39) or (n >= 4 and dk <= -31):
        return "alternate"
    if (n == 2 and dk >= -40) or (n == 3 and dk >= -35) or (4 <= n <= 20 and dk >= -24):
        return "finite"
    warnings.warn(
        f"(N, d_K) = ({n}, {dk}) is outside every established region",
        RegionUnknownWarning,
        stacklevel=3,
    )
    return "unknown"


def _as_discriminant(d) -> Discriminant:
    return d if isinstance(d, Discriminant) else validate_discriminant(int(d))


def _initial_precision(dk: int, exponent: int, descs) -> int:
    # Largest |root| is ~ |q_tau|^{-exponent/24}; sum the per-root bit
    # estimates, add degree bits for the binomial growth, overshoot by 1.5x.
    root_bits = sum(
        exponent * math.pi * math.sqrt(-dk) / (24 * desc.form.a * math.log(2))
        for desc in descs
    )
    return max(256, math.ceil(1.5 * (root_bits + len(descs))))


def _polymul(p, q):
    out = [mp.mpc(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def _product_tree(polys):
    while len(polys) > 1:
        nxt = [
            _polymul(polys[i], polys[i + 1]) if i + 1 < len(polys) else polys[i]
            for i in range(0, len(polys), 2)
        ]
        polys = nxt
    return polys[0]


def conjugate_values(d: Discriminant, level: int, exponent: int, precision: int):
    """All conjugate values of the invariant, in descriptor order."""
    return [
        siegel_power(EvalRequest(desc.index, desc.tau, exponent, precision))
        for desc in conjugate_set(d, level)
    ]


def integrality_round(coeffs, tol: float = DEFAULT_TOLERANCE, precision: int | None = None):
    """Round complex coefficients to integers; certify the residuals.

    Returns (integers, max rounding residual, max imaginary residual).
    Raises IntegralityFailure if any residual reaches tol. Arithmetic runs at
    a working precision wide enough to resolve tol below the largest
    coefficient (the inputs carry their own full precision).
    """
    coeffs = [mpmathify(z) for z in coeffs]
    if precision is None:
        top = max((mp.mag(z) for z in coeffs if z != 0), default=1)
        precision = max(64, top + GUARD_BITS - math.floor(math.log2(tol)))
    ints = []
    max_res = mpf(0)
    max_imag = mpf(0)
    with workprec(precision):
        for z in coeffs:
            rounded = mp.nint(mp.re(z))
            res = abs(mp.re(z) - rounded)
            imag = abs(mp.im(z))
            max_res = max(max_res, res)
            max_imag = max(max_imag, imag)
            if res >= tol or imag >= tol:
                raise IntegralityFailure(
                    f"coefficient {z} is not within {tol} of an integer"
                )
            ints.append(int(rounded))
    return ints, float(max_res), float(max_imag)


def _coefficients_at(d: Discriminant, level: int, exponent: int, bits: int):
    values = conjugate_values(d, level, exponent, bits)
    with workprec(bits + GUARD_BITS):
        factors = [[-v, mp.mpc(1)] for v in values]
        return _product_tree(factors)  # ascending powers


def class_polynomial(
    d,
    level: int,
    mode: str = REDUCED,
    power: int = 1,
    precision: int | None = None,
    tol: float = DEFAULT_TOLERANCE,
) -> ClassPolynomial:
    """Compute and certify the class polynomial of the ray class invariant.

    Precision is doubled (up to the cap) until the rounding residuals pass
    and two successive precisions produce identical integers; the certified
    run's precision is recorded in the metadata.
    """
    d = _as_discriminant(d)
    if level < 2:
        raise ValueError("level must be >= 2")
    region = classify_region(d.value, level)
    exponent = exponent_for(mode, level, power)
    degree = len(conjugate_set(d, level))
    bits = precision if precision is not None else _initial_precision(
        d.value, exponent, conjugate_set(d, level)
    )
    cap = precision_cap()
    prev_ints = None
    while bits <= cap:
        coeffs = _coefficients_at(d, level, exponent, bits)
        try:
            ints, max_res, max_imag = integrality_round(coeffs, tol)
        except IntegralityFailure:
            prev_ints = None
            bits *= 2
            continue
        if prev_ints is not None and ints == prev_ints:
            leading_first = tuple(reversed(ints))
            if leading_first[0] != 1:
                raise IntegralityFailure("polynomial is not monic after rounding")
            return ClassPolynomial(
                coefficients=leading_first,
                degree=degree,
                meta=PolyMeta(
                    discriminant=d.value,
                    level=level,
                    exponent=exponent,
                    power=power,
                    precision_bits=bits,
                    max_rounding_residual=max_res,
                    max_imag_residual=max_imag,
                    region=region,
                ),
            )
        prev_ints = ints
        bits *= 2
    raise PrecisionExhausted(
        f"no stable integer coefficients below the {cap}-bit precision cap"
    )


def is_unit(p: ClassPolynomial) -> bool:
    """True iff the polynomial certifies its root as an elliptic unit."""
    return p.constant_term in (1, -1)


def verify_generator(d, level: int, precision: int = 128) -> GeneratorReport:
    """Check that all conjugate values are pairwise distinct.

    Distinctness of the full conjugate roster is the desk-scale equivalent of
    the generator property: the minimal polynomial is separable of full
    degree. Raises SeparationFailure when two conjugates come closer than
    2^-(precision/2).
    """
    d = _as_discriminant(d)
    classify_region(d.value, level)
    exponent = exponent_for(REDUCED, level)
    values = conjugate_values(d, level, exponent, precision)
    threshold = mpf(2) ** (-precision // 2)
    min_gap = mp.inf
    with workprec(precision + GUARD_BITS):
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                gap = abs(values[i] - values[j])
                min_gap = min(min_gap, gap)
                if gap <= threshold:
                    raise SeparationFailure(
                        f"conjugates {i} and {j} are within {float(gap)}"
                    )
    return GeneratorReport(
        discriminant=d.value,
        level=level,
        count=len(values),
        min_gap=float(min_gap),
        separation_threshold=float(threshold),
        distinct=True,
    )


def root_membership_residual(p: ClassPolynomial) -> float:
    """|p(v)| / max|coefficient| for the base invariant value v.

    Small residual confirms the certified integer polynomial really
    annihilates the value it was built from.
    """
    d = Discriminant(p.meta.discriminant)
    tp = theta_params(d)
    theta = CMPoint(1, tp.b_theta, d.value)
    bits = p.meta.precision_bits
    value = siegel_power(
        EvalRequest(base_index(p.meta.level), theta, p.meta.exponent, bits)
    )
    with workprec(bits + GUARD_BITS):
        acc = mp.mpc(0)
        for c in p.coefficients:
            acc = acc * value + mpmathify(c)
        scale = max(abs(mpmathify(c)) for c in p.coefficients)
        return float(abs(acc) / scale)


def expected_degree(d, level: int) -> int:
    """Degree law: class number times |W/{±1}|."""
    from .shimura import w_group

    d = _as_discriminant(d)
    return class_number(d) * len(w_group(d, level))
