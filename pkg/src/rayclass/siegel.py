"""High-precision evaluation of Siegel functions at CM points.

g_{(r1,r2)}(tau) = -q^{B2(r1)/2} e^{pi i r2 (r1-1)} (1 - q_z)
                   prod_{n>=1} (1 - q^n q_z)(1 - q^n / q_z)

with q = e^{2 pi i tau}, q_z = e^{2 pi i z}, z = r1 tau + r2 and
B2(X) = X^2 - X + 1/6.

All q-powers are driven by exact rational data: tau = (-b + sqrt(d))/(2a) is
kept symbolic, so q^t for rational t splits into an exact phase e^{2 pi i t x}
(x = Re tau rational) and a real magnitude e^{-2 pi t y}. Phases are therefore
never contaminated by a floating readback of tau, which matters once values
are raised to 12Nn-th powers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, workprec

from .errors import PrecisionUnachievable
from .shimura import CMPoint, SiegelIndex

GUARD_BITS = 32

DEFAULT_PRECISION_CAP = 1_048_576
PRECISION_CAP_ENV = "RAYCLASS_PRECISION_CAP"


def precision_cap() -> int:
    return int(os.environ.get(PRECISION_CAP_ENV, DEFAULT_PRECISION_CAP))


@dataclass(frozen=True)
class EvalRequest:
    index: SiegelIndex
    tau: CMPoint
    exponent: int = 1
    precision: int = 256


def bernoulli2(x: Fraction) -> Fraction:
    """Second Bernoulli polynomial B2(x) = x^2 - x + 1/6, exactly."""
    x = Fraction(x)
    return x * x - x + Fraction(1, 6)


def truncation_cutoff(q_abs, precision: int) -> int:
    """Smallest n_max whose dropped tail is below 2^-(precision+32).

    Each dropped factor satisfies |q^n q_z^{±1}| <= |q|^{n-1} (0 <= r1 < 1),
    so the tail of the log-product is bounded by 2 q^{n_max} / (1-q)^2.
    """
    with workprec(64):
        q = mpf(q_abs)
        if not 0 < q < 1:
            raise ValueError("q_abs must lie in (0, 1)")
        target = mpf(2) ** (-(precision + GUARD_BITS))
        bound = lambda n: 2 * q**n / (1 - q) ** 2
        n = max(1, int(mp.ceil((mp.log(target * (1 - q) ** 2 / 2)) / mp.log(q))))
        while bound(n) >= target:
            n += 1
        while n > 1 and bound(n - 1) < target:
            n -= 1
        return n


def _phase(t: Fraction):
    """e^{2 pi i t} for exact rational t, at the current working precision."""
    t = t - (t.numerator // t.denominator)  # reduce mod 1
    return mp.expjpi(2 * mpf(t.numerator) / t.denominator)


def siegel_eval(req: EvalRequest):
    """g_{(r1,r2)}(tau) as an mpmath complex number.

    Relative error below 2^-precision; the infinite product is truncated at
    truncation_cutoff and all transcendental constants carry 32 guard bits.
    """
    if req.precision > precision_cap():
        raise PrecisionUnachievable(
            f"precision {req.precision} exceeds cap {precision_cap()}"
        )
    r1, r2 = req.index.fractions()
    tau = req.tau
    x = tau.re
    with workprec(req.precision + GUARD_BITS):
        y = mp.sqrt(-tau.d) / (2 * tau.a)

        def qpow(t: Fraction):
            # q^t = e^{2 pi i t tau}
            return mp.exp(-2 * mp.pi * mpf(t.numerator) / t.denominator * y) * _phase(
                t * x
            )

        lead = -qpow(bernoulli2(r1) / 2) * _phase(r2 * (r1 - 1) / 2)
        q_abs = mp.exp(-2 * mp.pi * y)
        n_max = truncation_cutoff(q_abs, req.precision)
        prod = 1 - qpow(r1) * _phase(r2)
        one = Fraction(1)
        for n in range(1, n_max + 1):
            prod *= 1 - qpow(n * one + r1) * _phase(r2)
            prod *= 1 - qpow(n * one - r1) * _phase(-r2)
        return lead * prod


def siegel_power(req: EvalRequest):
    """siegel_eval(...)^exponent with the error budget widened accordingly.

    Raising to the e-th power multiplies the relative error by e, so the
    base value is evaluated with log2(e) extra bits.
    """
    if req.exponent < 1:
        raise ValueError("exponent must be >= 1")
    extra = req.exponent.bit_length()
    base = EvalRequest(req.index, req.tau, 1, req.precision + extra)
    with workprec(req.precision + extra + GUARD_BITS):
        return siegel_eval(base) ** req.exponent
