"""Explicit Galois correspondence for ray class fields of imaginary quadratic fields.

Gal(K_(N)/K) is parametrized by pairs (alpha, Q) where Q runs over the reduced
forms of discriminant d_K and alpha over the matrix group W_{N,theta}/{±1}.
The conjugate of the base Siegel value attached to (alpha, Q) is read off from
the index (0, 1/N) * (alpha * u_Q) evaluated at the CM point theta_Q.

Matrices act on index row vectors from the right throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .cmfield import Discriminant, theta_params
from .errors import NonInvertible, ZeroIndex
from .quadforms import QuadForm, reduced_forms


@dataclass(frozen=True, order=True)
class Mat2N:
    """2x2 integer matrix mod N, row-major entries (m00, m01, m10, m11)."""

    entries: tuple[int, int, int, int]
    level: int

    def __post_init__(self):
        n = self.level
        if n < 2:
            raise ValueError("level must be >= 2")
        object.__setattr__(self, "entries", tuple(e % n for e in self.entries))

    def det(self) -> int:
        m00, m01, m10, m11 = self.entries
        return (m00 * m11 - m01 * m10) % self.level

    def is_invertible(self) -> bool:
        return math.gcd(self.det(), self.level) == 1

    def __mul__(self, other: "Mat2N") -> "Mat2N":
        if self.level != other.level:
            raise ValueError("level mismatch")
        a00, a01, a10, a11 = self.entries
        b00, b01, b10, b11 = other.entries
        return Mat2N(
            (
                a00 * b00 + a01 * b10,
                a00 * b01 + a01 * b11,
                a10 * b00 + a11 * b10,
                a10 * b01 + a11 * b11,
            ),
            self.level,
        )

    def __neg__(self) -> "Mat2N":
        return Mat2N(tuple(-e for e in self.entries), self.level)

    def canonical(self) -> "Mat2N":
        """Lexicographically smaller of M and -M (representative mod ±1)."""
        neg = -self
        return self if self.entries <= neg.entries else neg

    @staticmethod
    def identity(level: int) -> "Mat2N":
        return Mat2N((1, 0, 0, 1), level)


@dataclass(frozen=True, order=True)
class SiegelIndex:
    """Index (r/N, s/N) of a Siegel function, canonical mod Z^2 and ±.

    The canonical representative is the lexicographically smaller of
    (r, s) and (-r, -s) with components in [0, N); legitimate for the
    12N-th powers we take everywhere.
    """

    r: int
    s: int
    level: int

    def __post_init__(self):
        n = self.level
        if n < 2:
            raise ValueError("level must be >= 2")
        r, s = self.r % n, self.s % n
        if (r, s) == (0, 0):
            raise ZeroIndex("index must be nonzero mod N")
        neg = ((-r) % n, (-s) % n)
        r, s = min((r, s), neg)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    def fractions(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.r, self.level), Fraction(self.s, self.level)


@dataclass(frozen=True, order=True)
class CMPoint:
    """Exact CM point tau = (-b + sqrt(d))/(2a) with d < 0."""

    a: int
    b: int
    d: int

    @property
    def re(self) -> Fraction:
        return Fraction(-self.b, 2 * self.a)

    def __repr__(self):
        return f"CMPoint(({-self.b}+sqrt({self.d}))/{2 * self.a})"


@dataclass(frozen=True)
class ConjugateDescriptor:
    index: SiegelIndex
    tau: CMPoint
    form: QuadForm
    w_elt: Mat2N


def theta_point(q: QuadForm, d: Discriminant) -> CMPoint:
    """The CM point theta_Q = (-b + sqrt(d_K))/(2a) attached to Q."""
    return CMPoint(a=q.a, b=q.b, d=d.value)


def _crt(residues: list[int], moduli: list[int]) -> int:
    x, m = residues[0], moduli[0]
    for r, n in zip(residues[1:], moduli[1:]):
        t = ((r - x) * pow(m, -1, n)) % n
        x += m * t
        m *= n
    return x % m


def _case_matrix(q: QuadForm, dk: int, p: int) -> tuple[int, int, int, int]:
    a, b, c = q.a, q.b, q.c
    if dk % 4 == 0:
        assert b % 2 == 0, "b must be even for d_K = 0 (mod 4)"
        if a % p != 0:
            return (a, b // 2, 0, 1)
        if c % p != 0:
            return (-b // 2, -c, 1, 0)
        return (-a - b // 2, -c - b // 2, 1, -1)
    else:
        if a % p != 0:
            return (a, (b - 1) // 2, 0, 1)
        if c % p != 0:
            return (-(b + 1) // 2, -c, 1, 0)
        return (-a - (b + 1) // 2, -c + (1 - b) // 2, 1, -1)


def u_matrix(q: QuadForm, d: Discriminant, level: int) -> Mat2N:
    """The Gee-Stevenhagen matrix u_Q reduced mod N.

    For each prime p | N the componentwise definition picks one of three case
    matrices depending on whether p divides a and c; the entries are glued
    across the prime powers p^{v_p(N)} by the Chinese remainder theorem.
    """
    if level < 2:
        raise ValueError("level must be >= 2")
    dk = d.value
    primes = sorted(factorint(level))
    moduli = [p ** factorint(level)[p] for p in primes]
    entries = []
    for i in range(4):
        residues = [_case_matrix(q, dk, p)[i] % m for p, m in zip(primes, moduli)]
        entries.append(_crt(residues, moduli))
    mat = Mat2N(tuple(entries), level)
    if not mat.is_invertible():
        raise NonInvertible(f"u_Q for {q.as_tuple()} not invertible mod {level}")
    return mat


def w_group(d: Discriminant, level: int) -> list[Mat2N]:
    """Canonical ±-representatives of W_{N,theta}, sorted by entries.

    W_{N,theta} consists of the matrices (t - B*s, -C*s; s, t) over Z/N with
    invertible determinant, where X^2 + B*X + C = min(theta, Q).
    """
    tp = theta_params(d)
    bt, ct = tp.b_theta, tp.c_theta
    n = level
    reps = set()
    for s in range(n):
        for t in range(n):
            m = Mat2N((t - bt * s, -ct * s, s, t), n)
            if m.is_invertible():
                reps.add(m.canonical())
    return sorted(reps)


def act_on_index(idx: SiegelIndex, m: Mat2N) -> SiegelIndex:
    """Right action (r, s) -> (r, s) * M mod N, canonicalized."""
    if idx.level != m.level:
        raise ValueError("level mismatch")
    m00, m01, m10, m11 = m.entries
    r = idx.r * m00 + idx.s * m10
    s = idx.r * m01 + idx.s * m11
    n = idx.level
    if r % n == 0 and s % n == 0:
        raise ZeroIndex("index action produced (0, 0) mod N")
    return SiegelIndex(r, s, n)


def base_index(level: int) -> SiegelIndex:
    """The index (0, 1/N) of the base invariant."""
    return SiegelIndex(0, 1, level)


def conjugate_set(d: Discriminant, level: int) -> list[ConjugateDescriptor]:
    """One descriptor per element of Gal(K_(N)/K).

    Outer loop over reduced forms (lexicographic), inner loop over W-group
    representatives (lexicographic), so the factor order of the class
    polynomial is reproducible.
    """
    idx0 = base_index(level)
    out = []
    for q in reduced_forms(d):
        uq = u_matrix(q, d, level)
        tau = theta_point(q, d)
        for alpha in w_group(d, level):
            out.append(
                ConjugateDescriptor(
                    index=act_on_index(idx0, alpha * uq),
                    tau=tau,
                    form=q,
                    w_elt=alpha,
                )
            )
    return out
