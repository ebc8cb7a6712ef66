"""Regular-elliptic trace values as exact formal sums of roots of unity.

A formal sum keeps integer coefficients on exponents modulo M, standing for
the corresponding sum of M-th roots of unity.  No cyclotomic reduction is
performed: exact equality of formal sums is what the invariants need, and a
separate lossy numeric view covers identities like 1 + z + z^2 = 0.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .characters import CharExp, orbit_of
from .errors import LevelMismatch, NotRegularCharacter, NotRegularElement
from .tower import FieldLevel


@dataclass(frozen=True)
class CyclotomicSum:
    modulus: int
    coeffs: tuple[tuple[int, int], ...]

    def evaluate(self) -> complex:
        return sum(
            (c * cmath.exp(2j * cmath.pi * e / self.modulus) for e, c in self.coeffs),
            start=0j,
        )

    def __neg__(self) -> "CyclotomicSum":
        return CyclotomicSum(self.modulus, tuple((e, -c) for e, c in self.coeffs))

    def __add__(self, other: "CyclotomicSum") -> "CyclotomicSum":
        if self.modulus != other.modulus:
            raise LevelMismatch("formal sums over different moduli")
        return cyclotomic_sum(self.modulus, list(self.coeffs) + list(other.coeffs))


def cyclotomic_sum(modulus: int, terms: list[tuple[int, int]]) -> CyclotomicSum:
    """Canonical formal sum: exponents reduced mod modulus, zero coefficients dropped."""
    acc: dict[int, int] = {}
    for e, c in terms:
        e %= modulus
        acc[e] = acc.get(e, 0) + c
    return CyclotomicSum(modulus, tuple(sorted((e, c) for e, c in acc.items() if c)))


def element_degree(g_exp: int, level: FieldLevel) -> int:
    """Degree of the element with the given exponent: its Frobenius orbit size."""
    return orbit_of(CharExp(level, g_exp % level.M)).size


def green_trace(alpha0: CharExp, g_exp: int, u: int) -> CyclotomicSum:
    """Trace of the cuspidal parameter attached to a regular character.

    For a character of full orbit size u and an element of degree u, the
    value is (-1)**(u-1) times the sum of the character over the Frobenius
    orbit of the element.
    """
    lvl = alpha0.level
    if lvl.deg != u:
        raise LevelMismatch(f"character level has degree {lvl.deg}, expected {u}")
    if orbit_of(alpha0).size != u:
        raise NotRegularCharacter(f"exponent {alpha0.a} has orbit size below {u}")
    g_exp %= lvl.M
    if element_degree(g_exp, lvl) != u:
        raise NotRegularElement(f"element exponent {g_exp} has degree below {u}")
    sign = 1 if u % 2 else -1
    terms = [(alpha0.a * pow(lvl.Q, i, lvl.M) * g_exp % lvl.M, sign) for i in range(u)]
    return cyclotomic_sum(lvl.M, terms)
