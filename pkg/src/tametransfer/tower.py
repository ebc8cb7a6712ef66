"""Numeric shape of the groups and residue fields.

A tower is described by six integers (p, q, e_ef, f_ef, m, d): the residue
characteristic, the residue cardinality of the base field, the ramification
index and residual degree of the parameter extension, and the size parameters
of the group GL_m(D) with D of reduced degree d.  Everything the other
modules consume is derived from these:

    g  = e_ef * f_ef        degree of the parameter class
    n  = m * d
    Q  = q ** f_ef          cardinality of the small residue field e
    d' = d / gcd(d, g)
    m' = m * gcd(d, g) / g
    n' = n / g = m' * d'    degree over e of the big residue field k

A FieldLevel pins one layer of the residue-field lattice over e: the field
with Q**deg elements, whose multiplicative group is cyclic of order
M = Q**deg - 1.  M is an exact arbitrary-precision integer; a configurable
guard rejects degrees whose M would be astronomically large.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import DegreeMismatch, LevelGuardExceeded, NotPrime, NotPrimePower, OutOfRange
from .numth import is_prime, is_prime_power

DEFAULT_LEVEL_GUARD = 64
LEVEL_GUARD_ENV = "TAMETRANSFER_LEVEL_GUARD"


def level_guard() -> int:
    """Maximum permitted deg_over_e; overridable via the environment."""
    raw = os.environ.get(LEVEL_GUARD_ENV)
    return int(raw) if raw else DEFAULT_LEVEL_GUARD


@dataclass(frozen=True)
class FieldLevel:
    """One layer of the residue-field lattice: Q**deg elements, M = Q**deg - 1."""

    Q: int
    deg: int
    M: int

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FieldLevel(Q={self.Q}, deg={self.deg})"


def field_level(Q: int, deg: int, guard: int | None = None) -> FieldLevel:
    """Build the level of degree ``deg`` over a field with Q elements."""
    if Q < 2:
        raise OutOfRange(f"base cardinality must be at least 2, got {Q}")
    if deg < 1:
        raise OutOfRange(f"deg_over_e must be at least 1, got {deg}")
    bound = guard if guard is not None else level_guard()
    if deg > bound:
        raise LevelGuardExceeded(f"deg_over_e={deg} exceeds level guard {bound}")
    return FieldLevel(Q=Q, deg=deg, M=Q**deg - 1)


@dataclass(frozen=True)
class TowerParams:
    p: int
    q: int
    e_ef: int
    f_ef: int
    m: int
    d: int
    # derived
    g: int
    n: int
    Q: int
    d_prime: int
    m_prime: int
    n_prime: int

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.p, self.q, self.e_ef, self.f_ef, self.m, self.d)


def derive_tower(p: int, q: int, e_ef: int, f_ef: int, m: int, d: int) -> TowerParams:
    """Validate the six shape integers and compute every derived invariant."""
    if min(p, q, e_ef, f_ef, m, d) < 1:
        raise OutOfRange("all tower parameters must be positive")
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if is_prime_power(q) != p:
        raise NotPrimePower(f"q={q} is not a power of p={p}")
    g = e_ef * f_ef
    n = m * d
    if n % g:
        raise DegreeMismatch(f"degree g={g} does not divide n={n}")
    if (m * math.gcd(d, g)) % g:
        raise DegreeMismatch(f"m*gcd(d,g)={m * math.gcd(d, g)} not divisible by g={g}")
    d_prime = d // math.gcd(d, g)
    m_prime = m * math.gcd(d, g) // g
    n_prime = n // g
    assert m_prime * d_prime == n_prime
    return TowerParams(
        p=p, q=q, e_ef=e_ef, f_ef=f_ef, m=m, d=d,
        g=g, n=n, Q=q**f_ef, d_prime=d_prime, m_prime=m_prime, n_prime=n_prime,
    )


def level(params: TowerParams, deg_over_e: int, guard: int | None = None) -> FieldLevel:
    """The field level of the given degree over e, with exact group order."""
    return field_level(params.Q, deg_over_e, guard=guard)


def blow_up(params: TowerParams, a: int) -> TowerParams:
    """Pass from GL_m(D) to GL_{a*m}(D); Q and d' are untouched, m and n' scale."""
    if a < 1:
        raise OutOfRange(f"blow-up factor must be at least 1, got {a}")
    return derive_tower(params.p, params.q, params.e_ef, params.f_ef, a * params.m, params.d)
