"""The character algebra of the multiplicative group of a finite field.

A character of the field with Q**deg elements is stored as an exponent
``a`` modulo the group order M = Q**deg - 1, with respect to a fixed
generator: the character sends a fixed generator to the a-th power of a
fixed primitive M-th root of unity.  Under this model

  * multiplying characters adds exponents mod M,
  * the Frobenius x -> x**Q acts on exponents by a -> Q*a mod M,
  * the norm to a level of degree a*deg acts by multiplying exponents by
    the ratio of the group orders (compatible generators are assumed; no
    orbit-level statement ever depends on the choice).

Galois orbits are the orbits under the Frobenius action; their canonical
representative is the numerically smallest exponent.  The orbit size is
called the parametric degree of the character.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EnumerationTooLarge, LevelMismatch, NotPrime, OutOfRange
from .numth import crt_idempotent, is_prime
from .tower import FieldLevel, field_level


@dataclass(frozen=True)
class CharExp:
    """A character of the level's multiplicative group, as an exponent mod M."""

    level: FieldLevel
    a: int

    def __post_init__(self) -> None:
        if not 0 <= self.a < self.level.M:
            raise OutOfRange(f"exponent {self.a} outside [0, {self.level.M})")

    def __mul__(self, other: "CharExp") -> "CharExp":
        if self.level != other.level:
            raise LevelMismatch("cannot compose characters at different levels")
        return CharExp(self.level, (self.a + other.a) % self.level.M)

    def inverse(self) -> "CharExp":
        return CharExp(self.level, -self.a % self.level.M)

    def frobenius(self, i: int = 1) -> "CharExp":
        return CharExp(self.level, pow(self.level.Q, i, self.level.M) * self.a % self.level.M)

    @property
    def is_trivial(self) -> bool:
        return self.a == 0


def char(level: FieldLevel, a: int) -> CharExp:
    """Character with exponent ``a`` reduced into canonical range."""
    return CharExp(level, a % level.M)


@dataclass(frozen=True)
class GaloisOrbit:
    """A Frobenius orbit of characters with its canonical representative."""

    level: FieldLevel
    rep: int
    size: int
    members: tuple[int, ...]

    @property
    def parametric_degree(self) -> int:
        return self.size

    def rep_char(self) -> CharExp:
        return CharExp(self.level, self.rep)


def orbit_of(alpha: CharExp) -> GaloisOrbit:
    """Enumerate the Frobenius orbit of ``alpha``.

    The orbit closes after f steps where f divides the level degree, because
    Q**deg = 1 mod M.
    """
    Q, M = alpha.level.Q, alpha.level.M
    members = [alpha.a]
    x = alpha.a * Q % M
    while x != alpha.a:
        members.append(x)
        x = x * Q % M
    assert alpha.level.deg % len(members) == 0
    members.sort()
    return GaloisOrbit(level=alpha.level, rep=members[0], size=len(members), members=tuple(members))


def char_order(alpha: CharExp) -> int:
    """Order of the character in the dual group: M / gcd(a, M)."""
    return alpha.level.M // math.gcd(alpha.a, alpha.level.M)


def ell_regular_part(alpha: CharExp, ell: int) -> CharExp:
    """The unique character of order prime to ell with quotient of ell-power order.

    Writing M = ell**t * M0 with ell not dividing M0, the exponent is scaled
    by the idempotent that is 1 mod M0 and 0 mod ell**t; this kills exactly
    the ell-part of the character.
    """
    if not is_prime(ell):
        raise NotPrime(f"ell={ell} is not prime")
    M = alpha.level.M
    t = 0
    M0 = M
    while M0 % ell == 0:
        M0 //= ell
        t += 1
    if t == 0:
        return alpha
    e = crt_idempotent(ell**t, M0)
    return CharExp(alpha.level, e * alpha.a % M)


def norm_inflate(alpha: CharExp, a: int, guard: int | None = None) -> CharExp:
    """Pull the character back through the norm from the level of degree a*deg.

    Exponents multiply by the ratio of group orders; the parametric degree is
    preserved because the character order is unchanged.
    """
    if a < 1:
        raise OutOfRange(f"blow-up factor must be at least 1, got {a}")
    if a == 1:
        return alpha
    top = field_level(alpha.level.Q, a * alpha.level.deg, guard=guard)
    return CharExp(top, alpha.a * (top.M // alpha.level.M) % top.M)


def is_norm_inflated(chi: CharExp, base: FieldLevel) -> CharExp | None:
    """Invert norm inflation from ``base`` when possible.

    Returns the character nu with norm_inflate(nu, a) == chi, which exists
    exactly when the order ratio divides chi's exponent; None otherwise.
    """
    if chi.level.Q != base.Q or chi.level.deg % base.deg:
        raise LevelMismatch(
            f"level {chi.level.deg} over Q={chi.level.Q} is not a blow-up of "
            f"level {base.deg} over Q={base.Q}"
        )
    ratio = chi.level.M // base.M
    if chi.a % ratio:
        return None
    return CharExp(base, chi.a // ratio)


def is_e_regular(alpha: CharExp) -> bool:
    """True when the Frobenius orbit has the maximal size, the level degree."""
    return orbit_of(alpha).size == alpha.level.deg


def sigma_orbit_size(alpha: CharExp, d_prime: int) -> int:
    """Orbit size under the subgroup generated by the d_prime-th Frobenius power."""
    if alpha.level.deg % d_prime:
        raise LevelMismatch(f"d'={d_prime} does not divide level degree {alpha.level.deg}")
    Q, M = alpha.level.Q, alpha.level.M
    step = pow(Q, d_prime, M)
    size = 1
    x = alpha.a * step % M
    while x != alpha.a:
        x = x * step % M
        size += 1
    return size


def is_sigma_regular(alpha: CharExp, d_prime: int) -> bool:
    return sigma_orbit_size(alpha, d_prime) == alpha.level.deg // d_prime


def stabilizer_degrees(alpha: CharExp, d_prime: int) -> tuple[int, int]:
    """(f, u): degrees over e and over d of the field the character lives on.

    f is the Frobenius orbit size; the orbit under the index-d' subgroup has
    size u = f / gcd(f, d').
    """
    if alpha.level.deg % d_prime:
        raise LevelMismatch(f"d'={d_prime} does not divide level degree {alpha.level.deg}")
    f = orbit_of(alpha).size
    u = f // math.gcd(f, d_prime)
    assert u == sigma_orbit_size(alpha, d_prime)
    return f, u


def s_invariant(alpha: CharExp, d_prime: int) -> int:
    """d' / gcd(f, d'), where f is the parametric degree of the character."""
    if alpha.level.deg % d_prime:
        raise LevelMismatch(f"d'={d_prime} does not divide level degree {alpha.level.deg}")
    f = orbit_of(alpha).size
    return d_prime // math.gcd(f, d_prime)


def enumerate_orbits(level: FieldLevel, max_enumeration: int = 10**6) -> list[GaloisOrbit]:
    """All Frobenius orbits at the level, ordered by canonical representative."""
    if level.M > max_enumeration:
        raise EnumerationTooLarge(f"M={level.M} exceeds enumeration bound {max_enumeration}")
    seen = bytearray(level.M)
    out = []
    for a in range(level.M):
        if seen[a]:
            continue
        orb = orbit_of(CharExp(level, a))
        for x in orb.members:
            seen[x] = 1
        out.append(orb)
    return out


def inflate_orbit(orbit: GaloisOrbit, a: int, guard: int | None = None) -> GaloisOrbit:
    """Norm inflation on orbits; well defined since conjugates inflate to conjugates."""
    return orbit_of(norm_inflate(orbit.rep_char(), a, guard=guard))
