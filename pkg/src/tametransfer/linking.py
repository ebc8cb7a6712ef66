"""Linking of parametrizing classes and semi-simple endo-class formal sums.

Two orbits are ell-linked when the orbits of their ell-regular parts agree;
orbits are linked when a chain of such relations over admissible primes
connects them.  At a fixed level every pair of orbits is linked, and the
chain is constructed explicitly from the prime-power decomposition of the
quotient character.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import CharExp, GaloisOrbit, ell_regular_part, enumerate_orbits, orbit_of
from .errors import DegreeMismatch, LevelMismatch
from .numth import crt_idempotent, factorize, prime_factors
from .tower import FieldLevel


@dataclass(frozen=True)
class SimpleParam:
    """An inertial-class identifier: an opaque endo-class label plus an orbit."""

    theta_id: str
    theta_degree: int
    orbit: GaloisOrbit


@dataclass(frozen=True)
class LinkStep:
    ell: int
    before: GaloisOrbit
    after: GaloisOrbit


@dataclass(frozen=True)
class LinkChain:
    source: CharExp
    target: CharExp
    steps: tuple[LinkStep, ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(s.ell for s in self.steps)


@dataclass(frozen=True)
class SemiSimpleEndoClass:
    """Formal sum of endo-class labels with positive integer multiplicities."""

    terms: tuple[tuple[str, int], ...]


def admissible_primes(q: int, n: int) -> tuple[int, ...]:
    """Primes dividing (q**n - 1)(q**(n-1) - 1)...(q - 1), ascending."""
    if q < 2 or n < 1:
        raise DegreeMismatch(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    primes: set[int] = set()
    for i in range(1, n + 1):
        primes.update(prime_factors(q**i - 1))
    return tuple(sorted(primes))


def ell_linked(o1: GaloisOrbit, o2: GaloisOrbit, ell: int) -> bool:
    """True when the orbits of the ell-regular parts of the two orbits agree."""
    if o1.level != o2.level:
        raise LevelMismatch("orbits live at different levels")
    r1 = orbit_of(ell_regular_part(o1.rep_char(), ell))
    r2 = orbit_of(ell_regular_part(o2.rep_char(), ell))
    return r1 == r2


def build_link_chain(alpha: CharExp, alpha_prime: CharExp) -> LinkChain:
    """Connect two characters by steps of prime-power-order twists.

    The quotient character decomposes uniquely over the primes dividing M
    into factors of prime-power order (CRT idempotents); multiplying them in
    one at a time yields consecutive ell-linked characters.  Primes whose
    factor is trivial contribute no step.
    """
    if alpha.level != alpha_prime.level:
        raise LevelMismatch("characters live at different levels")
    M = alpha.level.M
    xi = (alpha_prime.a - alpha.a) % M
    steps = []
    current = alpha
    for ell, t in sorted(factorize(M).items()):
        q = ell**t
        xi_ell = crt_idempotent(M // q, q) * xi % M
        if xi_ell == 0:
            continue
        before = orbit_of(current)
        current = CharExp(alpha.level, (current.a + xi_ell) % M)
        steps.append(LinkStep(ell=ell, before=before, after=orbit_of(current)))
    assert current.a == alpha_prime.a
    return LinkChain(source=alpha, target=alpha_prime, steps=tuple(steps))


def verify_link_chain(chain: LinkChain) -> bool:
    """Replay every step of a chain through ell_linked and the endpoint laws."""
    if chain.steps and chain.steps[0].before != orbit_of(chain.source):
        return False
    if not chain.steps:
        return orbit_of(chain.source).level == orbit_of(chain.target).level
    for prev, nxt in zip(chain.steps, chain.steps[1:]):
        if prev.after != nxt.before:
            return False
    if chain.steps[-1].after != orbit_of(chain.target):
        return False
    M = chain.source.level.M
    return all(M % s.ell == 0 and ell_linked(s.before, s.after, s.ell) for s in chain.steps)


def linked_partition(level: FieldLevel, max_enumeration: int = 10**6) -> tuple[tuple[int, ...], ...]:
    """Transitive closure of ell-linking over all admissible primes.

    Returns blocks of orbit representatives, each block ascending and blocks
    ordered by their smallest representative.  Primes not dividing M act
    trivially on regular parts and can never merge distinct orbits, so the
    closure only needs the prime divisors of M.
    """
    orbits = enumerate_orbits(level, max_enumeration=max_enumeration)
    parent = {o.rep: o.rep for o in orbits}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ell in prime_factors(level.M):
        for orb in orbits:
            reg = orbit_of(ell_regular_part(orb.rep_char(), ell))
            ra, rb = find(orb.rep), find(reg.rep)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for orb in orbits:
        blocks.setdefault(find(orb.rep), []).append(orb.rep)
    return tuple(tuple(sorted(b)) for _, b in sorted(blocks.items()))


def semisimple_endoclass(components: list[tuple[str, int, int, int]]) -> SemiSimpleEndoClass:
    """Formal sum over components (theta_id, g_i, m_i, d) with weight m_i*d/g_i."""
    mults: dict[str, int] = {}
    for theta_id, g_i, m_i, d in components:
        if g_i < 1 or m_i < 1 or d < 1:
            raise DegreeMismatch("component degrees must be positive")
        if (m_i * d) % g_i:
            raise DegreeMismatch(f"degree {g_i} does not divide {m_i}*{d}")
        mults[theta_id] = mults.get(theta_id, 0) + m_i * d // g_i
    return SemiSimpleEndoClass(terms=tuple(sorted(mults.items())))


def linked_semisimple(a: SemiSimpleEndoClass, b: SemiSimpleEndoClass) -> bool:
    """Multiset equality of the formal sums, independent of term order."""
    return a.terms == b.terms
