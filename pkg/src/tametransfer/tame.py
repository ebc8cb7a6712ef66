"""Rectifier character, transfer permutation on orbits, and the pair dictionary.

For an essentially tame shape the transfer of orbit classes is twisting by a
canonical character of order at most two, the rectifier.  Whether it is the
quadratic character or trivial is decided by the parity of

    y = m(d-1) + m'(d'-1) + u(v-1),

with u, v cut out of the shape by w = n / e(E/F), v = d / gcd(d, w),
u*v = n/w.  The same answer is reproduced, without using the formula at the
target level, by lifting through a regularization blow-up and descending the
twisted image; the two routes agreeing on every orbit is the executable
content of this module.

Inertial classes of admissible pairs are modeled residually by a subfield
level of degree f together with a fully regular character there; norm
inflation and its inverse translate between pairs and orbit classes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import (
    CharExp,
    GaloisOrbit,
    char,
    is_norm_inflated,
    norm_inflate,
    orbit_of,
)
from .errors import (
    DegreeMismatch,
    LevelMismatch,
    MismatchAgainstRectifier,
    NotAdmissiblePair,
    NotEssentiallyTame,
    NotInNormImage,
    OrderViolation,
    ShapeError,
)
from .regularize import descend_transfer, regularize
from .tower import TowerParams, blow_up, field_level, level


@dataclass(frozen=True)
class RectifierSpec:
    """The transfer twist of a shape: the parity data and the twisting character."""

    params: TowerParams
    w: int
    v: int
    u: int
    y: int
    mu: CharExp

    @property
    def nontrivial(self) -> bool:
        return not self.mu.is_trivial


def rectifier(params: TowerParams, guard: int | None = None) -> RectifierSpec:
    """Compute the rectifying character of an essentially tame shape."""
    if math.gcd(params.e_ef, params.p) != 1:
        raise NotEssentiallyTame(
            f"ramification e(E/F)={params.e_ef} is divisible by p={params.p}"
        )
    w = params.n // params.e_ef
    v = params.d // math.gcd(params.d, w)
    if (params.n // w) % v:
        raise ShapeError(f"v={v} does not divide n/w={params.n // w}")
    u = (params.n // w) // v
    y = params.m * (params.d - 1) + params.m_prime * (params.d_prime - 1) + u * (v - 1)
    lvl = level(params, params.n_prime, guard=guard)
    # Parity first: the quadratic exponent M/2 only exists when Q is odd,
    # which the p != 2 test guarantees.
    nontrivial = params.p != 2 and y % 2 == 1
    mu = CharExp(lvl, lvl.M // 2 if nontrivial else 0)
    return RectifierSpec(params=params, w=w, v=v, u=u, y=y, mu=mu)


def apply_transfer(orbit: GaloisOrbit, spec: RectifierSpec) -> GaloisOrbit:
    """Twist an orbit by the rectifier; well defined since mu is Frobenius-fixed."""
    if orbit.level != spec.mu.level:
        raise LevelMismatch("orbit does not live at the rectifier's level")
    assert spec.mu.frobenius() == spec.mu
    return orbit_of(char(orbit.level, orbit.rep + spec.mu.a))


def kappa_twist(orbit: GaloisOrbit, chi_base: CharExp) -> GaloisOrbit:
    """Reparametrize an orbit for an alternative normalization choice.

    Switching the normalization multiplies every parametrizing class by a
    fixed character pulled back from the degree-one base level through the
    norm; such a character is Frobenius-fixed, so the twist is well defined
    on orbits.  The transfer permutation commutes with it.
    """
    if chi_base.level.deg != 1:
        raise LevelMismatch("normalization twists come from the degree-one base level")
    if chi_base.level.Q != orbit.level.Q:
        raise LevelMismatch("twist lives over a different base field")
    return orbit_of(orbit.rep_char() * norm_inflate(chi_base, orbit.level.deg))


def blowup_parity_check(params: TowerParams, a: int) -> bool:
    """Whether y recomputed at the blown-up shape agrees with a*y modulo 2.

    Only the parity of y is ever consumed (it decides the rectifier), and for
    odd a the congruence always holds; the exact equality does not.
    """
    base = rectifier(params)
    blown = rectifier(blow_up(params, a))
    return (blown.y - a * base.y) % 2 == 0


def transfer_via_descent(alpha: CharExp, params: TowerParams, guard: int | None = None) -> GaloisOrbit:
    """Transfer an orbit by regularizing, twisting upstairs, and descending.

    The image of the regularized character at the blown-up level is its twist
    by the inflated rectifier (the blow-up factor is odd, so the rectifier
    inflates to the blown-up rectifier).  Descending that image must land on
    the directly twisted orbit; disagreement is an internal error.
    """
    spec = rectifier(params, guard=guard)
    lift = regularize(alpha, params, guard=guard)
    mu_star = norm_inflate(spec.mu, lift.a, guard=guard)
    beta_image = orbit_of(lift.beta * mu_star)
    descended = descend_transfer(alpha, lift, beta_image)
    direct = apply_transfer(orbit_of(alpha), spec)
    if descended != direct:
        raise MismatchAgainstRectifier(
            f"descent gave {descended.rep}, rectifier twist gave {direct.rep}"
        )
    return descended


@dataclass(frozen=True)
class TamePairClass:
    """Residual model of an inertial pair class: a fully regular character
    of the subfield level of degree f over e.

    The class only depends on the Frobenius orbit of the character, so the
    stored exponent is normalized to the canonical orbit representative.
    """

    beta: CharExp

    def __post_init__(self) -> None:
        orbit = orbit_of(self.beta)
        if orbit.size != self.beta.level.deg:
            raise NotAdmissiblePair(
                f"exponent {self.beta.a} is not fully regular at degree {self.beta.level.deg}"
            )
        if orbit.rep != self.beta.a:
            object.__setattr__(self, "beta", CharExp(self.beta.level, orbit.rep))

    @property
    def f(self) -> int:
        return self.beta.level.deg


def tame_pair(params: TowerParams, f: int, beta_exp: int, guard: int | None = None) -> TamePairClass:
    """Build a pair class from its degree and character exponent."""
    if f < 1 or params.n_prime % f:
        raise DegreeMismatch(f"pair degree f={f} must divide n'={params.n_prime}")
    return TamePairClass(beta=char(field_level(params.Q, f, guard=guard), beta_exp))


def pair_to_orbit(pair: TamePairClass, params: TowerParams, guard: int | None = None) -> GaloisOrbit:
    """Inflate a pair class to an orbit at the full level; degree is preserved."""
    if pair.beta.level.Q != params.Q:
        raise LevelMismatch("pair lives over a different base field")
    if params.n_prime % pair.f:
        raise DegreeMismatch(f"pair degree f={pair.f} must divide n'={params.n_prime}")
    inflated = norm_inflate(pair.beta, params.n_prime // pair.f, guard=guard)
    orbit = orbit_of(inflated)
    if orbit.size != pair.f:
        raise OrderViolation("norm inflation changed the parametric degree")
    return orbit


def orbit_to_pair(orbit: GaloisOrbit, params: TowerParams, guard: int | None = None) -> TamePairClass:
    """Recover the pair class of an orbit from its canonical representative.

    Every representative of parametric degree f is norm-inflated from the
    degree-f subfield level, so the exponent division below is always exact.
    """
    top = level(params, params.n_prime, guard=guard)
    if orbit.level != top:
        raise LevelMismatch("orbit does not live at the shape's full level")
    sub = field_level(params.Q, orbit.size, guard=guard)
    ratio = top.M // sub.M
    if orbit.rep % ratio:
        raise NotInNormImage(
            f"representative {orbit.rep} of degree {orbit.size} is not norm-inflated"
        )
    pair = TamePairClass(beta=CharExp(sub, orbit.rep // ratio))
    if pair_to_orbit(pair, params, guard=guard) != orbit:
        raise OrderViolation("pair recovery does not invert inflation")
    return pair


@dataclass(frozen=True)
class PairTransfer:
    """A transferred pair class together with the correction character."""

    pair: TamePairClass
    mu_l: CharExp


def transfer_pair(pair: TamePairClass, params: TowerParams, guard: int | None = None) -> PairTransfer:
    """Transfer a pair class and expose the order-two correction character.

    The correction is the rectifier pushed down to the pair's subfield level;
    it is recomputed against the transferred class at runtime rather than
    trusted.
    """
    spec = rectifier(params, guard=guard)
    image = apply_transfer(pair_to_orbit(pair, params, guard=guard), spec)
    out = orbit_to_pair(image, params, guard=guard)
    mu_l = is_norm_inflated(spec.mu, pair.beta.level)
    if mu_l is None:
        raise OrderViolation("rectifier does not restrict to the pair level")
    if 2 * mu_l.a % mu_l.level.M:
        raise OrderViolation("restricted rectifier is not of order dividing two")
    if orbit_of(pair.beta * mu_l) != orbit_of(out.beta):
        raise OrderViolation("transferred pair is not the quadratic shift of the input")
    return PairTransfer(pair=out, mu_l=mu_l)


@dataclass(frozen=True)
class DiscreteSeriesShape:
    """Numeric shape (f, t, s, r) of the class attached to an orbit: n = r*s*t."""

    f: int
    t: int
    s: int
    r: int


def discrete_series_shape(orbit: GaloisOrbit, params: TowerParams) -> DiscreteSeriesShape:
    """Degrees attached to an orbit: parametric degrees f and t = f*g, the
    step s = d'/gcd(f, d'), and the segment length r with n = r*s*t."""
    f = orbit.size
    t = f * params.g
    s = params.d_prime // math.gcd(f, params.d_prime)
    if params.n % (s * t):
        raise OrderViolation(f"s*t={s * t} does not divide n={params.n}")
    r = params.n // (s * t)
    return DiscreteSeriesShape(f=f, t=t, s=s, r=r)
