"""JSON views of the public value types.

Every integer that can exceed a machine word (group orders, exponents,
primes from factorizations) is rendered as a decimal string; structural
integers (degrees, sizes, multiplicities) stay numeric.  Parsing a rendered
document reproduces the original value exactly.
"""

from __future__ import annotations

from .characters import CharExp, GaloisOrbit, orbit_of
from .errors import OutOfRange
from .green import CyclotomicSum
from .regularize import RegularizationLift, ZsigmondyCertificate
from .tower import FieldLevel, field_level


def _integer_root(n: int, k: int) -> int:
    root = round(n ** (1.0 / k))
    for r in (root - 1, root, root + 1):
        if r >= 1 and r**k == n:
            return r
    raise OutOfRange(f"{n} is not a perfect {k}-th power")


def char_to_json(chi: CharExp) -> dict:
    return {"level_deg": chi.level.deg, "M": str(chi.level.M), "a": str(chi.a)}


def char_from_json(doc: dict) -> CharExp:
    deg = int(doc["level_deg"])
    M = int(doc["M"])
    level = field_level(_integer_root(M + 1, deg), deg)
    if level.M != M:
        raise OutOfRange(f"inconsistent level document: M={M}, deg={deg}")
    return CharExp(level, int(doc["a"]))


def orbit_to_json(orbit: GaloisOrbit) -> dict:
    return {
        "rep": str(orbit.rep),
        "size": orbit.size,
        "members": [str(x) for x in orbit.members],
    }


def orbit_from_json(doc: dict, level: FieldLevel) -> GaloisOrbit:
    orbit = orbit_of(CharExp(level, int(doc["rep"])))
    if orbit.size != int(doc["size"]) or orbit.members != tuple(int(x) for x in doc["members"]):
        raise OutOfRange("orbit document does not match its own representative")
    return orbit


def certificate_to_json(cert: ZsigmondyCertificate) -> dict:
    return {
        "b": str(cert.b),
        "r": cert.r,
        "ell": None if cert.ell is None else str(cert.ell),
        "factorization": [[str(p), e] for p, e in cert.factorization],
        "residues": [str(x) for x in cert.residues],
    }


def certificate_from_json(doc: dict) -> ZsigmondyCertificate:
    return ZsigmondyCertificate(
        b=int(doc["b"]),
        r=int(doc["r"]),
        ell=None if doc["ell"] is None else int(doc["ell"]),
        factorization=tuple((int(p), int(e)) for p, e in doc["factorization"]),
        residues=tuple(int(x) for x in doc["residues"]),
    )


def lift_to_json(lift: RegularizationLift) -> dict:
    return {
        "a": lift.a,
        "ell": str(lift.ell),
        "beta": char_to_json(lift.beta),
        "alpha_star": char_to_json(lift.alpha_star),
        "certificate": certificate_to_json(lift.certificate),
    }


def cyclotomic_to_json(s: CyclotomicSum) -> dict:
    value = s.evaluate()
    return {
        "modulus": str(s.modulus),
        "terms": [[str(e), c] for e, c in s.coeffs],
        "numeric": [value.real, value.imag],
    }
