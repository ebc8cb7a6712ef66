"""Walkthrough: the pair dictionary and exact trace sums.

Orbit classes at the full level correspond bijectively to pairs (f, beta):
a divisor f of the level degree with a fully regular character at the
degree-f sublevel.  Transfers act on pairs through an order-two correction.
Trace values of the attached cuspidal parameters are exact formal sums of
roots of unity.
"""

from tametransfer import (
    char,
    derive_tower,
    enumerate_orbits,
    field_level,
    green_trace,
    level,
    orbit_to_pair,
    pair_to_orbit,
    tame_pair,
    transfer_pair,
)

params = derive_tower(3, 3, 2, 1, 1, 4)
print(f"pair dictionary at Q={params.Q}, n'={params.n_prime}:")
for orbit in enumerate_orbits(level(params, params.n_prime)):
    pair = orbit_to_pair(orbit, params)
    back = pair_to_orbit(pair, params)
    print(f"  orbit {str(orbit.members):>8} <-> pair (f={pair.f}, beta={pair.beta.a})"
          f"   round trip ok: {back == orbit}")

moved = transfer_pair(tame_pair(params, 1, 1), params)
print(f"\ntransfer of the pair (f=1, beta=1): beta becomes {moved.pair.beta.a}, "
      f"correction exponent {moved.mu_l.a} mod {moved.mu_l.level.M}")

# Trace of the parameter attached to a regular character of the quadratic
# extension of the two-element field: -(z + z^2) over cube roots of unity.
trace = green_trace(char(field_level(2, 2), 1), 1, 2)
print(f"\ntrace as a formal sum over exponents mod {trace.modulus}: {trace.coeffs}")
print(f"numeric value: {trace.evaluate():.12f}")
