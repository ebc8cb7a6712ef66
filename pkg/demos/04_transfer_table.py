"""Walkthrough: the rectifier and the transfer permutation, two ways.

For an essentially tame shape the transfer permutes orbit classes by an
order-two twist decided by a parity formula.  The same permutation is
recomputed without the formula by regularizing each character, twisting at
the blown-up level, and descending; the two routes must agree everywhere.
"""

from tametransfer import (
    apply_transfer,
    derive_tower,
    enumerate_orbits,
    level,
    rectifier,
    transfer_via_descent,
)

params = derive_tower(3, 3, 2, 1, 1, 4)
spec = rectifier(params)
print(f"shape (p,q,eEF,fEF,m,d) = {params.as_tuple()}")
print(f"parity data: w={spec.w}, v={spec.v}, u={spec.u}, y={spec.y} (odd: {spec.y % 2 == 1})")
print(f"rectifier exponent: {spec.mu.a} mod {spec.mu.level.M}\n")

print("transfer table (direct twist | via regularization and descent):")
for orbit in enumerate_orbits(level(params, params.n_prime)):
    direct = apply_transfer(orbit, spec)
    descended = transfer_via_descent(orbit.rep_char(), params)
    marker = "ok" if direct == descended else "MISMATCH"
    print(f"  {str(orbit.members):>10} -> {str(direct.members):>10}   [{marker}]")

# A shape with even parity: the twist is trivial and the table is the identity.
flat = rectifier(derive_tower(3, 3, 1, 1, 1, 2))
print(f"\nsplit shape {flat.params.as_tuple()}: y={flat.y}, rectifier trivial: {flat.mu.is_trivial}")
