"""Walkthrough: character exponents, Frobenius orbits, and regular parts.

Characters of the multiplicative group of a finite field are stored as
exponents modulo the group order M.  The Frobenius multiplies exponents by
the base cardinality Q, and its orbits are the classes everything else in
the package works with.
"""

from tametransfer import char, char_order, ell_regular_part, enumerate_orbits, field_level, orbit_of

# The field with 8 elements over the field with 2: M = 2**3 - 1 = 7.
lvl = field_level(2, 3)
print(f"level: Q={lvl.Q}, degree {lvl.deg}, group order M={lvl.M}")

alpha = char(lvl, 1)
orbit = orbit_of(alpha)
print(f"orbit of exponent 1: members={orbit.members}, parametric degree f={orbit.size}")

print("\nall orbits at this level:")
for o in enumerate_orbits(lvl):
    print(f"  rep {o.rep}: {o.members}")

# Regular parts: over M = 24, the character of exponent 1 has order 24.
# Its 3-regular part is the unique character of order prime to 3 whose
# quotient against exponent 1 has order a power of 3.
lvl24 = field_level(5, 2)
alpha = char(lvl24, 1)
reg = ell_regular_part(alpha, 3)
print(f"\nover M=24: exponent 1 has order {char_order(alpha)}")
print(f"3-regular part: exponent {reg.a}, order {char_order(reg)}")
quotient = alpha * reg.inverse()
print(f"quotient: exponent {quotient.a}, order {char_order(quotient)} (a power of 3)")
