"""Walkthrough: linking two orbits through prime-power-order twists.

Two orbits are ell-linked when their ell-regular parts have the same orbit.
Any two characters at a level are connected by a chain of such relations:
the quotient character splits over the primes dividing M into factors of
prime-power order, and each factor contributes one step.
"""

from tametransfer import (
    admissible_primes,
    build_link_chain,
    char,
    ell_linked,
    field_level,
    linked_partition,
)

lvl = field_level(5, 2)  # M = 24 = 8 * 3
a, b = char(lvl, 1), char(lvl, 5)

chain = build_link_chain(a, b)
print(f"chain from exponent {a.a} to exponent {b.a} over M={lvl.M}:")
for step in chain.steps:
    print(f"  ell={step.ell}: orbit {step.before.members} -> orbit {step.after.members}")

for step in chain.steps:
    assert ell_linked(step.before, step.after, step.ell)
print("every consecutive pair is ell-linked for its prime")

print(f"\nadmissible primes for (q=5, n=2): {admissible_primes(5, 2)}")

blocks = linked_partition(lvl)
print(f"closure of linking partitions the {sum(len(b) for b in blocks)} orbits "
      f"into {len(blocks)} block(s)")
