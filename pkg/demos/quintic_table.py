"""Vanishing cycles of the quintic and the b3 = 2 transitions.

Builds the 625 spheres on a smooth member of the pencil, checks they span
b3 = 204, then collapses disjoint good families of vanishing cycles of every
size from 102 to 125.

    python3 demos/quintic_table.py
"""

from conifold.quintic import quintic_pairing, reproduce_proposition
from conifold.zlinalg import IntegerMatrix, smith_normal_form

P = quintic_pairing()
snf = smith_normal_form(IntegerMatrix.from_array(P))
print(f"pairing: rank {len(snf.invariant_factors)}, "
      f"invariant factors {sorted(set(snf.invariant_factors))}")

rep = reproduce_proposition(seed=0)
print(f"vanishing classes: {rep['vanishing_count']} spanning {rep['vanishing_span']}")
print("  k  span  b2  b3  euler")
for row in rep["table"]:
    print(f"{row['k']:>3} {row['span']:>5} {row['b2']:>3} {row['b3']:>3} {row['euler']:>6}")
