"""The node as a cotangent bundle, numerically.

phi(z) = (x/|x|, -|x| y) should pull sum dv^du back to the standard form on
{z1^2 + ... + z4^2 = 0}. We check it on random points and print the worst
residual of each family of checks.
"""

from conifold.localmodel import run_all

for rec in run_all(samples=500, seed=1):
    worst = max(rec.checks, key=lambda c: c.residual / c.tolerance if c.tolerance else 0)
    print(f"{rec.name:<20} {'ok ' if rec.passed else 'BAD'}  "
          f"worst: {worst.name} ({worst.residual:.1e} <= {worst.tolerance:.0e})")
