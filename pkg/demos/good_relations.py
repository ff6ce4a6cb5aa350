"""Which families of spheres can be collapsed symplectically?

A family is usable when its classes satisfy a relation with every
coefficient nonzero. Three spheres in classes a, b, a + b qualify; dropping
one of them leaves nothing to collapse.
"""

from conifold import (
    CycleConfiguration,
    IntegerMatrix,
    conifold_transition,
    good_relation,
    is_good_subset,
    span_dim,
)
from conifold.surgery import NoGoodRelationError, SixManifoldTopology

config = CycleConfiguration(
    labels=("A", "B", "A+B"),
    classes=IntegerMatrix.from_rows([[1, 0], [0, 1], [1, 1]]),
    disjoint=frozenset({(0, 1), (0, 2), (1, 2)}),
)

X = SixManifoldTopology.simply_connected_from(b2=1, b3=4, c1_zero=True)
for S in [(0, 1, 2), (0, 1)]:
    names = ", ".join(config.labels[i] for i in S)
    rel = good_relation(config, S)
    print(f"{{{names}}}: good={is_good_subset(config, S)} relation={rel and rel.coefficients}")
    try:
        Y = conifold_transition(X, n=len(S), r=span_dim(config, S), good=rel is not None)
        print(f"  after transition: b2={Y.b2} b3={Y.b3} euler={Y.euler}")
    except NoGoodRelationError as exc:
        print(f"  {exc}")
