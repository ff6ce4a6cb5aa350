"""Built-in configurations: disjoint bounding spheres in ``P^1 x S``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .relations import CycleConfiguration, good_relation
from .surgery import SixManifoldTopology, conifold_transition, obstruction_flags
from .zlinalg import IntegerMatrix

__all__ = [
    "PresetDescriptor",
    "PRESETS",
    "p1_times_surface",
    "P1_X_P2",
    "preset_product",
    "preset_hard_lefschetz",
    "describe",
]

PRODUCT_CITATION = (
    "Lemma: for a Kaehler surface S and small eps, P^1 x S with omega_S + eps omega_P1 "
    "contains arbitrarily many disjoint null-homologous Lagrangian 3-spheres; each bounds "
    "the 4-chain {([v], v) : 0 < |v| < 1} in P^1 x C^2."
)
HARD_LEFSCHETZ_CITATION = (
    "Lemma: the symplectic conifold transition in a Lagrangian S^3 bounding an embedded D^4 "
    "would violate Hard Lefschetz. The lifted 4-ball gives D in H_4 with D . D' = 0 in H_2 "
    "for every D', so cap [PD(omega)]: H_4 -> H_2 is not an isomorphism."
)


def p1_times_surface(b2_surface: int = 1, name: str = "P^1 x P^2") -> SixManifoldTopology:
    """Betti data of ``P^1 x S`` for a simply connected surface S."""
    if b2_surface < 1:
        raise ValueError("a Kaehler surface has b2 >= 1")
    b2 = 1 + b2_surface
    return SixManifoldTopology(b2=b2, b3=0, b4=b2, euler=2 * (2 + b2_surface))


P1_X_P2 = p1_times_surface(1)


@dataclass(frozen=True)
class PresetDescriptor:
    name: str
    parameters: dict = field(default_factory=dict)
    summary: str = ""
    citation: str = ""

    def __post_init__(self):
        if self.name not in _REGISTERED:
            raise ValueError(f"unknown preset {self.name!r}; known: {', '.join(_REGISTERED)}")


_REGISTERED = ("product", "hard-lefschetz")

PRESETS = {
    "product": PresetDescriptor(
        "product", {"m": 1, "surface_b2": 1},
        "m disjoint null-homologous Lagrangian spheres in P^1 x S", PRODUCT_CITATION),
    "hard-lefschetz": PresetDescriptor(
        "hard-lefschetz", {},
        "one bounding sphere collapsed; Hard Lefschetz fails on the result",
        HARD_LEFSCHETZ_CITATION),
}


def describe(name: str) -> PresetDescriptor:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


def preset_product(m: int, ambient: SixManifoldTopology = P1_X_P2) -> CycleConfiguration:
    """``m`` pairwise disjoint spheres, all classes zero in ``H_3(ambient)``.

    Class rows have one column per ``b3`` of the ambient (none for P^1 x P^2).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return CycleConfiguration(
        labels=tuple(f"S{i}" for i in range(m)),
        classes=IntegerMatrix.zeros(m, ambient.b3),
        pairing=IntegerMatrix.zeros(m, m),
        disjoint=frozenset((i, j) for i in range(m) for j in range(i + 1, m)),
        provenance={
            "kind": "preset",
            "preset": "product",
            "m": m,
            "ambient": ambient.to_dict(),
            "citation": PRODUCT_CITATION,
        },
    )


def preset_hard_lefschetz() -> dict:
    """Collapse one bounding sphere of ``P^1 x P^2`` and report the flags."""
    config = preset_product(1)
    rel = good_relation(config, [0])
    X = P1_X_P2
    Y = conifold_transition(X, n=1, r=0, good=rel is not None, null_homologous=True)
    flags = obstruction_flags(Y, spheres=1)
    return {
        "preset": "hard-lefschetz",
        "configuration": config,
        "relation": [str(c) for c in rel.coefficients],
        "before": X.to_dict(),
        "after": Y.to_dict(),
        "flags": flags.to_dict(),
        "hard_lefschetz_violated": flags.hard_lefschetz_violated,
        "explanation": HARD_LEFSCHETZ_CITATION,
        "caveat": ("the flag assumes the sphere bounds an embedded D^4; the product model "
                   "only exhibits a bounding 4-chain"),
        "citations": [PRODUCT_CITATION, HARD_LEFSCHETZ_CITATION],
    }
