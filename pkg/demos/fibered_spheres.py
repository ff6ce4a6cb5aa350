"""Spheres in the fibre product of two elliptic fibrations.

Reads demos/fibered_scenario.json: two arcs crossing once, plus an arc
joining two critical values whose vanishing cycles are trivial. The last
sphere bounds, so collapsing it breaks Hard Lefschetz.
"""

import json
from pathlib import Path

from conifold.fibered import build_sphere, is_null_homologous, sphere_pairing
from conifold.io import fibered_from_json

doc = json.loads((Path(__file__).parent / "fibered_scenario.json").read_text())
F1, F2, arcs = fibered_from_json(doc)
spheres = [build_sphere(F1, F2, arc) for arc in arcs]
for s in spheres:
    print(s.arc.name, s.class_at_reference, "bounds" if is_null_homologous(s, F1, F2) else "")
print("pairing:")
for s in spheres:
    print("  ", [sphere_pairing(s, t) if s is not t else 0 for t in spheres])
