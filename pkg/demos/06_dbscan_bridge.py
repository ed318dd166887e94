"""
DBSCAN next to transitive closure
=================================

With minPts = 1 a DBSCAN cluster is exactly the transitive closure of the
open-disk type.  A larger minPts stops expansion at border points.
"""

import random

from typedtopo import build_metric_space, compare_with_tr, dbscan_classify
from typedtopo.datasets import labelled

rng = random.Random(7)
pts = set()
for cx, cy in ((2, 2), (9, 3), (5, 9)):
    for _ in range(25):
        pts.add((round(cx + rng.gauss(0, 1), 1), round(cy + rng.gauss(0, 1), 1)))
space = build_metric_space(labelled(sorted(pts)), ["1"])

res = dbscan_classify(space, 1, 4)
roles = list(res.roles.values())
print(f"{len(res.clusters)} clusters;", {r: roles.count(r) for r in ("core", "border", "noise")})

x = min(res.clusters[0])
rep = compare_with_tr(space, "1", 4, x)
print(f"\nfrom {x}: tr has {len(rep.closure)} points")
print("minPts = 1 equal to tr:", rep.free_equal)
print("minPts = 4 strict subset:", rep.strict_containment, f"({len(rep.missing)} points missing)")

chain = build_metric_space([(f"c{i}", (i, 0)) for i in range(6)], ["1.1"])
print("\nchain:", compare_with_tr(chain, "1.1", 4, "c0").to_json()["modeB"])
