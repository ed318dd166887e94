"""
Connectedness, closure connectedness and ports
==============================================
"""

from typedtopo import (closure_decomposition, component, is_closure_connected, is_straight,
                       is_type_p_connected, port, tr)
from typedtopo.datasets import straightness_fixture, two_cluster_fixture, x4, x5, x48

# four corners of the unit square with open disks
s = x4(radii=("1", "1.2"))
for p in ("1", "1.2"):
    ok, cut = is_type_p_connected(s, s.points, p)
    print(f"X4 with p = {p}: connected={ok}", "" if ok else f"split {sorted(cut.left)} | {sorted(cut.right)}")

s5 = x5()
print("X5 with p = sqrt 2:", is_type_p_connected(s5, s5.points, "1.414213562373095")[0])

# in a directed space the component can be larger than the cluster
X = x48()
c, t = component(X, "(0,4)", "left-1"), tr(X, "(0,4)", "left-1")
print(f"\nX48 left-1: component {len(c)} points, cluster {len(t)} points")
print("port of the cluster:", list(port(X, t, "left-1")))

# closure connected without being connected
f = straightness_fixture()
print("\n{x, y2} connected:", is_type_p_connected(f, {"x", "y2"}, "p")[0],
      " closure connected:", is_closure_connected(f, {"x", "y2"}, "p"))

two = two_cluster_fixture()
print("decomposition of {d0, d1, b2}:",
      [sorted(part) for part in closure_decomposition(two, {"d0", "d1", "b2"}, "p")])

rep = is_straight(f, "x", "p")
print("\nfixture straight:", rep.straight, "witness:", rep.violations[0])
