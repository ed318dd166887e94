"""
Cuts and surgeries
==================

Two clusters that share points are pulled apart while one of them keeps
every point it had.
"""

from typedtopo import is_straight, straighten, surgery, surrounding_tree, tr
from typedtopo.datasets import straightness_fixture, surgery_fixture, two_cluster_fixture

s = surgery_fixture()
print("tr(x) =", sorted(tr(s, "x", "p")))
print("tr(y) =", sorted(tr(s, "y", "p")))
print("shared:", sorted(tr(s, "x", "p") & tr(s, "y", "p")))

after, rec = surgery(s, "y", "x", "p")
print("\nafter the surgery keeping x")
print("tr(x) =", sorted(tr(after, "x", "p")))
print("tr(y) =", sorted(tr(after, "y", "p")))
print("pruned neighborhoods of", sorted(rec.affected))

# straightening removes the one asymmetric link
f = straightness_fixture()
f2, cuts = straighten(f, "x", "p")
print("\ncuts:", [(c.z, c.y) for c in cuts], "straight now:", is_straight(f2, "x", "p").straight)

# a surrounding tree separates every cluster of a closure connected set
two = two_cluster_fixture()
tree, sep, log = surrounding_tree(two, {"d0", "d1"}, "d0", "p")
print("\ntree levels:", tree.levels)
print("log:", log.to_json())
print("tr(d0) =", sorted(tr(sep, "d0", "p")), " tr(d1) =", sorted(tr(sep, "d1", "p")))
