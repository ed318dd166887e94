"""
A local horizontal axis
=======================

Two nested types p <= q give each point of the q-cluster a position
major.minor: the major part counts q-levels and the minor part the p-rings
inside them.
"""

from typedtopo import (full_extension, index_roundtrip, is_pq_straight, is_uniformly_typed,
                       pq_decomposition)
from typedtopo.datasets import pq_nonstraight_example, pq_straight_example, x48

X = x48()
o = "(0,4)"

print("left pair uniform violations:", is_uniformly_typed(X, o, "left-1", "left-2").violations)
print("up-left pair uniform:", is_uniformly_typed(X, o, "up-left-1", "up-left-2").uniform)

stage = pq_decomposition(X, o, "up-left-1", "up-left-2")
print(f"\nstage 1: k = {stage.k}, iseq = {stage.iseq}")
print("p-ring 1 ->", index_roundtrip(1, stage.iseq))

index, log, stages = full_extension(X, o, "up-left-1", "up-left-2")
print(f"\n{len(stages)} stages, {len(log.surgeries())} surgery")
for y, v in sorted(index.rendered().items(), key=lambda kv: (float(kv[1]), kv[0])):
    print(f"  {y:8} {v}")

print("\nnon-straight example straight:", is_pq_straight(pq_nonstraight_example(), "(5,6)", "1.01", "2.01").straight)
f = pq_straight_example()
index, log, stages = full_extension(f, "(5,6)", "1.01", "2.01")
print("straight example reference points:", [s.reference for s in stages])
print("anchors:", [str(s.anchor) for s in stages])
