"""
Branches of a cluster
=====================
"""

from pathlib import Path

from typedtopo import enumerate_branches
from typedtopo.datasets import x48
from typedtopo.svg import emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

X = x48()
for p in ("left-1", "left-2"):
    bs = enumerate_branches(X, "(0,4)", p)
    print(f"{p}: {len(bs)} maximal branches")
    for k, b in enumerate(bs, 1):
        tail = " -> ".join("{" + ",".join(a) + "}" for a in b.as_lists()[-3:])
        print(f"  {k}. {len(b)} levels, ending ... {tail}")

every = enumerate_branches(X, "(0,4)", "left-1", maximal=False)
print("\nwith prefixes:", len(every))

(OUT / "x48_left-2_branches.svg").write_text(emit_svg(X, enumerate_branches(X, "(0,4)", "left-2")))
