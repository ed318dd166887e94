"""
Tracks and clusters on the 48-point plane
=========================================

Directed half-disk types make clustering flow from left to right.  We grow
the cluster of (0,4) ring by ring and draw the rings in alternating colors.
"""

from pathlib import Path

from typedtopo import tr, track_components, tracks
from typedtopo.datasets import x48
from typedtopo.svg import emit_svg

OUT = Path(__file__).with_name("output")
OUT.mkdir(exist_ok=True)

X = x48()
origin = "(0,4)"

# the closed left half disk of radius 1 around (1,4)
print("umin((1,4), left-1) =", sorted(X.u_min("(1,4)", "left-1")))

for p in ("left-1", "left-2"):
    dec = tracks(X, origin, p)
    print(f"\n{p}: {dec.count} tracks, cluster of {len(dec.members)} points")
    for i, layer in enumerate(dec.as_lists()):
        print(f"  T_{i:<2} {layer}")
    left_out = sorted(set(X.points) - tr(X, origin, p))
    print("  outside the cluster:", left_out)

# a track can split into several connected pieces
comps = track_components(X, origin, "left-2")
print("\nleft-2 track 6 pieces:", comps.as_lists()[6])

svg = emit_svg(X, tracks(X, origin, "left-1"))
(OUT / "x48_left-1_tracks.svg").write_text(svg)
print("\nwrote", OUT / "x48_left-1_tracks.svg")
