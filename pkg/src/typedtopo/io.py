"""Points CSV and JSON encodings of spaces and results."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .builders import build_planar_space, geometric_umin
from .errors import SpaceBuildError
from .space import Coord2, TypedSpace, TypeLabel, as_fraction, sort_ids


def read_points_csv(source) -> list:
    """Rows of ``id,x,y`` (id column optional, defaulting to ``p<row>``)."""
    text = Path(source).read_text() if not hasattr(source, "read") else source.read()
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if any(c.strip() for c in r)]
    if not rows:
        raise SpaceBuildError("empty input: no header and no points")
    header = [h.strip().lower() for h in rows[0]]
    if "x" not in header or "y" not in header:
        raise SpaceBuildError(f"CSV header must name x and y columns, got {rows[0]!r}")
    ix, iy = header.index("x"), header.index("y")
    iid = header.index("id") if "id" in header else None
    points = []
    for n, row in enumerate(rows[1:], start=1):
        if len(row) < len(header):
            raise SpaceBuildError(f"row {n}: expected {len(header)} fields, got {len(row)}")
        pid = row[iid].strip() if iid is not None and row[iid].strip() else f"p{n}"
        points.append((pid, (as_fraction(row[ix]), as_fraction(row[iy]))))
    if not points:
        raise SpaceBuildError("empty input: header only")
    return points


def write_points_csv(space: TypedSpace) -> str:
    if space.coords is None:
        raise SpaceBuildError("space has no coordinates")
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["id", "x", "y"])
    for y in space.points:
        c = space.coords[y]
        w.writerow([y, _num(c.x), _num(c.y)])
    return out.getvalue()


def _num(f: Fraction):
    """JSON-friendly exact number: int, float whose repr is exact, or "p/q"."""
    if f.denominator == 1:
        return int(f)
    if as_fraction(float(f)) == f:
        return float(f)
    return f"{f.numerator}/{f.denominator}"


def space_to_json(space: TypedSpace) -> dict:
    points = []
    for y in space.points:
        entry = {"id": y}
        if space.coords is not None and y in space.coords:
            c = space.coords[y]
            entry["x"], entry["y"] = _num(c.x), _num(c.y)
        points.append(entry)
    types = [{"label": t.label, "shape": t.shape, "r": None if t.r is None else _num(t.r)}
             for t in space.types.values()]
    order = sorted([list(pq) for pq in space.order])
    umin = {lab: {str(y): sort_ids(space.u_min(y, lab)) for y in space.points}
            for lab in space.types}
    return {"points": points, "types": types, "order": order, "umin": umin}


def space_from_json(data) -> TypedSpace:
    """Inverse of :func:`space_to_json`.  A type without a ``umin`` table is
    recomputed from its shape and radius, which needs coordinates."""
    try:
        raw_points = data["points"]
        raw_types = data["types"]
    except (KeyError, TypeError) as exc:
        raise SpaceBuildError(f"space JSON lacks {exc}") from None
    ids = [str(p["id"]) for p in raw_points]
    have_xy = [("x" in p and "y" in p) for p in raw_points]
    coords = None
    if all(have_xy):
        coords = {str(p["id"]): Coord2.of((p["x"], p["y"])) for p in raw_points}
    elif any(have_xy):
        raise SpaceBuildError("either every point or no point carries coordinates")
    if not ids:
        raise SpaceBuildError("empty point set")
    given = data.get("umin") or {}
    types, umin = [], {}
    for t in raw_types:
        r = t.get("r")
        label = TypeLabel(t["label"], t.get("shape", "relation"),
                          None if r is None else as_fraction(r))
        types.append(label)
        if label.label in given:
            umin[label.label] = {str(k): {str(v) for v in vs} for k, vs in given[label.label].items()}
        elif label.shape == "relation" or label.r is None:
            raise SpaceBuildError(f"type {label.label!r} needs an explicit umin table")
        elif coords is None:
            raise SpaceBuildError(f"type {label.label!r} needs coordinates to be recomputed")
        else:
            umin[label.label] = geometric_umin(label.shape, label.r, coords)
    order = [tuple(pq) for pq in data.get("order", [])]
    return TypedSpace(ids, types, umin, order, coords)


def load_space(path, types=None) -> TypedSpace:
    """A space from a ``.json`` space file or a points ``.csv`` plus type labels."""
    path = Path(path)
    if not path.exists():
        raise SpaceBuildError(f"no such file: {path}")
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(path.read_text() or "null")
        except json.JSONDecodeError as exc:
            raise SpaceBuildError(f"invalid JSON in {path}: {exc}") from None
        if data is None:
            raise SpaceBuildError("empty input")
        return space_from_json(data)
    points = read_points_csv(path)
    if not types:
        raise SpaceBuildError("a points CSV needs type labels (e.g. --types left-1,left-2)")
    return build_planar_space(points, types)


def dumps(data) -> str:
    """Indented JSON ending in a newline; keys keep the documented order."""
    return json.dumps(data, indent=1, ensure_ascii=False) + "\n"


def tracks_to_json(dec) -> dict:
    return {"origin": sort_ids(dec.origin), "type": dec.type, "tracks": dec.as_lists()}


def components_to_json(comps) -> dict:
    return {"origin": sort_ids([comps.origin]), "type": comps.type,
            "components": comps.as_lists()}


def branches_to_json(origin, p, branches) -> dict:
    return {"origin": origin, "type": p, "branches": [b.as_lists() for b in branches]}


def straightness_to_json(report) -> dict:
    return {"origin": report.origin, "type": report.type, "straight": report.straight,
            "violations": [{"y": v.y, "z": v.z, "i": v.i, "j": v.j} for v in report.violations]}
