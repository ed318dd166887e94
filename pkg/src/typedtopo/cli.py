"""Command-line front end.

Every subcommand loads a space (points CSV plus ``--types``, or a space
JSON), runs one library operation, prints its JSON and writes it to the
output directory.  Exit codes: 0 ok, 1 usage, 2 data error, 3 algorithm
precondition or invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import oracles
from .branches import enumerate_branches, track_components
from .closure import cluster, tracks
from .connectivity import is_straight, port
from .dbscan import compare_with_tr, dbscan_classify
from .errors import InvariantError, PreconditionError, SpaceBuildError, UnknownElementError
from .indexing import base_index, combined_index, full_extension
from .io import (branches_to_json, components_to_json, dumps, load_space, space_to_json,
                 straightness_to_json, tracks_to_json)
from .space import Coord2, TypedSpace, as_fraction, sort_ids, validate_space
from .surgery import SurgeryLog, straighten, surgery, surrounding_tree
from .svg import emit_svg

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    input: Path
    types: list = field(default_factory=list)
    out: Path = Path(".")
    origins: list = field(default_factory=list)
    p: str | None = None
    q: str | None = None
    all_prefixes: bool = False
    debug_assertions: bool = False
    oracle_check: bool = False
    oracle_limit: int = 12
    extra: dict = field(default_factory=dict)


def resolve_point(space: TypedSpace, token: str):
    """An id, or ``x,y`` coordinates of a point of a planar space."""
    token = token.strip()
    if token in space:
        return token
    if space.coords is not None and "," in token:
        a, _, b = token.strip("()").partition(",")
        try:
            want = Coord2.of((a, b))
        except SpaceBuildError:
            want = None
        for y, c in space.coords.items():
            if c == want:
                return y
    raise UnknownElementError(f"no point {token!r}")


def _type(space, label):
    if label is None:
        raise UsageError("this command needs --type")
    space.check_type(label)
    return label


def _origins(space, cfg):
    if not cfg.origins:
        raise UsageError("this command needs --origin")
    return [resolve_point(space, t) for t in cfg.origins]


def _origin(space, cfg):
    pts = _origins(space, cfg)
    if len(pts) != 1:
        raise UsageError("this command takes exactly one --origin")
    return pts[0]


def _oracle_tracks(space, cfg, origins, p, dec):
    if cfg.oracle_check and len(space) <= cfg.oracle_limit:
        if [frozenset(t) for t in dec.tracks] != oracles.tracks(space, origins, p):
            raise InvariantError("tracks disagree with the brute-force oracle")


def cmd_build(space, cfg):
    if cfg.debug_assertions:
        report = validate_space(space)
        if not report.ok:
            raise SpaceBuildError(f"invalid space: {report.violations[0]}")
    return {"space.json": space_to_json(space)}


def cmd_tracks(space, cfg):
    p = _type(space, cfg.p)
    origins = _origins(space, cfg)
    dec = tracks(space, origins, p)
    _oracle_tracks(space, cfg, origins, p, dec)
    return {"tracks.json": tracks_to_json(dec)}


def cmd_cluster(space, cfg):
    p = _type(space, cfg.p)
    origins = _origins(space, cfg)
    cs = cluster(space, origins, p)
    if cfg.oracle_check and len(space) <= cfg.oracle_limit:
        if cs.members != oracles.tr(space, origins, p):
            raise InvariantError("cluster disagrees with the brute-force oracle")
    return {"cluster.json": {"origin": sort_ids(origins), "type": p, "cluster": list(cs)}}


def cmd_components(space, cfg):
    p = _type(space, cfg.p)
    comps = track_components(space, _origin(space, cfg), p)
    if cfg.oracle_check and len(space) <= cfg.oracle_limit:
        for row in comps.parts:
            if not all(oracles.is_type_p_connected(space, c, p) for c in row):
                raise InvariantError("a component is not connected per the oracle")
    return {"components.json": components_to_json(comps)}


def cmd_port(space, cfg):
    p = _type(space, cfg.p)
    pt = port(space, _origins(space, cfg), p)
    return {"port.json": {"type": p, "set": sort_ids(pt.parent), "port": list(pt),
                          "classes": [sort_ids(c) for c in pt.classes]}}


def cmd_straighten(space, cfg):
    p = _type(space, cfg.p)
    x = _origin(space, cfg)
    before = is_straight(space, x, p)
    after_space, cuts = straighten(space, x, p)
    after = is_straight(after_space, x, p)
    return {"straighten.json": {"before": straightness_to_json(before),
                                "cuts": [c.to_json() for c in cuts],
                                "after": straightness_to_json(after)},
            "straightened-space.json": space_to_json(after_space)}


def cmd_surgery(space, cfg):
    if cfg.extra.get("action") == "replay":
        log_path = cfg.extra.get("log")
        if not log_path:
            raise UsageError("surgery replay needs --log")
        try:
            data = json.loads(Path(log_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SpaceBuildError(f"cannot read log: {exc}") from None
        log = SurgeryLog.from_json(data)
        return {"replayed-space.json": space_to_json(log.replay(space))}
    p = _type(space, cfg.p)
    z, y = cfg.extra.get("z"), cfg.extra.get("y")
    if not z or not y:
        raise UsageError("surgery needs --z and --y")
    new, rec = surgery(space, resolve_point(space, z), resolve_point(space, y), p,
                       check=cfg.debug_assertions)
    log = SurgeryLog([rec])
    return {"surgery-log.json": log.to_json(), "surgered-space.json": space_to_json(new)}


def cmd_tree(space, cfg):
    p = _type(space, cfg.p)
    D = _origins(space, cfg)
    root = resolve_point(space, cfg.extra["root"]) if cfg.extra.get("root") else D[0]
    tree, new, log = surrounding_tree(space, D, root, p, check=True)
    return {"tree.json": {"root": tree.root, "type": p, "levels": tree.levels,
                          "children": {str(d): tree.children[d] for d in sort_ids(tree.children)},
                          "skipped": [str(s) for s in tree.skipped],
                          "log": log.to_json()},
            "tree-space.json": space_to_json(new)}


def cmd_index(space, cfg):
    p = _type(space, cfg.p)
    x = _origin(space, cfg)
    mode = cfg.extra.get("mode", "full")
    if mode == "base":
        index = base_index(space, x, p)
        return {"index.json": index.to_json()}
    q = _type(space, cfg.q)
    if mode == "combined":
        return {"index.json": combined_index(space, x, p, q).to_json()}
    ext = full_extension(space, x, p, q)
    return {"index.json": ext.index.to_json(), "index-log.json": ext.log.to_json(),
            "index-stages.json": [_stage_json(s) for s in ext.stages]}


def _stage_json(s):
    return {"t": s.t, "reference": s.reference, "k": s.k, "iSeq": list(s.iseq),
            "levels": list(s.levels), "r": s.r, "anchor": list(s.anchor),
            "A": sort_ids(s.A), "B": sort_ids(s.B), "C": sort_ids(s.C), "K": sort_ids(s.K)}


def cmd_branches(space, cfg):
    p = _type(space, cfg.p)
    x = _origin(space, cfg)
    bs = enumerate_branches(space, x, p, maximal=not cfg.all_prefixes)
    return {"branches.json": branches_to_json(x, p, bs)}


def _dbscan_args(cfg):
    eps, min_pts = cfg.extra.get("eps"), cfg.extra.get("min_pts")
    if eps is None or min_pts is None:
        raise UsageError("this command needs --eps and --min-pts")
    return as_fraction(eps), int(min_pts)


def cmd_dbscan(space, cfg):
    eps, min_pts = _dbscan_args(cfg)
    return {"dbscan.json": dbscan_classify(space, eps, min_pts).to_json()}


def cmd_compare(space, cfg):
    p = _type(space, cfg.p)
    min_pts = cfg.extra.get("min_pts")
    if min_pts is None:
        raise UsageError("compare needs --min-pts")
    return {"compare.json": compare_with_tr(space, p, int(min_pts), _origin(space, cfg)).to_json()}


def cmd_plot(space, cfg):
    overlay = cfg.extra.get("overlay") or ("tracks" if cfg.origins else "none")
    if overlay == "none":
        return {"plot.json": {"overlay": "none"}, "plot.svg": emit_svg(space)}
    if overlay == "dbscan":
        eps, min_pts = _dbscan_args(cfg)
        res = dbscan_classify(space, eps, min_pts)
        return {"plot.json": res.to_json(), "plot.svg": emit_svg(space, res)}
    p = _type(space, cfg.p)
    x = _origin(space, cfg)
    if overlay == "branches":
        bs = enumerate_branches(space, x, p)
        return {"plot.json": branches_to_json(x, p, bs), "plot.svg": emit_svg(space, bs)}
    dec = tracks(space, x, p)
    return {"plot.json": tracks_to_json(dec), "plot.svg": emit_svg(space, dec)}


COMMANDS = {
    "build": cmd_build, "tracks": cmd_tracks, "cluster": cmd_cluster,
    "components": cmd_components, "port": cmd_port, "straighten": cmd_straighten,
    "surgery": cmd_surgery, "tree": cmd_tree, "index": cmd_index,
    "branches": cmd_branches, "dbscan": cmd_dbscan, "compare": cmd_compare, "plot": cmd_plot,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        types = [t for t in cfg.types if t]
        space = load_space(cfg.input, types)
        outputs = COMMANDS[cfg.command](space, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpaceBuildError, UnknownElementError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (PreconditionError, InvariantError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, payload in outputs.items():
        text = payload if isinstance(payload, str) else dumps(payload)
        (cfg.out / name).write_text(text)
    primary = next(iter(outputs.values()))
    if cfg.command == "index" and not isinstance(primary, str):
        for y, (major, minor) in primary["entries"].items():
            print(f"{y}\t{major}.{minor}", file=stdout)
    else:
        stdout.write(primary if isinstance(primary, str) else dumps(primary))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="typedtopo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", required=True, type=Path,
                        help="points CSV (id,x,y) or space JSON")
    common.add_argument("--types", default="",
                        help="comma-separated type labels for CSV input, e.g. left-1,left-2 or 1.01")
    common.add_argument("--out", "-o", type=Path, default=Path("."), help="output directory")
    common.add_argument("--origin", action="append", default=[],
                        help="point id or x,y coordinates; repeat for a set")
    common.add_argument("--type", "-p", dest="p", help="type label p")
    common.add_argument("--q", help="second type label q (index)")
    common.add_argument("--debug-assertions", action="store_true")
    common.add_argument("--oracle-check", action="store_true",
                        help="cross-check against brute force on small inputs")
    common.add_argument("--oracle-limit", type=int, default=12)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "branches":
            sp.add_argument("--all-prefixes", action="store_true",
                            help="list every branch, not only maximal ones")
        if name == "surgery":
            sp.add_argument("action", nargs="?", choices=["apply", "replay"], default="apply")
            sp.add_argument("--z", help="point whose cluster is pruned")
            sp.add_argument("--y", help="point whose cluster is kept")
            sp.add_argument("--log", help="surgery log JSON to replay")
        if name == "tree":
            sp.add_argument("--root", help="root of the surrounding tree (default first --origin)")
        if name == "index":
            sp.add_argument("--mode", choices=["base", "combined", "full"], default="full")
        if name in ("dbscan", "compare", "plot"):
            sp.add_argument("--eps")
            sp.add_argument("--min-pts", type=int)
        if name == "plot":
            sp.add_argument("--overlay", choices=["none", "tracks", "branches", "dbscan"])
    return parser


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        if not ns.command:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    extra = {k: getattr(ns, k) for k in ("action", "z", "y", "log", "root", "mode",
                                          "eps", "min_pts", "overlay") if hasattr(ns, k)}
    cfg = RunConfig(ns.command, ns.input, ns.types.split(","), ns.out, ns.origin, ns.p, ns.q,
                    getattr(ns, "all_prefixes", False), ns.debug_assertions, ns.oracle_check,
                    ns.oracle_limit, extra)
    return run(cfg, stdout)


if __name__ == "__main__":
    sys.exit(main())
