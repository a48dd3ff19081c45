"""Command-line front end.

Exit codes: 0 success; 1 bad input, failed verification, or infeasible
request; 2 internal invariant breach; 3 problem too large for exact search.
All output is deterministic for a given command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import analysis, augment, decomposer, families, graph_core

FAMILY_SPECS = {
    "mop": (families.mop_construct, ("n",)),
    "sc2tree": (families.sc2_tree_construct, ("n",)),
    "fan": (families.fan, ("n",)),
    "intermediate": (families.intermediate, ("n", "r")),
    "kop": (families.kop_construct, ("m", "k")),
    "hmp": (families.hmp_construct, ("n",)),
    "sc3": (families.sc3_construct, ("n",)),
    "sf": (families.sf_fixture, ("n",)),
}

_DOT_PALETTE = (
    "red",
    "blue",
    "forestgreen",
    "darkorange",
    "purple",
    "brown",
    "deeppink",
    "teal",
    "goldenrod",
    "navy",
    "crimson",
    "darkcyan",
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tridecomp",
        description="Triangle decompositions of multigraphs with minimum "
        "added parallel copies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a stored family member")
    p.add_argument("family", choices=sorted(FAMILY_SPECS))
    p.add_argument("params", nargs="+", type=int, help="family parameters")
    p.add_argument("--out", choices=("json", "dot"), default="json")
    p.set_defaults(func=run_construct)

    p = sub.add_parser("epsilon", help="minimum added copies for a graph file")
    p.add_argument("file", help="graph JSON file")
    p.add_argument("--cap", type=int, default=None, help="max extra copies per edge")
    p.set_defaults(func=run_epsilon)

    p = sub.add_parser("decompose", help="search a graph file for a decomposition")
    p.add_argument("file", help="graph JSON file")
    p.set_defaults(func=run_decompose)

    p = sub.add_parser("verify", help="recheck a construct envelope from scratch")
    p.add_argument("file", help="envelope JSON file")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("sweep", help="extremal added-copy count over triangulated cycles")
    p.add_argument("kind", choices=("epsilon", "xi"))
    p.add_argument("n", type=int)
    p.set_defaults(func=run_sweep)

    p = sub.add_parser("faces", help="trace the faces of a rotation system file")
    p.add_argument("file", help="rotation JSON file")
    p.set_defaults(func=run_faces)

    return parser


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise graph_core.DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise graph_core.DomainError(f"{path} is not valid JSON: {exc}") from exc


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def construction_envelope(result: families.ConstructionResult) -> dict:
    out = {
        "family": result.family,
        "parameters": dict(result.parameters),
        "epsilon": result.claimed_epsilon,
        "graph": result.graph.to_json_dict(),
        "augmentation": result.augmentation.to_json_list(),
        "certificate": result.certificate.to_json_dict(),
    }
    if result.outer_cycle is not None:
        out["outer_cycle"] = list(result.outer_cycle)
    if result.faces is not None:
        out["faces"] = [list(t.as_triple()) for t in result.faces]
    if result.rotation is not None:
        out["rotation"] = result.rotation.to_json_dict()
    return out


def render_dot(result: families.ConstructionResult) -> str:
    """One edge line per certificate use, colored by certificate triangle."""
    lines = [f"graph {result.family} {{", "  node [shape=circle];"]
    for v in range(result.graph.order):
        lines.append(f"  {v};")
    for ti, t in enumerate(result.certificate.triangles):
        color = _DOT_PALETTE[ti % len(_DOT_PALETTE)]
        for e in t.edges():
            lines.append(f'  {e.u} -- {e.v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_construct(args: argparse.Namespace) -> int:
    build, names = FAMILY_SPECS[args.family]
    if len(args.params) != len(names):
        print(
            f"error: {args.family} takes {len(names)} parameter(s) "
            f"({', '.join(names)}), got {len(args.params)}",
            file=sys.stderr,
        )
        return 1
    result = build(*args.params)
    families.validate_construction(result)
    if args.out == "dot":
        sys.stdout.write(render_dot(result))
    else:
        _print_json(construction_envelope(result))
    return 0


def run_epsilon(args: argparse.Namespace) -> int:
    g = graph_core.Multigraph.from_json_dict(_load_json(args.file))
    value, aug, cert = augment.epsilon_exact(g, args.cap)
    _print_json(
        {
            "epsilon": value,
            "augmentation": aug.to_json_list(),
            "certificate": cert.to_json_dict(),
        }
    )
    return 0


def run_decompose(args: argparse.Namespace) -> int:
    g = graph_core.Multigraph.from_json_dict(_load_json(args.file))
    reject = decomposer.fast_reject(g)
    if reject is not None:
        _print_json({"decomposable": False, "reason": reject.to_json_dict()})
        return 0
    cert = decomposer.find_decomposition(g)
    if cert is None:
        _print_json({"decomposable": False, "reason": {"kind": "search_exhausted"}})
        return 0
    _print_json({"decomposable": True, "certificate": cert.to_json_dict()})
    return 0


def run_verify(args: argparse.Namespace) -> int:
    data = _load_json(args.file)
    if not isinstance(data, dict):
        raise graph_core.DomainError("envelope JSON must be an object")
    for key in ("family", "epsilon", "graph", "augmentation", "certificate"):
        if key not in data:
            raise graph_core.DomainError(f"envelope is missing the '{key}' field")
    failures = 0

    def ok(msg: str) -> None:
        print(f"ok: {msg}")

    def fail(msg: str) -> None:
        nonlocal failures
        failures += 1
        print(f"fail: {msg}")

    g = graph_core.Multigraph.from_json_dict(data["graph"])
    aug = augment.Augmentation.from_json_list(data["augmentation"])
    cert = decomposer.Decomposition.from_json_dict(data["certificate"])
    eps = data["epsilon"]
    if not isinstance(eps, int) or isinstance(eps, bool):
        raise graph_core.DomainError(f"'epsilon' must be an integer, got {eps!r}")

    if len(aug) == eps:
        ok(f"augmentation lists {eps} added copies")
    else:
        fail(f"augmentation lists {len(aug)} added copies, envelope claims {eps}")
    if eps % 3 == (-g.size()) % 3:
        ok("count matches the divisibility residue")
    else:
        fail(
            f"count {eps} cannot make size {g.size()} divisible by 3"
        )
    augmented = None
    try:
        augmented = augment.apply_augmentation(g, aug)
    except graph_core.DomainError as exc:
        fail(f"augmentation lists an absent edge: {exc}")
    if augmented is not None:
        defect = decomposer.coverage_error(augmented, cert)
        if defect is None:
            ok("certificate covers every edge exactly")
        else:
            kind, e = defect
            fail(f"edge {{{e.u}, {e.v}}} {kind}")

    family = data["family"]
    if family in ("mop", "fan", "intermediate", "sc2tree", "sc2seed"):
        outer = data.get("outer_cycle")
        if outer is None:
            fail("triangulated-cycle envelope has no outer cycle")
        elif analysis.is_maximal_outerplanar(g, outer):
            ok("maximal outerplanar on the given outer cycle")
        else:
            fail("not maximal outerplanar on the given outer cycle")
    elif family == "hmp":
        faces = data.get("faces")
        if faces is None:
            fail("triangulation envelope has no face list")
        else:
            count = {}
            for entry in faces:
                t = graph_core.triangle(*entry)
                for e in t.edges():
                    count[e] = count.get(e, 0) + 1
            if all(count.get(e, 0) == 2 for e in g.edges()) and len(count) == len(
                g.edges()
            ):
                ok("every edge lies on exactly two faces")
            else:
                fail("face list does not cover every edge exactly twice")
            chi = g.order - g.size() + len(faces)
            if chi == 2:
                ok("V - E + F = 2")
            else:
                fail(f"V - E + F = {chi}, expected 2")
        if analysis.find_hamiltonian_cycle(g) is not None:
            ok("hamiltonian cycle found")
        else:
            fail("no hamiltonian cycle found")
        if analysis.is_eulerian(g):
            ok("all degrees even and the graph is connected")
        else:
            fail("graph is not eulerian")
    elif family == "sf":
        rot_data = data.get("rotation")
        if rot_data is None:
            fail("fixture envelope has no rotation system")
        else:
            rotation = analysis.RotationSystem.from_json_dict(rot_data)
            trace = analysis.trace_faces(rotation)
            print(f"genus: {trace.genus}")
            if trace.genus == 1:
                ok("rotation system embeds the graph on the torus")
            else:
                fail(f"rotation system has genus {trace.genus}, expected 1")
            if any(set(face) == set(range(g.order)) for face in trace.faces):
                ok("one face visits every vertex")
            else:
                fail("no face visits every vertex")
            rot_pairs = {
                (min(v, u), max(v, u))
                for v, rot in enumerate(rotation.rotations)
                for (u, _c) in rot
            }
            if rot_pairs == {e.as_pair() for e in g.edges()}:
                ok("rotation system covers exactly the graph edges")
            else:
                fail("rotation system edges differ from the graph edges")
    elif family == "kop":
        params = data.get("parameters", {})
        m = params.get("m")
        k = params.get("k")
        if not (isinstance(m, int) and isinstance(k, int) and m >= 3 and k >= 1):
            fail("layered envelope has no usable m, k parameters")
        else:
            missing = [
                (j * m + i, j * m + (i + 1) % m)
                for j in range(k)
                for i in range(m)
                if not g.has_edge(graph_core.edge(j * m + i, j * m + (i + 1) % m))
            ]
            if not missing:
                ok(f"all {k} layer rings present")
            else:
                u, v = missing[0]
                fail(f"ring edge ({u}, {v}) missing")

    if failures:
        print(f"{failures} check(s) failed")
        return 1
    return 0


def run_sweep(args: argparse.Namespace) -> int:
    env = os.environ.get("TRIDECOMP_SWEEP_CEILING")
    if env is None:
        ceiling = augment.DEFAULT_SWEEP_CEILING
    else:
        try:
            ceiling = int(env)
        except ValueError:
            raise graph_core.DomainError(
                f"TRIDECOMP_SWEEP_CEILING must be an integer, got {env!r}"
            ) from None
    if args.kind == "epsilon":
        value, witness = augment.epsilon_class_exact(args.n, ceiling)
    else:
        value, witness = augment.xi_class_exact(args.n, ceiling)
    _print_json(
        {
            "kind": args.kind,
            "n": args.n,
            "value": value,
            "witness": witness.to_json_dict(),
        }
    )
    return 0


def run_faces(args: argparse.Namespace) -> int:
    rotation = analysis.RotationSystem.from_json_dict(_load_json(args.file))
    trace = analysis.trace_faces(rotation)
    _print_json(trace.to_json_dict())
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except graph_core.ScaleLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except graph_core.InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except graph_core.TridecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())
