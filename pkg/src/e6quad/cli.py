"""Command-line entry point: ``e6quad <command> ...``.

Exit codes: 0 success, 1 a verified property was violated, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import composition, geometry, liegroups, plucker, veronese, verify
from .jordan import Herm3

SCHEMA = 1
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg})") from exc


def _read_herm3(path: str) -> Herm3:
    obj = _read_json(path)
    try:
        return Herm3.from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    names = list(verify.SUITE_NAMES) if args.suite == "all" else [args.suite]
    if args.corrupt_table:
        with composition.corrupted_table():
            reports = verify.run_suites(names, args.samples, args.seed, args.fast, args.backend)
    else:
        reports = verify.run_suites(names, args.samples, args.seed, args.fast, args.backend)
    passed = all(r.passed for r in reports)
    if args.json:
        print(_dump({"schema": SCHEMA, "command": "verify", "seed": args.seed,
                     "samples": args.samples, "backend": args.backend, "fast": args.fast,
                     "passed": passed, "suites": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            print(f"[{'PASS' if r.passed else 'FAIL'}] {r.suite} ({r.backend})")
            for c in r.checks:
                mark = "ok  " if c.passed else "FAIL"
                print(f"  {mark} {c.name}  [{c.cases} cases]")
                if not c.passed:
                    print(f"       witness: {json.dumps(c.witness)}")
    return EXIT_OK if passed else EXIT_VIOLATION


def cmd_classify(args) -> int:
    X = _read_herm3(args.file)
    try:
        cert = veronese.classify(X)
    except veronese.ZeroVectorError as exc:
        raise UsageError(f"{args.file}: {exc}; a projective point needs a nonzero matrix") from exc
    print(_dump({"schema": SCHEMA, "command": "classify", **cert}))
    return EXIT_OK if cert.get("agreement", True) else EXIT_VIOLATION


def _load_generators(spec: str) -> list:
    if spec == "default":
        return liegroups.default_orbit_generators()
    if spec == "builtin":
        return liegroups.builtin_generators()
    obj = _read_json(spec)
    try:
        return [liegroups.Generator.from_json(g) for g in obj]
    except (liegroups.GeneratorParameterError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{spec}: {exc}") from exc


def cmd_orbit(args) -> int:
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    seed = _read_herm3(args.point) if args.point else veronese.STRONG_FIXTURE
    if seed.is_zero():
        raise UsageError("seed point is the zero matrix")
    gens = _load_generators(args.generators)
    pts = liegroups.orbit(seed, gens, args.depth)
    if args.json:
        print(_dump({"schema": SCHEMA, "command": "orbit", "depth": args.depth,
                     "generators": [g.to_json() for g in gens], "size": len(pts),
                     "points": [p.rep.to_json() for p in pts]}))
    else:
        print(f"orbit size {len(pts)} (depth {args.depth}, {len(gens)} generators)")
        for p in pts:
            print(f"  {p.rep!r}")
    return EXIT_OK


def cmd_witt(args) -> int:
    w = plucker.witt_index(args.form)
    s = plucker.witt_index_by_signature(args.form)
    if args.json:
        print(_dump({"schema": SCHEMA, "command": "witt", "form": args.form,
                     "witt_index": w, "signature_bound": s}))
    else:
        print(w)
    return EXIT_OK if w == s else EXIT_VIOLATION


def _projection_json(p, M, r) -> dict:
    return {"p": p.to_json(), "M": M.to_json(), "q": r.q.to_json(), "L": r.L.to_json(),
            "certificate": r.certificate}


def cmd_project(args) -> int:
    if args.input:
        obj = _read_json(args.input)
        try:
            pairs = [(plucker.Subspace.from_json(obj["p"]), plucker.Subspace.from_json(obj["M"]))]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{args.input}: {exc}") from exc
    else:
        if args.count < 1:
            raise UsageError("--count must be positive")
        rng = random.Random(args.seed)
        pairs = [geometry.random_nonincident_pair(rng) for _ in range(args.count)]
    out = []
    for p, M in pairs:
        try:
            out.append(_projection_json(p, M, geometry.classical_projection(p, M)))
        except geometry.ProjectionError as exc:
            raise UsageError(f"projection undefined: {exc}") from exc
    if args.json:
        print(_dump({"schema": SCHEMA, "command": "project", "projections": out}))
    else:
        for item in out:
            print(f"p={item['p']}  M={item['M']}")
            print(f"  q={item['q']}  L={item['L']}")
    return EXIT_OK


FIXTURES = ("w2", "fano", "grid", "classical", "e6")


def _fixture(name: str, args) -> geometry.IncidenceSample:
    if name == "w2":
        return geometry.w2_fixture()
    if name == "fano":
        return geometry.fano_fixture()
    if name == "grid":
        return geometry.grid_fixture()
    if name == "classical":
        return geometry.build_classical_sample(args.points, args.seed).incidence
    return verify.e6_sample(args.depth).incidence


def cmd_export_graph(args) -> int:
    g = _fixture(args.fixture, args)
    if args.dual:
        g = geometry.dualize(g)
    if args.format == "dot":
        sys.stdout.write(geometry.to_dot(g, name=args.fixture))
    else:
        print(_dump({"schema": SCHEMA, "command": "export-graph", "fixture": args.fixture,
                     **geometry.to_json_graph(g)}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="e6quad", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run self-verification suites")
    v.add_argument("--suite", default="all", choices=verify.SUITE_NAMES + ("all",))
    v.add_argument("--samples", type=int, default=100, help="random cases per check")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--backend", default="exact", choices=("exact", "float"),
                   help="float affects the composition and jordan suites only")
    v.add_argument("--fast", action="store_true",
                   help="sampled instead of exhaustive basis-triple checks")
    v.add_argument("--json", action="store_true")
    v.add_argument("--corrupt-table", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="classify a Herm3 JSON file ('-' for stdin)")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    o = sub.add_parser("orbit", help="orbit of a point under generators")
    o.add_argument("--point", help="Herm3 JSON file (default: strongly isotropic fixture)")
    o.add_argument("--generators", default="default",
                   help="'default', 'builtin', or a JSON file of generator descriptors")
    o.add_argument("--depth", type=int, default=1)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_orbit)

    w = sub.add_parser("witt", help="Witt index of a built-in hermitian form")
    w.add_argument("--form", required=True, choices=("h6", "h2", "definite"))
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_witt)

    p = sub.add_parser("project", help="classical projection of points onto lines")
    p.add_argument("--input", help='JSON file {"p": [[...]], "M": [[...], [...]]}')
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_project)

    e = sub.add_parser("export-graph", help="export an incidence structure")
    e.add_argument("--fixture", default="w2", choices=FIXTURES)
    e.add_argument("--format", default="dot", choices=("dot", "json"))
    e.add_argument("--dual", action="store_true")
    e.add_argument("--depth", type=int, default=2, help="orbit depth for the e6 sample")
    e.add_argument("--points", type=int, default=30, help="size of the classical sample")
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_export_graph)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
