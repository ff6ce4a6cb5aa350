"""``conifold`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or data error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from typing import Callable

from . import io as cio
from .fibered import (
    NotASphereError,
    build_sphere,
    is_null_homologous,
    sphere_pairing,
    total_monodromy,
    validate_fibre_product,
)
from .localmodel import TOL_ANALYTIC, run_all
from .presets import PRESETS, preset_hard_lefschetz, preset_product, p1_times_surface
from .relations import good_relation, is_good_subset, search_good_subsets, span_dim
from .surgery import (
    NoGoodRelationError,
    SixManifoldTopology,
    conifold_transition,
    obstruction_flags,
    reverse_transition,
)
from .zlinalg import rank_exact, smith_normal_form

__all__ = ["main", "run", "DEMO_FIBERED"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CITE_RESOL = ("Theorem: a resolution of the nodal degeneration carries a symplectic form "
              "compatible with the transition iff the spheres satisfy a relation "
              "sum lam_i [L_i] = 0 with every lam_i nonzero.")
CITE_HOM = ("Theorem: after the transition b3 drops by 2r and b2, b4 grow by n - r, "
            "where r is the span of the n spheres; the Euler characteristic grows by 2n.")
CITE_QUINTIC = ("Proposition: conifold transitions of the quintic give simply connected "
                "symplectic 6-manifolds with c1 = 0, b3 = 2 and any 2 <= b2 <= 25.")
CITE_FIBERED = ("Lemma: a fibred sphere over an arc between critical values with trivial "
                "vanishing cycles at both ends is null-homologous.")
CITE_LOCAL = ("Local model: (x/|x|, -|x| y) identifies {sum z^2 = 0} minus 0 with T*S^3 "
              "minus the zero section symplectically.")

DEMO_FIBERED = {
    "schema_version": cio.SCHEMA_VERSION,
    "kind": "fibered-scenario",
    "fibrations": [
        {"name": "F1", "critical_values": [
            {"name": "a1", "point": [0.0, 0.0], "class": ["1", "0"]},
            {"name": "a2", "point": [1.0, 0.0], "class": ["0", "1"]},
            {"name": "t1", "point": [0.0, 2.0], "class": ["0", "0"], "trivial": True},
        ]},
        {"name": "F2", "critical_values": [
            {"name": "b1", "point": [5.0, 0.0], "class": ["0", "1"]},
            {"name": "b2", "point": [6.0, 0.0], "class": ["1", "0"]},
            {"name": "t2", "point": [0.0, 7.0], "class": ["0", "0"], "trivial": True},
        ]},
    ],
    "arcs": [
        {"name": "A", "start": "a1", "end": "b1"},
        {"name": "B", "start": "a2", "end": "b2",
         "monodromy_path": [{"fibration": 1, "name": "a1", "direction": 1}]},
        {"name": "N", "start": "t1", "end": "t2"},
    ],
    "crossings": [
        {"id": "x", "arcs": ["A", "B"], "sign": 1},
    ],
}


class UsageError(Exception):
    pass


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated indices, got {text!r}") from None


def _file_digest(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return hashlib.sha256(fh.read()).hexdigest()
    except OSError as exc:
        raise cio.FormatError(path, exc.strerror or str(exc)) from None


def _report(command: str, parameters: dict, results: dict, passed: bool, *,
            citations=(), inputs_digest: str | None = None) -> dict:
    return {
        "schema_version": cio.SCHEMA_VERSION,
        "kind": "report",
        "command": command,
        "parameters": parameters,
        "inputs_digest": inputs_digest or cio.digest(parameters),
        "results": results,
        "citations": list(citations),
        "summary": {"passed": bool(passed)},
    }


# subcommands return (document, exit code, is_report)

def cmd_gen_quintic(args):
    from .quintic import quintic_configuration
    rates = tuple(_parse_indices(args.rates))
    if sorted(rates) != [1, 2, 3, 4]:
        raise UsageError("--rates must be a permutation of 1,2,3,4")
    config = quintic_configuration(rates)
    return cio.configuration_to_json(config), EXIT_OK, False


def cmd_preset(args):
    if args.name not in PRESETS:
        raise UsageError(f"unknown preset {args.name!r}; known: {', '.join(PRESETS)}")
    if args.name == "product":
        config = preset_product(args.m, p1_times_surface(args.surface_b2))
        return cio.configuration_to_json(config), EXIT_OK, False
    scen = preset_hard_lefschetz()
    results = {k: v for k, v in scen.items() if k not in ("configuration", "citations")}
    results["configuration"] = cio.configuration_to_json(scen["configuration"])
    return _report("preset", {"name": args.name}, results, scen["hard_lefschetz_violated"],
                   citations=scen["citations"]), EXIT_OK, True


def _matrix(config, which: str):
    if which == "pairing":
        if config.pairing is None:
            raise cio.FormatError("$.pairing", "configuration has no pairing matrix")
        return config.pairing
    return config.classes


def cmd_rank(args):
    config = cio.read_configuration(args.file)
    r = rank_exact(_matrix(config, args.matrix))
    results = {"rank": r, "matrix": args.matrix, "cycles": len(config)}
    return _report("rank", {"matrix": args.matrix}, results, True,
                   inputs_digest=_file_digest(args.file)), EXIT_OK, True


def cmd_snf(args):
    config = cio.read_configuration(args.file)
    M = _matrix(config, args.matrix)
    snf = smith_normal_form(M)
    factors = [str(d) for d in snf.invariant_factors]
    results = {"matrix": args.matrix, "shape": [M.rows, M.cols], "rank": len(factors),
               "invariant_factors": factors,
               "torsion": [f for f in factors if f != "1"]}
    return _report("snf", {"matrix": args.matrix}, results, True,
                   inputs_digest=_file_digest(args.file)), EXIT_OK, True


def _select(config, args) -> list[int]:
    if args.subset:
        S = _parse_indices(args.subset)
    elif args.labels:
        pos = {lab: i for i, lab in enumerate(config.labels)}
        try:
            S = [pos[lab] for lab in args.labels.split(",")]
        except KeyError as exc:
            raise UsageError(f"unknown label {exc.args[0]!r}") from None
    else:
        raise UsageError("give --subset or --labels")
    if any(not 0 <= i < len(config) for i in S):
        raise UsageError(f"indices must lie in [0, {len(config)})")
    if len(set(S)) != len(S):
        raise UsageError("repeated index in subset")
    return S


def cmd_good_relation(args):
    config = cio.read_configuration(args.file)
    S = _select(config, args)
    if not S:
        raise UsageError("subset is empty")
    good = is_good_subset(config, S)
    rel = good_relation(config, S) if good else None
    results = {
        "subset": S,
        "labels": [config.labels[i] for i in S],
        "good": good,
        "span": span_dim(config, S),
        "pairwise_disjoint": config.pairwise_disjoint(S),
        "coefficients": None if rel is None else [str(c) for c in rel.coefficients],
        "verified": bool(rel is not None and rel.verify(config)),
    }
    ok = good and results["verified"]
    return _report("good-relation", {"subset": S}, results, ok, citations=[CITE_RESOL],
                   inputs_digest=_file_digest(args.file)), EXIT_OK if ok else EXIT_FAIL, True


def cmd_search(args):
    config = cio.read_configuration(args.file)
    idx = list(range(len(config)))
    if args.restrict:
        idx = [i for i, lab in enumerate(config.labels) if lab.startswith(args.restrict)]
        if not idx:
            raise UsageError(f"no label starts with {args.restrict!r}")
        config = config.subconfiguration(idx)
    if not 1 <= args.min <= args.max:
        raise UsageError("need 1 <= --min <= --max")
    rep = search_good_subsets(config, (args.min, args.max), args.seed, budget=args.budget,
                              threads=args.threads)
    d = rep.to_dict()
    for row in d["results"]:
        if row["subset"] is not None:
            row["subset"] = [idx[i] for i in row["subset"]]
    params = {"min": args.min, "max": args.max, "seed": args.seed, "budget": args.budget,
              "restrict": args.restrict}
    found = all(r["found"] for r in d["results"])
    return _report("search", params, d, found, citations=[CITE_RESOL],
                   inputs_digest=_file_digest(args.file)), EXIT_OK if found else EXIT_FAIL, True


def cmd_surgery(args):
    b4 = args.b2 if args.b4 is None else args.b4
    sc = not args.not_simply_connected
    euler = (2 + 2 * args.b2 - args.b3) if args.euler is None else args.euler
    try:
        X = SixManifoldTopology(args.b2, args.b3, b4, euler, simply_connected=sc,
                                c1_zero=args.c1_zero)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = {"b2": args.b2, "b3": args.b3, "b4": b4, "euler": euler, "n": args.n, "r": args.r,
              "simply_connected": sc, "c1_zero": args.c1_zero, "good": not args.no_good,
              "null_homologous": args.null_homologous, "reverse": args.reverse}
    try:
        if args.reverse:
            Y = reverse_transition(X, args.n, args.r)
        else:
            Y = conifold_transition(X, args.n, args.r, good=not args.no_good,
                                    null_homologous=args.null_homologous)
    except NoGoodRelationError as exc:
        results = {"before": X.to_dict(), "after": None, "error": str(exc)}
        return _report("surgery", params, results, False, citations=[CITE_RESOL]), EXIT_FAIL, True
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    checks = {
        "b3_even": Y.b3 % 2 == 0,
        "euler_formula": (not Y.simply_connected) or Y.euler == 2 + 2 * Y.b2 - Y.b3,
        "euler_change": Y.euler - X.euler == (-2 if args.reverse else 2) * args.n,
    }
    results = {"before": X.to_dict(), "after": Y.to_dict(), "checks": checks,
               "flags": obstruction_flags(Y, 0 if args.reverse else args.n).to_dict()}
    ok = all(checks.values())
    return _report("surgery", params, results, ok, citations=[CITE_HOM, CITE_RESOL]), \
        EXIT_OK if ok else EXIT_FAIL, True


def cmd_fibered(args):
    if args.file:
        doc = cio.loads(open(args.file, encoding="utf-8").read(), args.file)
        digest = _file_digest(args.file)
    else:
        doc = DEMO_FIBERED
        digest = cio.digest(doc)
    F1, F2, arcs = cio.fibered_from_json(doc)
    check = validate_fibre_product(F1, F2)
    if not check.smooth:
        results = {"smooth": False, "nodes": [[a, b] for a, b, _ in check.nodes]}
        return _report("fibered", {}, results, False, citations=[CITE_FIBERED],
                       inputs_digest=digest), EXIT_FAIL, True
    spheres = []
    try:
        for arc in arcs:
            spheres.append(build_sphere(F1, F2, arc))
        pairing = [[sphere_pairing(s, t) if s is not t else 0 for t in spheres]
                   for s in spheres]
    except NotASphereError as exc:
        raise cio.FormatError("$.arcs", str(exc)) from None
    except (KeyError, ValueError) as exc:
        raise cio.FormatError("$.arcs", str(exc)) from None
    antisym = all(pairing[i][j] == -pairing[j][i]
                  for i in range(len(spheres)) for j in range(len(spheres)))
    results = {
        "smooth": True,
        "spheres": [{"arc": s.arc.name,
                     "classes": [list(s.class_at_reference[0]), list(s.class_at_reference[1])],
                     "null_homologous": is_null_homologous(s, F1, F2)} for s in spheres],
        "pairing": pairing,
        "pairing_antisymmetric": antisym,
        "total_monodromy": {F.name: [[str(x) for x in row] for row in total_monodromy(F).tolist()]
                            for F in (F1, F2)},
    }
    return _report("fibered", {"demo": not args.file}, results, antisym,
                   citations=[CITE_FIBERED], inputs_digest=digest), \
        EXIT_OK if antisym else EXIT_FAIL, True


def cmd_verify_localmodel(args):
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    records = run_all(args.samples, args.seed)
    recs = [r.to_dict() for r in records]
    analytic = [c.residual for r in records for c in r.checks if c.tolerance <= TOL_ANALYTIC]
    results = {
        "records": recs,
        "max_residual": max(analytic),
        "max_residual_finite_difference": max(
            c.residual for r in records for c in r.checks if c.tolerance > TOL_ANALYTIC),
        "failed": [f"{r.name}: {c.name}" for r in records for c in r.checks if not c.passed],
    }
    ok = all(r.passed for r in records)
    return _report("verify-localmodel", {"samples": args.samples, "seed": args.seed}, results,
                   ok, citations=[CITE_LOCAL]), EXIT_OK if ok else EXIT_FAIL, True


def cmd_reproduce_prop(args):
    from .quintic import reproduce_proposition
    if not 1 <= args.min <= args.max <= 125:
        raise UsageError("need 1 <= --min <= --max <= 125")
    out = reproduce_proposition(seed=args.seed, size_range=(args.min, args.max),
                                budget=args.budget, threads=args.threads)
    ok = all(out["targets"].values())
    params = {"seed": args.seed, "min": args.min, "max": args.max, "budget": args.budget}
    return _report("reproduce-prop", params, out, ok, citations=[CITE_QUINTIC, CITE_HOM]), \
        EXIT_OK if ok else EXIT_FAIL, True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--out", help="write the document to this file as well")
    common.add_argument("--format", choices=("json", "text"), default="text",
                        help="report rendering (configurations are always JSON)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads; never changes reported values")

    p = argparse.ArgumentParser(prog="conifold", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, fn: Callable, help_: str):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("gen-quintic", cmd_gen_quintic, "emit the 625 + 125 quintic cycle configuration")
    sp.add_argument("--rates", default="1,2,3,4", help="push-off rates per coordinate")

    sp = add("preset", cmd_preset, "built-in configurations and scenarios")
    sp.add_argument("name", help=f"one of: {', '.join(PRESETS)}")
    sp.add_argument("--m", type=int, default=1, help="number of spheres (product)")
    sp.add_argument("--surface-b2", type=int, default=1, help="b2 of the surface S")

    for name, fn, help_ in (("rank", cmd_rank, "exact rank of a configuration matrix"),
                            ("snf", cmd_snf, "Smith normal form invariant factors")):
        sp = add(name, fn, help_)
        sp.add_argument("file")
        sp.add_argument("--matrix", choices=("classes", "pairing"), default="classes")

    sp = add("good-relation", cmd_good_relation, "test a subset for a good relation")
    sp.add_argument("file")
    sp.add_argument("--subset", help="comma-separated cycle indices")
    sp.add_argument("--labels", help="comma-separated cycle labels")

    sp = add("search", cmd_search, "search disjoint good subsets by size")
    sp.add_argument("file")
    sp.add_argument("--min", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--restrict", help="only cycles whose label starts with this prefix")

    sp = add("surgery", cmd_surgery, "Betti numbers across a conifold transition")
    sp.add_argument("--b2", type=int, required=True)
    sp.add_argument("--b3", type=int, required=True)
    sp.add_argument("--b4", type=int)
    sp.add_argument("--euler", type=int)
    sp.add_argument("--n", type=int, required=True, help="spheres collapsed")
    sp.add_argument("--r", type=int, required=True, help="dimension of their span")
    sp.add_argument("--c1-zero", action="store_true")
    sp.add_argument("--not-simply-connected", action="store_true")
    sp.add_argument("--null-homologous", action="store_true")
    sp.add_argument("--no-good", action="store_true", help="the spheres have no good relation")
    sp.add_argument("--reverse", action="store_true", help="smooth nodes instead")

    sp = add("fibered", cmd_fibered, "spheres in fibre products of elliptic fibrations")
    sp.add_argument("file", nargs="?", help="fibered-scenario JSON (default: built-in demo)")

    sp = add("verify-localmodel", cmd_verify_localmodel, "numerical checks of the local models")
    sp.add_argument("--samples", type=int, default=1000)

    sp = add("reproduce-prop", cmd_reproduce_prop, "quintic b3 = 2 table")
    sp.add_argument("--min", type=int, default=102)
    sp.add_argument("--max", type=int, default=125)
    sp.add_argument("--budget", type=int, default=100_000)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        print("conifold: error: --threads must be positive", file=stderr)
        return EXIT_USAGE
    try:
        doc, code, is_report = args.func(args)
    except UsageError as exc:
        print(f"conifold {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except cio.FormatError as exc:
        print(f"conifold {args.command}: malformed input at {exc}", file=stderr)
        return EXIT_USAGE
    text = cio.render_text(doc) if (is_report and args.format == "text") else cio.dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if not is_report:
            # the path is left out so the summary does not depend on --out
            summary = _report(args.command, {}, {"sha256": hashlib.sha256(text.encode()).hexdigest(),
                                                 "cycles": len(doc["labels"])}, True)
            out = cio.render_text(summary) if args.format == "text" else cio.dumps(summary)
            stdout.write(out)
            return code
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
