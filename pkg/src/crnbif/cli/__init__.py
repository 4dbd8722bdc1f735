"""Command line: ``crnbif enumerate | analyze | reproduce | portrait``.

Exit codes: 0 success, 2 a reproduced count differs from the manifest,
3 some verdict is Unresolved, 4 bad input.
"""
import argparse
import json
import os
import sys
import time

EXIT_OK, EXIT_MISMATCH, EXIT_UNRESOLVED, EXIT_INPUT = 0, 2, 3, 4


class InputError(Exception):
    pass


def _parse(text):
    from ..crn_model import parse_network, NetworkParseError
    try:
        net = parse_network(text)
        if set(net.species) <= set("XYZ"):
            net = parse_network(text, species="".join(sorted(net.species)))
        return net
    except NetworkParseError as e:
        raise InputError(f"cannot parse network: {e}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        d = os.path.dirname(os.path.abspath(path))
        os.makedirs(d, exist_ok=True)
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------- commands ---
def cmd_enumerate(a):
    from ..enumeration import ClassSpec, enumerate_networks
    try:
        spec = ClassSpec.parse(a.spec)
    except ValueError as e:
        raise InputError(str(e)) from None
    t0 = time.time()
    cat = enumerate_networks(spec)
    _write(a.out, cat.to_jsonl())
    if a.csv:
        _write(a.csv, cat.summary_csv())
    print(f"{spec.describe()}: {len(cat)} classes from {cat.raw} raw candidates in {time.time() - t0:.1f}s",
          file=sys.stderr)
    return EXIT_OK


def cmd_analyze(a):
    from ..bifurcation import analyze
    net = _parse(a.network)
    rep = analyze(net)
    text = json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n"
    _write(a.json, text)
    if a.json not in (None, "-"):
        print(f"report written to {a.json}", file=sys.stderr)
    return EXIT_UNRESOLVED if rep.unresolved else EXIT_OK


def cmd_reproduce(a):
    from ..reproduce import TARGETS, Runner, run_reproduce
    targets = list(TARGETS) if a.target == "all" else [a.target]
    if any(t not in TARGETS for t in targets):
        raise InputError(f"unknown target {a.target!r}; choose from all, {', '.join(TARGETS)}")
    runner = Runner(a.jobs, progress=(lambda m: print(m, file=sys.stderr)) if a.verbose else None)
    code = EXIT_OK
    results = []
    for t in targets:
        t0 = time.time()
        res = run_reproduce(t, runner)
        results.append(res.to_json())
        status = "PASS" if res.passed else ("UNRESOLVED" if res.unresolved else "MISMATCH")
        print(f"{t}: {status} ({time.time() - t0:.1f}s)")
        for k in res.expected:
            mark = "ok " if res.observed.get(k) == res.expected[k] else "BAD"
            print(f"  {mark} {k}: observed {res.observed.get(k)} expected {res.expected[k]}")
        for name in res.unresolved:
            print(f"  unresolved: {name}")
        if res.unresolved:
            code = EXIT_UNRESOLVED
        elif res.mismatches and code == EXIT_OK:
            code = EXIT_MISMATCH
    if a.out:
        os.makedirs(a.out, exist_ok=True)
        _write(os.path.join(a.out, "report.json"), json.dumps(results, indent=1, sort_keys=True) + "\n")
        for name, val in sorted(runner._memo.items()):
            if name.startswith("catalog:"):
                _write(os.path.join(a.out, name.split(":", 1)[1] + ".jsonl"), val.to_jsonl())
    return code


def _point(text):
    from fractions import Fraction
    try:
        vals = tuple(float(Fraction(v.strip())) for v in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad start point {text!r}") from None
    if len(vals) != 2:
        raise InputError(f"start point {text!r} needs two coordinates")
    return vals


def cmd_portrait(a):
    from .. import portrait as P
    net = _parse(a.network)
    try:
        kappa = P.parse_rational_list(a.kappa)
        starts = [_point(s) for s in (a.start or [])]
        if not starts:
            raise InputError("give at least one --start point")
        pic = P.portrait(net, kappa, starts, T=a.T, rtol=a.rtol, bound=a.bound)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(str(e)) from None
    if a.csv:
        _write(a.csv, P.to_csv(pic))
    if a.svg:
        _write(a.svg, P.to_svg(pic))
    for i, tr in enumerate(pic.trajectories):
        extra = "" if tr.drift is None else f" H-drift {tr.drift:.3e}"
        flag = " TRUNCATED" if tr.truncated else ""
        print(f"trajectory {i} from {tr.start}: {tr.accepted} steps, {tr.rejected} rejected, "
              f"{tr.status}{flag}{extra}")
    if pic.continuum:
        print("equilibria: a continuum")
    for x, y, kind in pic.equilibria:
        print(f"equilibrium ({x:.10g}, {y:.10g}) {kind}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="crnbif", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="build a catalog of network classes")
    e.add_argument("--spec", required=True, help="preset name or flag list such as n=2,m=4,distinct_sources")
    e.add_argument("--out", default="-", help="JSON-lines catalog (default stdout)")
    e.add_argument("--csv", help="also write a CSV summary")
    e.set_defaults(fn=cmd_enumerate)

    an = sub.add_parser("analyze", help="classify one network")
    an.add_argument("network", help='reactions, e.g. "2X->3X; X+Y->2X; X->0; 0->Y"')
    an.add_argument("--json", help="write the report here instead of stdout")
    an.set_defaults(fn=cmd_analyze)

    r = sub.add_parser("reproduce", help="recompute a published count and compare")
    r.add_argument("target", help="target name or 'all'")
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--out", help="directory for the catalogs and the JSON report")
    r.add_argument("-v", "--verbose", action="store_true")
    r.set_defaults(fn=cmd_reproduce)

    po = sub.add_parser("portrait", help="integrate trajectories and draw a phase portrait")
    po.add_argument("network")
    po.add_argument("--kappa", required=True, help="comma list of rationals, e.g. 1,1,3/2,1")
    po.add_argument("--start", action="append", help="x,y (repeatable)")
    po.add_argument("-T", type=float, default=100.0)
    po.add_argument("--rtol", type=float, default=1e-9)
    po.add_argument("--bound", type=float, default=1e8, help="blow-up threshold")
    po.add_argument("--svg")
    po.add_argument("--csv")
    po.set_defaults(fn=cmd_portrait)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_MISMATCH", "EXIT_UNRESOLVED", "EXIT_INPUT"]
