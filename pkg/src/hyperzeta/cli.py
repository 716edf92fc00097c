"""Command-line front end: ``count``, ``oracle`` and ``bench``.

Input is one or more JSON curve documents (a single document, or one per
line) read from a file or stdin::

    {"p": 5, "n": 1, "Q": [1, 1, 0, 1]}
    {"p": 3, "n": 2, "field_poly": [2, 2, 1], "Q": [[0, 1], 2, 0, 1]}

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

import numpy as np

from .errors import FieldTooLarge, HyperzetaError, MalformedInput
from .finite_field import (
    ORACLE_GUARD,
    CurveData,
    FieldCtx,
    check_characteristic,
    count_points_oracle,
    random_curve,
    random_irreducible,
    validate_curve,
)
from .zeta import compute_zeta

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# documents

def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInput(f"{what} must be an integer, got {value!r}")
    return value


def _digits(value, p, length, what):
    if not isinstance(value, list) or len(value) != length:
        raise MalformedInput(f"{what} must be a list of {length} integers")
    out = [_int(c, what) for c in value]
    if any(not 0 <= c < p for c in out):
        raise MalformedInput(f"{what} entries must lie in [0, {p})")
    return out


def parse_curve(doc, seed=0):
    """CurveData and the echoed document (with any generated field_poly)."""
    if not isinstance(doc, dict):
        raise MalformedInput("curve document must be a JSON object")
    missing = {"p", "n", "Q"} - doc.keys()
    if missing:
        raise MalformedInput(f"missing field(s): {', '.join(sorted(missing))}")
    p = _int(doc["p"], "p")
    check_characteristic(p)
    n = _int(doc["n"], "n")
    if n < 1:
        raise MalformedInput("n must be positive")
    echo = dict(doc)
    if doc.get("field_poly") is not None:
        modulus = _digits(doc["field_poly"], p, n + 1, "field_poly")
    else:
        modulus = random_irreducible(p, n, random.Random(seed))
        echo["field_poly"] = modulus
    field = FieldCtx(p, modulus)

    Q = doc["Q"]
    if not isinstance(Q, list) or len(Q) < 4:
        raise MalformedInput("Q must list at least 4 coefficients")
    coeffs = []
    for i, c in enumerate(Q):
        if isinstance(c, list):
            coeffs.append(tuple(_digits(c, p, n, f"Q[{i}]")))
        else:
            coeffs.append(field.from_int(_int(c, f"Q[{i}]")))
    return validate_curve(CurveData(field, tuple(coeffs))), echo


def read_documents(stream):
    text = stream.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        docs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise MalformedInput(f"line {lineno}: {exc.msg}") from None
        return docs
    return doc if isinstance(doc, list) else [doc]


def _open_input(path):
    if path in (None, "-"):
        return sys.stdin
    return open(path, encoding="utf-8")


def _report_error(exc, as_json):
    if as_json:
        print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
    else:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)


def _emit(doc, as_json, text=None):
    if as_json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(doc, indent=2, sort_keys=True))


def format_L(L):
    terms = []
    for i, c in enumerate(L):
        if c == 0:
            continue
        mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        coef = str(abs(c)) if (abs(c) != 1 or i == 0) else ""
        sign = "-" if c < 0 else "+"
        terms.append((sign, coef + mono))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# count

def verify_counts(curve, counts, guard=ORACLE_GUARD):
    """Oracle comparison for each extension degree; returns (report, ok)."""
    checks, ok = [], True
    for i, c in enumerate(counts, start=1):
        try:
            oracle = count_points_oracle(curve, i, guard=guard)
        except FieldTooLarge as exc:
            checks.append({"ext": i, "status": "skipped", "reason": str(exc)})
            continue
        match = oracle == c
        ok &= match
        checks.append({"ext": i, "status": "match" if match else "mismatch",
                       "computed": c, "oracle": oracle})
    return {"ok": ok, "checks": checks}, ok


def count_document(doc, counts=1, verify=False, N1=None, threads=1, seed=0):
    """Run the pipeline on one input document; returns (result document, exit code)."""
    curve, echo = parse_curve(doc, seed)
    t0 = time.perf_counter()
    res = compute_zeta(curve, N1=N1, counts=counts, threads=threads)
    total = time.perf_counter() - t0
    timings = {k: round(1000 * v, 3) for k, v in res.timings.items()}
    timings["total"] = round(1000 * total, 3)
    out = {
        "input": echo,
        "g": res.g,
        "q": res.q,
        "a": res.a,
        "L": res.L,
        "counts": res.counts,
        "precision": res.profile.as_dict(),
        "timings_ms": timings,
        "audit": res.report,
    }
    code = EXIT_OK
    if verify:
        report, ok = verify_counts(curve, res.counts)
        out["verify"] = report
        code = EXIT_OK if ok else EXIT_MISMATCH
    return out, code


def cmd_count(args):
    worst = EXIT_OK
    with _open_input(args.input) as stream:
        try:
            docs = read_documents(stream)
        except HyperzetaError as exc:
            _report_error(exc, args.json)
            return exc.exit_code
    for doc in docs:
        try:
            out, code = count_document(
                doc, args.counts, args.verify, args.precision, args.threads, args.seed
            )
        except HyperzetaError as exc:
            _report_error(exc, args.json)
            worst = max(worst, exc.exit_code)
            continue
        text = None
        if not args.json:
            lines = [
                f"q = {out['q']}, g = {out['g']}",
                f"L(T) = {format_L(out['L'])}",
                f"counts = {out['counts']}",
                f"precision = {out['precision']}",
                f"time = {out['timings_ms']['total']:.1f} ms",
            ]
            if "verify" in out:
                lines.append("verify = " + ("ok" if out["verify"]["ok"] else "MISMATCH"))
            text = "\n".join(lines)
        _emit(out, args.json, text)
        worst = max(worst, code)
    return worst


# ---------------------------------------------------------------------------
# oracle

def cmd_oracle(args):
    worst = EXIT_OK
    with _open_input(args.input) as stream:
        try:
            docs = read_documents(stream)
        except HyperzetaError as exc:
            _report_error(exc, args.json)
            return exc.exit_code
    for doc in docs:
        try:
            curve, _ = parse_curve(doc, args.seed)
            count = count_points_oracle(curve, args.ext)
        except HyperzetaError as exc:
            _report_error(exc, args.json)
            worst = max(worst, exc.exit_code)
            continue
        _emit({"ext": args.ext, "count": count}, args.json, str(count))
    return worst


# ---------------------------------------------------------------------------
# bench

def loglog_slope(xs, ys):
    """Least-squares slope of log y against log x, or None with fewer than two sizes."""
    if len(set(xs)) < 2:
        return None
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def bench_curve(p, n, g, seed):
    rng = random.Random(f"{seed}:{p}:{n}:{g}")
    field = FieldCtx(p, random_irreducible(p, n, rng))
    return random_curve(field, g, rng)


def run_bench(p, genus_list, n_list, seed=0, threads=1):
    def run(g, n):
        curve = bench_curve(p, n, g, seed)
        t0 = time.perf_counter()
        res = compute_zeta(curve, threads=threads)
        total = time.perf_counter() - t0
        return {
            "p": p, "n": n, "g": g,
            "field_poly": list(curve.field.modulus),
            "Q": [list(c) for c in curve.Qbar],
            "a": res.a,
            "timings_ms": {**{k: round(1000 * v, 3) for k, v in res.timings.items()},
                           "total": round(1000 * total, 3)},
        }

    n0, g0 = min(n_list), min(genus_list)
    by_g = [run(g, n0) for g in genus_list]
    by_n = [r for r in by_g if r["g"] == g0 and r["n"] == n0]
    by_n += [run(g0, n) for n in n_list if n != n0]
    by_n.sort(key=lambda r: r["n"])

    def slope(rows, key):
        s = loglog_slope([r[key] for r in rows], [r["timings_ms"]["total"] for r in rows])
        return "undefined" if s is None else round(s, 3)

    return {
        "p": p, "seed": seed,
        "genus_sweep": {"n": n0, "runs": by_g, "slope": slope(by_g, "g")},
        "n_sweep": {"g": g0, "runs": by_n, "slope": slope(by_n, "n")},
    }


def _int_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("list must hold positive integers")
    return values


def cmd_bench(args):
    try:
        report = run_bench(args.p, args.genus_list, args.n_list, args.seed, args.threads)
    except HyperzetaError as exc:
        _report_error(exc, args.json)
        return exc.exit_code
    text = None
    if not args.json:
        lines = []
        for name, key in (("genus_sweep", "g"), ("n_sweep", "n")):
            sweep = report[name]
            for r in sweep["runs"]:
                lines.append(f"g={r['g']:<3} n={r['n']:<3} {r['timings_ms']['total']:10.1f} ms")
            lines.append(f"log-log slope in {key}: {sweep['slope']}")
        text = "\n".join(lines)
    _emit(report, args.json, text)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperzeta",
        description="Zeta functions of hyperelliptic curves y^2 = Q(x) over F_{p^n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("input", nargs="?", default="-", help="JSON file (default: stdin)")
        sp.add_argument("--json", action="store_true", help="one JSON document per line")
        sp.add_argument("--seed", type=int, default=0,
                        help="seed for a generated field_poly (default 0)")

    c = sub.add_parser("count", help="compute the L-polynomial and point counts")
    common(c)
    c.add_argument("--counts", type=int, default=1, metavar="K",
                   help="report #C(F_{q^i}) for i = 1..K")
    c.add_argument("--verify", action="store_true", help="compare counts with brute force")
    c.add_argument("--precision", type=int, default=None, metavar="N1",
                   help="raise the output precision N1 above its minimum")
    c.add_argument("--threads", type=int, default=1)
    c.set_defaults(func=cmd_count)

    o = sub.add_parser("oracle", help="brute-force point count")
    common(o)
    o.add_argument("--ext", type=int, default=1, metavar="I", help="count over F_{q^I}")
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="empirical scaling in g and n")
    b.add_argument("--genus-list", type=_int_list, default=[2, 4, 8])
    b.add_argument("--n-list", type=_int_list, default=[1])
    b.add_argument("--p", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "counts", 1) < 1 or getattr(args, "ext", 1) < 1:
        print("counts and ext must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
