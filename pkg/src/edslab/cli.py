"""Command-line front end.

    edslab eds gen --w 1 -1 1 --n 20
    edslab period --curve "0 0 1 -1 0" --point "0 0" -p 5
    edslab limit --curve "0 0 1 -1 0" --point "0 0" -p 7 -m 1 --mu 4
    edslab divpoly eval --curve "0 0 1 -1 0" --point "0 0" --n 100 -p 7 --mu 3
    edslab verify --fast --seed 42
    edslab --batch jobs.txt

Exit codes: 0 ok, 1 verification failed, 2 invalid input, 3 a mathematical
gate refused the input, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor

from .acceptance import run_suite
from .curve import parse_curve, parse_point, reduce_point
from .divpoly import NetContext, eval_division_value
from .eds import Eds, classify_prime, eds_padic_limit, from_curve_point, generate
from .errors import EdsLabError, GateRefused, InadmissiblePrime
from .padic import padic_limit
from .periodicity import find_period
from .ring import parse_rational

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_GATE, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _curve_point(args):
    if not args.curve or not args.point:
        raise ValueError("--curve and --point are required")
    E = parse_curve(args.curve)
    return E, parse_point(E, args.point)


def _w_values(items):
    vals = " ".join(items).split()
    if len(vals) != 3:
        raise ValueError("--w takes three integers W2 W3 W4")
    return [int(v) for v in vals]


def _emit(fmt, record: dict, rows=None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows is None:
            w.writerow(record.keys())
            w.writerow(record.values())
        else:
            w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return json.dumps(record, sort_keys=True)


def cmd_eds_gen(args) -> str:
    if args.w:
        W = Eds(*_w_values(args.w))
    else:
        W = from_curve_point(*_curve_point(args))
    terms = generate(W, args.n)
    if args.format == "json":
        return json.dumps({"w": [W.w2, W.w3, W.w4], "terms": terms})
    if args.format == "csv":
        return _emit("csv", {}, [("n", "W_n")] + list(enumerate(terms)))
    return " ".join(str(t) for t in terms)


def cmd_period(args) -> str:
    E, P = _curve_point(args)
    K = args.window[0] if args.window else 20
    N = args.window[1] if args.window and len(args.window) > 1 else None
    cert = find_period(E, P, args.p, K_max=K, N_max=N)
    return _emit(args.format or "json", cert.to_dict())


def cmd_limit(args) -> str:
    E, P = _curve_point(args)
    if args.gamma is not None:
        W = Eds.with_scale(E, P, parse_rational(args.gamma))
        cert = eds_padic_limit(W, args.p, args.m, args.mu)
    else:
        cert = padic_limit(E, P, args.p, args.m, args.mu)
    return _emit(args.format or "json", cert.to_dict())


def cmd_divpoly_eval(args) -> str:
    E, P = _curve_point(args)
    if args.p is not None:
        E, P = E.reduce(args.p, args.mu or 1), reduce_point(E, P, args.p, args.mu or 1)
    value = eval_division_value(NetContext.from_point(E, P), args.n)
    value = value.value if args.p is not None else value
    record = {"n": args.n, "value": str(value)}
    if args.p is not None:
        record.update(p=args.p, mu=args.mu or 1)
    return _emit(args.format or "json", record)


def cmd_verify(args):
    results = run_suite(seed=args.seed, fast=args.fast)
    out = "\n".join(r.line() for r in results)
    return out, EXIT_OK if all(r.ok for r in results) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="edslab", description="Division polynomials, EDS and p-adic limits.")
    ap.add_argument("--batch", metavar="FILE", help="run one job per line of FILE")
    ap.add_argument("--jobs", type=int, default=1, help="parallel workers for --batch")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, need_prime=False):
        p.add_argument("--curve", help='"a1 a2 a3 a4 a6"')
        p.add_argument("--point", help='"x y"')
        p.add_argument("-p", type=int, required=need_prime)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="format", action="store_const", const="json")
        fmt.add_argument("--csv", dest="format", action="store_const", const="csv")

    eds = sub.add_parser("eds", help="elliptic divisibility sequences")
    eds_sub = eds.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gen = eds_sub.add_parser("gen", help="list W_0..W_N")
    common(gen)
    gen.add_argument("--w", nargs="+", help="W2 W3 W4")
    gen.add_argument("--n", type=int, required=True)
    gen.set_defaults(func=cmd_eds_gen)

    per = sub.add_parser("period", help="period certificate of F_n(P) mod p")
    common(per, need_prime=True)
    per.add_argument("--window", type=int, nargs="+", metavar="K [N]",
                     help="symmetry check range k <= K, n <= N (default N = rt)")
    per.set_defaults(func=cmd_period)

    lim = sub.add_parser("limit", help="p-adic limit of F_{m q^k}(P)")
    common(lim, need_prime=True)
    lim.add_argument("-m", type=int, required=True)
    lim.add_argument("--mu", type=int, required=True)
    lim.add_argument("--gamma", help="scale of the attached EDS W_n = gamma^(n^2-1) F_n(P)")
    lim.set_defaults(func=cmd_limit)

    dp = sub.add_parser("divpoly", help="division polynomial values")
    dp_sub = dp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = dp_sub.add_parser("eval", help="F_n(P) over Q or Z/p^mu")
    common(ev)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--mu", type=int)
    ev.set_defaults(func=cmd_divpoly_eval)

    ver = sub.add_parser("verify", help="run the acceptance suite")
    ver.add_argument("--fast", action="store_true", help="only the quick criteria")
    ver.add_argument("--seed", type=int, default=0)
    ver.set_defaults(func=cmd_verify)
    return ap


def _refusal(exc: GateRefused) -> str:
    record = {"refused": str(exc), "reason": type(exc).__name__}
    cls = getattr(exc, "classification", None)
    if cls is not None:
        record["classification"] = cls.to_dict()
    return json.dumps(record, sort_keys=True)


def _classify_for_refusal(args, exc):
    # attach the prime classification to refusals of the limit command when possible
    if isinstance(exc, InadmissiblePrime) or getattr(args, "func", None) is not cmd_limit:
        return exc
    try:
        W = from_curve_point(*_curve_point(args))
        exc.classification = classify_prime(W, args.p)
    except Exception:
        pass
    return exc


def run(argv) -> tuple[int, str, str]:
    """Run one command line; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(argv)
        if args.batch:
            return _run_batch(args.batch, args.jobs)
        if args.command is None:
            raise UsageError(build_parser().format_usage() + "edslab: error: no command given")
        res = args.func(args)
        if isinstance(res, tuple):
            return res[1], res[0], ""
        return EXIT_OK, res, ""
    except UsageError as exc:
        return EXIT_USAGE, "", str(exc)
    except GateRefused as exc:
        return EXIT_GATE, "", _refusal(_classify_for_refusal(args, exc))
    except (EdsLabError, ValueError, ZeroDivisionError) as exc:
        return EXIT_INPUT, "", f"invalid input: {exc}"


def _run_line(line: str):
    return run(shlex.split(line))


def _run_batch(path: str, jobs: int):
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        return EXIT_INPUT, "", f"invalid input: {exc}"
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_run_line, lines))
    else:
        results = [_run_line(ln) for ln in lines]
    out, err = [], []
    for ln, (code, o, e) in zip(lines, results):
        out.append(o if code == 0 else json.dumps({"job": ln, "exit": code, "error": e}))
        if e:
            err.append(e)
    worst = max((code for code, _, _ in results), default=0)
    return worst, "\n".join(out), "\n".join(err)


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
