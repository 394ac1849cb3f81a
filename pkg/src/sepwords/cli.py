"""Command-line entry point: ``sepwords <command> ...``.

Exit codes: 0 success, 2 invalid input or cap violation, 3 internal
contradiction (a guaranteed search failed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import statistics
import sys
import tempfile

from . import kernels
from .errors import InternalContradiction
from .littlewood import DEFAULT_GRID, check_order_bound, eval_max_on_interval, from_set_pair
from .oracle import F_OF_N_CAP, adversarial_pair, adversarial_strings, exact_table, check_pair
from .sampling import PAIR_KINDS, RNG_NAME, separated_pair
from .separator import MODES, separate, state_bound
from .words import BinaryString, first_difference, icbrt_ceil

EXIT_OK, EXIT_INVALID, EXIT_CONTRADICTION = 0, 2, 3


class UsageError(ValueError):
    pass


def atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(args, name: str, text: str, out) -> None:
    """Write ``text`` to ``--out/name`` if an output directory was given,
    otherwise to ``out``."""
    if args.out:
        atomic_write(os.path.join(args.out, name), text)
    else:
        out.write(text)


def write_metadata(args, extra=None) -> None:
    if not args.out:
        return
    meta = {"command": args.command, "seed": getattr(args, "seed", None), "rng": RNG_NAME,
            "log_base": "e", "kernel_backend": kernels.BACKEND}
    meta.update(extra or {})
    atomic_write(os.path.join(args.out, f"{args.command}.meta.json"),
                 json.dumps(meta, indent=2, sort_keys=True) + "\n")


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _read_bits(inline, path, label):
    if inline is not None and path is not None:
        raise UsageError(f"give either --{label} or --{label}-file, not both")
    if path is not None:
        with open(path) as fh:
            inline = fh.read()
    if inline is None:
        raise UsageError(f"missing --{label}")
    return BinaryString.parse(inline)


def cmd_separate(args, out) -> int:
    x = _read_bits(args.x, args.x_file, "x")
    y = _read_bits(args.y, args.y_file, "y")
    if len(x) != len(y):
        raise UsageError(f"length mismatch: {len(x)} != {len(y)}")
    if x == y:
        raise UsageError("x and y are identical")
    dfa, cert = separate(x, y, args.mode, p_max=args.p_max, q_max=args.q_max)
    out.write(f"states {dfa.state_count}\n")
    if args.emit == "dot":
        emit(args, "dfa.dot", dfa.to_dot(), out)
    else:
        emit(args, "dfa.txt", dfa.to_text(), out)
    emit(args, "certificate.txt", cert.to_text(), out)
    if args.out and args.emit == "dot":
        atomic_write(os.path.join(args.out, "dfa.txt"), dfa.to_text())
    return EXIT_OK


GROWTH_HEADER = ["n", "pair", "k", "paper_states", "paper_variant", "paper_p", "paper_q",
                 "baseline_states", "optimize_states", "state_bound", "verified"]


def growth_rows(lengths, pairs, seed, kind="swap", p_max=None, q_max=None):
    rng = random.Random(seed)
    draw = PAIR_KINDS[kind]
    rows = []
    for n in lengths:
        for j in range(pairs):
            x, y = draw(n, rng)
            results = {m: separate(x, y, m, p_max=p_max, q_max=q_max) for m in MODES}
            _, cert = results["paper"]
            spec = cert.spec
            rows.append([n, j, first_difference(x, y), cert.states,
                         cert.variant, spec.m if spec else "", spec.q if spec else "",
                         results["baseline"][1].states, results["optimize"][1].states,
                         state_bound(n) if n >= 2 else "",
                         str(all(c.verified for _, c in results.values())).lower()])
    return rows


def fitted_exponent(rows):
    """Least-squares slope of log(mean paper-mode states) against log(n)."""
    by_n = {}
    for r in rows:
        by_n.setdefault(r[0], []).append(r[3])
    if len(by_n) < 2:
        return None
    xs = [math.log(n) for n in by_n]
    ys = [math.log(statistics.fmean(v)) for v in by_n.values()]
    return statistics.linear_regression(xs, ys).slope


def cmd_growth(args, out) -> int:
    lengths = [int(v) for v in args.lengths.split(",") if v.strip()]
    if not lengths or min(lengths) < 1 or args.pairs < 1:
        raise UsageError("--lengths must list positive integers and --pairs must be >= 1")
    rows = growth_rows(lengths, args.pairs, args.seed, args.pair_kind, args.p_max, args.q_max)
    emit(args, "growth.csv", csv_text(GROWTH_HEADER, rows), out)
    slope = fitted_exponent(rows)
    write_metadata(args, {"lengths": lengths, "pairs": args.pairs, "pair_kind": args.pair_kind,
                          "fitted_exponent_paper": slope})
    if slope is not None:
        sys.stderr.write(f"fitted exponent (paper mode): {slope:.4f}\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.n < 1 or args.n > F_OF_N_CAP:
        raise UsageError(f"--n must be in [1, {F_OF_N_CAP}]")
    table = exact_table(args.n, args.s_max)
    if args.action == "fofn":
        out.write(f"f({args.n}) = {max(table.values())}\n")
        return EXIT_OK
    rows = []
    for (x, y), size in table.items():
        row = [args.n, f"{x}/{y}", size]
        if args.with_pipeline:
            row += [separate(x, y, m)[1].states for m in MODES]
        rows.append(row)
    header = ["n", "pair", "exact"] + ([f"{m}_states" for m in MODES] if args.with_pipeline else [])
    emit(args, "oracle.csv", csv_text(header, rows), out)
    out.write(f"f({args.n}) = {max(table.values())}\n")
    return EXIT_OK


def cmd_adversarial(args, out) -> int:
    if min(args.n, args.d, args.k) < 1:
        raise UsageError("--n, --d and --k must be positive")
    pair = adversarial_pair(args.n, args.d, args.k, args.budget, args.seed)
    write_metadata(args, {"n": args.n, "d": args.d, "k": args.k, "budget": args.budget})
    if pair is None:
        out.write("not found within budget\n")
        return EXIT_OK
    text = (f"A: {pair.A.format()}\nB: {pair.B.format()}\nd: {pair.d}\nk: {pair.k}\n"
            f"valid: {str(check_pair(pair)).lower()}\n")
    if args.n_out:
        x, y = adversarial_strings(pair, args.n_out)
        text += f"x: {x}\ny: {y}\n"
    emit(args, "adversarial.txt", text, out)
    return EXIT_OK


def cmd_littlewood(args, out) -> int:
    if args.action == "order-check":
        if not 1 <= args.kmax <= 15:
            raise UsageError("--kmax must be in [1, 15]")
        rows = []
        for k in range(1, args.kmax + 1):
            lhs, rhs, ok = check_order_bound(k, args.grid)
            rows.append([k, 2 ** k - 1, repr(lhs), repr(rhs), str(ok).lower()])
        emit(args, "order_check.csv", csv_text(["k", "n", "lhs", "rhs", "ok"], rows), out)
        return EXIT_OK
    if args.n < 2 or args.pairs < 1:
        raise UsageError("--n must be >= 2 and --pairs >= 1")
    rng = random.Random(args.seed)
    t = icbrt_ceil(args.n)
    lo, hi = 1.0 - args.n ** (-2.0 / 3.0), 1.0
    rows = []
    for _ in range(args.pairs):
        A, B = separated_pair(args.n, t, rng)
        f = from_set_pair(A, B, args.n)
        value = eval_max_on_interval(f, lo, hi, args.grid)
        rows.append([args.n, f.sigma, f.d if f.sigma else "", len(f.tail), repr(lo), repr(hi),
                     repr(value), args.grid])
    header = ["n", "sigma", "d", "tail_size", "lo", "hi", "max_abs", "grid"]
    emit(args, "littlewood.csv", csv_text(header, rows), out)
    write_metadata(args, {"n": args.n, "pairs": args.pairs, "grid": args.grid})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sepwords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False):
        p.add_argument("--out", help="output directory (default: stdout)")
        p.add_argument("--emit", choices=["table", "dot", "csv"], default="table")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("separate", help="build a DFA accepting x and rejecting y")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--x-file")
    p.add_argument("--y-file")
    p.add_argument("--mode", choices=MODES, default="paper")
    p.add_argument("--p-max", type=int)
    p.add_argument("--q-max", type=int)
    common(p)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("growth", help="state counts of all modes over random pairs")
    p.add_argument("--lengths", default="64,128,256,512,1024")
    p.add_argument("--pairs", type=int, default=10)
    p.add_argument("--pair-kind", choices=sorted(PAIR_KINDS), default="swap")
    p.add_argument("--p-max", type=int)
    p.add_argument("--q-max", type=int)
    common(p, seed=True)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("oracle", help="exact minimal separating DFA sizes")
    p.add_argument("action", choices=["exact", "fofn"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s-max", type=int, default=5)
    p.add_argument("--with-pipeline", action="store_true")
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("adversarial", help="sets with equal residue profiles for small primes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.add_argument("--n-out", type=int)
    common(p, seed=True)
    p.set_defaults(func=cmd_adversarial)

    p = sub.add_parser("littlewood", help="numeric polynomial checks")
    p.add_argument("action", choices=["order-check", "eval"])
    p.add_argument("--kmax", type=int, default=15)
    p.add_argument("--n", type=int, default=10_000)
    p.add_argument("--pairs", type=int, default=10)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    common(p, seed=True)
    p.set_defaults(func=cmd_littlewood)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args, out)
    except InternalContradiction as exc:
        sys.stderr.write(f"internal contradiction: {exc}\n")
        return EXIT_CONTRADICTION
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
