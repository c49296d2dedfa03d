"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .blocks import (
    BlockPartition,
    baby_verma_eigenvalues,
    block_invariant,
    block_partition_g_m_d_n,
    check_gmdn_input,
)
from .cherednik.algebra import ResourceLimitError
from .cherednik.checks import SUITES, run_suite
from .combin import Multipartition, enumerate_standard_tableaux, parse_multipartition, tableau_box_data
from .exactnum import parse_cyclotomic
from .params import H_to_c, ParamSpec, ParameterError, c_to_H, derived_from_H

EXIT_OK, EXIT_VERIFY_FAIL, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _add_params(p: argparse.ArgumentParser, need_n: bool = False, lam: bool = False):
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--n", type=int, required=need_n)
    p.add_argument("--kappa", help="cyclotomic literal, z = zeta_N")
    p.add_argument("--c", help="comma separated c_1,...,c_{m-1}")
    p.add_argument("--generic", action="store_true", help="treat kappa, H_1..H_{m-1} as symbols")
    p.add_argument("--zeta-order", type=int, default=0, help="N for Q(zeta_N), a multiple of m (default m)")
    if lam:
        p.add_argument("--lambda", dest="lam", required=True, help="multipartition JSON, e.g. [[2],[1]]")
    _add_output(p)


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrcablocks",
        description="Blocks of restricted rational Cherednik algebras of G(m,d,n) and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks", help="block partition of the baby Verma labels")
    _add_params(p, need_n=True)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("invariant", help="block invariant of one multipartition")
    _add_params(p, lam=True)

    p = sub.add_parser("same-block", help="decide whether two multipartitions share a block")
    _add_params(p, lam=True)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("tableaux", help="standard tableaux with (content, component) per entry")
    _add_params(p, lam=True)

    p = sub.add_parser("convert", help="convert c-parameters to H, a, C, h (or back with --H)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kappa")
    p.add_argument("--c")
    p.add_argument("--H", dest="H", help="comma separated H_0,...,H_{m-1} summing to zero")
    p.add_argument("--zeta-order", type=int, default=0)
    _add_output(p)

    p = sub.add_parser("verify", help="machine-check algebraic identities in H_R")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    _add_output(p)
    return parser


def _params(args) -> ParamSpec:
    numeric_given = args.kappa is not None or args.c is not None
    if args.generic and numeric_given:
        raise UsageError("--generic cannot be combined with --kappa/--c")
    if args.generic:
        if args.zeta_order:
            raise UsageError("--zeta-order applies to numeric parameters only")
        return ParamSpec.generic(args.m)
    if args.kappa is None:
        raise UsageError("give --kappa (and --c when m > 1), or --generic")
    if args.c is None and args.m > 1:
        raise UsageError(f"--c needs exactly m-1={args.m - 1} entries")
    return ParamSpec.parse(args.m, args.kappa, args.c, args.zeta_order)


def _lambda(text: str, m: int, n: int | None) -> Multipartition:
    lam = parse_multipartition(text, m)
    if n is not None and lam.n != n:
        raise UsageError(f"multipartition {text} has size {lam.n}, not n={n}")
    return lam


def _render_partition(bp: BlockPartition) -> str:
    m, d, n = bp.group
    lines = [f"G({m},{d},{n}) {bp.mode}: {len(bp.classes)} blocks over {len(bp.labels)} labels"]
    for k, cls in enumerate(bp.classes, start=1):
        lines.append(f"block {k}: " + " | ".join(str(lab) for lab in cls))
    return "\n".join(lines)


def _cmd_blocks(args) -> tuple[object, str]:
    params = _params(args)
    check_gmdn_input(args.m, args.d, args.n, params)
    bp = block_partition_g_m_d_n(args.m, args.d, args.n, params, threads=max(1, args.threads))
    return bp.to_json(), _render_partition(bp)


def _cmd_invariant(args):
    params = _params(args)
    lam = _lambda(args.lam, args.m, args.n)
    inv = block_invariant(lam, params)
    data = {"lambda": lam.to_json(), "mode": inv.mode, "invariant": inv.to_json()}
    return data, f"{lam}: {inv}"


def _cmd_same_block(args):
    params = _params(args)
    lam = _lambda(args.lam, args.m, args.n)
    mu = _lambda(args.mu, args.m, args.n)
    if lam.n != mu.n:
        raise UsageError(f"sizes differ: |lambda|={lam.n}, |mu|={mu.n}")
    a, b = block_invariant(lam, params), block_invariant(mu, params)
    same = a == b
    data = {"same_block": same, "lambda": {"label": lam.to_json(), "invariant": a.to_json()},
            "mu": {"label": mu.to_json(), "invariant": b.to_json()}}
    text = f"{'same block' if same else 'different blocks'}\n{lam}: {a}\n{mu}: {b}"
    return data, text


def _cmd_tableaux(args):
    lam = _lambda(args.lam, args.m, args.n)
    params = None
    if args.generic or args.kappa is not None or args.c is not None:
        params = _params(args)
        if params.is_generic:
            params = None
    tabs = enumerate_standard_tableaux(lam)
    out, lines = [], [f"{len(tabs)} standard tableaux on {lam}"]
    for tab in tabs:
        entries = [tableau_box_data(tab, i) for i in range(1, lam.n + 1)]
        item = {"rows": tab.rows(), "entries": [{"ct": ct, "beta": beta} for ct, beta in entries]}
        line = f"{tab.rows()}  (ct,beta): {entries}"
        if params is not None:
            ev = baby_verma_eigenvalues(lam, tab, params)
            item["eigenvalues"] = [str(v) for v in ev]
            line += f"  eigenvalues: {[str(v) for v in ev]}"
        out.append(item)
        lines.append(line)
    return {"lambda": lam.to_json(), "tableaux": out}, "\n".join(lines)


def _cmd_convert(args):
    order = args.zeta_order or args.m
    if args.H is not None:
        if args.c is not None:
            raise UsageError("give either --c or --H, not both")
        try:
            H = [parse_cyclotomic(v, order) for v in args.H.split(",")]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(H) != args.m:
            raise UsageError(f"--H needs exactly m={args.m} entries")
        cs = H_to_c(H, order) if args.m > 1 else ()
        kappa = parse_cyclotomic(args.kappa, order) if args.kappa is not None else None
        d = derived_from_H(H, kappa if kappa is not None else 0, order)
    else:
        if args.c is None and args.m > 1:
            raise UsageError(f"--c needs exactly m-1={args.m - 1} entries")
        spec = ParamSpec.parse(args.m, args.kappa if args.kappa is not None else "0", args.c, order)
        cs = spec.c
        d = c_to_H(spec)
    data = d.to_json()
    data["c"] = [str(v) for v in cs]
    if args.kappa is None:
        data["h"] = None
    text = "\n".join(f"{k} = {v}" for k, v in data.items())
    return data, text


def _cmd_verify(args):
    if args.m < 1 or args.n < 1:
        raise UsageError("need m >= 1 and n >= 1")
    if args.r is not None and not (1 <= args.r <= args.n):
        raise UsageError(f"--r must lie in 1..{args.n}")
    if args.suite == "plemmas":
        if args.r is not None and not (1 <= args.r <= args.n - 1):
            raise UsageError(f"plemmas needs 1 <= r <= n-1={args.n - 1}")
        if args.k is not None and not (1 <= args.k < args.n):
            raise UsageError(f"plemmas needs 1 <= k < n={args.n}")
    rep = run_suite(args.suite, args.m, args.n, args.r, args.k)
    lines = [f"{'PASS' if ok else 'FAIL'} {cid}" for cid, ok in rep.cases]
    lines.append(f"suite {rep.suite}: {'all pass' if rep.all_pass else 'FAILURES'} ({len(rep.cases)} cases)")
    return rep.to_json(), "\n".join(lines)


COMMANDS = {
    "blocks": _cmd_blocks,
    "invariant": _cmd_invariant,
    "same-block": _cmd_same_block,
    "tableaux": _cmd_tableaux,
    "convert": _cmd_convert,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        data, text = COMMANDS[args.command](args)
    except (UsageError, ParameterError, ValueError, ZeroDivisionError, IndexError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    payload = json.dumps(data) + "\n" if args.json else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        stdout.write(payload)
    if args.command == "verify" and not data["all_pass"]:
        return EXIT_VERIFY_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
