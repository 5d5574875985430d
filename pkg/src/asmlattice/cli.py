"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .asm import (
    Asm,
    MonotoneTriangle,
    ParabolicMask,
    Permutation,
    asm_as_permutation,
    asm_to_monotone_triangle,
    enumerate_asms,
    monotone_triangle_to_asm,
    permutation_to_asm,
)
from .bruhat import hasse_covers
from .completion import FinitePoset, dm_completion
from .enumeration import count_table_csv
from .errors import AsmLatticeError, ResourceLimit
from .parabolic import enumerate_asm_i
from .sixvertex import SixVertexState, asm_to_state, state_to_asm

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
FORMATS = ("asm", "mt", "sixvertex", "perm")


class UsageError(Exception):
    pass


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(", ", ": "))


def _mask(n: int, text: str | None) -> ParabolicMask:
    try:
        return ParabolicMask.parse(n, text)
    except (ValueError, AsmLatticeError) as exc:
        raise UsageError(f"bad --mask {text!r}: {exc}") from None


def label(A: Asm) -> str:
    w = asm_as_permutation(A)
    if w is not None:
        return str(w)
    return "/".join(" ".join(str(x) for x in row) for row in asm_to_monotone_triangle(A).rows)


def cmd_enumerate(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be positive")
    mask = _mask(args.n, args.mask)
    items = enumerate_asm_i(args.n, mask) if mask.members else enumerate_asms(args.n)
    if args.format == "count":
        print(sum(1 for _ in items), file=out)
    elif args.format == "json":
        for A in items:
            print(_dumps(A.to_dict()), file=out)
    else:
        n = args.n
        print(",".join(["index"] + [f"a{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)]),
              file=out)
        for k, A in enumerate(items):
            print(",".join([str(k)] + [str(x) for row in A.rows for x in row]), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    failed = False
    for check in verify.run(args.suite, args.max_n, args.seed):
        failed |= not check.passed
        print(_dumps(check.to_dict()), file=out)
    return EXIT_FAIL if failed else EXIT_OK


def hasse_dot(items: Sequence[Asm], name: str = "hasse") -> str:
    items = list(items)
    ids = {A: k for k, A in enumerate(items)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for A, k in ids.items():
        lines.append(f'  n{k} [label="{label(A)}"];')
    for lo, hi in hasse_covers(items):
        lines.append(f"  n{ids[lo]} -> n{ids[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_hasse(args, out) -> int:
    mask = _mask(args.n, args.mask)
    text = hasse_dot(list(enumerate_asm_i(args.n, mask)))
    if args.dot in (None, "-"):
        out.write(text)
    else:
        with open(args.dot, "w") as fh:
            fh.write(text)
    return EXIT_OK


def _read_doc(fmt: str, doc: dict) -> Asm:
    if fmt == "asm":
        return Asm.from_dict(doc)
    if fmt == "mt":
        return monotone_triangle_to_asm(MonotoneTriangle.from_dict(doc))
    if fmt == "sixvertex":
        return state_to_asm(SixVertexState.from_dict(doc))
    return permutation_to_asm(Permutation.from_dict(doc))


def _write_doc(fmt: str, A: Asm) -> dict:
    if fmt == "asm":
        return A.to_dict()
    if fmt == "mt":
        return asm_to_monotone_triangle(A).to_dict()
    if fmt == "sixvertex":
        return asm_to_state(A).to_dict()
    w = asm_as_permutation(A)
    if w is None:
        return {"error": "NotAPermutation", "asm": A.to_dict()}
    return w.to_dict()


def cmd_convert(args, inp, out) -> int:
    try:
        doc = json.loads(inp.read())
        A = _read_doc(args.source, doc)
    except (ValueError, KeyError, TypeError, AsmLatticeError) as exc:
        print(_dumps({"error": type(exc).__name__, "message": str(exc)}), file=out)
        return EXIT_USAGE
    result = _write_doc(args.target, A)
    print(_dumps(result), file=out)
    return EXIT_USAGE if "error" in result else EXIT_OK


def cmd_complete(args, inp, out) -> int:
    try:
        P = FinitePoset.from_dict(json.loads(inp.read()))
    except (ValueError, KeyError, TypeError, AsmLatticeError) as exc:
        print(_dumps({"error": type(exc).__name__, "message": str(exc)}), file=out)
        return EXIT_USAGE
    L, embed = dm_completion(P)
    labels = ["{" + ",".join(sorted(str(x) for x in cut)) + "}" for cut in L.elements]
    doc = {"elements": labels, "leq_pairs": [list(p) for p in L.covers()],
           "embed": {str(P.elements[i]): k for i, k in embed.items()}}
    print(_dumps(doc), file=out)
    return EXIT_OK


def cmd_count_table(args, out) -> int:
    cases = [(t, n) for t in args.t for n in range(max(t, 1), args.n_max + 1)]
    out.write(count_table_csv(cases))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmlattice", description="Alternating sign matrices and the lattices ASM^I(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count ASM(n) / ASM^I(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mask", default=None, help="comma-separated subset of [n-1], e.g. 2,3")
    p.add_argument("--format", choices=("json", "count", "csv"), default="json")

    p = sub.add_parser("verify", help="run verification suites (JSON lines)")
    p.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("hasse", help="export the Hasse diagram of ASM^I(n) as DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mask", default=None)
    p.add_argument("--dot", default=None, help="output path (default stdout)")

    p = sub.add_parser("convert", help="convert a JSON document between encodings")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", dest="target", choices=FORMATS, required=True)

    sub.add_parser("complete", help="Dedekind-MacNeille completion of a poset read from stdin")

    p = sub.add_parser("count-table", help="CSV of |ASM^{t..n-1}(n)| with closed-form checks")
    p.add_argument("--t", type=_int_list, default=[3, 4])
    p.add_argument("--n-max", type=int, default=8)
    return parser


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args, stdout)
        if args.command == "verify":
            return cmd_verify(args, stdout)
        if args.command == "hasse":
            return cmd_hasse(args, stdout)
        if args.command == "convert":
            return cmd_convert(args, stdin, stdout)
        if args.command == "complete":
            return cmd_complete(args, stdin, stdout)
        return cmd_count_table(args, stdout)
    except ResourceLimit as exc:
        print(f"asmlattice: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, AsmLatticeError) as exc:
        print(f"asmlattice: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
