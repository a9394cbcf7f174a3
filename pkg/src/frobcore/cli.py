"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence, TextIO

from frobcore import cores, hooks, weyl
from frobcore.decomposition import (
    Decomposition,
    decompose,
    durfee_from_decomposition,
    format_charvec,
)
from frobcore.errors import DomainError
from frobcore.partition_core import (
    FrobeniusSymbol,
    conjugate,
    format_partition,
    frobenius_of,
    iter_boxes,
    hooklength,
    parse_partition,
    partition_of,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: error: {message}")


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse ``"0,1,-1,1,-1"`` (parentheses optional)."""
    body = text.strip().strip("()")
    try:
        return tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError as exc:
        raise DomainError(f"cannot parse vector {text!r}") from exc


def parse_quotient(text: str) -> list[tuple[int, ...]]:
    """Parse a quotient list.

    Entries are separated by ``;`` when any entry has several parts and by
    ``,`` otherwise; empty entries are empty partitions.  Outer parentheses
    are optional.  ``"(,,,,2)"`` and ``"1^2;1;1;1;2"`` are both accepted.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    sep = ";" if ";" in body else ","
    return [parse_partition(chunk) for chunk in body.split(sep)]


def format_quotient(parts: Sequence[Sequence[int]]) -> str:
    """Inverse of :func:`parse_quotient`."""
    sep = ";" if any(len(p) > 1 for p in parts) else ","
    return "(" + sep.join(format_partition(p) for p in parts) + ")"


def _symbol_of(text: str) -> FrobeniusSymbol:
    return frobenius_of(parse_partition(text))


def _emit(out: TextIO, args: argparse.Namespace, text: str, payload: Any) -> None:
    if args.json:
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def _decomposition_text(dec: Decomposition) -> str:
    data = dec.to_json()
    return "\n".join(
        [
            f"charvec {format_charvec(dec.charvec)}",
            f"core {data['core']}",
            f"quotient {format_quotient([partition_of(q) for q in dec.quotient])}",
            f"durfee {data['durfee']}",
        ]
    )


# --------------------------------------------------------------------------
# Handlers
# --------------------------------------------------------------------------


def _cmd_frob(args: argparse.Namespace, out: TextIO) -> int:
    f = _symbol_of(args.partition)
    payload = {
        "partition": format_partition(partition_of(f)),
        "symbol": str(f),
        "legs": list(reversed(f.legs)),
        "arms": list(f.arms),
    }
    _emit(out, args, str(f), payload)
    return EXIT_OK


def _cmd_conjugate(args: argparse.Namespace, out: TextIO) -> int:
    f = conjugate(_symbol_of(args.partition))
    text = format_partition(partition_of(f))
    _emit(out, args, text, {"partition": text, "symbol": str(f)})
    return EXIT_OK


def _cmd_decompose(args: argparse.Namespace, out: TextIO) -> int:
    dec = decompose(_symbol_of(args.partition), args.t)
    _emit(out, args, _decomposition_text(dec), dec.to_json())
    return EXIT_OK


def _cmd_reconstruct(args: argparse.Namespace, out: TextIO) -> int:
    c = parse_vector(args.charvec)
    quot = parse_quotient(args.quotient)
    if len(c) != args.t or len(quot) != args.t:
        raise DomainError(f"charvec and quotient must both have {args.t} entries")
    dec = Decomposition(c, tuple(frobenius_of(q) for q in quot))
    f = dec.symbol()
    text = format_partition(partition_of(f))
    _emit(out, args, text, {"partition": text, "symbol": str(f)})
    return EXIT_OK


def _cmd_durfee(args: argparse.Namespace, out: TextIO) -> int:
    f = _symbol_of(args.partition)
    dec = decompose(f, args.t)
    s, alpha, beta = durfee_from_decomposition(dec.charvec, dec.quotient)
    payload = {"durfee": s, "alpha": alpha, "beta": beta}
    _emit(out, args, f"s={s} alpha={alpha} beta={beta}", payload)
    return EXIT_OK


def _cmd_hooks(args: argparse.Namespace, out: TextIO) -> int:
    f = _symbol_of(args.partition)
    if args.divisible_by is None:
        rows = sorted(iter_boxes(f), key=lambda b: b.sort_key())
        payload = [{"label": str(b), "hook": hooklength(f, b)} for b in rows]
        text = "\n".join(f"{p['label']}\t{p['hook']}" for p in payload)
    else:
        t = args.divisible_by
        if t < 1:
            raise DomainError("--divisible-by must be positive")
        dec = decompose(f, t)
        wits = [hooks.olsson_preimage(dec, b) for b, _ in hooks.hooks_divisible_by(f, t)]
        payload = [w.to_json() for w in wits]
        text = "\n".join(
            f"{w.target}\thook={w.hook}\tk={w.k}\tsource=runner {w.runner} {w.source}"
            for w in wits
        )
    _emit(out, args, text, payload)
    return EXIT_OK


def _cmd_weyl(args: argparse.Namespace, out: TextIO) -> int:
    f = weyl.weyl_apply(_symbol_of(args.partition), args.t, args.h, args.gen)
    text = format_partition(partition_of(f))
    _emit(out, args, text, {"partition": text, "symbol": str(f)})
    return EXIT_OK


def _cmd_scopes(args: argparse.Namespace, out: TextIO) -> int:
    ctx = weyl.ScopesContext(args.p, args.w)
    action = args.action
    if action == "ancestors":
        vecs = weyl.ancestors(ctx)
        _emit(out, args, "\n".join(format_charvec(c) for c in vecs), [list(c) for c in vecs])
    elif action in ("count", "finite", "singletons"):
        fn = {
            "count": weyl.count_families,
            "finite": weyl.count_finite_families,
            "singletons": weyl.count_singleton_families,
        }[action]
        n = fn(ctx)
        _emit(out, args, str(n), n)
    else:
        if args.ancestor is None:
            raise UsageError("scopes family requires --ancestor")
        members, closed = weyl.family_members(parse_vector(args.ancestor), ctx, args.cap)
        vecs = sorted(members)
        text = "\n".join(format_charvec(c) for c in vecs) + f"\nclosed: {str(closed).lower()}"
        _emit(out, args, text, {"members": [list(c) for c in vecs], "closed": closed})
    return EXIT_OK


def _cmd_cores(args: argparse.Namespace, out: TextIO) -> int:
    census = cores.enumerate_core_vectors(args.t, args.n, args.self_conjugate)
    if args.action == "count":
        _emit(out, args, str(census.count), census.count)
    else:
        payload = census.to_json()
        text = "\n".join(f"{format_charvec(p['charvec'])}\t{p['partition']}" for p in payload)
        _emit(out, args, text, payload)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.name not in cores.identity_names():
        raise UsageError(
            f"unknown identity {args.name!r}; choose from {', '.join(cores.identity_names())}"
        )
    report = cores.verify_identity(args.name, args.max_n)
    _emit(out, args, report.render(), report.to_json())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_sizes(args: argparse.Namespace, out: TextIO) -> int:
    report = cores.map_size_report(args.map, args.k, args.max_n, corrected=args.corrected)
    payload = {
        "label": report.label,
        "claimed": report.claimed,
        "mismatches": report.mismatches,
        "injective": report.injective,
        "samples": [
            {"input": list(v), "n": n, "image_size": got, "claimed_size": want}
            for v, n, got, want in report.samples
        ],
    }
    _emit(out, args, report.render(), payload)
    return EXIT_OK


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = _Parser(
        prog="frobcore",
        description="Frobenius-symbol tools for partitions, cores and quotients.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frob", parents=[common], help="Frobenius symbol of a partition")
    p.add_argument("partition", help='e.g. "5,5,4,2,1,1" or "5^2,4,2,1^2"')
    p.set_defaults(func=_cmd_frob)

    p = sub.add_parser("conjugate", parents=[common], help="conjugate partition")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_conjugate)

    p = sub.add_parser("decompose", parents=[common], help="characteristic vector, core, quotient")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("partition")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("reconstruct", parents=[common], help="partition from charvec and quotient")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--charvec", required=True, help="e.g. --charvec=0,1,-1,1,-1")
    p.add_argument("--quotient", required=True, help='e.g. "(,,,,2)" or "1^2;1;1;1;2"')
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("durfee", parents=[common], help="Durfee number via the decomposition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("partition")
    p.set_defaults(func=_cmd_durfee)

    p = sub.add_parser("hooks", parents=[common], help="hook lengths by box label")
    p.add_argument("partition")
    p.add_argument("--divisible-by", type=int, default=None, metavar="T")
    p.set_defaults(func=_cmd_hooks)

    p = sub.add_parser("weyl", parents=[common], help="apply a Weyl generator")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--gen", type=int, required=True, metavar="J")
    p.add_argument("partition")
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("scopes", parents=[common], help="Scopes families")
    p.add_argument("action", choices=["ancestors", "count", "finite", "singletons", "family"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--ancestor", default=None, help="start vector for 'family'")
    p.add_argument("--cap", type=int, default=1000)
    p.set_defaults(func=_cmd_scopes)

    p = sub.add_parser("cores", parents=[common], help="enumerate or count t-cores")
    p.add_argument("action", choices=["enumerate", "count"])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--self-conjugate", action="store_true")
    p.set_defaults(func=_cmd_cores)

    p = sub.add_parser("verify", parents=[common], help="check a core-count identity")
    p.add_argument("name", help=", ".join(cores.identity_names()))
    p.add_argument("--max-n", type=int, default=50)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sizes", parents=[common], help="measure image sizes of a core map")
    p.add_argument("map", choices=["psi5", "phi7"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--corrected", action="store_true", help="use the corrected phi7 reading")
    p.set_defaults(func=_cmd_sizes)

    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """Run the CLI and return its exit code."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
