"""Command line interface.

Subcommands mirror the library: info, d2, decompose, reassemble,
preimages, census and classify. Results go to stdout in plain, json or
csv form; diagnostics go to stderr. Exit codes: 0 success, 1 usage
error, 2 invalid input, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .census import LimitExceeded, count_genus, enumerate_genus
from .classify import classify
from .core import NumericalSemigroup, SemigroupError
from .doubling import DoubleCoverDecomposition, d2, decompose, preimages, reassemble

_SEMIGROUP_HEADER = ["generators", "gaps", "genus", "frobenius", "multiplicity"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); remap to a usage failure
        raise _UsageError(message)


def _parse_int_list(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise _UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def _semigroup_from(text: str, as_gaps: bool) -> NumericalSemigroup:
    values = _parse_int_list(text)
    if as_gaps:
        return NumericalSemigroup.from_gaps(values)
    if not values:
        raise _UsageError("at least one generator is required")
    return NumericalSemigroup(values)


def _input_semigroup(args) -> NumericalSemigroup:
    return _semigroup_from(args.input, args.gaps)


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


def _cell(values) -> str:
    return " ".join(str(v) for v in values)


def _semigroup_payload(s: NumericalSemigroup) -> dict:
    return {
        "generators": list(s.minimal_generators),
        "gaps": list(s.gaps),
        "genus": s.genus,
        "frobenius": s.frobenius,
        "multiplicity": s.multiplicity,
    }


def _decomposition_payload(dec: DoubleCoverDecomposition) -> dict:
    return {
        "base": _semigroup_payload(dec.base),
        "n": dec.n,
        "offsets": list(dec.odd_offsets),
        "r": dec.r,
    }


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _csv_writer() -> csv.writer:
    return csv.writer(sys.stdout, lineterminator="\n")


def _semigroup_row(s: NumericalSemigroup) -> list:
    return [_cell(s.minimal_generators), _cell(s.gaps), s.genus, s.frobenius, s.multiplicity]


def _print_semigroup_plain(s: NumericalSemigroup) -> None:
    print(f"generators: {_ints(s.minimal_generators)}")
    print(f"gaps: {_ints(s.gaps)}")
    print(f"genus: {s.genus}")
    print(f"frobenius: {s.frobenius}")
    print(f"multiplicity: {s.multiplicity}")


def _print_semigroup_line(s: NumericalSemigroup) -> None:
    print(
        f"generators={_ints(s.minimal_generators)} gaps={_ints(s.gaps)} "
        f"genus={s.genus} frobenius={s.frobenius} multiplicity={s.multiplicity}"
    )


def _emit_semigroup(s: NumericalSemigroup, fmt: str) -> None:
    if fmt == "json":
        _print_json(_semigroup_payload(s))
    elif fmt == "csv":
        writer = _csv_writer()
        writer.writerow(_SEMIGROUP_HEADER)
        writer.writerow(_semigroup_row(s))
    else:
        _print_semigroup_plain(s)


def _emit_semigroup_list(semigroups, fmt: str) -> None:
    if fmt == "csv":
        writer = _csv_writer()
        writer.writerow(_SEMIGROUP_HEADER)
        for s in semigroups:
            writer.writerow(_semigroup_row(s))
    else:
        for s in semigroups:
            _print_semigroup_line(s)


def _cmd_info(args) -> None:
    s = _input_semigroup(args)
    apery = s.apery_set(s.multiplicity)
    if args.format == "json":
        payload = _semigroup_payload(s)
        payload["apery"] = list(apery)
        _print_json(payload)
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(_SEMIGROUP_HEADER + ["apery"])
        writer.writerow(_semigroup_row(s) + [_cell(apery)])
    else:
        _print_semigroup_plain(s)
        print(f"apery mod {s.multiplicity}: {_ints(apery)}")


def _cmd_d2(args) -> None:
    _emit_semigroup(d2(_input_semigroup(args)), args.format)


def _cmd_decompose(args) -> None:
    dec = decompose(_input_semigroup(args))
    if args.format == "json":
        _print_json(_decomposition_payload(dec))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["base_generators", "base_gaps", "n", "offsets", "r"])
        writer.writerow(
            [_cell(dec.base.minimal_generators), _cell(dec.base.gaps), dec.n, _cell(dec.odd_offsets), dec.r]
        )
    else:
        print(f"base generators: {_ints(dec.base.minimal_generators)}")
        print(f"base gaps: {_ints(dec.base.gaps)}")
        print(f"n: {dec.n}")
        print(f"offsets: {_ints(dec.odd_offsets)}")
        print(f"r: {dec.r}")


def _cmd_reassemble(args) -> None:
    base = _semigroup_from(args.base, args.gaps)
    offsets = _parse_int_list(args.offsets)
    _emit_semigroup(reassemble(base, args.n, offsets), args.format)


def _cmd_preimages(args) -> None:
    base = _input_semigroup(args)
    results = preimages(base, args.max_genus)
    if args.format == "json":
        _print_json(
            {
                "base": _semigroup_payload(base),
                "max_genus": args.max_genus,
                "count": len(results),
                "preimages": [_semigroup_payload(s) for s in results],
            }
        )
    else:
        _emit_semigroup_list(results, args.format)


def _cmd_census(args) -> None:
    ceiling = _env_ceiling()
    if args.count_only:
        count = count_genus(args.genus, ceiling=ceiling)
        if args.format == "json":
            _print_json({"genus": args.genus, "count": count})
        elif args.format == "csv":
            writer = _csv_writer()
            writer.writerow(["genus", "count"])
            writer.writerow([args.genus, count])
        else:
            print(count)
        return
    records = enumerate_genus(args.genus, ceiling=ceiling)
    if args.format == "json":
        _print_json(
            {
                "genus": args.genus,
                "count": len(records),
                "semigroups": [_semigroup_payload(r.semigroup) for r in records],
            }
        )
    else:
        _emit_semigroup_list([r.semigroup for r in records], args.format)


def _cmd_classify(args) -> None:
    result = classify(_input_semigroup(args))
    witness = result.witness
    if args.format == "json":
        _print_json(
            {
                "verdict": result.verdict.value,
                "provenance": result.provenance,
                "witness": None if witness is None else _decomposition_payload(witness),
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(
            ["verdict", "provenance", "witness_base_generators", "witness_n", "witness_offsets", "witness_r"]
        )
        if witness is None:
            writer.writerow([result.verdict.value, result.provenance, "", "", "", ""])
        else:
            writer.writerow(
                [
                    result.verdict.value,
                    result.provenance,
                    _cell(witness.base.minimal_generators),
                    witness.n,
                    _cell(witness.odd_offsets),
                    witness.r,
                ]
            )
    else:
        print(f"verdict: {result.verdict.value}")
        print(f"provenance: {result.provenance}")
        if witness is not None:
            print(f"witness base generators: {_ints(witness.base.minimal_generators)}")
            print(f"witness base gaps: {_ints(witness.base.gaps)}")
            print(f"witness n: {witness.n}")
            print(f"witness offsets: {_ints(witness.odd_offsets)}")
            print(f"witness r: {witness.r}")


def _env_ceiling() -> int | None:
    raw = os.environ.get("SEMIGROUP_GENUS_CEILING")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"SEMIGROUP_GENUS_CEILING must be an integer, got {raw!r}") from None


_HANDLERS = {
    "info": _cmd_info,
    "d2": _cmd_d2,
    "decompose": _cmd_decompose,
    "reassemble": _cmd_reassemble,
    "preimages": _cmd_preimages,
    "census": _cmd_census,
    "classify": _cmd_classify,
}


def _build_parser() -> _Parser:
    parser = _Parser(prog="numsgps", description="Numerical semigroup computations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain", help="output format"
    )
    input_parent = argparse.ArgumentParser(add_help=False)
    input_parent.add_argument(
        "input", metavar="GENERATORS", help="comma separated positive integers"
    )
    input_parent.add_argument(
        "--gaps", action="store_true", help="treat the input as a gap list instead of generators"
    )

    sub.add_parser(
        "info",
        parents=[input_parent, fmt_parent],
        help="gaps, genus, Frobenius number, multiplicity, Apery set and minimal generators",
    )
    sub.add_parser("d2", parents=[input_parent, fmt_parent], help="halve the semigroup")
    sub.add_parser(
        "decompose",
        parents=[input_parent, fmt_parent],
        help="write the semigroup as 2*base + <n, n+2*l, ...>",
    )

    p = sub.add_parser("reassemble", parents=[fmt_parent], help="rebuild 2*base + <n, n+2*l, ...>")
    p.add_argument("--base", required=True, metavar="GENERATORS", help="base semigroup generators")
    p.add_argument("--gaps", action="store_true", help="treat --base as a gap list")
    p.add_argument("--n", dest="n", required=True, type=int, help="least odd element")
    p.add_argument("--offsets", default="", metavar="LIST", help="odd offsets l1,l2,...")

    p = sub.add_parser(
        "preimages", parents=[input_parent, fmt_parent], help="all semigroups halving to the input"
    )
    p.add_argument("--max-genus", dest="max_genus", required=True, type=int, help="genus bound")

    p = sub.add_parser("census", parents=[fmt_parent], help="all semigroups of one genus")
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--count-only", dest="count_only", action="store_true", help="print only the count")

    sub.add_parser(
        "classify",
        parents=[input_parent, fmt_parent],
        help="decide the double-covering-type property",
    )
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv``, execute one subcommand and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _HANDLERS[args.command](args)
        return 0
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return exc.code if isinstance(exc.code, int) else 0
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SemigroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
