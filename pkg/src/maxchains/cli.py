"""Command-line front end.

Multisets are comma-separated positive integers; ``vxk`` stands for ``k``
copies of ``v`` (``5x2`` is ``5,5``). Exit status: 0 success, 1 semantic
failure (mismatch, rejection, exhausted budget, no sums form), 2 malformed
input.
"""

from __future__ import annotations

import argparse
import sys

from . import certificate as cert_mod
from .bounds import exact_bounds
from .constructions import as_shifted_sums, sums_construction, trivial_construction
from .errors import InvalidProfileError, ParseError, PosetError
from .poset import format_poset, parse_poset, to_dot
from .profile import ChainProfile, max_chain, profile_enumerate, profile_matrix
from .search import DEFAULT_CLASS_BUDGET, minimal_poset

MULTISET_HELP = "comma-separated positive integers; 'vxk' means k copies of v, e.g. 2,3x2,5x2"


class InputError(Exception):
    """Malformed user input; reported with exit status 2."""


def _profile_arg(text: str) -> ChainProfile:
    try:
        s = ChainProfile.parse(text)
    except (ParseError, InvalidProfileError) as exc:
        raise InputError(f"bad multiset {text!r}: {exc}") from None
    if s.n == 0:
        raise InputError("multiset must be nonempty")
    return s


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _read_poset(path: str):
    text = _read(path)
    try:
        return parse_poset(text)
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    except PosetError as exc:
        raise InputError(f"{path}: invalid Hasse diagram: {exc}") from None


def _emit(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def cmd_profile(args) -> int:
    p = _read_poset(args.poset)
    if p.n == 0:
        raise InputError("poset has no elements")
    if args.method == "matrix":
        result = profile_matrix(p)
    elif args.method == "enumerate":
        result = profile_enumerate(p)
    else:
        result = profile_matrix(p)
        other = profile_enumerate(p)
        if other != result:
            print(f"mismatch: matrix {result} enumerate {other}", file=sys.stderr)
            return 1
    print(result)
    return 0


def cmd_bounds(args) -> int:
    print(exact_bounds(_profile_arg(args.multiset)))
    return 0


def cmd_construct(args) -> int:
    s = _profile_arg(args.multiset)
    if args.kind == "trivial":
        p = trivial_construction(s)
    else:
        d = as_shifted_sums(s)
        if d is None:
            print(f"{s} is not a shifted subset-sums profile", file=sys.stderr)
            return 1
        p = sums_construction(d)
    _emit(format_poset(p), args.output)
    return 0


def cmd_search(args) -> int:
    s = _profile_arg(args.multiset)
    try:
        result = minimal_poset(s, args.size_cap, args.class_budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    size = result.size if result.size is not None else "-"
    print(f"status={result.status} size={size} classes={result.explored} ceiling_used={str(result.ceiling_used).lower()}")
    if not result.exact:
        return 1
    if args.output:
        _emit(format_poset(result.witness), args.output)
    else:
        sys.stdout.write(format_poset(result.witness))
    return 0


def cmd_compress(args) -> int:
    p = _read_poset(args.poset)
    if p.n == 0:
        raise InputError("poset has no elements")
    _emit(cert_mod.format_certificate(cert_mod.compress(p, max_chain(p))), args.output)
    return 0


def cmd_verify(args) -> int:
    text = _read(args.cert)
    try:
        cert = cert_mod.parse_certificate(text)
    except ParseError as exc:
        raise InputError(f"{args.cert}: {exc}") from None
    s = _profile_arg(args.multiset)
    ok, reason = cert_mod.check(cert, s, args.t)
    if ok:
        print("verified")
        return 0
    print(f"rejected: {reason}", file=sys.stderr)
    return 1


def cmd_export_dot(args) -> int:
    _emit(to_dot(_read_poset(args.poset)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxchains",
        description="Posets with a prescribed multiset of maximal-chain cardinalities.",
        epilog=f"Multisets: {MULTISET_HELP}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="print the maximal-chain profile of a poset file")
    p.add_argument("poset", help="poset v1 file ('-' for stdin)")
    p.add_argument("--method", choices=("matrix", "enumerate", "both"), default="matrix")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("bounds", help="lower/upper bounds and exact value when known")
    p.add_argument("multiset", help=MULTISET_HELP)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="write a witness poset")
    p.add_argument("kind", choices=("trivial", "sums"))
    p.add_argument("multiset", help=MULTISET_HELP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", help="exhaustive search for a minimum-size witness")
    p.add_argument("multiset", help=MULTISET_HELP)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--class-budget", type=int, default=DEFAULT_CLASS_BUDGET)
    p.add_argument("-o", "--output", help="write the witness here instead of stdout")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("compress", help="write a compressed certificate for a poset file")
    p.add_argument("poset")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("verify", help="check a certificate against a profile and size claim")
    p.add_argument("cert")
    p.add_argument("multiset", help=MULTISET_HELP)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="write the Hasse diagram as Graphviz DOT")
    p.add_argument("poset")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
