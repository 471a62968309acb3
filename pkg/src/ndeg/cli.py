"""Command-line entry point.

Exit codes: 0 realizable / success, 1 not realizable, 2 unknown,
64 usage error, 65 malformed input, 66 unreadable file.  Errors print a
single ``error: <kind>: <message>`` line on stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import census, maxndeg, maxndeg_open, minndeg, oracle
from .graphcore import Graph, GraphError, Mode, parse_edgelist, profile_of, serialize, verify
from .profile import Profile, ProfileError, parse_profile

EXIT_OK, EXIT_NO, EXIT_UNKNOWN = 0, 1, 2
EXIT_USAGE, EXIT_DATA, EXIT_IO = 64, 65, 66


class CliError(Exception):
    def __init__(self, code: int, kind: str, message: str):
        super().__init__(message)
        self.code, self.kind = code, kind


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise CliError(EXIT_USAGE, "usage", message)


def _profile(text: str) -> Profile:
    try:
        return parse_profile(text)
    except ProfileError as exc:
        raise CliError(EXIT_DATA, "profile", str(exc)) from None


def _graph(path: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(EXIT_IO, "io", f"{path}: {exc.strerror}") from None
    try:
        return parse_edgelist(text)
    except GraphError as exc:
        raise CliError(EXIT_DATA, "graph", str(exc)) from None


def _say(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _verdict(ok: bool) -> int:
    print(f"verdict: {'realizable' if ok else 'not-realizable'}")
    return EXIT_OK if ok else EXIT_NO


def _max_closed_lines(p: Profile, connected: bool) -> tuple[list[str], bool]:
    q = p.stripped()
    if q.ell == 0:
        return ["no positive demands"], not connected
    d_top, n_top = q.blocks[0]
    d1, n1 = q.degrees[0], q.counts[0]
    if connected:
        if q == Profile(((1, 2),)):
            return ["special case (1^2): single edge"], True
        lines = [f"n_l >= d_l+1: {'ok' if n_top >= d_top + 1 else 'FAIL'}",
                 f"d_1 >= 2: {'ok' if d1 >= 2 else 'FAIL'}"]
        return lines, maxndeg.check_connected_closed(p)
    lines = [f"d_l <= n_l-1: {'ok' if d_top <= n_top - 1 else 'FAIL'}",
             f"d_1 >= 2 or n_1 even: {'ok' if d1 >= 2 or n1 % 2 == 0 else 'FAIL'}"]
    return lines, maxndeg.check_general_closed(p)


def _max_open_lines(p: Profile, connected: bool) -> tuple[list[str], bool]:
    if connected:
        return maxndeg_open.explain_connected_open(p), maxndeg_open.check_connected_open(p)
    split = maxndeg_open.find_open_split(p)
    if split is None:
        lines = ["no split into a connected part plus edges/star"]
        lines += [f"as one component: {s}" for s in maxndeg_open.explain_connected_open(p)]
        return lines, False
    rest, part = split
    return [f"split: connected part ({rest}) + edges/star ({part})"], True


def cmd_check(args) -> int:
    p = _profile(args.profile)
    if args.mode is Mode.MIN_CLOSED:
        if p.stripped().ell == 0:
            print("no positive demands")
            return _verdict(True)
        rep = minndeg.check(p)
        _say(rep.lines())
        return {minndeg.Verdict.REALIZABLE: EXIT_OK, minndeg.Verdict.NOT_REALIZABLE: EXIT_NO,
                minndeg.Verdict.UNKNOWN: EXIT_UNKNOWN}[rep.verdict]
    lines, ok = (_max_closed_lines if args.mode is Mode.MAX_CLOSED else _max_open_lines)(p, args.connected)
    _say(lines)
    return _verdict(ok)


def _refuse(p: Profile, lines: list[str]) -> int:
    reason = "; ".join(line for line in lines if "FAIL" in line or "excluded" in line
                       or "no split" in line or "isolated" in line) or "; ".join(lines)
    print(f"not-realizable: {p}: {reason}", file=sys.stderr)
    return EXIT_NO


def cmd_realize(args) -> int:
    p = _profile(args.profile)
    if args.mode is Mode.MIN_CLOSED:
        if p.stripped().ell == 0:
            g = Graph(p.n)
        else:
            rep = minndeg.check(p)
            if rep.verdict is minndeg.Verdict.NOT_REALIZABLE:
                return _refuse(p, rep.lines())
            if rep.verdict is minndeg.Verdict.UNKNOWN:
                print(f"unknown: {p}: between the necessary and sufficient conditions", file=sys.stderr)
                return EXIT_UNKNOWN
            try:
                g = minndeg.realize(p).graph
            except minndeg.ConstructionError as exc:
                print(f"unknown: {p}: {exc}", file=sys.stderr)
                return EXIT_UNKNOWN
    elif args.mode is Mode.MAX_CLOSED:
        lines, ok = _max_closed_lines(p, args.connected)
        if not ok:
            return _refuse(p, lines)
        build = maxndeg.build_connected_closed if args.connected else maxndeg.build_general_closed
        g = build(p).graph
    else:
        lines, ok = _max_open_lines(p, args.connected)
        if not ok:
            return _refuse(p, lines)
        build = maxndeg_open.build_connected_open if args.connected else maxndeg_open.build_general_open
        g = build(p).graph
    sys.stdout.write(serialize(g, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _graph(args.graph)
    p = _profile(args.profile)
    ok = verify(g, p, args.mode, args.connected)
    print("ok" if ok else "mismatch")
    return EXIT_OK if ok else EXIT_NO


def cmd_profile_of(args) -> int:
    g = _graph(args.graph)
    try:
        print(profile_of(g, args.mode))
    except GraphError as exc:
        raise CliError(EXIT_DATA, "graph", str(exc)) from None
    return EXIT_OK


def _family(text: str) -> census.Family:
    try:
        return census.Family.parse(text)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "usage", str(exc)) from None


def cmd_count(args) -> int:
    try:
        print(census.count(args.n, _family(args.family)))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "usage", str(exc)) from None
    return EXIT_OK


def cmd_enumerate(args) -> int:
    fam = _family(args.family)
    if fam in (census.Family.OGENL, census.Family.OGENU):
        raise CliError(EXIT_USAGE, "usage", f"{fam.value} is a bound, not a listable family")
    try:
        for p in census.enumerate_profiles(args.n, fam):
            print(p)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "usage", str(exc)) from None
    return EXIT_OK


def cmd_sample(args) -> int:
    fam = _family(args.family)
    if fam not in census.LISTABLE:
        raise CliError(EXIT_USAGE, "usage", f"sampling supports {', '.join(f.value for f in census.LISTABLE)}")
    rng = random.Random(args.seed)
    try:
        for _ in range(args.draws):
            print(census.sample(args.n, fam, rng))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, "usage", str(exc)) from None
    return EXIT_OK


def cmd_oracle(args) -> int:
    p = _profile(args.profile)
    try:
        q = oracle.OracleQuery(p, args.mode, args.connected, args.n_limit)
        g = oracle.oracle_realizable(q)
    except oracle.OracleLimitError as exc:
        raise CliError(EXIT_USAGE, "limit", str(exc)) from None
    if g is None:
        print("verdict: not-realizable")
        return EXIT_NO
    print("verdict: realizable")
    sys.stdout.write(serialize(g, args.format))
    return EXIT_OK


def _mode(text: str) -> Mode:
    try:
        return Mode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", type=_mode, default=Mode.MAX_CLOSED,
                        help="min-closed, max-closed (default) or max-open")
    common.add_argument("--connected", action="store_true", help="require a connected realization")
    common.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")

    parser = _Parser(prog="ndeg", description="Neighborhood degree profile realization.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="report conditions and verdict")
    p.add_argument("profile")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", parents=[common], help="construct a witness graph")
    p.add_argument("profile")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", parents=[common], help="check a graph against a profile")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.add_argument("profile")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile-of", parents=[common], help="print the profile of a graph")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_profile_of)

    for name, func in (("count", cmd_count), ("enumerate", cmd_enumerate)):
        p = sub.add_parser(name, help=f"{name} realizable profiles")
        p.add_argument("n", type=int)
        p.add_argument("family", help="CCon, OCon, CGen, OGenL, OGenU or OGenExact")
        p.set_defaults(func=func)

    p = sub.add_parser("sample", help="uniformly sample realizable profiles")
    p.add_argument("n", type=int)
    p.add_argument("family", help="CCon, OCon or CGen")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--draws", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive search over small graphs")
    p.add_argument("profile")
    p.add_argument("--n-limit", type=int, default=oracle.DEFAULT_LIMIT)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command in ("check", "realize") and args.connected and args.mode is Mode.MIN_CLOSED:
            raise CliError(EXIT_USAGE, "usage", "--connected is not supported with --mode min-closed")
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc.kind}: {exc}", file=sys.stderr)
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
