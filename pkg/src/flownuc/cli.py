"""Command-line interface.

Exit codes are part of the contract: 0 all requested checks pass, 1 any
certificate fails or a reproduction mismatch, 2 malformed input, 3 an
enumeration limit refused the job.  All numbers print as canonical ``p/q``
(integers without the ``/1``); ``--decimals K`` adds a rounded display line,
never used in comparisons.  Output is deterministic byte-for-byte for
identical inputs and flags.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import catalog, flow, game, logic, solver
from .errors import InputError, LimitError
from .game import TUGame, coalition_str
from .rational import Rational, decimal_string, format_rational

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunReport:
    """Deterministic report: input digests, result lines, exit status."""

    command: str
    inputs: list[tuple[str, str]] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    failed: bool = False

    def note_input(self, label: str, path: str | Path) -> None:
        digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        self.inputs.append((label, f"{path} sha256={digest}"))

    def add(self, text: str = "") -> None:
        self.lines.append(text)

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        self.lines.append(f"{label}: {status}{suffix}")
        if not ok:
            self.failed = True
        return ok

    def render(self) -> str:
        head = [f"# command: {self.command}"]
        head += [f"# {label}: {text}" for label, text in self.inputs]
        tail = [f"result: {'FAIL' if self.failed else 'PASS'}"]
        return "\n".join(head + self.lines + tail)

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.failed else EXIT_OK


def _max_players() -> int:
    env = os.environ.get("FLOWNUC_MAX_PLAYERS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"FLOWNUC_MAX_PLAYERS must be an integer, got {env!r}") from None
    return 20


def _load_game_arg(args) -> TUGame:
    if getattr(args, "network", None):
        net = flow.load_network(args.network)
        return flow.build_flow_game(net, max_players=_max_players(), jobs=args.jobs)
    return game.load_game(args.game, max_players=_max_players())


def _payoff_line(x: Sequence[Rational]) -> str:
    return " ".join(format_rational(v) for v in x)


def cmd_convert(args) -> int:
    net = flow.load_network(args.network)
    g = flow.build_flow_game(net, max_players=_max_players(), jobs=args.jobs)
    payload = json.dumps(game.game_to_dict(g), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
        print(f"wrote {args.out}: {g.n} players, {(1 << g.n) - 1} coalition values")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_game_arg(args)
    result = solver.solve(g, args.method)
    print(_payoff_line(result.allocation))
    if args.decimals is not None:
        print(" ".join(decimal_string(v, args.decimals) for v in result.allocation))
    if args.out:
        game.save_allocation(result.allocation, args.out)
    return EXIT_OK


CHECK_NAMES = ("core", "kohlberg", "kernel", "imputation")


def cmd_verify(args) -> int:
    report = RunReport("verify")
    if args.network:
        report.note_input("network", args.network)
    else:
        report.note_input("game", args.game)
    report.note_input("solution", args.solution)
    g = _load_game_arg(args)
    x = game.load_allocation(args.solution, n=g.n)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    for c in checks:
        if c not in CHECK_NAMES:
            raise InputError(f"unknown check {c!r}; pick from {', '.join(CHECK_NAMES)}")
    for c in checks:
        if c == "imputation":
            imp = game.check_imputation(g, x)
            report.check(
                "imputation",
                imp.efficient and imp.individually_rational,
                f"efficient={str(imp.efficient).lower()} individually-rational={str(imp.individually_rational).lower()}",
            )
        elif c == "core":
            blockers = game.blocking_coalitions(g, x)
            efficient = game.check_imputation(g, x).efficient
            if blockers:
                top_mask, top_excess = blockers[0]
                detail = (
                    f"{len(blockers)} blocking coalitions; max excess "
                    f"{format_rational(top_excess)} by {coalition_str(top_mask)}"
                )
            elif not efficient:
                detail = "no blocking coalitions but not efficient"
            else:
                detail = "no blocking coalitions"
            report.check("core", efficient and not blockers, detail)
        elif c == "kohlberg":
            try:
                kreport = solver.kohlberg_verify(g, x, args.mode)
            except InputError as exc:
                report.check("kohlberg", False, str(exc))
                continue
            if kreport.verdict:
                report.check("kohlberg", True, f"{len(kreport.levels)} levels balanced")
            else:
                level = kreport.levels[kreport.first_failing]
                report.check("kohlberg", False, solver.describe_level(level))
        elif c == "kernel":
            kr = solver.kernel_checks(g, x)
            detail = f"prekernel={str(kr.prekernel).lower()} kernel={str(kr.kernel).lower()}"
            if kr.witnesses:
                i, j, sij, sji = kr.witnesses[0]
                detail += (
                    f"; s({i},{j})={format_rational(sij)} != s({j},{i})={format_rational(sji)}"
                )
            report.check("kernel", kr.kernel, detail)
    print(report.render())
    return report.exit_code


def cmd_cuts(args) -> int:
    report = RunReport("cuts")
    report.note_input("network", args.network)
    net = flow.load_network(args.network)
    cuts = flow.enumerate_min_cuts(net)
    report.add(f"max-flow: {format_rational(flow.max_flow(net))}")
    report.add(f"minimum cuts: {len(cuts)}")
    order = {e.id: k for k, e in enumerate(net.edges)}
    for k, cut in enumerate(cuts, start=1):
        ids = sorted(cut, key=order.get)
        cap = sum((e.capacity for e in net.edges if e.id in cut), Rational(0))
        report.add(f"cut {k}: {' '.join(ids)} (capacity {format_rational(cap)})")
        report.add(f"  allocation: {_payoff_line(flow.cut_allocation(net, cut))}")
    print(report.render())
    return report.exit_code


def cmd_props(args) -> int:
    report = RunReport("props")
    if args.network:
        report.note_input("network", args.network)
    else:
        report.note_input("game", args.game)
    g = _load_game_arg(args)
    zm, witness = game.is_zero_monotonic(g)
    detail = "" if zm else f"violated by {coalition_str(witness[0])} + player {witness[1]}"
    report.check("zero-monotonic", zm, detail)
    bad = None
    for members in range(1, 1 << g.n):
        ok, _ = game.core_nonempty(game.subgame(g, members))
        if not ok:
            bad = members
            break
    report.check(
        "totally-balanced",
        bad is None,
        f"{(1 << g.n) - 1} subgames checked" if bad is None else f"empty core in subgame {coalition_str(bad)}",
    )
    print(report.render())
    return report.exit_code


def cmd_logic_tables(args) -> int:
    print(logic.render_table(logic.FIRST_TABLE))
    print()
    print(logic.render_table(logic.SECOND_TABLE))
    print()
    print("equivalences:")
    failed = False
    for lhs, rhs in logic.REFERENCE_EQUIVALENCES:
        same, _ = logic.equivalent(logic.parse_formula(lhs), logic.parse_formula(rhs))
        failed = failed or not same
        print(f"({lhs}) == ({rhs}): {'true' if same else 'FALSE'}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_report_paper(args) -> int:
    report = RunReport("audit-report")
    report.note_input("network", args.network)
    net = flow.load_network(args.network)
    g = flow.build_flow_game(net, max_players=_max_players(), jobs=args.jobs)
    claimed = catalog.ten_player_claimed_solution()
    expected_nu = catalog.ten_player_nucleolus()
    team = game.coalition_of((1, 4, 5, 8, 10))

    full = g.grand_coalition
    report.check("grand coalition value 4", g.worth[full] == 4)
    report.check("coalition {1,4,5,8,10} value 2", g.worth[team] == 2)

    cuts = flow.enumerate_min_cuts(net)
    want = [frozenset({"f4", "f6", "f10"}), frozenset({"f4", "f5", "f6", "f7"})]
    report.check(
        "exactly two minimum cuts {f4,f5,f6,f7} and {f4,f6,f10}",
        sorted(cuts, key=sorted) == sorted(want, key=sorted),
    )
    order = {e.id: k for k, e in enumerate(net.edges)}
    report.check(
        "both cuts have capacity 4",
        all(sum((net.edges[order[i]].capacity for i in cut), Rational(0)) == 4 for cut in cuts),
    )
    report.check(
        "cut allocations are core points",
        all(not game.blocking_coalitions(g, flow.cut_allocation(net, cut)) for cut in cuts),
    )

    report.check("claimed solution is efficient", game.check_imputation(g, claimed).efficient)
    report.check(
        "claimed solution blocked by {1,4,5,8,10} with excess 1/5",
        game.excess(g, claimed, team) == Rational(1, 5),
    )
    blockers = game.blocking_coalitions(g, claimed)
    report.check("claimed solution has exactly 10 blocking coalitions", len(blockers) == 10)
    kreport = solver.kohlberg_verify(g, claimed, solver.NUCLEOLUS)
    report.check("claimed solution fails the balanced-collection criterion", not kreport.verdict)
    kr = solver.kernel_checks(g, claimed)
    report.check("claimed solution is not a pre-kernel point", not kr.prekernel)
    report.check("claimed solution is not a kernel point", not kr.kernel)

    zm, _ = game.is_zero_monotonic(g)
    report.check("game is zero-monotonic", zm)

    result = solver.solve(g, solver.NUCLEOLUS)
    report.check(
        f"nucleolus is {_payoff_line(expected_nu)}",
        result.allocation == expected_nu,
    )
    report.check("nucleolus excess of {1,4,5,8,10} is -1/3", game.excess(g, result.allocation, team) == Rational(-1, 3))
    report.check("nucleolus passes the balanced-collection criterion", result.verified)
    nkr = solver.kernel_checks(g, result.allocation)
    report.check("nucleolus is a kernel point", nkr.prekernel and nkr.kernel)
    report.check("nucleolus has no blocking coalitions", not game.blocking_coalitions(g, result.allocation))
    report.check(
        "prenucleolus coincides with the nucleolus",
        solver.solve(g, solver.PRENUCLEOLUS).allocation == result.allocation,
    )
    bad = None
    for members in range(1, 1 << g.n):
        ok, _ = game.core_nonempty(game.subgame(g, members))
        if not ok:
            bad = members
            break
    report.check("every nonempty subgame has a nonempty core", bad is None)
    print(report.render())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flownuc",
        description="Exact cooperative-game tools: flow games, nucleolus, certification.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="concurrent coalition evaluations")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_game_source(p, network_only=False):
        p.add_argument("--network", help="owned-edge network JSON")
        if not network_only:
            p.add_argument("--game", help="TU game JSON")

    p = sub.add_parser("convert", help="build the TU game induced by a network")
    p.add_argument("--network", required=True)
    p.add_argument("--out", help="game JSON destination (stdout if omitted)")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("solve", help="compute the (pre-)nucleolus")
    add_game_source(p)
    p.add_argument("--method", choices=(solver.NUCLEOLUS, solver.PRENUCLEOLUS), default=solver.NUCLEOLUS)
    p.add_argument("--out", help="write the solution JSON here")
    p.add_argument("--decimals", type=int, help="extra display line with K decimal places")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="audit a proposed solution")
    add_game_source(p)
    p.add_argument("--solution", required=True)
    p.add_argument("--checks", default="imputation,core,kohlberg,kernel")
    p.add_argument("--mode", choices=(solver.NUCLEOLUS, solver.PRENUCLEOLUS), default=solver.NUCLEOLUS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cuts", help="enumerate minimum cuts and their allocations")
    p.add_argument("--network", required=True)
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("props", help="zero-monotonicity and total balancedness")
    add_game_source(p)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("logic-tables", help="print the reference truth tables")
    p.set_defaults(func=cmd_logic_tables)

    p = sub.add_parser("report-paper", help="regenerate every audited number from the bundled instance")
    p.add_argument("--network", default="examples/flow10.json")
    p.set_defaults(func=cmd_report_paper)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "network", None) is None and getattr(args, "game", None) is None:
        if args.subcommand in ("solve", "verify", "props"):
            parser.error(f"{args.subcommand} needs --network or --game")
    if getattr(args, "network", None) and getattr(args, "game", None):
        parser.error("give either --network or --game, not both")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
