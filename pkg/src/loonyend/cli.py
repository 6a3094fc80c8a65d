"""Command-line front door.

Subcommands::

    loonyend value POS [--json] [--trace] [--oracle]
    loonyend move POS [--json] [--all]
    loonyend line POS [--json]
    loonyend check [--max-components N] [--chain-max N] [--loop-max N] [--json]
    loonyend serve [--host H] [--port P]

Exit codes: 0 success, 2 usage or domain error, 3 verification failure
(solver and oracle disagree).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import solver
from .analysis import analyze_game
from .model import (
    Endgame,
    EndgameError,
    Player,
    chain,
    component_from_token,
    format_position,
    loop,
    parse_position,
)
from .oracle import SEARCH_BOX_CAP, Oracle
from .session import self_play

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

CHECK_MAX_COMPONENTS_CAP = 6
CHECK_CHAIN_MAX_CAP = 12
CHECK_LOOP_MAX_CAP = 12


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _parse_or_none(text: str) -> Endgame | None:
    try:
        return parse_position(text)
    except EndgameError as exc:
        _fail(str(exc))
        return None


def _emit(record: dict, as_json: bool, human_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record))
    else:
        for line in human_lines:
            print(line)


def cmd_value(args: argparse.Namespace) -> int:
    game = _parse_or_none(args.position)
    if game is None:
        return EXIT_USAGE
    try:
        record = analyze_game(game)
    except EndgameError as exc:
        return _fail(str(exc))
    if "oracleFallback" in record:
        # the value command is the solver's surface; odd loops are refused
        return _fail(solver.ODD_LOOP_MESSAGE)
    status = EXIT_OK
    oracle_note = None
    if args.oracle:
        if game.total_boxes > SEARCH_BOX_CAP:
            return _fail(
                f"position has {game.total_boxes} boxes; --oracle is capped "
                f"at {SEARCH_BOX_CAP}"
            )
        oracle = Oracle()
        oracle_value = oracle.value(game)
        agrees = oracle_value == record["value"]
        if agrees and not game.is_empty:
            agrees = (
                component_from_token(record["advisedOpen"])
                in oracle.optimal_opens(game)
            )
        record["oracleAgrees"] = agrees
        oracle_note = f"oracle: {'agrees' if agrees else 'DISAGREES'} (value {oracle_value})"
        if not agrees:
            status = EXIT_MISMATCH
    lines = [
        f"position: {record['position']}",
        f"value: {record['value']}",
        f"cv: {record['cv']} (fcv {record['fcv']} + tb {record['tb']})",
    ]
    if record["advisedOpen"] is not None:
        lines.append(f"advised open: {record['advisedOpen']} ({record['rule']})")
    if args.trace:
        lines.extend(f"trace: {entry}" for entry in record["trace"])
    if oracle_note is not None:
        lines.append(oracle_note)
    _emit(record, args.json, lines)
    return status


def cmd_move(args: argparse.Namespace) -> int:
    game = _parse_or_none(args.position)
    if game is None:
        return EXIT_USAGE
    if game.is_empty:
        return _fail("no move exists in the empty game")
    try:
        advice = solver.best_open(game)
    except EndgameError as exc:
        return _fail(str(exc))
    record = {
        "position": format_position(game),
        "advisedOpen": advice.open.token,
        "moveValue": advice.move_value,
        "rule": advice.rule,
    }
    lines = [
        f"position: {record['position']}",
        f"open: {advice.open.token} (value {advice.move_value}, rule {advice.rule})",
    ]
    if args.all:
        if game.total_boxes > SEARCH_BOX_CAP:
            return _fail(
                f"position has {game.total_boxes} boxes; --all is capped "
                f"at {SEARCH_BOX_CAP}"
            )
        optimal = sorted(
            (component.token for component in Oracle().optimal_opens(game)),
        )
        record["oracleOptimal"] = optimal
        lines.append("all optimal opens: " + ", ".join(optimal))
    _emit(record, args.json, lines)
    return EXIT_OK


def cmd_line(args: argparse.Namespace) -> int:
    game = _parse_or_none(args.position)
    if game is None:
        return EXIT_USAGE
    if not game.is_simple and game.total_boxes > SEARCH_BOX_CAP:
        return _fail(
            f"odd-loop position with {game.total_boxes} boxes exceeds "
            f"the {SEARCH_BOX_CAP}-box oracle cap"
        )
    final = self_play(game, Player.A)
    margin = final.margin(Player.B)
    steps = []
    score_a = score_b = 0
    for entry in final.history:
        score_a += entry.score_a_delta
        score_b += entry.score_b_delta
        steps.append(
            {
                "actor": entry.actor.value,
                "action": entry.action,
                "scoreA": score_a,
                "scoreB": score_b,
            }
        )
    record = {
        "position": format_position(game),
        "steps": steps,
        "scoreA": final.score_a,
        "scoreB": final.score_b,
        "margin": margin,
    }
    lines = [f"position: {record['position']}"]
    lines.extend(
        f"  {step['actor']}: {step['action']}  ({step['scoreA']}-{step['scoreB']})"
        for step in steps
    )
    lines.append(
        f"final: {final.score_b}-{final.score_a} to B (margin {margin} for the non-opener)"
    )
    _emit(record, args.json, lines)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if not 0 <= args.max_components <= CHECK_MAX_COMPONENTS_CAP:
        return _fail(f"--max-components must be within 0..{CHECK_MAX_COMPONENTS_CAP}")
    if args.chain_max > CHECK_CHAIN_MAX_CAP:
        return _fail(f"--chain-max must be <= {CHECK_CHAIN_MAX_CAP}")
    if args.loop_max > CHECK_LOOP_MAX_CAP:
        return _fail(f"--loop-max must be <= {CHECK_LOOP_MAX_CAP}")
    types = [chain(n) for n in range(3, args.chain_max + 1)]
    types += [loop(n) for n in range(4, args.loop_max + 1, 2)]
    oracle = Oracle()
    checked = 0
    for size in range(args.max_components + 1):
        for combo in itertools.combinations_with_replacement(types, size):
            game = Endgame.from_components(combo)
            checked += 1
            expected = oracle.value(game)
            got = solver.value(game).value
            if got != expected:
                print(
                    f"MISMATCH value({format_position(game)}): "
                    f"solver {got}, oracle {expected}",
                    file=sys.stderr,
                )
                return EXIT_MISMATCH
            if game.is_empty:
                continue
            advice = solver.best_open(game)
            optimal = oracle.optimal_opens(game)
            if advice.open not in optimal:
                print(
                    f"MISMATCH move({format_position(game)}): solver opens "
                    f"{advice.open.token}, oracle argmin "
                    f"{{{', '.join(sorted(c.token for c in optimal))}}}",
                    file=sys.stderr,
                )
                return EXIT_MISMATCH
    record = {"checked": checked, "agree": True}
    _emit(record, args.json, [f"checked {checked} positions: all agree"])
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loonyend",
        description="Exact values and optimal moves for simple loony "
        "dots-and-boxes endgames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    value_p = sub.add_parser("value", help="value and cv breakdown of a position")
    value_p.add_argument("position")
    value_p.add_argument("--json", action="store_true")
    value_p.add_argument("--trace", action="store_true",
                         help="show which rules fired")
    value_p.add_argument("--oracle", action="store_true",
                         help="cross-check against the exhaustive search")
    value_p.set_defaults(func=cmd_value)

    move_p = sub.add_parser("move", help="an optimal component to open")
    move_p.add_argument("position")
    move_p.add_argument("--json", action="store_true")
    move_p.add_argument("--all", action="store_true",
                        help="also list every optimal open (oracle)")
    move_p.set_defaults(func=cmd_move)

    line_p = sub.add_parser("line", help="an optimal play-through")
    line_p.add_argument("position")
    line_p.add_argument("--json", action="store_true")
    line_p.set_defaults(func=cmd_line)

    check_p = sub.add_parser(
        "check", help="exhaustive solver-vs-oracle verification"
    )
    check_p.add_argument("--max-components", type=int, default=5)
    check_p.add_argument("--chain-max", type=int, default=8)
    check_p.add_argument("--loop-max", type=int, default=10)
    check_p.add_argument("--json", action="store_true")
    check_p.set_defaults(func=cmd_check)

    serve_p = sub.add_parser("serve", help="run the HTTP analysis service")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--port", type=int, default=8000)
    serve_p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
