"""Position analysis records shared by the CLI and the HTTP service.

A record carries the value, the controlled-value breakdown, the advised
open and the branch trace for one position.  Simple positions (all loops
even) are analysed by the closed-form solver; positions with odd loops
fall back to the exhaustive oracle, which is refused above a size cap.
"""

from __future__ import annotations

from . import solver
from .controlled import cv_breakdown
from .model import Component, Endgame, EndgameError, format_position, summarize
from .oracle import (
    SEARCH_BOX_CAP,
    oracle_best_open,
    oracle_move_value,
    oracle_value,
)


class OracleSizeError(EndgameError):
    """Odd-loop position too large for the exhaustive fallback."""


def analyze_game(game: Endgame) -> dict:
    """Build the analysis record for a position.

    Keys: ``position``, ``value``, ``cv``, ``fcv``, ``tb``,
    ``advisedOpen``, ``rule``, ``trace``; plus ``oracleFallback: true``
    when the position has odd loops and was search-evaluated.
    """
    breakdown = cv_breakdown(summarize(game))
    record: dict = {"position": format_position(game)}
    if game.is_simple:
        result = solver.value(game)
        record["value"] = result.value
        trace = list(result.trace)
        advised = rule = None
        if not game.is_empty:
            advice = solver.best_open(game)
            advised, rule = advice.open.token, advice.rule
    else:
        if game.total_boxes > SEARCH_BOX_CAP:
            raise OracleSizeError(
                f"odd-loop position with {game.total_boxes} boxes exceeds "
                f"the {SEARCH_BOX_CAP}-box oracle cap"
            )
        record["value"] = oracle_value(game)
        trace = [solver.RULE_ORACLE]
        advised = rule = None
        if not game.is_empty:
            advised = oracle_best_open(game).token
            rule = solver.RULE_ORACLE
        record["oracleFallback"] = True
    record["cv"] = breakdown.cv
    record["fcv"] = breakdown.fcv
    record["tb"] = breakdown.tb
    record["advisedOpen"] = advised
    record["rule"] = rule
    record["trace"] = trace
    return record


def move_value_for(game: Endgame, component: Component) -> int:
    """Value of opening ``component``, by solver or oracle as appropriate."""
    if game.is_simple:
        return solver.move_value(game, component)
    if game.total_boxes > SEARCH_BOX_CAP:
        raise OracleSizeError(
            f"odd-loop position with {game.total_boxes} boxes exceeds "
            f"the {SEARCH_BOX_CAP}-box oracle cap"
        )
    return oracle_move_value(game, component)
