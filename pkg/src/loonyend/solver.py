"""Closed-form values and optimal moves for simple loony endgames.

Every function here works from an :class:`~loonyend.model.EndgameSummary`
in a constant number of integer operations, independent of how many copies
of each component the position holds.  The case analysis dispatches on
which component types are present:

* only chains, or only loops;
* no 3-chains;
* exactly one 3-chain whose companions are all loops;
* exactly one 3-chain plus a chain of length >= 4;
* two or more 3-chains.

A handful of branches consult the value of a named subposition (the
position minus its 3-chain, or minus its 4-loops); those restarts are
explicit bounded calls, never open recursion.  All of it requires every
loop to have even length - positions with odd loops are rejected and must
go to the :mod:`~loonyend.oracle` instead (its results show the closed
forms genuinely fail there).

The ``trace`` on a :class:`ValueResult` records which rule fired and the
values of the consulted subpositions; the CLI ``--trace`` flag, the HTTP
service and the advisor UI all surface these same strings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .controlled import cv
from .model import (
    Component,
    ComponentKind,
    ComponentNotPresentError,
    ControlDecision,
    Endgame,
    EndgameError,
    EndgameSummary,
    chain,
    decision_for,
    keep_control_threshold,
    loop,
    summarize,
)

RULE_EMPTY = "empty"
RULE_CV_HIGH = "cv>=2"
RULE_CHAINS_ONLY = "chains-only"
RULE_LOOPS_ONLY = "loops-only"
RULE_NO_THREE = "no-3-chains"
RULE_ONE_THREE_LOOPS = "one-3-chain-loops-only"
RULE_ONE_THREE_BIG = "one-3-chain-big-chain"
RULE_MANY_THREE = "multi-3-chains"
RULE_ORACLE = "oracle"

RULES = (
    RULE_EMPTY,
    RULE_CV_HIGH,
    RULE_CHAINS_ONLY,
    RULE_LOOPS_ONLY,
    RULE_NO_THREE,
    RULE_ONE_THREE_LOOPS,
    RULE_ONE_THREE_BIG,
    RULE_MANY_THREE,
    RULE_ORACLE,
)

ODD_LOOP_MESSAGE = "odd loop present: use the oracle"


class OddLoopError(EndgameError):
    """The position has an odd loop; the closed forms do not apply."""


class PreconditionError(EndgameError):
    """A branch body was called on a position outside its case."""


@dataclass(frozen=True)
class ValueResult:
    value: int
    trace: tuple[str, ...]


@dataclass(frozen=True)
class MoveAdvice:
    open: Component
    move_value: int
    rule: str


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _require_simple(game: Endgame) -> None:
    if not game.is_simple:
        raise OddLoopError(ODD_LOOP_MESSAGE)


def _tagged(tag: str, notes: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"{tag}: {note}" for note in notes)


def iterate_four_fold(start: int, times: int) -> int:
    """Result of applying ``x -> |4 - x|`` to ``start``, ``times`` times.

    Closed form: with ``d = start mod 8`` in [0, 7], the result is
    ``|4 - d|`` for an odd iteration count and ``4 - |4 - d|`` for an even
    one.  Requires ``start - 4*times <= 4``, which holds whenever ``times``
    counts the 4-loops of a position whose controlled value is small; the
    closed form diverges from literal iteration outside that range.
    """
    _require(start >= 0, f"start must be >= 0, got {start}")
    _require(times >= 0, f"times must be >= 0, got {times}")
    _require(
        start - 4 * times <= 4,
        f"start - 4*times must be <= 4, got {start - 4 * times}",
    )
    d = start % 8
    return abs(4 - d) if times % 2 else 4 - abs(4 - d)


# -- branch bodies -----------------------------------------------------------
#
# Each _xxx helper returns (value, notes) and trusts its caller about the
# case; the public value_xxx wrappers validate the case and are usable on
# their own.

def _chains_only(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    c = cv(summary)
    if c >= 1:
        return c, (f"c={c}>=1 -> {c}",)
    value = 2 if c % 2 == 0 else 1
    return value, (f"c={c}<=0, parity -> {value}",)


def _loops_only(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    if summary.is_empty:
        return 0, (RULE_EMPTY,)
    c = cv(summary)
    if c >= 2:
        return c, (f"cv={c}>=2",)
    if summary.four_loop_count == 0:
        value = 2 if c % 4 == 2 else 4
        return value, (f"c={c} mod 4 -> {value}",)
    f = summary.four_loop_count
    rest = summary.without_all_four_loops()
    rest_value, rest_notes = _loops_only(rest)
    if rest_value % 4 == 2:
        value = 2
    else:
        value = (rest_value + 4 * f) % 8
    notes = (
        *_tagged("minus-all-4-loops", rest_notes),
        f"minus-all-4-loops value={rest_value}",
        f"4-loop-iteration f={f} -> {value}",
    )
    return value, notes


def _no_three(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    if summary.is_empty:
        return 0, (RULE_EMPTY,)
    c = cv(summary)
    if c >= 2:
        return c, (f"cv={c}>=2",)
    if summary.four_loop_count == 0:
        if c % 2:
            return 3, (f"c={c} odd -> 3",)
        value = 2 if c % 4 == 2 else 4
        return value, (f"c={c} even, mod 4 -> {value}",)
    f = summary.four_loop_count
    rest = summary.without_all_four_loops()
    rest_value, rest_notes = _no_three(rest)
    value = iterate_four_fold(rest_value, f)
    notes = (
        *_tagged("minus-all-4-loops", rest_notes),
        f"minus-all-4-loops value={rest_value}",
        f"4-loop-iteration f={f} -> {value}",
    )
    return value, notes


def _one_three_loops_only(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    c = cv(summary)
    if c >= 2:
        return c, (f"cv={c}>=2",)
    loops = summary.loops_only()
    loops_value, _ = _loops_only(loops)
    if loops_value == 2:
        return 1, ("loops value=2 -> 1",)
    if summary.four_loop_count == 0:
        return 3, (f"loops value={loops_value}!=2, no 4-loops -> 3",)
    f = summary.four_loop_count
    rest = summary.without_all_four_loops()
    rest_value, rest_notes = _one_three_loops_only(rest)
    value = iterate_four_fold(rest_value, f)
    notes = (
        f"loops value={loops_value}!=2",
        *_tagged("minus-all-4-loops", rest_notes),
        f"minus-all-4-loops value={rest_value}",
        f"4-loop-iteration f={f} -> {value}",
    )
    return value, notes


def _one_three_big(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    c = cv(summary)
    if c >= 2:
        return c, (f"cv={c}>=2",)
    if c % 2 == 0:
        if (
            summary.four_loop_count >= 1
            and cv(summary.without_one_four_loop()) == 4
        ):
            return 0, (f"c={c} even, cv(minus-4-loop)=4 -> 0",)
        return 2, (f"c={c} even -> 2",)
    rest3 = summary.without_three_chain()
    rest3_value, rest3_notes = _no_three(rest3)
    prefix = (
        *_tagged("minus-3-chain", rest3_notes),
        f"minus-3-chain value={rest3_value}",
    )
    if rest3_value == 2:
        return 1, (*prefix, "-> 1")
    if summary.four_loop_count == 0:
        return 3, (*prefix, "no 4-loops -> 3")
    f = summary.four_loop_count
    rest4 = summary.without_all_four_loops()
    rest4_value, rest4_notes = _one_three_big(rest4)
    value = iterate_four_fold(rest4_value, f)
    notes = (
        *prefix,
        *_tagged("minus-all-4-loops", rest4_notes),
        f"minus-all-4-loops value={rest4_value}",
        f"4-loop-iteration f={f} -> {value}",
    )
    return value, notes


def _many_three(summary: EndgameSummary) -> tuple[int, tuple[str, ...]]:
    c = cv(summary)
    if c >= 2:
        return c, (f"cv={c}>=2",)
    if c % 2:
        return 1, (f"c={c} odd -> 1",)
    if (
        summary.four_loop_count >= 1
        and cv(summary.without_one_four_loop()) == 4
    ):
        return 0, (f"c={c} even, cv(minus-4-loop)=4 -> 0",)
    return 2, (f"c={c} even -> 2",)


def value_chains_only(summary: EndgameSummary) -> int:
    """Position made of chains only."""
    _require(summary.loop_count == 0, "position has loops")
    _require(summary.chain_count >= 1, "position has no chains")
    return _chains_only(summary)[0]


def value_loops_only(summary: EndgameSummary) -> int:
    """Position made of even loops only (empty allowed)."""
    _require(summary.chain_count == 0, "position has chains")
    return _loops_only(summary)[0]


def value_no_three_chains(summary: EndgameSummary) -> int:
    """Position without 3-chains (chains >= 4 and/or loops)."""
    _require(summary.three_chain_count == 0, "position has a 3-chain")
    return _no_three(summary)[0]


def value_one_three_loops_only(summary: EndgameSummary) -> int:
    """Exactly one 3-chain, every other component a loop."""
    _require(summary.three_chain_count == 1, "need exactly one 3-chain")
    _require(summary.big_chain_count == 0, "position has a chain >= 4")
    _require(summary.loop_count >= 1, "position has no loops")
    return _one_three_loops_only(summary)[0]


def value_one_three_with_big_chain(summary: EndgameSummary) -> int:
    """Exactly one 3-chain plus at least one chain of length >= 4."""
    _require(summary.three_chain_count == 1, "need exactly one 3-chain")
    _require(summary.big_chain_count >= 1, "position has no chain >= 4")
    return _one_three_big(summary)[0]


def value_many_three_chains(summary: EndgameSummary) -> int:
    """At least two 3-chains."""
    _require(summary.three_chain_count >= 2, "need at least two 3-chains")
    return _many_three(summary)[0]


# -- top-level dispatch ------------------------------------------------------

def value(game: Endgame | EndgameSummary) -> ValueResult:
    """Value of a simple loony endgame, with the branch trace.

    Accepts a position or its summary.  Positions are checked for odd loops
    (:class:`OddLoopError`); summaries are trusted to describe an even-loop
    position.
    """
    if isinstance(game, Endgame):
        _require_simple(game)
        summary = summarize(game)
    else:
        summary = game
    if summary.is_empty:
        return ValueResult(0, (RULE_EMPTY,))
    c = cv(summary)
    if c >= 2:
        return ValueResult(c, (RULE_CV_HIGH, f"cv={c}"))
    if summary.loop_count == 0:
        rule, (result, notes) = RULE_CHAINS_ONLY, _chains_only(summary)
    elif summary.three_chain_count == 0:
        rule, (result, notes) = RULE_NO_THREE, _no_three(summary)
    elif summary.three_chain_count == 1 and summary.big_chain_count == 0:
        rule, (result, notes) = (
            RULE_ONE_THREE_LOOPS,
            _one_three_loops_only(summary),
        )
    elif summary.three_chain_count == 1:
        rule, (result, notes) = RULE_ONE_THREE_BIG, _one_three_big(summary)
    else:
        rule, (result, notes) = RULE_MANY_THREE, _many_three(summary)
    return ValueResult(result, (rule, f"cv={c}", *notes))


def move_value(game: Endgame, component: Component) -> int:
    """Value of the position given that ``component`` is opened first."""
    if component not in game:
        raise ComponentNotPresentError(f"no {component.token} in position")
    _require_simple(game)
    sacrifice = keep_control_threshold(component.kind)
    rest_value = value(game.without(component)).value
    return component.length - sacrifice + abs(rest_value - sacrifice)


def control_decision(rest: Endgame, opened_kind: ComponentKind) -> ControlDecision:
    """Keep-control or take-all, given what remains after the open."""
    _require_simple(rest)
    return decision_for(value(rest).value, opened_kind)


def best_open(game: Endgame) -> MoveAdvice:
    """An optimal component for the defender to open.

    The advised component is always the smallest chain or the smallest
    loop; which of the two depends on the 3-chain/4-loop structure.  One
    optimal move is returned, not all of them.
    """
    _require_simple(game)
    if game.is_empty:
        raise EndgameError("no move exists in the empty game")
    summary = summarize(game)
    smallest_chain = game.smallest_chain
    smallest_loop = game.smallest_loop
    if summary.chain_count == 0:
        rule, pick = RULE_LOOPS_ONLY, smallest_loop
    elif summary.loop_count == 0:
        rule, pick = RULE_CHAINS_ONLY, smallest_chain
    elif summary.three_chain_count == 0:
        rule, pick = RULE_NO_THREE, smallest_loop
    elif summary.three_chain_count == 1 and summary.big_chain_count == 0:
        rule = RULE_ONE_THREE_LOOPS
        loops = summary.loops_only()
        loops_value = _loops_only(loops)[0]
        if loops_value == 2:
            pick = chain(3)
        elif (
            smallest_loop.length == 6
            and _loops_only(loops.without_one_six_loop())[0] == 2
        ):
            pick = chain(3)
        else:
            pick = smallest_loop
    elif summary.three_chain_count == 1:
        rule = RULE_ONE_THREE_BIG
        if (
            cv(summary) <= 1
            and summary.four_loop_count >= 1
            and (
                cv(summary.without_one_four_loop()) == 4
                or _no_three(summary.without_three_chain())[0] in (0, 4)
            )
        ):
            pick = loop(4)
        else:
            pick = chain(3)
    else:
        rule = RULE_MANY_THREE
        if summary.four_loop_count >= 1 and (
            cv(summary.without_one_four_loop()) == 4
            or cv(summary.without_three_chain()) == 4
            or cv(summary.without_three_chain().without_one_four_loop()) == 4
        ):
            pick = loop(4)
        else:
            pick = chain(3)
    return MoveAdvice(open=pick, move_value=move_value(game, pick), rule=rule)
