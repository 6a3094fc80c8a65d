"""Brute-force ground truth for loony endgames.

Evaluates the full open/reply recursion: the defender opens some component,
the controller either takes everything or plays the all-but-two
(all-but-four for loops) trick, and the rest is played optimally.  With
``v`` the net score for the player whose turn has just finished,

    v(empty) = 0
    v(G + chain n; chain n) = n - 2 + |v(G) - 2|
    v(G + loop n; loop n)   = n - 4 + |v(G) - 4|
    v(G) = min over distinct components C of v(G; C)

Intermediate replies (leaving three or more boxes) are dominated by the two
modelled ones and are not searched.  Results are memoised on the canonical
multiset, so evaluating a position also solves all of its subgames.  Loops
of any length >= 4 are accepted, odd lengths included; this module is the
reference the closed-form solver is validated against and deliberately
shares none of its case analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    Component,
    ControlChoice,
    ControlDecision,
    Endgame,
    EndgameError,
    decision_for,
    keep_control_threshold,
)

# Memoised search stays comfortably sub-second up to this many boxes.
SEARCH_BOX_CAP = 64


@dataclass(frozen=True)
class MoveValuation:
    """Value of opening ``component``: net score for the non-opener."""

    component: Component
    value: int


@dataclass(frozen=True)
class LineStep:
    """One open/reply exchange; ``net`` is the running net score for the
    player who was in control when the line started."""

    opened: Component
    decision: ControlDecision
    net: int


class Oracle:
    """Memoised evaluator.  The table only grows; under concurrent use a
    race at worst recomputes a value, never corrupts one."""

    def __init__(self) -> None:
        self._memo: dict[tuple, int] = {}

    def value(self, game: Endgame) -> int:
        if game.is_empty:
            return 0
        cached = self._memo.get(game.runs)
        if cached is not None:
            return cached
        best = min(
            self._move_value(game, component) for component in game.distinct
        )
        self._memo[game.runs] = best
        return best

    def _move_value(self, game: Endgame, component: Component) -> int:
        sacrifice = keep_control_threshold(component.kind)
        rest = game.without(component)
        return component.length - sacrifice + abs(self.value(rest) - sacrifice)

    def move_value(self, game: Endgame, component: Component) -> int:
        if component not in game:
            raise EndgameError(f"no {component.token} in position")
        return self._move_value(game, component)

    def move_values(self, game: Endgame) -> list[MoveValuation]:
        """One valuation per distinct component, canonical order."""
        if game.is_empty:
            raise EndgameError("no move exists in the empty game")
        return [
            MoveValuation(component, self._move_value(game, component))
            for component in game.distinct
        ]

    def optimal_opens(self, game: Endgame) -> set[Component]:
        """The distinct components whose opening achieves the game value."""
        valuations = self.move_values(game)
        best = min(valuation.value for valuation in valuations)
        return {v.component for v in valuations if v.value == best}

    def best_open(self, game: Endgame) -> Component:
        """Deterministic pick from the optimal set: smallest length,
        chains before loops on equal length."""
        return min(
            self.optimal_opens(game), key=lambda c: (c.length, c.kind)
        )

    def line(self, game: Endgame) -> list[LineStep]:
        """One optimal play-through.

        The defender opens the deterministic best component; the controller
        keeps control above the sacrifice threshold, takes everything below
        it, and keeps control on exact ties.  The final ``net`` equals
        ``value(game)``.
        """
        steps: list[LineStep] = []
        first_controller_in_control = True
        net = 0
        current = game
        while not current.is_empty:
            opened = self.best_open(current)
            rest = current.without(opened)
            decision = decision_for(self.value(rest), opened.kind)
            sacrifice = keep_control_threshold(opened.kind)
            sign = 1 if first_controller_in_control else -1
            if decision.choice is ControlChoice.KEEP_CONTROL:
                net += sign * (opened.length - 2 * sacrifice)
            else:
                net += sign * opened.length
                first_controller_in_control = not first_controller_in_control
            steps.append(LineStep(opened, decision, net))
            current = rest
        return steps


_shared = Oracle()


def oracle_value(game: Endgame) -> int:
    return _shared.value(game)


def oracle_move_value(game: Endgame, component: Component) -> int:
    return _shared.move_value(game, component)


def oracle_move_values(game: Endgame) -> list[MoveValuation]:
    return _shared.move_values(game)


def oracle_optimal_opens(game: Endgame) -> set[Component]:
    return _shared.optimal_opens(game)


def oracle_best_open(game: Endgame) -> Component:
    return _shared.best_open(game)


def oracle_line(game: Endgame) -> list[LineStep]:
    return _shared.line(game)
