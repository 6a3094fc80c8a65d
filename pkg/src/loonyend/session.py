"""Turn-by-turn play of a loony endgame.

The game alternates two decision kinds: the defender opens a component,
then the controller either takes all of it (and becomes the opener) or
keeps control with the all-but-two / all-but-four trick (handing the
defender the sacrificed boxes and the next open).  Box captures inside a
component are collapsed into that single binary reply; every other reply
is dominated.

States are immutable; each transition returns a new state.  Advice comes
from the closed-form solver, or from the exhaustive oracle when the
position has odd loops.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from . import oracle, solver
from .model import (
    Component,
    ControlChoice,
    ControlDecision,
    Endgame,
    EndgameError,
    Player,
    decision_for,
    keep_control_threshold,
)


class IllegalPhaseError(EndgameError):
    """Action does not match the session phase."""


class TerminalStateError(EndgameError):
    """The game is over; no further actions or advice exist."""


class Phase(Enum):
    DEFENDER_TO_OPEN = "DefenderToOpen"
    CONTROLLER_TO_DECIDE = "ControllerToDecide"


@dataclass(frozen=True)
class HistoryEntry:
    actor: Player
    action: str
    score_a_delta: int
    score_b_delta: int


@dataclass(frozen=True)
class SessionState:
    initial: Endgame
    remaining: Endgame
    opened: Component | None
    score_a: int
    score_b: int
    to_act: Player
    history: tuple[HistoryEntry, ...] = ()

    @property
    def phase(self) -> Phase:
        return (
            Phase.DEFENDER_TO_OPEN
            if self.opened is None
            else Phase.CONTROLLER_TO_DECIDE
        )

    @property
    def is_terminal(self) -> bool:
        return self.remaining.is_empty and self.opened is None

    @property
    def pending_boxes(self) -> int:
        return self.opened.length if self.opened is not None else 0

    @property
    def total_boxes(self) -> int:
        return self.initial.total_boxes

    @property
    def boxes_accounted(self) -> int:
        """Invariant: equals ``total_boxes`` after every transition."""
        return (
            self.score_a
            + self.score_b
            + self.remaining.total_boxes
            + self.pending_boxes
        )

    def score(self, player: Player) -> int:
        return self.score_a if player is Player.A else self.score_b

    def margin(self, player: Player) -> int:
        return self.score(player) - self.score(player.opponent)


def new_session(game: Endgame, opener: Player) -> SessionState:
    return SessionState(
        initial=game,
        remaining=game,
        opened=None,
        score_a=0,
        score_b=0,
        to_act=opener,
    )


def _credit(state: SessionState, player: Player, boxes: int) -> SessionState:
    if player is Player.A:
        return replace(state, score_a=state.score_a + boxes)
    return replace(state, score_b=state.score_b + boxes)


def _log(state: SessionState, actor: Player, action: str,
         delta_a: int, delta_b: int) -> SessionState:
    entry = HistoryEntry(actor, action, delta_a, delta_b)
    return replace(state, history=state.history + (entry,))


def apply_open(state: SessionState, component: Component) -> SessionState:
    """Defender opens ``component``; the opponent must now decide."""
    if state.phase is not Phase.DEFENDER_TO_OPEN or state.is_terminal:
        raise IllegalPhaseError("no component can be opened now")
    remaining = state.remaining.without(component)  # ComponentNotPresentError
    opener = state.to_act
    next_state = replace(
        state,
        remaining=remaining,
        opened=component,
        to_act=opener.opponent,
    )
    return _log(next_state, opener, f"open {component.token}", 0, 0)


def apply_decision(state: SessionState, decision: ControlDecision | ControlChoice
                   ) -> SessionState:
    """Controller replies to the opened component.

    Keep-control: controller takes all but the sacrifice (2 for a chain,
    4 for a loop), the defender takes the sacrifice and opens next.
    Take-all: controller takes everything and becomes the opener.
    """
    if state.phase is not Phase.CONTROLLER_TO_DECIDE:
        raise IllegalPhaseError("no opened component to decide on")
    choice = decision.choice if isinstance(decision, ControlDecision) else decision
    controller = state.to_act
    defender = controller.opponent
    length = state.opened.length
    sacrifice = keep_control_threshold(state.opened.kind)
    if choice is ControlChoice.KEEP_CONTROL:
        next_state = _credit(state, controller, length - sacrifice)
        next_state = _credit(next_state, defender, sacrifice)
        next_state = replace(next_state, opened=None, to_act=defender)
        delta_a = next_state.score_a - state.score_a
        delta_b = next_state.score_b - state.score_b
        return _log(next_state, controller, "keep-control", delta_a, delta_b)
    next_state = _credit(state, controller, length)
    next_state = replace(next_state, opened=None, to_act=controller)
    delta_a = next_state.score_a - state.score_a
    delta_b = next_state.score_b - state.score_b
    return _log(next_state, controller, "take-all", delta_a, delta_b)


def advise(state: SessionState) -> solver.MoveAdvice | ControlDecision:
    """Optimal action for the player to act."""
    if state.is_terminal:
        raise TerminalStateError("game is over")
    if state.phase is Phase.DEFENDER_TO_OPEN:
        game = state.remaining
        if game.is_simple:
            return solver.best_open(game)
        pick = oracle.oracle_best_open(game)
        return solver.MoveAdvice(
            open=pick,
            move_value=oracle.oracle_move_value(game, pick),
            rule=solver.RULE_ORACLE,
        )
    rest = state.remaining
    if rest.is_simple:
        return solver.control_decision(rest, state.opened.kind)
    return decision_for(oracle.oracle_value(rest), state.opened.kind)


def apply_advice(state: SessionState,
                 advice: solver.MoveAdvice | ControlDecision) -> SessionState:
    if isinstance(advice, solver.MoveAdvice):
        return apply_open(state, advice.open)
    return apply_decision(state, advice)


def self_play(game: Endgame, opener: Player) -> SessionState:
    """Play the whole endgame with both sides advised; the non-opener's
    final margin equals the value of the position."""
    state = new_session(game, opener)
    while not state.is_terminal:
        state = apply_advice(state, advise(state))
    return state
