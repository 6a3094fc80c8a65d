from __future__ import annotations

import pytest

from loonyend.model import (
    ComponentNotPresentError,
    ControlChoice,
    ControlDecision,
    Endgame,
    Player,
    chain,
    loop,
    parse_position,
)
from loonyend.session import (
    IllegalPhaseError,
    Phase,
    TerminalStateError,
    advise,
    apply_advice,
    apply_decision,
    apply_open,
    new_session,
    self_play,
)
from loonyend.solver import RULE_ORACLE, MoveAdvice

KEEP = ControlDecision(ControlChoice.KEEP_CONTROL)
TAKE = ControlDecision(ControlChoice.TAKE_ALL)


def g(text: str) -> Endgame:
    return parse_position(text)


class TestNewSession:
    def test_section_two_position(self):
        state = new_session(g("2*3+4+6L"), Player.A)
        assert state.phase is Phase.DEFENDER_TO_OPEN
        assert state.to_act is Player.A
        assert state.remaining.total_boxes == 16
        assert (state.score_a, state.score_b) == (0, 0)

    def test_empty_game_starts_terminal(self):
        assert new_session(Endgame(), Player.A).is_terminal

    def test_opener_choice(self):
        state = new_session(g("6L"), Player.B)
        assert state.to_act is Player.B
        assert not state.is_terminal


class TestApplyOpen:
    def test_open_moves_to_decide_phase(self):
        state = apply_open(new_session(g("2*3+4+6L"), Player.A), chain(3))
        assert state.phase is Phase.CONTROLLER_TO_DECIDE
        assert state.opened == chain(3)
        assert state.remaining == g("3+4+6L")
        assert state.to_act is Player.B

    def test_component_must_be_present(self):
        with pytest.raises(ComponentNotPresentError):
            apply_open(new_session(g("3+4"), Player.A), chain(5))

    def test_wrong_phase(self):
        state = apply_open(new_session(g("3+4"), Player.A), chain(3))
        with pytest.raises(IllegalPhaseError):
            apply_open(state, chain(4))
        with pytest.raises(IllegalPhaseError):
            apply_open(new_session(Endgame(), Player.A), chain(3))


class TestApplyDecision:
    def test_take_all_scores_and_keeps_turn(self):
        state = apply_open(new_session(g("2*3+4+6L"), Player.A), chain(3))
        state = apply_decision(state, TAKE)
        assert (state.score_a, state.score_b) == (0, 3)
        assert state.to_act is Player.B  # taker must open next
        assert state.phase is Phase.DEFENDER_TO_OPEN

    def test_keep_control_splits_boxes(self):
        state = apply_open(new_session(g("3+4+6L"), Player.B), chain(3))
        state = apply_decision(state, KEEP)
        assert (state.score_a, state.score_b) == (1, 2)
        assert state.to_act is Player.B  # defender received the boxes, opens again

    def test_loop_take_all(self):
        state = apply_open(new_session(g("4+6L"), Player.B), loop(6))
        state = apply_decision(state, TAKE)
        assert state.score_a == 6
        assert state.to_act is Player.A

    def test_wrong_phase(self):
        with pytest.raises(IllegalPhaseError):
            apply_decision(new_session(g("3"), Player.A), TAKE)

    def test_accepts_bare_choice(self):
        state = apply_open(new_session(g("3"), Player.A), chain(3))
        state = apply_decision(state, ControlChoice.TAKE_ALL)
        assert state.score_b == 3

    def test_history_records_deltas(self):
        state = new_session(g("3+4"), Player.A)
        state = apply_open(state, chain(3))
        state = apply_decision(state, KEEP)
        actions = [(e.actor, e.action, e.score_a_delta, e.score_b_delta)
                   for e in state.history]
        assert actions == [
            (Player.A, "open 3", 0, 0),
            (Player.B, "keep-control", 2, 1),
        ]


class TestAdvise:
    def test_open_advice(self):
        advice = advise(new_session(g("2*3+4+6L"), Player.A))
        assert isinstance(advice, MoveAdvice)
        assert advice.open == chain(3)

    def test_decision_advice_take_all(self):
        state = apply_open(new_session(g("2*3+4+6L"), Player.A), chain(3))
        advice = advise(state)
        assert isinstance(advice, ControlDecision)
        assert advice.choice is ControlChoice.TAKE_ALL

    def test_decision_advice_indifferent_loop(self):
        state = apply_open(new_session(g("4+6L"), Player.A), loop(6))
        advice = advise(state)
        assert advice.choice is ControlChoice.KEEP_CONTROL
        assert advice.indifferent

    def test_terminal_state(self):
        with pytest.raises(TerminalStateError):
            advise(new_session(Endgame(), Player.A))

    def test_odd_loop_fallback(self, oracle):
        state = new_session(g("4+2*7L"), Player.A)
        advice = advise(state)
        assert isinstance(advice, MoveAdvice)
        assert advice.rule == RULE_ORACLE
        assert advice.open in oracle.optimal_opens(g("4+2*7L"))
        state = apply_open(state, advice.open)
        decision = advise(state)
        assert isinstance(decision, ControlDecision)


class TestSelfPlay:
    def test_section_two_position(self):
        final = self_play(g("2*3+4+6L"), Player.A)
        assert final.is_terminal
        assert final.margin(Player.B) == 2
        assert {final.score_a, final.score_b} == {7, 9}

    def test_single_chain_goes_whole_to_non_opener(self):
        for n in (3, 5, 8):
            final = self_play(g(str(n)), Player.A)
            assert (final.score_a, final.score_b) == (0, n)

    def test_empty(self):
        final = self_play(Endgame(), Player.B)
        assert (final.score_a, final.score_b) == (0, 0)

    def test_margin_equals_value_on_exhaustive_slice(self, oracle, exhaustive_games):
        for game in exhaustive_games[::7]:
            final = self_play(game, Player.A)
            assert final.margin(Player.B) == oracle.value(game), game

    def test_box_conservation_at_every_step(self):
        for text in ["2*3+4+6L", "3+4L", "4*6L", "5+7", "4+2*7L"]:
            game = g(text)
            state = new_session(game, Player.A)
            while not state.is_terminal:
                state = apply_advice(state, advise(state))
                assert state.boxes_accounted == game.total_boxes
            assert state.score_a + state.score_b == game.total_boxes


class TestReplayDeterminism:
    def test_identical_action_sequences_reach_identical_states(self):
        game = g("2*3+4+6L")

        def run():
            state = new_session(game, Player.A)
            states = [state]
            while not state.is_terminal:
                state = apply_advice(state, advise(state))
                states.append(state)
            return states

        assert run() == run()


def _legal_actions(state):
    if state.phase is Phase.DEFENDER_TO_OPEN:
        return [("open", component) for component in state.remaining.distinct]
    return [("decide", KEEP), ("decide", TAKE)]


def _apply(state, action):
    kind, payload = action
    if kind == "open":
        return apply_open(state, payload)
    return apply_decision(state, payload)


def _play_out(state):
    while not state.is_terminal:
        state = apply_advice(state, advise(state))
    return state


class TestDeviationsNeverHelp:
    """Deviating from the advice at any reachable decision point never
    improves the deviator's final margin against an advised opponent."""

    def test_exhaustive_deviations_on_small_positions(self):
        for text in ["2*3", "3+4L", "4+6L", "2*3+4+6L", "3+3*6L", "4+4L"]:
            game = g(text)
            state = new_session(game, Player.A)
            while not state.is_terminal:
                actor = state.to_act
                advised_margin = _play_out(state).margin(actor)
                for action in _legal_actions(state):
                    deviated = _play_out(_apply(state, action))
                    assert deviated.margin(actor) <= advised_margin, (text, action)
                state = apply_advice(state, advise(state))


def test_phase_values_match_wire_names():
    assert Phase.DEFENDER_TO_OPEN.value == "DefenderToOpen"
    assert Phase.CONTROLLER_TO_DECIDE.value == "ControllerToDecide"


def test_full_history_replay_of_known_line():
    # One optimal line of the worked position, action by action.
    state = new_session(g("2*3+4+6L"), Player.A)
    state = apply_open(state, chain(3))
    state = apply_decision(state, TAKE)       # B takes 3
    state = apply_open(state, chain(3))       # B opens the other 3-chain
    state = apply_decision(state, KEEP)       # A takes 1, B gets 2
    state = apply_open(state, loop(6))        # B opens the 6-loop
    state = apply_decision(state, KEEP)       # A takes 2, B gets 4
    state = apply_open(state, chain(4))       # B opens the 4-chain
    state = apply_decision(state, TAKE)       # A takes 4
    assert state.is_terminal
    assert (state.score_a, state.score_b) == (7, 9)
    assert [entry.action for entry in state.history] == [
        "open 3", "take-all", "open 3", "keep-control",
        "open 6L", "keep-control", "open 4", "take-all",
    ]
