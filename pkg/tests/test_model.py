from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loonyend.model import (
    Component,
    ComponentKind,
    ComponentNotPresentError,
    ControlChoice,
    Endgame,
    EndgameSummary,
    InvalidComponentError,
    ParseError,
    chain,
    decision_for,
    format_position,
    loop,
    parse_position,
    summarize,
)

components = st.one_of(
    st.integers(min_value=3, max_value=40).map(chain),
    st.integers(min_value=4, max_value=40).map(loop),
)
endgames = st.lists(components, max_size=8).map(Endgame.from_components)


class TestComponent:
    def test_chain_lower_bound(self):
        with pytest.raises(InvalidComponentError, match="chain length < 3"):
            chain(2)

    def test_loop_lower_bound(self):
        with pytest.raises(InvalidComponentError, match="loop length < 4"):
            loop(3)

    def test_tokens(self):
        assert chain(3).token == "3"
        assert loop(6).token == "6L"

    def test_ordering_chains_before_loops(self):
        assert chain(100) < loop(4)
        assert chain(3) < chain(4)
        assert loop(4) < loop(6)


class TestParse:
    def test_section_example(self):
        g = parse_position("2*3+4+6L")
        assert g.runs == ((chain(3), 2), (chain(4), 1), (loop(6), 1))
        assert g.total_boxes == 16

    def test_empty(self):
        assert parse_position("") == Endgame()
        assert parse_position("   ") == Endgame()

    def test_short_chain_rejected(self):
        with pytest.raises(InvalidComponentError, match="chain length < 3"):
            parse_position("3+2")

    def test_short_loop_rejected(self):
        with pytest.raises(InvalidComponentError, match="loop length < 4"):
            parse_position("3L")

    def test_whitespace_and_case_insensitive_suffix(self):
        assert parse_position(" 2 * 3 + 4 + 6 l ") == parse_position("2*3+4+6L")

    def test_multiplicities_merge(self):
        assert parse_position("3+3") == parse_position("2*3")
        assert parse_position("2*5+5") == parse_position("3*5")

    @pytest.mark.parametrize(
        "text",
        ["3+", "+3", "3++4", "2*", "*3", "3 4", "3x", "5L4", "2**3"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(ParseError):
            parse_position(text)

    def test_invalid_length_reported_before_missing_separator(self):
        from loonyend.model import EndgameError

        with pytest.raises(EndgameError):
            parse_position("3L4")

    def test_zero_count_rejected(self):
        with pytest.raises(ParseError, match="count"):
            parse_position("0*3")

    def test_parse_error_carries_index(self):
        with pytest.raises(ParseError) as exc:
            parse_position("3+x")
        assert exc.value.index == 2


class TestFormat:
    def test_section_example(self):
        g = Endgame.from_components([chain(3), chain(3), chain(4), loop(6)])
        assert format_position(g) == "2*3+4+6L"

    def test_empty(self):
        assert format_position(Endgame()) == ""

    def test_large_multiplicities(self):
        g = Endgame.from_runs(
            [(chain(3), 1), (chain(4), 1), (loop(4), 100), (loop(6), 100)]
        )
        assert format_position(g) == "3+4+100*4L+100*6L"

    @given(endgames)
    def test_round_trip(self, g):
        assert parse_position(format_position(g)) == g

    @given(endgames)
    def test_canonical_order(self, g):
        kinds_then_lengths = [(c.kind, c.length) for c in g.distinct]
        assert kinds_then_lengths == sorted(kinds_then_lengths)


class TestEndgame:
    def test_without_and_count(self):
        g = parse_position("2*3+4+6L")
        assert g.count(chain(3)) == 2
        assert chain(4) in g
        assert g.without(chain(3)) == parse_position("3+4+6L")
        assert g.without(chain(4)) == parse_position("2*3+6L")
        with pytest.raises(ComponentNotPresentError):
            g.without(chain(5))

    def test_add_and_union(self):
        g = parse_position("3+6L")
        assert g.add(chain(3)) == parse_position("2*3+6L")
        assert g + parse_position("4+6L") == parse_position("3+4+2*6L")

    def test_smallest_lookups(self):
        g = parse_position("4+5+6L+8L")
        assert g.smallest_chain == chain(4)
        assert g.smallest_loop == loop(6)
        assert parse_position("2*6L").smallest_chain is None
        assert parse_position("3").smallest_loop is None

    def test_is_simple(self):
        assert parse_position("2*3+4+6L").is_simple
        assert not parse_position("4+2*7L").is_simple
        assert parse_position("").is_simple

    def test_invalid_runs_rejected(self):
        with pytest.raises(Exception):
            Endgame(((chain(4), 1), (chain(3), 1)))  # not sorted
        with pytest.raises(Exception):
            Endgame(((chain(3), 0),))  # zero count


class TestSummary:
    def test_section_example(self):
        assert summarize(parse_position("2*3+4+6L")) == EndgameSummary(
            three_chain_count=2,
            big_chain_count=1,
            big_chain_length_sum=4,
            six_loop_count=1,
        )

    def test_empty(self):
        assert summarize(Endgame()) == EndgameSummary()

    def test_worked_example_counts(self):
        s = summarize(parse_position("3+4+100*4L+100*6L"))
        assert s == EndgameSummary(1, 1, 4, 100, 100, 0, 0)

    @given(endgames, endgames)
    def test_additive_over_disjoint_union(self, g1, g2):
        assert summarize(g1 + g2) == summarize(g1) + summarize(g2)

    def test_subgame_edits(self):
        s = summarize(parse_position("3+4+2*4L+6L+8L"))
        assert s.without_three_chain().three_chain_count == 0
        assert s.without_one_four_loop().four_loop_count == 1
        assert s.without_all_four_loops().four_loop_count == 0
        assert s.without_one_six_loop().six_loop_count == 0
        assert s.loops_only().chain_count == 0
        assert s.chains_only().loop_count == 0
        with pytest.raises(ComponentNotPresentError):
            s.loops_only().without_three_chain()


class TestDecisionRule:
    def test_thresholds(self):
        assert decision_for(3, ComponentKind.CHAIN).choice is ControlChoice.KEEP_CONTROL
        assert decision_for(1, ComponentKind.CHAIN).choice is ControlChoice.TAKE_ALL
        tied = decision_for(2, ComponentKind.CHAIN)
        assert tied.choice is ControlChoice.KEEP_CONTROL and tied.indifferent
        assert decision_for(5, ComponentKind.LOOP).choice is ControlChoice.KEEP_CONTROL
        assert decision_for(3, ComponentKind.LOOP).choice is ControlChoice.TAKE_ALL
        assert decision_for(4, ComponentKind.LOOP).indifferent


def test_component_order_matches_dataclass():
    assert Component(ComponentKind.CHAIN, 3) == chain(3)
    assert sorted([loop(4), chain(9), chain(3)]) == [chain(3), chain(9), loop(4)]
