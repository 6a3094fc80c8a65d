"""Exact values and optimal moves for simple loony dots-and-boxes endgames.

Closed-form evaluation (constant work in the number of components) with a
memoised game-tree oracle as independent ground truth, a play-by-play
session state machine, a CLI and an HTTP analysis service.
"""

from .amalgamate import ReducedForm, amalgamate, amalgamate_chains, amalgamate_loops
from .controlled import CvBreakdown, cv, cv_breakdown, fcv, tb
from .model import (
    Component,
    ComponentKind,
    ComponentNotPresentError,
    ControlChoice,
    ControlDecision,
    Endgame,
    EndgameError,
    EndgameSummary,
    InvalidComponentError,
    ParseError,
    Player,
    chain,
    decision_for,
    format_position,
    keep_control_threshold,
    loop,
    parse_position,
    summarize,
)
from .oracle import (
    LineStep,
    MoveValuation,
    Oracle,
    oracle_best_open,
    oracle_line,
    oracle_move_value,
    oracle_move_values,
    oracle_optimal_opens,
    oracle_value,
)
from .session import (
    HistoryEntry,
    IllegalPhaseError,
    Phase,
    SessionState,
    TerminalStateError,
    advise,
    apply_decision,
    apply_open,
    new_session,
    self_play,
)
from .solver import (
    MoveAdvice,
    OddLoopError,
    PreconditionError,
    ValueResult,
    best_open,
    control_decision,
    iterate_four_fold,
    move_value,
    value,
    value_chains_only,
    value_loops_only,
    value_many_three_chains,
    value_no_three_chains,
    value_one_three_loops_only,
    value_one_three_with_big_chain,
)

__version__ = "0.1.0"

__all__ = [
    "Component",
    "ComponentKind",
    "ComponentNotPresentError",
    "ControlChoice",
    "ControlDecision",
    "CvBreakdown",
    "Endgame",
    "EndgameError",
    "EndgameSummary",
    "HistoryEntry",
    "IllegalPhaseError",
    "InvalidComponentError",
    "LineStep",
    "MoveAdvice",
    "MoveValuation",
    "OddLoopError",
    "Oracle",
    "ParseError",
    "Phase",
    "Player",
    "PreconditionError",
    "ReducedForm",
    "SessionState",
    "TerminalStateError",
    "ValueResult",
    "advise",
    "amalgamate",
    "amalgamate_chains",
    "amalgamate_loops",
    "apply_decision",
    "apply_open",
    "best_open",
    "chain",
    "control_decision",
    "cv",
    "cv_breakdown",
    "decision_for",
    "fcv",
    "format_position",
    "iterate_four_fold",
    "keep_control_threshold",
    "loop",
    "move_value",
    "new_session",
    "oracle_best_open",
    "oracle_line",
    "oracle_move_value",
    "oracle_move_values",
    "oracle_optimal_opens",
    "oracle_value",
    "parse_position",
    "self_play",
    "summarize",
    "tb",
    "value",
    "value_chains_only",
    "value_loops_only",
    "value_many_three_chains",
    "value_no_three_chains",
    "value_one_three_loops_only",
    "value_one_three_with_big_chain",
]
