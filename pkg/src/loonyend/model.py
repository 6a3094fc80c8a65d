"""Domain model for dots-and-boxes loony endgames.

A position is an unordered collection of isolated components: long chains
(3 or more boxes) and long loops (4 or more boxes).  Positions are written
in a compact ASCII form, e.g. ``"2*3+4+6L"`` for two 3-chains, a 4-chain
and a 6-loop: an ``L``/``l`` suffix marks a loop, ``k*`` a multiplicity,
``+`` separates components, and whitespace between tokens is ignored.

Everything here is an immutable value; instances can be shared freely
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum, IntEnum
from typing import Iterable


class EndgameError(ValueError):
    """Base class for invalid positions, components or moves."""


class ParseError(EndgameError):
    """Position text does not conform to the grammar."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (at index {index})")
        self.index = index


class InvalidComponentError(EndgameError):
    """Component length violates the long-chain / long-loop bounds."""


class ComponentNotPresentError(EndgameError):
    """A referenced component is not part of the position."""


class ComponentKind(IntEnum):
    """Chains sort before loops; the int order backs canonical sorting."""

    CHAIN = 0
    LOOP = 1


@dataclass(frozen=True, order=True)
class Component:
    """One isolated region: a chain of >= 3 boxes or a loop of >= 4 boxes."""

    kind: ComponentKind
    length: int

    def __post_init__(self) -> None:
        if self.kind is ComponentKind.CHAIN and self.length < 3:
            raise InvalidComponentError("chain length < 3")
        if self.kind is ComponentKind.LOOP and self.length < 4:
            raise InvalidComponentError("loop length < 4")

    @property
    def is_chain(self) -> bool:
        return self.kind is ComponentKind.CHAIN

    @property
    def is_loop(self) -> bool:
        return self.kind is ComponentKind.LOOP

    @property
    def token(self) -> str:
        """Grammar token for this component: ``"5"`` or ``"6L"``."""
        return f"{self.length}L" if self.is_loop else str(self.length)

    def __str__(self) -> str:
        return self.token


def chain(length: int) -> Component:
    return Component(ComponentKind.CHAIN, length)


def loop(length: int) -> Component:
    return Component(ComponentKind.LOOP, length)


@dataclass(frozen=True)
class Endgame:
    """Canonical multiset of components.

    Stored as run-length-encoded ``(component, count)`` pairs, sorted
    chains-ascending then loops-ascending, so that equality, hashing and
    formatting are deterministic and positions with millions of identical
    components stay O(number of distinct lengths) to handle.
    """

    runs: tuple[tuple[Component, int], ...] = ()

    def __post_init__(self) -> None:
        previous: Component | None = None
        for component, count in self.runs:
            if count < 1:
                raise EndgameError(f"run count must be >= 1, got {count}")
            if previous is not None and not previous < component:
                raise EndgameError("runs must be strictly sorted")
            previous = component

    @classmethod
    def from_components(cls, components: Iterable[Component]) -> "Endgame":
        counts: dict[Component, int] = {}
        for component in components:
            counts[component] = counts.get(component, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_runs(cls, pairs: Iterable[tuple[Component, int]]) -> "Endgame":
        counts: dict[Component, int] = {}
        for component, count in pairs:
            if count < 0:
                raise EndgameError(f"run count must be >= 0, got {count}")
            if count:
                counts[component] = counts.get(component, 0) + count
        return cls(tuple(sorted(counts.items())))

    # -- basic queries ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.runs

    @property
    def total_boxes(self) -> int:
        return sum(component.length * count for component, count in self.runs)

    @property
    def component_count(self) -> int:
        return sum(count for _, count in self.runs)

    @property
    def is_simple(self) -> bool:
        """True iff every loop has even length (the closed forms' domain)."""
        return all(
            component.is_chain or component.length % 2 == 0
            for component, _ in self.runs
        )

    @property
    def distinct(self) -> tuple[Component, ...]:
        """One entry per distinct (kind, length), canonical order."""
        return tuple(component for component, _ in self.runs)

    @property
    def components(self) -> tuple[Component, ...]:
        """Fully expanded multiset; materialises one entry per component."""
        out: list[Component] = []
        for component, count in self.runs:
            out.extend([component] * count)
        return tuple(out)

    @property
    def smallest_chain(self) -> Component | None:
        first = self.runs[0][0] if self.runs else None
        return first if first is not None and first.is_chain else None

    @property
    def smallest_loop(self) -> Component | None:
        for component, _ in self.runs:
            if component.is_loop:
                return component
        return None

    def count(self, component: Component) -> int:
        for candidate, count in self.runs:
            if candidate == component:
                return count
        return 0

    def __contains__(self, component: Component) -> bool:
        return self.count(component) > 0

    # -- derived positions -------------------------------------------------

    def without(self, component: Component) -> "Endgame":
        """Remove one copy of ``component``."""
        out: list[tuple[Component, int]] = []
        found = False
        for candidate, count in self.runs:
            if candidate == component and not found:
                found = True
                if count > 1:
                    out.append((candidate, count - 1))
            else:
                out.append((candidate, count))
        if not found:
            raise ComponentNotPresentError(f"no {component.token} in position")
        return Endgame(tuple(out))

    def add(self, component: Component, count: int = 1) -> "Endgame":
        return Endgame.from_runs(list(self.runs) + [(component, count)])

    def __add__(self, other: "Endgame") -> "Endgame":
        return Endgame.from_runs(list(self.runs) + list(other.runs))

    def __str__(self) -> str:
        return format_position(self)


# -- position grammar -------------------------------------------------------

def _tokenize(text: str) -> list[tuple[str, int, int]]:
    """Split into (kind, value, index) tokens; kinds "num", "*", "+", "L"."""
    tokens: list[tuple[str, int, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
        elif ch == "*":
            tokens.append(("*", 0, i))
            i += 1
        elif ch == "+":
            tokens.append(("+", 0, i))
            i += 1
        elif ch in "Ll":
            tokens.append(("L", 0, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_position(text: str) -> Endgame:
    """Parse position text into a canonical :class:`Endgame`.

    Grammar: ``position := term ("+" term)* | ""`` with
    ``term := [count "*"] length ["L"|"l"]``.  Raises :class:`ParseError`
    on malformed text and :class:`InvalidComponentError` on a chain
    shorter than 3 or a loop shorter than 4.
    """
    tokens = _tokenize(text)
    if not tokens:
        return Endgame()
    pairs: list[tuple[Component, int]] = []
    pos = 0

    def peek(kind: str) -> bool:
        return pos < len(tokens) and tokens[pos][0] == kind

    while True:
        if not peek("num"):
            index = tokens[pos][2] if pos < len(tokens) else len(text)
            raise ParseError("expected a number", index)
        _, number, number_index = tokens[pos]
        pos += 1
        count = 1
        if peek("*"):
            pos += 1
            if number < 1:
                raise ParseError("count must be at least 1", number_index)
            count = number
            if not peek("num"):
                index = tokens[pos][2] if pos < len(tokens) else len(text)
                raise ParseError("expected a length after '*'", index)
            _, number, _ = tokens[pos]
            pos += 1
        kind = ComponentKind.CHAIN
        if peek("L"):
            kind = ComponentKind.LOOP
            pos += 1
        pairs.append((Component(kind, number), count))
        if pos == len(tokens):
            break
        if not peek("+"):
            raise ParseError("expected '+'", tokens[pos][2])
        pos += 1
        if pos == len(tokens):
            raise ParseError("expected a component after '+'", len(text))
    return Endgame.from_runs(pairs)


def format_position(game: Endgame) -> str:
    """Canonical text for a position; inverse of :func:`parse_position`."""
    parts = []
    for component, count in game.runs:
        parts.append(component.token if count == 1 else f"{count}*{component.token}")
    return "+".join(parts)


def component_from_token(token: str) -> Component:
    """Parse a single component token such as ``"3"`` or ``"6L"``."""
    body = token.strip()
    kind = ComponentKind.CHAIN
    if body and body[-1] in "Ll":
        kind = ComponentKind.LOOP
        body = body[:-1]
    if not body.isdigit():
        raise ParseError(f"not a component token: {token!r}", 0)
    return Component(kind, int(body))


# -- O(1) aggregate summary --------------------------------------------------

@dataclass(frozen=True)
class EndgameSummary:
    """Counts and sums from which the closed forms are computed.

    ``big_loop_count``/``big_loop_length_sum`` cover every loop that is
    neither a 4-loop nor a 6-loop; for even-loop positions that is exactly
    the loops of length >= 8, and for odd lengths (which only the
    exhaustive search evaluates) the same buckets keep the controlled-value
    arithmetic correct.
    """

    three_chain_count: int = 0
    big_chain_count: int = 0
    big_chain_length_sum: int = 0
    four_loop_count: int = 0
    six_loop_count: int = 0
    big_loop_count: int = 0
    big_loop_length_sum: int = 0

    @property
    def chain_count(self) -> int:
        return self.three_chain_count + self.big_chain_count

    @property
    def loop_count(self) -> int:
        return self.four_loop_count + self.six_loop_count + self.big_loop_count

    @property
    def component_count(self) -> int:
        return self.chain_count + self.loop_count

    @property
    def is_empty(self) -> bool:
        return self.component_count == 0

    def __add__(self, other: "EndgameSummary") -> "EndgameSummary":
        return EndgameSummary(
            self.three_chain_count + other.three_chain_count,
            self.big_chain_count + other.big_chain_count,
            self.big_chain_length_sum + other.big_chain_length_sum,
            self.four_loop_count + other.four_loop_count,
            self.six_loop_count + other.six_loop_count,
            self.big_loop_count + other.big_loop_count,
            self.big_loop_length_sum + other.big_loop_length_sum,
        )

    # O(1) subgame edits used by the closed-form evaluator.

    def without_three_chain(self) -> "EndgameSummary":
        if self.three_chain_count < 1:
            raise ComponentNotPresentError("no 3-chain in position")
        return replace(self, three_chain_count=self.three_chain_count - 1)

    def without_one_four_loop(self) -> "EndgameSummary":
        if self.four_loop_count < 1:
            raise ComponentNotPresentError("no 4-loop in position")
        return replace(self, four_loop_count=self.four_loop_count - 1)

    def without_all_four_loops(self) -> "EndgameSummary":
        return replace(self, four_loop_count=0)

    def without_one_six_loop(self) -> "EndgameSummary":
        if self.six_loop_count < 1:
            raise ComponentNotPresentError("no 6-loop in position")
        return replace(self, six_loop_count=self.six_loop_count - 1)

    def chains_only(self) -> "EndgameSummary":
        return EndgameSummary(
            three_chain_count=self.three_chain_count,
            big_chain_count=self.big_chain_count,
            big_chain_length_sum=self.big_chain_length_sum,
        )

    def loops_only(self) -> "EndgameSummary":
        return EndgameSummary(
            four_loop_count=self.four_loop_count,
            six_loop_count=self.six_loop_count,
            big_loop_count=self.big_loop_count,
            big_loop_length_sum=self.big_loop_length_sum,
        )


def summarize(game: Endgame) -> EndgameSummary:
    """Aggregate a position; additive over disjoint unions."""
    three = big_chains = big_chain_sum = 0
    four = six = big_loops = big_loop_sum = 0
    for component, count in game.runs:
        if component.is_chain:
            if component.length == 3:
                three += count
            else:
                big_chains += count
                big_chain_sum += component.length * count
        elif component.length == 4:
            four += count
        elif component.length == 6:
            six += count
        else:
            big_loops += count
            big_loop_sum += component.length * count
    return EndgameSummary(
        three, big_chains, big_chain_sum, four, six, big_loops, big_loop_sum
    )


# -- shared play-semantics types ---------------------------------------------

class Player(Enum):
    A = "A"
    B = "B"

    @property
    def opponent(self) -> "Player":
        return Player.B if self is Player.A else Player.A


class ControlChoice(Enum):
    KEEP_CONTROL = "KeepControl"
    TAKE_ALL = "TakeAll"


@dataclass(frozen=True)
class ControlDecision:
    """The controller's reply to an opened component.

    ``indifferent`` is set when both choices lead to the same final net
    score under optimal continuation.
    """

    choice: ControlChoice
    indifferent: bool = False


def keep_control_threshold(kind: ComponentKind) -> int:
    """Boxes sacrificed by the all-but-two / all-but-four trick."""
    return 2 if kind is ComponentKind.CHAIN else 4


def decision_for(rest_value: int, kind: ComponentKind) -> ControlDecision:
    """Optimal keep/take reply given the value of the rest of the game.

    Keep control above the threshold, take everything below it; at the
    threshold both replies are worth the same and we keep control so that
    replays are deterministic.
    """
    threshold = keep_control_threshold(kind)
    if rest_value > threshold:
        return ControlDecision(ControlChoice.KEEP_CONTROL)
    if rest_value < threshold:
        return ControlDecision(ControlChoice.TAKE_ALL)
    return ControlDecision(ControlChoice.KEEP_CONTROL, indifferent=True)
