"""Value-preserving merges of long chains and very long loops.

Chains of length >= 4 can be replaced by one chain carrying the same
surplus over 4 (an a-chain plus a b-chain equals an (a+b-4)-chain), and
loops of length >= 8 by one loop carrying the same surplus over 8, without
changing the value of the position or the optimality of moves elsewhere.
3-chains, 4-loops and 6-loops drive the case analysis and are never
touched.  The reduction is an optional normalisation: the closed-form
solver does not need it, but it shrinks search keys and makes a good
property-test surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Component, ComponentKind, Endgame, chain, loop


@dataclass(frozen=True)
class Merge:
    """Components folded into one, as (length, count) runs."""

    kind: ComponentKind
    sources: tuple[tuple[int, int], ...]
    result: Component


@dataclass(frozen=True)
class ReducedForm:
    original: Endgame
    reduced: Endgame
    merges: tuple[Merge, ...]


def _merge(game: Endgame, kind: ComponentKind, floor: int) -> ReducedForm:
    mergeable = [
        (component, count)
        for component, count in game.runs
        if component.kind is kind and component.length >= floor
    ]
    total = sum(count for _, count in mergeable)
    if total <= 1:
        return ReducedForm(game, game, ())
    surplus = sum((component.length - floor) * count for component, count in mergeable)
    make = chain if kind is ComponentKind.CHAIN else loop
    merged = make(floor + surplus)
    kept = [
        (component, count)
        for component, count in game.runs
        if not (component.kind is kind and component.length >= floor)
    ]
    reduced = Endgame.from_runs(kept + [(merged, 1)])
    record = Merge(
        kind=kind,
        sources=tuple((component.length, count) for component, count in mergeable),
        result=merged,
    )
    return ReducedForm(game, reduced, (record,))


def amalgamate_chains(game: Endgame) -> ReducedForm:
    """Fold all chains of length >= 4 into one of length 4 + sum(c - 4)."""
    return _merge(game, ComponentKind.CHAIN, 4)


def amalgamate_loops(game: Endgame) -> ReducedForm:
    """Fold all loops of length >= 8 into one of length 8 + sum(p - 8)."""
    return _merge(game, ComponentKind.LOOP, 8)


def amalgamate(game: Endgame) -> ReducedForm:
    """Apply both merges; the result has at most one chain >= 4 and at most
    one loop >= 8."""
    first = amalgamate_chains(game)
    second = amalgamate_loops(first.reduced)
    return ReducedForm(game, second.reduced, first.merges + second.merges)
