"""Controlled-value arithmetic.

The fully controlled value is the controller's net score if they keep
control to the very end, losing two boxes per chain and four per loop:
``fcv = sum(chain - 4) + sum(loop - 8)``.  Adding a terminal bonus for the
last region (4, 6 or 8 depending on which component types exist) gives the
controlled value ``cv = fcv + tb``, an O(1) quantity that pins down the
true game value in most positions.

All three functions read only an :class:`~loonyend.model.EndgameSummary`,
so they cost the same for a hundred loops as for a million.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import EndgameSummary


def fcv(summary: EndgameSummary) -> int:
    """Net score for a controller who never relinquishes control."""
    return (
        -summary.three_chain_count
        + (summary.big_chain_length_sum - 4 * summary.big_chain_count)
        - 4 * summary.four_loop_count
        - 2 * summary.six_loop_count
        + (summary.big_loop_length_sum - 8 * summary.big_loop_count)
    )


def tb(summary: EndgameSummary) -> int:
    """Terminal bonus: 0 empty, 4/8/6 by the component types present.

    The four cases are exhaustive and mutually exclusive: empty; a chain of
    length >= 4 present or no loops at all; loops but no chains; loops plus
    chains that are all 3-chains.
    """
    if summary.is_empty:
        return 0
    if summary.big_chain_count > 0 or summary.loop_count == 0:
        return 4
    if summary.chain_count == 0:
        return 8
    return 6


def cv(summary: EndgameSummary) -> int:
    """Controlled value: ``fcv + tb``."""
    return fcv(summary) + tb(summary)


@dataclass(frozen=True)
class CvBreakdown:
    fcv: int
    tb: int

    @property
    def cv(self) -> int:
        return self.fcv + self.tb


def cv_breakdown(summary: EndgameSummary) -> CvBreakdown:
    return CvBreakdown(fcv=fcv(summary), tb=tb(summary))
