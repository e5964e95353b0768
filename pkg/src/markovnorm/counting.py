"""Counting Markov triples below a bound and fitting the growth constant.

The number of triples with largest entry at most R grows like C (ln R)^2.
Both counters walk the value recurrence directly with exact integers and
prune as soon as the new maximum exceeds the bound, which is valid because
the maximum strictly increases away from the root region.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import PreconditionViolatedError


class CountPoint(NamedTuple):
    bound: int
    count: int
    c_estimate: float


def _require_bound(R):
    if not isinstance(R, int) or R < 1:
        raise PreconditionViolatedError(f"bound must be an integer >= 1, got {R!r}")


def count_triples(R: int) -> int:
    """Number of unordered Markov triples with maximal entry <= R."""
    _require_bound(R)
    count = 1 + (1 if R >= 2 else 0)  # (1,1,1) and (1,1,2)
    stack = [(1, 2, 5)] if R >= 5 else []
    while stack:
        ml, mr, mm = stack.pop()
        if mm > R:
            continue
        count += 1
        stack.append((ml, mm, 3 * ml * mm - mr))
        stack.append((mm, mr, 3 * mm * mr - ml))
    return count


def count_lattice(R: int) -> int:
    """Number of reduced slopes p/q in [0, 1] whose Markov number is <= R.

    Walks the mediant tree between 0/1 and 1/1 pruning on the value, then
    adds the two boundary slopes.  Empirically this equals count_triples(R)
    exactly (offset 0): the spine triples pair with the boundary slopes and
    every other triple pairs with the interior slope indexing it.
    """
    _require_bound(R)
    count = 1 + (1 if R >= 2 else 0)  # slopes 0/1 and 1/1
    stack = [((0, 1, 1), (1, 1, 2), (1, 2, 5))] if R >= 5 else []
    while stack:
        (pl, ql, ml), (pr, qr, mr), (pm, qm, mm) = stack.pop()
        if mm > R:
            continue
        count += 1
        stack.append(((pl, ql, ml), (pm, qm, mm),
                      (pl + pm, ql + qm, 3 * ml * mm - mr)))
        stack.append(((pm, qm, mm), (pr, qr, mr),
                      (pm + pr, qm + qr, 3 * mm * mr - ml)))
    return count


def fit_constant(schedule: list[int]) -> list[CountPoint]:
    """Counts and C-estimates count/(ln R)^2 along an increasing schedule."""
    if not schedule:
        raise PreconditionViolatedError("schedule must be non-empty")
    for R in schedule:
        if not isinstance(R, int) or R < 2:
            raise PreconditionViolatedError(
                f"schedule entries must be integers >= 2, got {R!r}")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise PreconditionViolatedError("schedule must be strictly increasing")
    points = []
    for R in schedule:
        n = count_triples(R)
        points.append(CountPoint(R, n, n / math.log(R) ** 2))
    return points
