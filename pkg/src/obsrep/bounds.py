"""Counting thresholds: the vertex count where encodings run out of graphs.

A graph on n labeled vertices drawn with at most h convex obstacles is
pinned down by h circular tangent sequences, and there are fewer than
(2n)^(2hn) ways to write those; meanwhile there are 2^C(n,2) labeled graphs.
Once the first quantity drops below the second, some graph on n vertices
needs more than h obstacles.  A second mode counts order types instead of
sequences: with s obstacle sides in total, the number of distinct
configurations is at most 2^(c(n+s)·log2(n+s)) for a constant c the caller
supplies, since no bound pins the constant down.

All comparisons are exact: the inequalities are cleared of logarithms and
denominators and tested on integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ObsrepError

_SCAN_LIMIT = 200_000


@dataclass(frozen=True)
class BoundsQuery:
    """One counting question: obstacle-count mode (h) or side-count mode (s, c).

    Exactly one of ``h`` and ``s`` must be given.  ``c`` is the positive
    rational constant of the side-count bound and is meaningful only there;
    it defaults to 1.
    """

    h: int | None = None
    s: int | None = None
    c: Fraction | None = None

    def __post_init__(self):
        if (self.h is None) == (self.s is None):
            raise ObsrepError("give exactly one of h (obstacle count) and s (total sides)")
        if self.h is not None:
            if self.h < 1:
                raise ObsrepError("obstacle count h must be >= 1")
            if self.c is not None:
                raise ObsrepError("the constant c applies only to side-count (s) queries")
        else:
            if self.s < 3:
                raise ObsrepError("total side count s must be >= 3 (a polygon has three sides)")
            c = Fraction(1) if self.c is None else Fraction(self.c)
            if c <= 0:
                raise ObsrepError("the constant c must be positive")
            object.__setattr__(self, "c", c)


def _beaten(query: BoundsQuery, n: int) -> bool:
    """Does the encoding count fall strictly below the graph count at n?"""
    pairs = n * (n - 1) // 2
    if query.h is not None:
        # (2n)^(2hn) < 2^C(n,2)  <=>  2hn*log2(2n) < C(n,2)
        return (2 * n) ** (2 * query.h * n) < 1 << pairs
    # (n+s)^(c(n+s)) < 2^C(n,2), cleared of the denominator of c = p/q:
    # (n+s)^(p(n+s)) < 2^(q*C(n,2))
    m = n + query.s
    p, q = query.c.numerator, query.c.denominator
    return m ** (p * m) < 1 << (q * pairs)


def bounds_threshold(query: BoundsQuery) -> int:
    """Smallest n at which there are more labeled graphs than encodings.

    From that n on (the left side grows like n·log n against n² on the
    right), at least one n-vertex graph cannot be realized within the
    query's obstacle budget.
    """
    for n in range(2, _SCAN_LIMIT + 1):
        if _beaten(query, n):
            return n
    raise ObsrepError(
        f"no threshold below n = {_SCAN_LIMIT}; the query constant is out of scale"
    )
