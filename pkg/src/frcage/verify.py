"""Independent brute-force checks for constructed designs.

Everything here is deliberately simple counting: common-neighbor scans
for 4-cycles, pair-coverage tallies for the Steiner property, and the
closed-form girth-6 lower bounds.  Witnesses are reported for the
first failure in a deterministic scan order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .cage import BipartiteDesign, BlockCollection, blocks_from_graph
from .errors import InvalidDegrees

__all__ = [
    "BoundPair",
    "VerificationReport",
    "moore_bounds",
    "girth_at_least_six",
    "check_steiner_exact",
    "verify_design",
]


@dataclass(frozen=True)
class BoundPair:
    """Minimum vertex counts for a girth-6 biregular bipartite graph."""

    v_min: int
    u_min: Fraction

    @property
    def u_min_ceil(self) -> int:
        return math.ceil(self.u_min)


def moore_bounds(k: int, l: int) -> BoundPair:
    """v >= 1 + l(k-1) and u >= l + l(l-1)(k-1)/k, exact."""
    if k < 2 or l < k:
        raise InvalidDegrees(f"need l >= k >= 2, got k={k}, l={l}")
    return BoundPair(v_min=1 + l * (k - 1), u_min=l + Fraction(l * (l - 1) * (k - 1), k))


def girth_at_least_six(d: BipartiteDesign):
    """(True, None) when no two X vertices share two Y neighbors;
    otherwise (False, (x, y, x2, y2)) naming one 4-cycle.

    Counts common neighbors by scanning each X vertex's Y-pair set,
    the cheap side when l >> k; a pair seen twice is a 4-cycle.
    """
    seen: dict[int, int] = {}
    for c, ys in enumerate(d.x_neighbors):
        for a, b in combinations(sorted(ys), 2):
            code = a * d.v + b
            if code in seen:
                return False, (seen[code], a, c, b)
            seen[code] = c
    return True, None


def check_steiner_exact(bc: BlockCollection):
    """(True, None) when every unordered element pair lies in exactly
    one block; otherwise (False, (a, b, count)) for the first bad pair
    in sorted order."""
    counts: dict[tuple[int, int], int] = {}
    for block in bc.blocks:
        for pair in combinations(sorted(block), 2):
            counts[pair] = counts.get(pair, 0) + 1
    total = bc.num_elements * (bc.num_elements - 1) // 2
    if len(counts) == total and all(c == 1 for c in counts.values()):
        return True, None
    for a in range(bc.num_elements):
        for b in range(a + 1, bc.num_elements):
            c = counts.get((a, b), 0)
            if c != 1:
                return False, (a, b, c)
    raise AssertionError("inconsistent pair counts")  # unreachable


@dataclass(frozen=True)
class VerificationReport:
    girth_ok: bool
    degrees_ok: bool
    steiner_exact: bool
    bounds_tight: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.girth_ok and self.degrees_ok and self.steiner_exact and self.bounds_tight

    def as_dict(self) -> dict:
        return {
            "girth_ok": self.girth_ok,
            "degrees_ok": self.degrees_ok,
            "steiner_exact": self.steiner_exact,
            "bounds_tight": self.bounds_tight,
            "all_ok": self.all_ok,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def verify_design(d: BipartiteDesign) -> VerificationReport:
    """Run degree, girth, Steiner-exactness and bound-tightness checks
    against the design's declared parameters.  Failures are reported,
    never raised."""
    witnesses: dict = {}

    degrees_ok = len(d.x_neighbors) == d.u
    if degrees_ok:
        for c, ys in enumerate(d.x_neighbors):
            if len(ys) != d.k or len(set(ys)) != d.k:
                degrees_ok = False
                witnesses["degree"] = ("x", c, len(set(ys)))
                break
    if degrees_ok:
        y_deg = [0] * d.v
        for ys in d.x_neighbors:
            for g in ys:
                y_deg[g] += 1
        for g, deg in enumerate(y_deg):
            if deg != d.l:
                degrees_ok = False
                witnesses["degree"] = ("y", g, deg)
                break

    girth_ok, w = girth_at_least_six(d)
    if w is not None:
        witnesses["four_cycle"] = w

    steiner_ok, w = check_steiner_exact(blocks_from_graph(d, "X"))
    if w is not None:
        witnesses["pair"] = w

    bounds = moore_bounds(d.k, d.l) if d.l >= d.k >= 2 else None
    bounds_tight = (
        bounds is not None and d.v == bounds.v_min and Fraction(d.u) == bounds.u_min
    )
    if not bounds_tight:
        witnesses["bounds"] = (d.v, d.u)

    return VerificationReport(
        girth_ok=girth_ok,
        degrees_ok=degrees_ok,
        steiner_exact=steiner_ok,
        bounds_tight=bounds_tight,
        witnesses=witnesses,
    )
