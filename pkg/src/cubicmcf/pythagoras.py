"""Sums of squares in a cubic order.

Three layers: enumerate every perfect square of an order element lying
totally below a target (``squares_below``), verify an explicit
sum-of-squares identity (``verify_representation``), and search the minimal
number of squares summing to the target (``min_squares``), which yields
lower bounds for the Pythagoras number of the order.

The square enumeration is exact.  Per-embedding bounds |s_i(w)| <= sqrt of
s_i(gamma) are widened outward with rational arithmetic, converted to an
integer coordinate box, and a candidate w is kept only when gamma - w^2 is
totally nonnegative; a float pass merely prescreens with a wide margin.
The minimal-count search is a depth-first multiset search over the square
set, largest traces first, pruning branches whose remainder stops being
totally nonnegative, whose trace can no longer reach zero, or whose leading
coordinate leaves the reachable range.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import (
    AlgInt,
    OrderError,
    coordinate_box,
    is_totally_positive,
    is_unit,
    mul,
    totally_leq,
    trace,
)


class NotTotallyPositive(OrderError):
    """The target of a square enumeration must be totally positive."""


class NoRepresentation(OrderError):
    """The target is not a sum of squares from its square set."""


class MoreThanCap:
    """Every representation of the target needs more squares than the cap."""

    __slots__ = ("cap",)

    def __init__(self, cap):
        self.cap = cap

    def __bool__(self):
        return False

    def __eq__(self, other):
        return isinstance(other, MoreThanCap) and other.cap == self.cap

    def __hash__(self):
        return hash(("MoreThanCap", self.cap))

    def __repr__(self):
        return "MoreThanCap(%d)" % (self.cap,)


class SquareSet:
    """Perfect squares of order elements totally below a target.

    target   the totally positive bound
    squares  w^2 with target - w^2 totally nonnegative, one per pair (w, -w),
             sorted by descending trace
    roots    a witness w for each listed square
    """

    __slots__ = ("target", "squares", "roots")

    def __init__(self, target, squares, roots):
        self.target = target
        self.squares = squares
        self.roots = roots

    def __iter__(self):
        return iter(self.squares)

    def __len__(self):
        return len(self.squares)

    def __repr__(self):
        return "SquareSet(%r, %d squares)" % (self.target, len(self.squares))


def _as_element(order, v):
    if isinstance(v, AlgInt):
        return v if v.order is order else order.element(*v.v)
    if isinstance(v, (int, Fraction)):
        return order.element(v)
    return order.element(*v)


def _sqrt_upper(fr):
    # rational upper bound for sqrt(fr), fr >= 0
    n, d = fr.numerator, fr.denominator
    return Fraction(math.isqrt(n * d) + 1, d)


def squares_below(gamma):
    """All squares of order elements totally below gamma, exactly.

    Enumerates the integer coordinate box induced by the outward-rounded
    per-embedding bounds |s_i(w)| <= sqrt of s_i(gamma) and keeps w^2
    whenever gamma - w^2 is totally nonnegative.  Rational squares are
    included; w and -w are counted once.
    """
    order = gamma.order
    if not is_totally_positive(gamma):
        raise NotTotallyPositive("target %r is not totally positive" % (gamma,))
    bounds = []
    caps = []
    for i in range(3):
        lo, hi = order.value_interval(i, gamma.v, 80)
        b = _sqrt_upper(hi)
        bounds.append((-b, b))
        caps.append(float(hi))
    box = coordinate_box(order, bounds)
    xs = [order.root_float(i) for i in range(3)]
    squares, roots, seen = [], [], set()
    for c0 in range(box[0][0], box[0][1] + 1):
        for c1 in range(box[1][0], box[1][1] + 1):
            for c2 in range(box[2][0], box[2][1] + 1):
                if c0 == 0 and c1 == 0 and c2 == 0:
                    continue
                skip = False
                for i in range(3):
                    val = c0 + c1 * xs[i] + c2 * xs[i] * xs[i]
                    if val * val > caps[i] + 1e-6 * (1.0 + caps[i]):
                        skip = True
                        break
                if skip:
                    continue
                w = order.element(c0, c1, c2)
                s = mul(w, w)
                if s.v in seen:
                    continue
                if totally_leq(s, gamma):
                    seen.add(s.v)
                    squares.append(s)
                    roots.append(w)
    idx = sorted(range(len(squares)), key=lambda t: (-trace(squares[t]), squares[t].v))
    return SquareSet(gamma, [squares[t] for t in idx], [roots[t] for t in idx])


def verify_representation(gamma, parts):
    """True when the squares of the given parts sum to gamma exactly."""
    order = gamma.order
    total = order.element(0)
    for p in parts:
        p = _as_element(order, p)
        total = total + mul(p, p)
    return total == gamma


def _reachable(v0, lo1, hi1, remaining):
    # can a sum of 1..remaining values, each within [lo1, hi1], reach v0?
    if remaining <= 0:
        return False
    lo = min(lo1, lo1 * remaining)
    hi = max(hi1, hi1 * remaining)
    return lo <= v0 <= hi


def _search(gamma, cap, square_set):
    sq = square_set if square_set is not None else squares_below(gamma)
    squares = list(sq.squares)
    if not squares:
        raise NoRepresentation("no squares lie totally below %r" % (gamma,))
    traces = [trace(s) for s in squares]
    min_trace = min(traces)
    v0lo = min(s.v[0] for s in squares)
    v0hi = max(s.v[0] for s in squares)
    hard_cap = trace(gamma) // min_trace
    best = [None, None]

    def dfs(rem, start, used, picked):
        if not rem:
            if best[0] is None or used < best[0]:
                best[0] = used
                best[1] = list(picked)
            return
        bound = hard_cap if best[0] is None else min(best[0] - 1, hard_cap)
        budget = bound - used
        if budget <= 0:
            return
        rt = trace(rem)
        if rt < min_trace:
            return
        if not _reachable(rem.v[0], v0lo, v0hi, budget):
            return
        if not is_totally_positive(rem):
            return
        for t in range(start, len(squares)):
            if rt > budget * traces[t]:
                break
            s = squares[t]
            if not totally_leq(s, rem):
                continue
            picked.append(s)
            dfs(rem - s, t, used + 1, picked)
            picked.pop()

    dfs(gamma, 0, 0, [])
    if best[0] is None:
        raise NoRepresentation("%r is not a sum of squares from its square set"
                               % (gamma,))
    if best[0] > cap:
        return MoreThanCap(cap), None
    return best[0], best[1]


def min_squares(gamma, cap=8, square_set=None):
    """Minimal number of squares from squares_below(gamma) summing to gamma.

    Returns the count when it is at most cap and MoreThanCap otherwise;
    raises NoRepresentation when no multiset of the squares sums to gamma
    at all.  A precomputed SquareSet may be passed to skip re-enumeration.
    """
    if not is_totally_positive(gamma):
        raise NotTotallyPositive("target %r is not totally positive" % (gamma,))
    count, _ = _search(gamma, cap, square_set)
    return count


def minimal_decomposition(gamma, cap=8, square_set=None):
    """A witness multiset of squares realizing min_squares(gamma, cap).

    Returns a list of squares summing to gamma of minimal length, or
    MoreThanCap; raises NoRepresentation as min_squares does.
    """
    if not is_totally_positive(gamma):
        raise NotTotallyPositive("target %r is not totally positive" % (gamma,))
    count, parts = _search(gamma, cap, square_set)
    if isinstance(count, MoreThanCap):
        return count
    return parts


def standard_target(order):
    """The canonical lower-bound target of an ennola1 order Z[g], with an
    explicit sum-of-squares witness.

    Returns (gamma, parts) with gamma the sum of the squares of the parts:
    gamma = a^2-3a+11 - (a^2-5a+1) g - (a-5) g^2
          = 1 + 1 + 1 + 2^2 + (1+g)^2 + (a-2 - (a-1) g - g^2)^2.
    """
    if getattr(order, "family", None) != "ennola1":
        raise OrderError("no standard Pythagoras target for this order")
    a = order.family_params["a"]
    gamma = order.element(a * a - 3 * a + 11, -(a * a - 5 * a + 1), -(a - 5))
    parts = [order.element(1), order.element(1), order.element(1),
             order.element(2), order.element(1, 1, 0),
             order.element(a - 2, -(a - 1), -1)]
    return gamma, parts


def pythagoras_lower_bound(order, gamma=None, cap=8):
    """Established lower bound for the Pythagoras number witnessed by gamma.

    gamma defaults to the standard target of the order's family; the value
    is min_squares(gamma, cap), or cap + 1 when even cap squares do not
    suffice.  The witness representation is verified first, so the target
    provably lies in the set of sums of squares.
    """
    if gamma is None:
        gamma, parts = standard_target(order)
        if not verify_representation(gamma, parts):
            raise OrderError("standard witness failed verification")
    else:
        gamma = _as_element(order, gamma)
    res = min_squares(gamma, cap)
    if isinstance(res, MoreThanCap):
        return cap + 1
    return res


def unit_squares_below(square_set):
    """The squares in the set whose witness root is a unit."""
    return [s for s, w in zip(square_set.squares, square_set.roots)
            if is_unit(w)]
