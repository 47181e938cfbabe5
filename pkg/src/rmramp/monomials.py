"""Combinatorics of monomial exponent vectors with entries below q.

An exponent vector is a plain tuple (a_1, ..., a_s) with 0 <= a_i <= q-1,
identifying the monomial X_1^a_1 ... X_s^a_s in the ring where X^q = X.
This module provides the three orders used by the weight engine (partial,
lexicographic, anti-lexicographic), the degree-reflecting involution mu,
degree windows with their member enumerations, and upward/lower shadows.

Anti-lex comparison looks at the highest-index differing coordinate and
ranks the LARGER entry first, so (q-1, ..., q-1) is the global minimum and
(0, ..., 0) the maximum.  Prefixes of a degree window in this order are the
shadow-minimizing sets the weight formulas are built on.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidWindow, MixedShapes, WindowTooLarge

MATERIALIZE_CAP = 1 << 22    # refuse to build member lists larger than this
_DENSE_CAP = 1 << 22         # dense-grid shadow counting up to this cube size


def degree(a):
    return sum(a)


def _check_same_shape(a, b):
    if len(a) != len(b):
        raise MixedShapes(f"vectors of lengths {len(a)} and {len(b)}")


def cmp_lex(a, b):
    """-1 / 0 / +1 for a before / equal / after b lexicographically."""
    _check_same_shape(a, b)
    if a == b:
        return 0
    return -1 if a < b else 1


def cmp_antilex(a, b):
    """-1 / 0 / +1 in the anti-lexicographic order."""
    _check_same_shape(a, b)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x > y else 1
    return 0


def antilex_key(a):
    """Sort key realizing the anti-lexicographic order."""
    return tuple(-x for x in reversed(a))


def leq_partial(a, b):
    """Coordinatewise a <= b."""
    _check_same_shape(a, b)
    return all(x <= y for x, y in zip(a, b))


def mu(a, q):
    """The involution (a_1,...,a_s) -> (q-1-a_s,...,q-1-a_1).

    Swaps lex with anti-lex order and upward with lower shadows; degree maps
    to s(q-1) - degree.
    """
    return tuple(q - 1 - x for x in reversed(a))


# ---------------------------------------------------------------------------
# degree windows


@dataclass(frozen=True)
class Window:
    """All exponent vectors with lo <= degree <= hi."""
    q: int
    s: int
    lo: int
    hi: int

    def __post_init__(self):
        if self.q < 2 or self.s < 1:
            raise InvalidWindow(f"need q >= 2 and s >= 1, got q={self.q} s={self.s}")
        if not 0 <= self.lo <= self.hi <= self.s * (self.q - 1):
            raise InvalidWindow(
                f"degree bounds ({self.lo},{self.hi}) outside 0..{self.s * (self.q - 1)}")

    @property
    def last_bounds(self):
        return (0, self.q - 1)

    def __contains__(self, a):
        if len(a) != self.s or any(not 0 <= x <= self.q - 1 for x in a):
            return False
        v, w = self.last_bounds
        return self.lo <= sum(a) <= self.hi and v <= a[-1] <= w


@dataclass(frozen=True)
class ClippedWindow(Window):
    """A window further restricted by v <= a_s <= w on the last coordinate."""
    v: int = 0
    w: int = 0

    def __post_init__(self):
        super().__post_init__()
        if not 0 <= self.v <= self.w <= self.q - 1:
            raise InvalidWindow(f"last-coordinate bounds ({self.v},{self.w}) invalid")

    @property
    def last_bounds(self):
        return (self.v, self.w)


def _members(q, s, lo, hi, last_lo, last_hi):
    """Yield window members in anti-lexicographic order."""
    if s == 1:
        for val in range(min(hi, last_hi), max(lo, last_lo) - 1, -1):
            yield (val,)
        return
    for last in range(last_hi, last_lo - 1, -1):
        rest_hi = hi - last
        if rest_hi < 0:
            continue
        rest_lo = max(lo - last, 0)
        if rest_lo > min(rest_hi, (s - 1) * (q - 1)):
            continue
        for rest in _members(q, s - 1, rest_lo, rest_hi, 0, q - 1):
            yield rest + (last,)


def iter_window(window):
    """Stream the members of a window in anti-lex order."""
    v, w = window.last_bounds
    return _members(window.q, window.s, window.lo, window.hi, v, w)


def window_members(window):
    """The full member list in anti-lex order (prefix m is the minimizing set)."""
    out = []
    for a in iter_window(window):
        out.append(a)
        if len(out) > MATERIALIZE_CAP:
            raise WindowTooLarge(
                f"window holds more than {MATERIALIZE_CAP} vectors; "
                "use the counting/element-finding routines instead")
    return out


def lex_prefix(window, m):
    """First m members of the window in lexicographic order.

    Realized through mu-conjugation of the anti-lex enumeration of the
    degree-reflected window, which maps anti-lex prefixes to lex prefixes.
    """
    if isinstance(window, ClippedWindow):
        raise InvalidWindow("lex prefixes are defined for plain degree windows")
    top = window.s * (window.q - 1)
    reflected = Window(window.q, window.s, top - window.hi, top - window.lo)
    out = []
    for a in iter_window(reflected):
        if len(out) == m:
            break
        out.append(mu(a, window.q))
    if len(out) < m:
        raise InvalidWindow(f"window has fewer than {m} members")
    return out


# ---------------------------------------------------------------------------
# shadows


def _validate_points(points, q, s):
    pts = [tuple(a) for a in points]
    for a in pts:
        if len(a) != s:
            raise MixedShapes(f"vector {a} does not have {s} coordinates")
        if any(not 0 <= x <= q - 1 for x in a):
            raise MixedShapes(f"vector {a} has entries outside 0..{q - 1}")
    return pts


def upward_shadow(points, q, s):
    """The set of vectors coordinatewise >= some element of points."""
    pts = _validate_points(points, q, s)
    out = set()
    for a in pts:
        _spread_up(a, q, s, out)
    return out


def _spread_up(a, q, s, out):
    stack = [a]
    while stack:
        b = stack.pop()
        if b in out:
            continue
        out.add(b)
        for t in range(s):
            if b[t] + 1 < q:
                c = b[:t] + (b[t] + 1,) + b[t + 1:]
                if c not in out:
                    stack.append(c)


def lower_shadow(points, q, s):
    """The set of vectors coordinatewise <= some element of points."""
    pts = _validate_points(points, q, s)
    out = set()
    for a in pts:
        stack = [a]
        while stack:
            b = stack.pop()
            if b in out:
                continue
            out.add(b)
            for t in range(s):
                if b[t] > 0:
                    c = b[:t] + (b[t] - 1,) + b[t + 1:]
                    if c not in out:
                        stack.append(c)
    return out


def minimal_elements(points):
    """The antichain of coordinatewise-minimal elements."""
    pts = sorted(set(tuple(a) for a in points), key=sum)
    keep = []
    for a in pts:
        if not any(leq_partial(b, a) for b in keep):
            keep.append(a)
    return keep


def maximal_elements(points):
    pts = sorted(set(tuple(a) for a in points), key=sum, reverse=True)
    keep = []
    for a in pts:
        if not any(leq_partial(a, b) for b in keep):
            keep.append(a)
    return keep


def _union_size_inclusion_exclusion(blocks, combine, size_of):
    """|union of blocks| where pairwise intersections are again blocks."""
    total = 0

    def rec(prefix_block, rest, sign):
        nonlocal total
        for i, b in enumerate(rest):
            blk = b if prefix_block is None else combine(prefix_block, b)
            total += sign * size_of(blk)
            rec(blk, rest[i + 1:], -sign)

    rec(None, blocks, 1)
    return total


def upward_shadow_size(points, q, s):
    """|upward shadow|, exact.

    Dense grid propagation for cubes up to 2^22 points; inclusion-exclusion
    over the minimal antichain beyond that (intersections of upward cones
    are upward cones of coordinatewise maxima).
    """
    pts = _validate_points(points, q, s)
    if not pts:
        return 0
    if q ** s <= _DENSE_CAP:
        arr = np.zeros((q,) * s, dtype=np.uint8)
        for a in set(pts):
            arr[a] = 1
        for ax in range(s):
            np.maximum.accumulate(arr, axis=ax, out=arr)
        return int(arr.sum())
    mins = minimal_elements(pts)
    return _union_size_inclusion_exclusion(
        mins,
        combine=lambda a, b: tuple(max(x, y) for x, y in zip(a, b)),
        size_of=lambda a: _prod(q - x for x in a))


def lower_shadow_size(points, q, s):
    """|lower shadow|, exact; mirror of upward_shadow_size."""
    pts = _validate_points(points, q, s)
    if not pts:
        return 0
    if q ** s <= _DENSE_CAP:
        arr = np.zeros((q,) * s, dtype=np.uint8)
        for a in set(pts):
            arr[a] = 1
        for ax in range(s):
            arr = np.flip(np.maximum.accumulate(np.flip(arr, ax), axis=ax), ax)
        return int(arr.sum())
    maxs = maximal_elements(pts)
    return _union_size_inclusion_exclusion(
        maxs,
        combine=lambda a, b: tuple(min(x, y) for x, y in zip(a, b)),
        size_of=lambda a: _prod(x + 1 for x in a))


def _prod(it):
    out = 1
    for v in it:
        out *= v
    return out
