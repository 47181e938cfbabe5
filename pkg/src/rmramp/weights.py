"""Generalized and relative generalized Hamming weights of q-ary Reed-Muller codes.

The engine rests on four exact combinatorial routines over degree windows
F_q((a,b),s) = {exponent vectors with all entries < q and degree in [a,b]}:

  rho            window cardinalities by the alternating binomial sum
  veca           the m-th window member in anti-lexicographic order,
                 found recursively without materializing the window
  rank_in_window the anti-lex position of a given member
  rank_in_cube   the anti-lex position inside the full cube, in closed form

The r-th weight of RM_q(u1,s) is the cube rank of the r-th member of
F((0,u1),s); the m-th relative weight of the pair RM_q(u1,s) / RM_q(u2,s)
is t - r + m where t and r are the cube rank and the F((0,u1),s) rank of
the m-th member of F((u2+1,u1),s).  Order u = -1 denotes the zero code.
"""

from dataclasses import dataclass
from math import comb

from .errors import (InvalidParameters, InvalidWindow, NotInWindow,
                     PreconditionViolated, RankOutOfRange)
from .monomials import Window

# dimension prefix tables: _DIMS[(q, s)][u + 1] = dim RM_q(u, s) for u in -1..s(q-1)
_DIMS = {}


def _dims(q, s):
    table = _DIMS.get((q, s))
    if table is None:
        top = s * (q - 1)
        table = [0] * (top + 2)
        for i in range(top + 1):
            # number of exponent vectors of degree exactly i with entries < q
            cnt = 0
            for j in range(i // q + 1):
                cnt += (-1) ** j * comb(s, j) * comb(s - 1 + i - q * j, s - 1)
            table[i + 1] = table[i] + cnt
        _DIMS[(q, s)] = table
    return table


def rm_dim(u, s, q):
    """dim RM_q(u, s); u = -1 gives the zero code."""
    _validate_qs(q, s)
    top = s * (q - 1)
    if not -1 <= u <= top:
        raise InvalidParameters(f"order {u} outside -1..{top}")
    return _dims(q, s)[u + 1]


def _rho(a, b, s, q):
    """|F_q((a,b),s)| with relaxed bounds: negative or oversized windows clamp."""
    if b < a or b < 0:
        return 0
    if s == 0:
        return 1 if a <= 0 else 0
    table = _dims(q, s)
    top = s * (q - 1)
    if b > top:
        b = top
    a = max(a, 0)
    if a > top:
        return 0
    return table[b + 1] - table[a]


def _validate_qs(q, s):
    if q < 2:
        raise InvalidParameters(f"alphabet size q={q} must be at least 2")
    if s < 1:
        raise InvalidParameters(f"variable count s={s} must be at least 1")


def rho(a, b, s, q):
    """|F_q((a,b),s)|, exact (arbitrary precision)."""
    _validate_qs(q, s)
    if not 0 <= a <= b <= s * (q - 1):
        raise InvalidWindow(f"window ({a},{b}) invalid for s={s}, q={q}")
    return _rho(a, b, s, q)


def rho_clipped(a, b, v, w, s, q):
    """|F_q((a,b),(v,w),s)|: members whose last coordinate lies in [v, w]."""
    _validate_qs(q, s)
    if not 0 <= a <= b <= s * (q - 1):
        raise InvalidWindow(f"window ({a},{b}) invalid for s={s}, q={q}")
    if not 0 <= v <= w <= q - 1:
        raise InvalidWindow(f"last-coordinate bounds ({v},{w}) invalid for q={q}")
    return sum(_rho(a - v - i, b - v - i, s - 1, q) for i in range(w - v + 1))


def veca(a, b, v, s, m, q, trace=None):
    """The m-th member of F_q((a,b),(0,v),s) in anti-lexicographic order.

    Runs the window-splitting recursion: compare m against the count r of
    members whose last coordinate equals the current cap v; recurse with the
    cap lowered (m -> m - r), or into one fewer variable, or finish with the
    closed form for the block's last element.  With v = q-1 this answers the
    element-finding question for plain degree windows.

    If trace is a list, every computed count r is appended to it.
    """
    _validate_qs(q, s)
    if not (0 <= a <= b <= s * (q - 1) and 0 <= v <= q - 1):
        raise PreconditionViolated(
            f"invalid arguments (a={a}, b={b}, v={v}, s={s}, q={q})")
    total = sum(_rho(a - i, b - i, s - 1, q) for i in range(min(v, b) + 1)) \
        if s > 1 else max(0, min(b, v) - max(a, 0) + 1)
    if not 1 <= m <= total:
        raise PreconditionViolated(
            f"m={m} outside 1..{total} for window ({a},{b}) capped at {v}")

    suffix = []
    while True:
        if v > b:
            v = b
            continue
        if s == 1:
            head = (v - m + 1,)
            break
        alpha = max(a - v, 0)
        dims = _dims(q, s - 1)
        top = (s - 1) * (q - 1)
        hi = min(b - v, top)
        r = (dims[hi + 1] - dims[min(alpha, top + 1)]) if hi >= alpha else 0
        if trace is not None:
            trace.append(r)
        if m > r:
            v -= 1
            m -= r
        elif m < r:
            suffix.append(v)
            a, b, v, s = alpha, b - v, q - 1, s - 1
        else:
            theta1 = alpha % (q - 1)
            theta2 = (alpha - theta1) // (q - 1)
            if theta2 < s - 1:
                head = (q - 1,) * theta2 + (theta1,) + (0,) * (s - theta2 - 2) + (v,)
            else:
                head = (q - 1,) * theta2 + (v,)
            break
    return head + tuple(reversed(suffix))


def rank_in_cube(a, q):
    """1-based anti-lex position of a in the full cube of its dimension."""
    t = q ** len(a)
    for i, x in enumerate(a):
        t -= x * q ** i
    return t


def rank_in_window(a, window):
    """1-based anti-lex position of a within a degree window.

    Counts the members strictly before a: for each trailing-agreement length
    j, those whose coordinate s-j exceeds a's, computed as window counts in
    one fewer variable.  Fixing the trailing coordinates spends their degree
    on both window bounds, so the lower and upper bound shrink identically.
    """
    if not isinstance(window, Window) or window.last_bounds != (0, window.q - 1):
        raise InvalidWindow("rank_in_window expects a plain degree window")
    if a not in window:
        raise NotInWindow(f"{a} is not in {window}")
    q, s, lo, hi = window.q, window.s, window.lo, window.hi
    r = 1
    trailing = 0
    for j in range(s):
        aj = a[s - 1 - j]
        trailing += aj
        s2 = s - j - 1
        if s2 == 0:
            for i in range(q - aj - 1):
                if lo - trailing - i - 1 <= 0 <= hi - trailing - i - 1:
                    r += 1
            continue
        dims = _dims(q, s2)
        top = s2 * (q - 1)
        for i in range(q - aj - 1):
            hi2 = hi - trailing - i - 1
            if hi2 < 0:
                break
            lo2 = max(lo - trailing - i - 1, 0)
            if lo2 > top:
                continue
            r += dims[min(hi2, top) + 1] - dims[lo2]
    return r


def dual_order(u, s, q):
    """Order u' with RM_q(u',s) the dual code of RM_q(u,s): s(q-1) - u - 1."""
    _validate_qs(q, s)
    top = s * (q - 1)
    if not -1 <= u <= top:
        raise InvalidParameters(f"order {u} outside -1..{top}")
    return top - u - 1


@dataclass(frozen=True)
class CodePair:
    """Nested pair RM_q(u2,s) strictly inside RM_q(u1,s); u2 = -1 is the zero code."""
    q: int
    s: int
    u1: int
    u2: int = -1

    def __post_init__(self):
        _validate_qs(self.q, self.s)
        top = self.s * (self.q - 1)
        if not -1 <= self.u2 < self.u1 <= top:
            raise InvalidParameters(
                f"need -1 <= u2 < u1 <= {top}, got u1={self.u1}, u2={self.u2}")

    @property
    def n(self):
        return self.q ** self.s

    @property
    def codim(self):
        return rm_dim(self.u1, self.s, self.q) - rm_dim(self.u2, self.s, self.q)

    @property
    def window(self):
        return Window(self.q, self.s, self.u2 + 1, self.u1)


def ghw(u1, s, q, r):
    """The r-th generalized Hamming weight of RM_q(u1, s)."""
    k = rm_dim(u1, s, q)
    if not 1 <= r <= k:
        raise RankOutOfRange(f"r={r} outside 1..{k}")
    return rank_in_cube(veca(0, u1, q - 1, s, r, q), q)


def rghw_explain(pair, m):
    """(member, window rank r, cube rank t, weight) for the m-th relative weight."""
    ell = pair.codim
    if not 1 <= m <= ell:
        raise RankOutOfRange(f"m={m} outside 1..{ell}")
    a = veca(pair.u2 + 1, pair.u1, pair.q - 1, pair.s, m, pair.q)
    r = rank_in_window(a, Window(pair.q, pair.s, 0, pair.u1))
    t = rank_in_cube(a, pair.q)
    return a, r, t, t - r + m


def rghw(pair, m):
    """The m-th relative generalized Hamming weight of the pair."""
    return rghw_explain(pair, m)[3]


def hierarchy(pair):
    """All codim-many relative weights, strictly increasing."""
    return [rghw(pair, m) for m in range(1, pair.codim + 1)]


def ghw_hierarchy(u1, s, q, limit=None):
    """The generalized Hamming weights d_1..d_k (optionally only the first limit)."""
    k = rm_dim(u1, s, q)
    count = k if limit is None else min(limit, k)
    return [ghw(u1, s, q, r) for r in range(1, count + 1)]
