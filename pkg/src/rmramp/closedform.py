"""Closed-form weight hierarchies for two-variable Reed-Muller codes.

For s = 2 every relative weight M_m(RM_q(u2+t,2), RM_q(u2,2)) and every
weight d_r(RM_q(u,2)) has a closed form, split into cases by how the window
of degrees (u2+1, ..., u2+t) sits inside the 0..2(q-1) degree range:

  case 1:  u2 - q + 2 >= 0          (window entirely in the upper triangle)
  case 2:  u2 - q + t + 1 <= 0      (window entirely in the lower triangle)
  case 3:  otherwise                (window straddles the diagonal)

Within each case the index m decomposes into an anti-diagonal block number
and an offset, recovered here by integer arithmetic.  These formulas serve
as a fast path and as an independent cross-check of the recursive engine.
"""

from .errors import InvalidParameters, RankOutOfRange


def _check_args(q, u2, t):
    if q < 2:
        raise InvalidParameters(f"alphabet size q={q} must be at least 2")
    if t < 1:
        raise InvalidParameters(f"codimension step t={t} must be at least 1")
    if u2 < -1 or u2 + t > 2 * (q - 1):
        raise InvalidParameters(
            f"orders (u2={u2}, t={t}) leave the valid range for q={q}")


def case_of(q, u2, t):
    """Which closed-form case applies (first match in the order 1, 2, 3)."""
    _check_args(q, u2, t)
    if u2 - q + 2 >= 0:
        return 1
    if u2 - q + t + 1 <= 0:
        return 2
    return 3


def codim2(q, u2, t):
    """Codimension of RM_q(u2+t,2) / RM_q(u2,2) by the per-case formula."""
    case = case_of(q, u2, t)
    if case == 1:
        return t * (2 * q - u2 - t - 2) + t * (t + 1) // 2
    if case == 2:
        return t * (t + 1) // 2 + t * (u2 + 1)
    return ((2 * q - u2) * (u2 + t) + 3 * (q - u2)
            - q * q - 2 - t * (t + 3) // 2)


def _triangular_split(m):
    """m = a(a+1)/2 + b with b in 1..a+1; returns (a, b)."""
    a = 0
    while (a + 1) * (a + 2) // 2 < m:
        a += 1
    return a, m - a * (a + 1) // 2


def _block_split(m, width):
    """m = a*width + b with b in 1..width; returns (a, b)."""
    a = (m - 1) // width
    return a, m - a * width


def _rghw2_band_overflow(q, u2, t, m):
    """Closed form for the wide-window regime t > q.

    Here every window row above degree-height u2 starts at x = 0, so the
    anti-lex prefix coincides with the weight-hierarchy prefix of the big
    code while it stays in those rows (giving M_m = d_m), and once they are
    exhausted the shadow already covers everything above height u2, so each
    further window cell contributes exactly one new shadow point.  The
    three-way block split below assumes t <= q and breaks down in this
    regime; the branch is cross-checked against the recursive engine and
    the exhaustive shadow search in the test suite.
    """
    u1 = u2 + t
    top = sum(min(u1 - y, q - 1) + 1 for y in range(u2 + 1, q))
    if m <= top:
        return ghw2(q, u1, m)
    return q * (q - 1 - u2) + (m - top)


def rghw2(q, u2, t, m):
    """M_m(RM_q(u2+t,2), RM_q(u2,2)) in closed form."""
    case = case_of(q, u2, t)
    ell = codim2(q, u2, t)
    if not 1 <= m <= ell:
        raise RankOutOfRange(f"m={m} outside 1..{ell}")

    if case == 3 and t > q:
        return _rghw2_band_overflow(q, u2, t, m)

    if case == 1:
        head = t * (2 * q - u2 - t - 2)
        if m <= head:
            a, b = _block_split(m, t)
            return (2 * q - 2 - u2) * (a + 1) - a * (a + 1) // 2 + b - t
        c = m - head
        return (2 * q - u2 - t - 2) * (2 * q - u2 + t - 1) // 2 + c

    if case == 2:
        head = t * (t + 1) // 2
        if m <= head:
            a, b = _triangular_split(m)
            return q * (q - u2 - t + a) + b - a - 1
        a, b = _block_split(m - head, t)
        return q * (q + a - u2) + b - t - 1 - a * (a + 3) // 2

    base = (q - u2 - 2) * (2 * t - q + u2 + 1) // 2
    if m <= base + t:
        # blocks of growing width u2+t-q+a+2 for a = 0, 1, ...
        a, rest = 0, m
        while rest > u2 + t - q + a + 2:
            rest -= u2 + t - q + a + 2
            a += 1
        return (a + 2) * (q - 1) - u2 - t + rest
    if m <= base + t * (q - t):
        a, b = _block_split(m - base - t, t)   # m - base = (a+1)t + b
        return q * (q - u2 + a) - a * (a + 3) // 2 - t + b - 1
    c = m - base - t * (q - t)
    return (3 * q * q - 2 * u2 * q - 3 * q - t * t - t) // 2 + c


def ghw2_dim(q, u):
    """dim RM_q(u,2) by the per-case closed form."""
    if u < 0 or u > 2 * (q - 1):
        raise InvalidParameters(f"order u={u} outside 0..{2 * (q - 1)}")
    if u - q + 1 <= 0:
        return (u + 1) * (u + 2) // 2
    return q * (2 * u - q + 3) - u * (u + 3) // 2 - 1


def ghw2(q, u, r):
    """d_r(RM_q(u,2)) in closed form."""
    if q < 2:
        raise InvalidParameters(f"alphabet size q={q} must be at least 2")
    k = ghw2_dim(q, u)
    if not 1 <= r <= k:
        raise RankOutOfRange(f"r={r} outside 1..{k}")

    if u - q + 1 <= 0:
        a, b = _triangular_split(r)
        return q * (q - u + a) + b - a - 1

    head = q * (u + 2) - u * (u + 3) // 2 - 1
    if r <= head:
        a, rest = 0, r
        while rest > u - q + 2 + a:
            rest -= u - q + 2 + a
            a += 1
        return (a + 2) * (q - 1) - u + rest
    c = r - head
    return q * (2 * q - u - 1) + c


def rghw_minus_ghw_special(q, m):
    """M_m - d_m for the one-step pair at the top order below q-1.

    The pair is RM_q(q-1,2) / RM_q(q-2,2); the difference is evaluated as
    rghw2 - ghw2 rather than through the expanded quartic.
    """
    if not 1 <= m <= q:
        raise RankOutOfRange(f"m={m} outside 1..{q}")
    return rghw2(q, q - 2, 1, m) - ghw2(q, q - 1, m)
