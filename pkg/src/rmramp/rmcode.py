"""Evaluation machinery for q-ary Reed-Muller codes.

Evaluation points are the q^s tuples over the canonical field enumeration,
listed in lexicographic order of their integer encodings (the first
coordinate most significant).  This order fixes the meaning of share
indices and is versioned as "lex1" in share file headers.
"""

from .gflinalg import rank
from .monomials import Window, window_members
from .weights import dual_order

POINT_ORDER_TAG = "lex1"

_POINTS = {}
_GENROWS = {}
_POWERS = {}


def power_table(field):
    """pow_table[x][k] = x^k for all encodings x and exponents k < q."""
    tab = _POWERS.get(field.key)
    if tab is None:
        q = field.q
        tab = [[field.pow(x, k) for k in range(q)] for x in range(q)]
        _POWERS[field.key] = tab
    return tab


def points(field, s):
    """All q^s evaluation points as value tuples, in the canonical order."""
    key = (field.key, s)
    pts = _POINTS.get(key)
    if pts is None:
        pts = [()]
        for _ in range(s):
            pts = [p + (v,) for p in pts for v in range(field.q)]
        _POINTS[key] = pts
    return pts


def point_index(pt, q):
    """Position of a point tuple in points(field, len(pt))."""
    idx = 0
    for v in pt:
        idx = idx * q + v
    return idx


def eval_monomial(field, exponents, pt):
    out = 1
    for x, a in zip(pt, exponents):
        if a:
            if x == 0:
                return 0
            out = field.mul(out, field.pow(x, a))
    return out


def monomial_row(field, exponents, s):
    """The evaluation vector of one monomial over all points."""
    return [eval_monomial(field, exponents, pt) for pt in points(field, s)]


def code_basis(field, u, s):
    """(monomials in anti-lex order, their evaluation rows) spanning RM_q(u,s)."""
    key = (field.key, u, s)
    cached = _GENROWS.get(key)
    if cached is None:
        if u < 0:
            cached = ([], [])
        else:
            mons = window_members(Window(field.q, s, 0, u))
            cached = (mons, [monomial_row(field, a, s) for a in mons])
        _GENROWS[key] = cached
    return cached


def generator_matrix(field, u, s):
    return code_basis(field, u, s)[1]


def is_codeword(field, u, s, values):
    """Membership in RM_q(u,s) via parity checks against the dual code."""
    if len(values) != field.q ** s:
        return False
    dual_u = dual_order(u, s, field.q)
    for row in generator_matrix(field, dual_u, s):
        acc = 0
        for g, v in zip(row, values):
            if g and v:
                acc = field.add(acc, field.mul(g, v))
        if acc:
            return False
    return True


def punctured_rank(field, u, s, positions):
    """Rank of the generator matrix of RM_q(u,s) restricted to the positions."""
    if u < 0:
        return 0
    rows = generator_matrix(field, u, s)
    cols = [[row[j] for j in positions] for row in rows]
    return rank(cols, field, len(positions))
