"""Dense linear algebra over a Field, on lists of canonical integer encodings."""

from .errors import InconsistentShares


def rref(rows, field, ncols=None):
    """Reduced row echelon form.

    Returns (reduced rows without zero rows, pivot column indices).
    The input is not modified.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    sub, mul = field.sub, field.mul
    pivots = []
    rank_ = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank_, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank_], rows[pivot_row] = rows[pivot_row], rows[rank_]
        inv = field.inv(rows[rank_][col])
        if inv != 1:
            rows[rank_] = [mul(inv, v) for v in rows[rank_]]
        rp = rows[rank_]
        for ri in rows:
            if ri is not rp and ri[col]:
                c = ri[col]
                for j in range(col, ncols):
                    v = rp[j]
                    if v:
                        ri[j] = sub(ri[j], mul(c, v))
        pivots.append(col)
        rank_ += 1
    return rows[:rank_], pivots


def rank(rows, field, ncols=None):
    return len(rref(rows, field, ncols)[0])


def solve(a_rows, b, field):
    """One solution x of A x = b plus a basis of the null space of A.

    Returns (x, nullspace_basis); raises InconsistentShares if no solution.
    """
    if not a_rows:
        return [], []
    ncols = len(a_rows[0])
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    red, pivots = rref(aug, field, ncols + 1)
    if ncols in pivots:
        raise InconsistentShares("the linear system has no solution")
    x = [0] * ncols
    for i, col in enumerate(pivots):
        x[col] = red[i][ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, col in enumerate(pivots):
            v[col] = field.neg(red[i][f])
        basis.append(v)
    return x, basis


def matvec(rows, vec, field):
    """(vec as row) times the row matrix: sum_i vec[i] * rows[i]."""
    if not rows:
        return []
    n = len(rows[0])
    out = [0] * n
    for c, row in zip(vec, rows):
        if c == 0:
            continue
        if c == 1:
            for j, v in enumerate(row):
                if v:
                    out[j] = field.add(out[j], v)
        else:
            for j, v in enumerate(row):
                if v:
                    out[j] = field.add(out[j], field.mul(c, v))
    return out
