"""Independent brute-force validators for the weight engine and the scheme.

Everything here recomputes quantities from first principles (exhaustive or
branch-and-bound search, direct evaluation, explicit rank sweeps) without
touching the closed formulas or the recursive element-finder, so that the
two sides can certify each other at desk scale.
"""

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import BudgetExceeded, InvalidParameters
from .gf import field_from_order
from .monomials import window_members
from .rmcode import eval_monomial, points, punctured_rank

DEFAULT_BUDGET = 10 ** 8


# ---------------------------------------------------------------------------
# minimum shadow over m-subsets of a window


def _cube_masks(members, q, s):
    """Bitmask of the upward cone of each member over the q^s cube."""
    masks = []
    for a in members:
        mask = 0
        for b in product(*(range(x, q) for x in a)):
            idx = 0
            for v in b:
                idx = idx * q + v
            mask |= 1 << idx
        masks.append(mask)
    return masks


def brute_min_shadow(window, m, budget=DEFAULT_BUDGET):
    """Exact min of |upward shadow| over all m-subsets of the window.

    Returns (value, witness tuple).  Depth-first search over members in
    anti-lex order, pruning with two sound bounds: shadows only grow when
    elements are added, and every chosen element lies in its own shadow so
    the final size is at least m.  Node visits are capped by the budget.
    """
    members = window_members(window)
    if not 1 <= m <= len(members):
        raise InvalidParameters(f"m={m} outside 1..{len(members)}")
    q, s = window.q, window.s
    masks = _cube_masks(members, q, s)
    self_bits = [1 << (sum(v * q ** (s - 1 - t) for t, v in enumerate(a)))
                 for a in members]
    total = len(members)

    best = None
    best_witness = None
    visited = 0
    # stack of (index, count_chosen, shadow_mask, chosen_indices)
    stack = [(0, 0, 0, ())]
    while stack:
        idx, count, mask, chosen = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"visited more than {budget} search nodes")
        if count == m:
            size = mask.bit_count()
            if best is None or size < best:
                best = size
                best_witness = chosen
            continue
        need = m - count
        if total - idx < need:
            continue
        if best is not None:
            if best <= m:
                # nothing can beat |shadow| >= m
                break
            inside = sum(1 for j in range(idx, total)
                         if self_bits[j] & mask)
            lb = mask.bit_count() + max(0, need - inside)
            if lb >= best:
                continue
        # explore inclusion first so the anti-lex prefix is the first leaf
        stack.append((idx + 1, count, mask, chosen))
        stack.append((idx + 1, count + 1, mask | masks[idx], chosen + (idx,)))
    assert best is not None
    return best, tuple(members[i] for i in best_witness)


# ---------------------------------------------------------------------------
# the support-sharp subspace with prescribed leading monomials


@dataclass
class EvaluatedSubspace:
    """A subspace of the evaluation image spanned by rows with known leads."""
    field: object
    leads: tuple           # leading exponent vectors, one per generator
    generators: tuple      # coefficient maps {exponent vector: field value}
    rows: tuple            # evaluation vectors over the canonical points

    def support(self):
        out = set()
        for row in self.rows:
            for j, v in enumerate(row):
                if v:
                    out.add(j)
        return out

    def support_size(self):
        return len(self.support())


def _vanishing_prefix_coeffs(field, count):
    """Coefficients of (X - gamma_0)...(X - gamma_{count-1})."""
    coeffs = [1]
    for j in range(count):
        g = j  # canonical enumeration: gamma_j has encoding j
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            if c:
                nxt[i + 1] = field.add(nxt[i + 1], c)
                nxt[i] = field.sub(nxt[i], field.mul(c, g))
        coeffs = nxt
    return coeffs


def extremal_subspace(lead_set, field, s=None):
    """The subspace meeting the footprint bound with equality.

    For each prescribed lead a the generator is the product over coordinates
    of the vanishing polynomials of the first a_t enumerated field elements,
    which is nonzero exactly on the upward cone of a; the support of the
    span is therefore exactly the upward shadow of the lead set.
    """
    leads = [tuple(a) for a in lead_set]
    if len(set(leads)) != len(leads):
        raise InvalidParameters("leading exponent vectors must be distinct")
    if s is None:
        s = len(leads[0])
    q = field.q
    for a in leads:
        if len(a) != s or any(not 0 <= x < q for x in a):
            raise InvalidParameters(f"exponent vector {a} outside the cube")
    pts = points(field, s)
    prefix = [_vanishing_prefix_coeffs(field, c) for c in range(q)]
    rows = []
    gens = []
    for a in leads:
        row = []
        for pt in pts:
            v = 1
            for t in range(s):
                factor = 0
                for i, c in enumerate(prefix[a[t]]):
                    if c:
                        factor = field.add(factor, field.mul(c, field.pow(pt[t], i)))
                if factor == 0:
                    v = 0
                    break
                v = field.mul(v, factor)
            row.append(v)
        rows.append(row)
        coeff_map = {}
        for idxs in product(*(range(a[t] + 1) for t in range(s))):
            c = 1
            for t in range(s):
                c = field.mul(c, prefix[a[t]][idxs[t]])
            if c:
                coeff_map[idxs] = c
        gens.append(coeff_map)
    return EvaluatedSubspace(field, tuple(leads), tuple(gens), tuple(rows))


def _grlex_key(a):
    return (sum(a), a)


def random_subspace_with_leads(lead_set, field, rng, s=None, tail_terms=6):
    """Evaluation rows of random polynomials with the prescribed leads.

    Each row is its lead monomial plus a sparse random tail of strictly
    graded-lex smaller monomials; used to probe the footprint lower bound.
    """
    leads = [tuple(a) for a in lead_set]
    if s is None:
        s = len(leads[0])
    q = field.q
    cube = sorted(product(range(q), repeat=s), key=_grlex_key)
    pos = {a: i for i, a in enumerate(cube)}
    pts = points(field, s)
    rows = []
    for a in leads:
        row = [eval_monomial(field, a, pt) for pt in pts]
        smaller = pos[a]
        for _ in range(min(tail_terms, smaller)):
            b = cube[rng.below(smaller)]
            c = rng.below(q)
            if c == 0:
                continue
            for j, pt in enumerate(pts):
                v = eval_monomial(field, b, pt)
                if v:
                    row[j] = field.add(row[j], field.mul(c, v))
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# exhaustive minimum support over admissible subspaces of a code pair


def brute_min_support(pair, m, budget=DEFAULT_BUDGET):
    """Exact min support of an m-dim subcode of C1 meeting C2 trivially.

    Subspaces are enumerated through their reduced-echelon bases under a
    graded order: the pivot monomials form an m-subset of the degree window
    (u2+1..u1), and each basis row carries free coefficients on the strictly
    smaller non-pivot monomials of degree <= u1.  Since the support of a
    span is the union of the rows' supports and rows vary independently,
    the minimum over each pivot set is found by folding the per-row sets of
    achievable support masks.  The budget caps the number of enumerated row
    vectors.  Prime q only (the acceptance workload is q <= 3).
    """
    q, s = pair.q, pair.s
    field = field_from_order(q)
    if field.e != 1:
        raise InvalidParameters("support search is implemented for prime q")
    ell = pair.codim
    if not 1 <= m <= ell:
        raise InvalidParameters(f"m={m} outside 1..{ell}")
    n = q ** s

    basis_mons = sorted(product(range(q), repeat=s), key=_grlex_key)
    basis_mons = [a for a in basis_mons if sum(a) <= pair.u1]
    rows = {a: np.array([eval_monomial(field, a, pt) for pt in points(field, s)],
                        dtype=np.int64) for a in basis_mons}
    window = [a for a in basis_mons if sum(a) > pair.u2]
    pow2 = (1 << np.arange(n)).astype(np.int64)

    work = 0
    for pivots in combinations(window, m):
        pivot_set = set(pivots)
        for a in pivots:
            nfree = sum(1 for b in basis_mons
                        if _grlex_key(b) < _grlex_key(a) and b not in pivot_set)
            work += q ** nfree
    if work > budget:
        raise BudgetExceeded(f"{work} basis rows exceed the budget {budget}")

    best = None
    for pivots in combinations(window, m):
        pivot_set = set(pivots)
        reach = np.zeros(1, dtype=np.int64)
        for a in pivots:
            free = [b for b in basis_mons
                    if _grlex_key(b) < _grlex_key(a) and b not in pivot_set]
            base = rows[a]
            if free:
                combos = np.array(list(product(range(q), repeat=len(free))),
                                  dtype=np.int64)
                tails = combos @ np.stack([rows[b] for b in free])
                values = (base[None, :] + tails) % q
            else:
                values = base[None, :] % q
            masks = np.unique((values != 0) @ pow2)
            reach = np.unique(reach[:, None] | masks[None, :])
        cand = min(int(x).bit_count() for x in reach)
        if best is None or cand < best:
            best = cand
    return best


# ---------------------------------------------------------------------------
# exhaustive leakage sweeps


def leakage_dim(positions, pair):
    """q-bits of the secret determined by the shares at the given positions.

    Computed as the rank difference of the two punctured generator matrices;
    by duality this equals the shortened-code dimension difference of the
    dual pair that defines the privacy thresholds.
    """
    field = field_from_order(pair.q)
    pos = sorted(set(positions))
    if not pos:
        return 0
    if any(not 0 <= j < pair.n for j in pos):
        raise InvalidParameters("share positions outside 0..n-1")
    return (punctured_rank(field, pair.u1, pair.s, pos)
            - punctured_rank(field, pair.u2, pair.s, pos))


@dataclass
class BruteProfile:
    t: list
    r: list


def brute_profile(pair, budget=1 << 20):
    """Exact threshold vectors by sweeping every subset of share positions."""
    n = pair.n
    if 1 << n > budget:
        raise BudgetExceeded(f"2^{n} subsets exceed the budget {budget}")
    ell = pair.codim
    field = field_from_order(pair.q)
    min_size = [None] * (ell + 1)   # index m: smallest |J| with leakage >= m
    max_size = [None] * (ell + 1)   # index m: largest |J| with leakage < m
    for mask in range(1 << n):
        positions = [j for j in range(n) if mask >> j & 1]
        k = len(positions)
        if positions:
            d = (punctured_rank(field, pair.u1, pair.s, positions)
                 - punctured_rank(field, pair.u2, pair.s, positions))
        else:
            d = 0
        for m in range(1, ell + 1):
            if d >= m:
                if min_size[m] is None or k < min_size[m]:
                    min_size[m] = k
            elif max_size[m] is None or k > max_size[m]:
                max_size[m] = k
    return BruteProfile(t=[min_size[m] - 1 for m in range(1, ell + 1)],
                        r=[max_size[m] + 1 for m in range(1, ell + 1)])
