"""Coset-construction ramp secret sharing on nested Reed-Muller codes.

A pair C2 = RM_q(u2,s) inside C1 = RM_q(u1,s) shares a secret of ell =
dim C1 - dim C2 field symbols: the secret is placed as coefficients on the
window monomials of degree u2+1..u1 (anti-lex order), a uniformly random
element of C2 is added, and the n = q^s coordinates of the resulting C1
codeword are the shares.  Groups of participants learn exactly the rank
difference of the punctured generator matrices; the privacy/recovery
thresholds t_m and r_m follow from the relative weight hierarchies of the
pair and of its dual pair.
"""

from dataclasses import dataclass

from .errors import InvalidParameters, LengthMismatch
from .gf import field_from_order
from .gflinalg import matvec, rank, solve
from .monomials import Window, window_members
from .rmcode import POINT_ORDER_TAG, code_basis, is_codeword, punctured_rank
from .rng import SplitMix64
from .weights import CodePair, dual_order, ghw, rghw

__all__ = [
    "LeakageProfile", "PartialInfo", "ShareVector", "profile", "encode",
    "reconstruct", "leakage", "read_shares", "write_shares",
]


# ---------------------------------------------------------------------------
# threshold profiles


@dataclass(frozen=True)
class LeakageProfile:
    """Exact and weight-bound threshold vectors of a scheme pair.

    t[m-1]: largest group size that cannot learn m symbols of the secret;
    r[m-1]: smallest group size that always learns m symbols.  The primed
    vectors t_ghw / r_ghw are the bounds obtained from plain (non-relative)
    weight hierarchies; they bracket the exact values.
    """
    q: int
    s: int
    u1: int
    u2: int
    ell: int
    t: tuple
    r: tuple
    t_ghw: tuple
    r_ghw: tuple

    def as_dict(self):
        return {"q": self.q, "s": self.s, "u1": self.u1, "u2": self.u2,
                "ell": self.ell, "t": list(self.t), "r": list(self.r),
                "t_ghw": list(self.t_ghw), "r_ghw": list(self.r_ghw)}


def profile(pair):
    """Threshold vectors of the ramp scheme on the pair."""
    q, s = pair.q, pair.s
    n = pair.n
    ell = pair.codim
    dual_pair = CodePair(q, s, dual_order(pair.u2, s, q), dual_order(pair.u1, s, q))
    assert dual_pair.codim == ell
    t = tuple(rghw(dual_pair, m) - 1 for m in range(1, ell + 1))
    r = tuple(n - rghw(pair, ell - m + 1) + 1 for m in range(1, ell + 1))
    t_ghw = tuple(ghw(dual_pair.u1, s, q, m) - 1 for m in range(1, ell + 1))
    r_ghw = tuple(n - ghw(pair.u1, s, q, ell - m + 1) + 1 for m in range(1, ell + 1))
    return LeakageProfile(q, s, pair.u1, pair.u2, ell, t, r, t_ghw, r_ghw)


def leakage(positions, pair):
    """q-bits of secret information the share positions determine."""
    field = field_from_order(pair.q)
    pos = sorted(set(positions))
    if any(not 0 <= j < pair.n for j in pos):
        raise InvalidParameters("share positions outside 0..n-1")
    if not pos:
        return 0
    return (punctured_rank(field, pair.u1, pair.s, pos)
            - punctured_rank(field, pair.u2, pair.s, pos))


# ---------------------------------------------------------------------------
# share vectors


@dataclass
class ShareVector:
    pair: CodePair
    values: list

    def is_valid(self):
        field = field_from_order(self.pair.q)
        return is_codeword(field, self.pair.u1, self.pair.s, self.values)


def _coefficient_basis(pair, field):
    """(hiding monomial rows, secret monomial rows) of the C1 basis split."""
    _, rows2 = code_basis(field, pair.u2, pair.s)
    window_mons = window_members(Window(pair.q, pair.s, pair.u2 + 1, pair.u1))
    mons1, rows1 = code_basis(field, pair.u1, pair.s)
    index = {a: i for i, a in enumerate(mons1)}
    secret_rows = [rows1[index[a]] for a in window_mons]
    return rows2, secret_rows


def encode(secret, pair, seed, reduction=None):
    """Share a secret: its coefficients on the window monomials plus a
    uniformly random element of the hiding code."""
    field = field_from_order(pair.q, reduction)
    ell = pair.codim
    secret = list(secret)
    if len(secret) != ell:
        raise LengthMismatch(f"secret must have {ell} symbols, got {len(secret)}")
    if any(not 0 <= v < pair.q for v in secret):
        raise InvalidParameters("secret symbols must be field encodings")
    hiding_rows, secret_rows = _coefficient_basis(pair, field)
    rng = SplitMix64(seed)
    hiding = [rng.below(pair.q) for _ in hiding_rows]
    values = matvec(hiding_rows + secret_rows, hiding + secret, field)
    return ShareVector(pair, values)


@dataclass(frozen=True)
class PartialInfo:
    """Result of reconstruction from an insufficient share set."""
    determined: int


def reconstruct(observed, pair, reduction=None):
    """Recover the secret from observed shares (an index -> value mapping).

    Erasure-only: the observed values must be consistent with some C1
    codeword, else InconsistentShares is raised.  Returns the secret list
    when the positions determine all of it, otherwise PartialInfo with the
    number of determined symbols.
    """
    field = field_from_order(pair.q, reduction)
    ell = pair.codim
    positions = sorted(observed)
    if any(not 0 <= j < pair.n for j in positions):
        raise InvalidParameters("share positions outside 0..n-1")
    if not positions:
        return PartialInfo(determined=0)
    hiding_rows, secret_rows = _coefficient_basis(pair, field)
    all_rows = hiding_rows + secret_rows
    k1 = len(all_rows)
    k2 = len(hiding_rows)
    eqs = [[all_rows[i][j] for i in range(k1)] for j in positions]
    rhs = [observed[j] for j in positions]
    x, nullbasis = solve(eqs, rhs, field)
    # undetermined symbols: rank of the secret-part projection of the null space
    free_secret = [v[k2:] for v in nullbasis]
    undetermined = rank(free_secret, field, ell) if free_secret else 0
    if undetermined == 0:
        return x[k2:]
    return PartialInfo(determined=ell - undetermined)


# ---------------------------------------------------------------------------
# share files: "# rmramp q=.. s=.. u1=.. u2=.. points=lex1", then one value
# per line in position order, "-" for a missing share


def write_shares(fp, share_vector, missing=()):
    pair = share_vector.pair
    fp.write(f"# rmramp q={pair.q} s={pair.s} u1={pair.u1} u2={pair.u2} "
             f"points={POINT_ORDER_TAG}\n")
    hidden = set(missing)
    for j, v in enumerate(share_vector.values):
        fp.write("-\n" if j in hidden else f"{v}\n")


def read_shares(fp):
    """Returns (pair, observed dict index -> value)."""
    header = fp.readline().strip()
    if not header.startswith("# rmramp"):
        raise InvalidParameters("missing share file header")
    fields = dict(tok.split("=", 1) for tok in header.split()[2:])
    if fields.get("points") != POINT_ORDER_TAG:
        raise InvalidParameters(
            f"share file uses point order {fields.get('points')!r}, "
            f"this build requires {POINT_ORDER_TAG!r}")
    pair = CodePair(int(fields["q"]), int(fields["s"]),
                    int(fields["u1"]), int(fields["u2"]))
    observed = {}
    for j, line in enumerate(fp):
        tok = line.strip()
        if j >= pair.n:
            raise InvalidParameters("share file longer than the code length")
        if tok != "-" and tok != "":
            v = int(tok)
            if not 0 <= v < pair.q:
                raise InvalidParameters(f"share value {v} outside the field")
            observed[j] = v
    return pair, observed


def bound_check(prof):
    """The closed-form corner identities of a profile (for u1 < q-1).

    t_1 = u2+1, r_1 = C(s+u2, u2) + 1, t_ell = C(s+u1, u1) - 1,
    r_ell = u1 q^(s-1) + 1; included as a self-diagnosis hook.
    """
    from math import comb
    q, s, u1, u2 = prof.q, prof.s, prof.u1, prof.u2
    if u1 >= q - 1:
        raise InvalidParameters("corner identities require u1 < q-1")
    return (prof.t[0] == u2 + 1
            and prof.r[0] == comb(s + u2, u2) + 1
            and prof.t[-1] == comb(s + u1, u1) - 1
            and prof.r[-1] == u1 * q ** (s - 1) + 1)
