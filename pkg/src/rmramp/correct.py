"""Local correction of Reed-Muller share vectors by random-line queries.

Both decoders recover coordinate i of a corrupted codeword of RM_q(u1,s)
from the restriction of the word to a uniformly random affine line through
the point P_i.  The restriction of a degree-<=u1 polynomial to a line is a
univariate polynomial of degree <= u1 in the line parameter, and the target
coordinate is its value at parameter 0, so:

  decoder A queries the u1+1 line points with the first u1+1 nonzero
  canonical parameters and interpolates (needs u1 < q-1);

  decoder B queries all q-1 nonzero-parameter points and decodes with up to
  floor((q-2-u1)/2) errors by rational interpolation (error-locator times
  message polynomial), raising DecodingFailure when no consistent pair
  exists (needs u1 <= q-2).

The Monte-Carlo harness applies weight-floor(delta*n) error patterns to
uniformly random codewords; each trial runs on an independent sub-seeded
stream, so results do not depend on how trials are batched.
"""

from dataclasses import dataclass

from .errors import DecodingFailure, InconsistentShares, InvalidParameters
from .gf import field_from_order
from .gflinalg import solve
from .monomials import Window, window_members
from .rmcode import code_basis, point_index, points, power_table
from .rng import SplitMix64, derive_seed
from .scheme import profile

__all__ = ["local_correct_a", "local_correct_b", "simulate_correction",
           "SimulationReport"]

_WEIGHTS_AT_ZERO = {}


def _lagrange_weights_at_zero(field, lambdas):
    """w_j with g(0) = sum w_j g(lambda_j) for all g of degree < len(lambdas)."""
    key = (field.key, lambdas)
    w = _WEIGHTS_AT_ZERO.get(key)
    if w is None:
        w = []
        for j, lj in enumerate(lambdas):
            num, den = 1, 1
            for k, lk in enumerate(lambdas):
                if k != j:
                    num = field.mul(num, lk)
                    den = field.mul(den, field.sub(lk, lj))
            w.append(field.div(num, den))
        w = tuple(w)
        _WEIGHTS_AT_ZERO[key] = w
    return w


def _random_direction(rng, q, s):
    """Uniform nonzero direction vector (never degenerate by construction)."""
    while True:
        v = tuple(rng.below(q) for _ in range(s))
        if any(v):
            return v


def _line_query_indices(field, s, i, rng, lambdas):
    """Indices of P_i + lambda * direction for the given nonzero lambdas."""
    q = field.q
    base = points(field, s)[i]
    direction = _random_direction(rng, q, s)
    idxs = []
    for lam in lambdas:
        pt = tuple(field.add(b, field.mul(lam, d))
                   for b, d in zip(base, direction))
        idxs.append(point_index(pt, q))
    return idxs


def _interpolation_lambdas(q, u1):
    return tuple(range(1, u1 + 2))


def _full_lambdas(q):
    return tuple(range(1, q))


def decode_queries_interpolate(field, lambdas, ys):
    w = _lagrange_weights_at_zero(field, lambdas)
    acc = 0
    for wj, yj in zip(w, ys):
        if wj and yj:
            acc = field.add(acc, field.mul(wj, yj))
    return acc


def decode_queries_bw(field, lambdas, ys, deg_bound, e_max):
    """Value at parameter 0 of the degree-<=deg_bound polynomial fitting the
    queried values with at most e_max errors (Berlekamp-Welch).

    Solves for N(x) of degree <= deg_bound + e_max and monic E(x) of degree
    e_max with N(lambda_j) = y_j E(lambda_j) for all j; any solution has
    N = g E when the error count is within e_max.
    """
    if e_max == 0:
        return decode_queries_interpolate(field, lambdas, ys)
    n_terms = deg_bound + e_max + 1
    rows = []
    rhs = []
    for lam, y in zip(lambdas, ys):
        pows = [1] * max(n_terms, e_max + 1)
        for k in range(1, len(pows)):
            pows[k] = field.mul(pows[k - 1], lam)
        row = pows[:n_terms] + [field.neg(field.mul(y, pows[k]))
                                for k in range(e_max)]
        rows.append(row)
        rhs.append(field.mul(y, pows[e_max]))
    try:
        sol, _null = solve(rows, rhs, field)
    except InconsistentShares:
        raise DecodingFailure("no consistent error locator of the allowed degree")
    n_coeffs = sol[:n_terms]
    e_coeffs = sol[n_terms:] + [1]          # monic of degree e_max
    quot, rem = _polydivmod(n_coeffs, e_coeffs, field)
    if any(rem):
        raise DecodingFailure("error locator does not divide the fit")
    if len(quot) > deg_bound + 1 and any(quot[deg_bound + 1:]):
        raise DecodingFailure("fitted polynomial exceeds the degree bound")
    return quot[0] if quot else 0


def _polydivmod(num, den, field):
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    den = list(den)
    while den and den[-1] == 0:
        den.pop()
    if not den:
        raise DecodingFailure("zero error locator")
    quot = [0] * max(0, len(num) - len(den) + 1)
    inv_lead = field.inv(den[-1])
    while len(num) >= len(den):
        c = field.mul(num[-1], inv_lead)
        shift = len(num) - len(den)
        quot[shift] = c
        for k, d in enumerate(den):
            num[shift + k] = field.sub(num[shift + k], field.mul(c, d))
        while num and num[-1] == 0:
            num.pop()
    return quot, num


def local_correct_a(word, i, pair_or_field, u1=None, s=None, seed=0):
    """Decoder A: u1+1 queries on a random line, plain interpolation."""
    field, u1, s = _decoder_args(pair_or_field, u1, s)
    if u1 >= field.q - 1:
        raise InvalidParameters("interpolating decoder needs u1 < q-1")
    rng = SplitMix64(seed)
    lambdas = _interpolation_lambdas(field.q, u1)
    idxs = _line_query_indices(field, s, i, rng, lambdas)
    return decode_queries_interpolate(field, lambdas, [word[j] for j in idxs])


def local_correct_b(word, i, pair_or_field, u1=None, s=None, seed=0):
    """Decoder B: q-1 queries on a random line, error-correcting decode."""
    field, u1, s = _decoder_args(pair_or_field, u1, s)
    if u1 > field.q - 2:
        raise InvalidParameters("error-correcting decoder needs u1 <= q-2")
    rng = SplitMix64(seed)
    lambdas = _full_lambdas(field.q)
    idxs = _line_query_indices(field, s, i, rng, lambdas)
    e_max = (field.q - 2 - u1) // 2
    return decode_queries_bw(field, lambdas, [word[j] for j in idxs], u1, e_max)


def _decoder_args(pair_or_field, u1, s):
    if u1 is None:
        pair = pair_or_field
        return field_from_order(pair.q), pair.u1, pair.s
    return pair_or_field, u1, s


# ---------------------------------------------------------------------------
# Monte-Carlo harness


@dataclass
class SimulationReport:
    decoder: str
    q: int
    s: int
    u1: int
    u2: int
    delta: float
    trials: int
    failures: int
    queries: int
    error_weight: int
    t1: int
    t2: object          # None when the codimension is 1
    r1: int
    queries_above_t1: bool
    single_symbol_leak: object   # t2 >= queries, None when t2 is None

    @property
    def failure_rate(self):
        return self.failures / self.trials if self.trials else 0.0

    def as_dict(self):
        d = {k: getattr(self, k) for k in (
            "decoder", "q", "s", "u1", "u2", "delta", "trials", "failures",
            "queries", "error_weight", "t1", "t2", "r1", "queries_above_t1",
            "single_symbol_leak")}
        d["failure_rate"] = self.failure_rate
        return d


def simulate_correction(pair, decoder, delta, trials, seed,
                        fixed_secret=None, collect=False, reduction=None):
    """Empirical failure rate of a local decoder on the scheme's codewords.

    Per trial: a uniformly random C1 codeword (or the encoding of
    fixed_secret under fresh hiding randomness), a uniformly random error
    pattern of weight floor(delta*n) with uniform nonzero error values, a
    uniformly random target coordinate.  A trial fails when the decoder
    returns anything but the true coordinate (decoding aborts count as
    failures).  Trial k draws from the stream derive_seed(seed, k).
    """
    decoder = decoder.upper()
    if decoder not in ("A", "B"):
        raise InvalidParameters("decoder must be 'A' or 'B'")
    field = field_from_order(pair.q, reduction)
    q, s, u1 = pair.q, pair.s, pair.u1
    n = pair.n
    if decoder == "A":
        if u1 >= q - 1:
            raise InvalidParameters("decoder A needs u1 < q-1")
        lambdas = _interpolation_lambdas(q, u1)
        e_max = 0
    else:
        if u1 > q - 2:
            raise InvalidParameters("decoder B needs u1 <= q-2")
        lambdas = _full_lambdas(q)
        e_max = (q - 2 - u1) // 2
    queries = len(lambdas)
    weight = int(delta * n)
    if not 0 <= weight <= n:
        raise InvalidParameters("error weight outside 0..n")

    # basis split matching the encoder: hiding monomials then secret monomials
    hiding_mons, _ = code_basis(field, pair.u2, s)
    secret_mons = window_members(Window(q, s, pair.u2 + 1, u1))
    mons1 = list(hiding_mons) + list(secret_mons)
    k1 = len(mons1)
    ell = pair.codim
    if fixed_secret is not None:
        fixed_secret = list(fixed_secret)
        if len(fixed_secret) != ell:
            raise InvalidParameters(f"fixed secret needs {ell} symbols")
    k2 = k1 - ell
    pts = points(field, s)

    pw = power_table(field)
    add, mul = field.add, field.mul
    failures = 0
    outcomes = [] if collect else None
    for trial in range(trials):
        rng = SplitMix64(derive_seed(seed, trial))
        if fixed_secret is None:
            coeffs = [rng.below(q) for _ in range(k1)]
        else:
            coeffs = [rng.below(q) for _ in range(k2)] + fixed_secret
        i = rng.below(n)
        idxs = _line_query_indices(field, s, i, rng, lambdas)
        err_pos = rng.sample(n, weight)
        err = {p: rng.nonzero_below(q) for p in sorted(err_pos)}

        active = [(c, a) for c, a in zip(coeffs, mons1) if c]

        def eval_at(j):
            pt = pts[j]
            acc = 0
            for c, a in active:
                v = c
                for t in range(s):
                    v = mul(v, pw[pt[t]][a[t]])
                    if not v:
                        break
                if v:
                    acc = add(acc, v)
            return acc

        truth = eval_at(i)
        ys = []
        for j in idxs:
            v = eval_at(j)
            e = err.get(j)
            ys.append(add(v, e) if e else v)
        try:
            if decoder == "A":
                got = decode_queries_interpolate(field, lambdas, ys)
            else:
                got = decode_queries_bw(field, lambdas, ys, u1, e_max)
            fail = got != truth
        except DecodingFailure:
            fail = True
        failures += fail
        if collect:
            outcomes.append(fail)

    prof = profile(pair)
    t2 = prof.t[1] if ell >= 2 else None
    report = SimulationReport(
        decoder=decoder, q=q, s=s, u1=u1, u2=pair.u2, delta=delta,
        trials=trials, failures=failures, queries=queries,
        error_weight=weight, t1=prof.t[0], t2=t2, r1=prof.r[0],
        queries_above_t1=queries > prof.t[0],
        single_symbol_leak=None if t2 is None else t2 >= queries)
    if collect:
        return report, outcomes
    return report
