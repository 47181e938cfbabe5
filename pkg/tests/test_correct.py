import pytest

from rmramp.correct import (SimulationReport, _full_lambdas,
                            _interpolation_lambdas, _line_query_indices,
                            decode_queries_bw, decode_queries_interpolate,
                            local_correct_a, local_correct_b,
                            simulate_correction)
from rmramp.errors import DecodingFailure, InvalidParameters
from rmramp.gf import field_from_order
from rmramp.rng import SplitMix64
from rmramp.scheme import encode
from rmramp.weights import CodePair


def test_decoders_exact_on_clean_words_all_positions():
    pair = CodePair(8, 2, 6, 5)
    word = encode([1, 2, 3, 4, 5, 6, 7], pair, seed=4).values
    for i in range(64):
        assert local_correct_a(word, i, pair, seed=50 + i) == word[i]
        assert local_correct_b(word, i, pair, seed=90 + i) == word[i]


def test_decoder_preconditions():
    with pytest.raises(InvalidParameters):
        local_correct_a([0] * 64, 0, CodePair(8, 2, 7, 5), seed=1)
    with pytest.raises(InvalidParameters):
        local_correct_b([0] * 64, 0, CodePair(8, 2, 14, 5), seed=1)


def test_single_corrupted_query_flips_decoder_a():
    pair = CodePair(8, 2, 5, 4)
    field = field_from_order(8)
    word = encode([0, 1, 2, 3, 4, 5], pair, seed=77).values
    i, seed = 13, 4242
    lambdas = _interpolation_lambdas(8, 5)
    queried = _line_query_indices(field, 2, i, SplitMix64(seed), lambdas)
    clean = local_correct_a(word, i, pair, seed=seed)
    assert clean == word[i]
    corrupted = list(word)
    corrupted[queried[2]] = field.add(corrupted[queried[2]], 5)
    assert local_correct_a(corrupted, i, pair, seed=seed) != word[i]


def test_decoder_b_corrects_up_to_design_errors():
    pair = CodePair(16, 2, 9, 8)
    field = field_from_order(16)
    e_max = (16 - 2 - 9) // 2
    assert e_max == 2
    word = encode([7] * pair.codim, pair, seed=3).values
    rng = SplitMix64(1001)
    for trial in range(60):
        i, seed = rng.below(256), 9000 + trial
        queried = _line_query_indices(field, 2, i, SplitMix64(seed),
                                      _full_lambdas(16))
        corrupted = list(word)
        hit = {queried[rng.below(len(queried))] for _ in range(e_max)}
        for j in hit:
            corrupted[j] = field.add(corrupted[j], rng.nonzero_below(16))
        assert local_correct_b(corrupted, i, pair, seed=seed) == word[i]


def test_bw_unit_recovers_noisy_polynomials():
    field = field_from_order(16)
    lambdas = _full_lambdas(16)
    rng = SplitMix64(5)
    deg_bound, e_max = 9, 2
    for _ in range(200):
        coeffs = [rng.below(16) for _ in range(deg_bound + 1)]
        def ev(x):
            acc = 0
            for c in reversed(coeffs):
                acc = field.add(field.mul(acc, x), c)
            return acc
        ys = [ev(x) for x in lambdas]
        errs = rng.sample(len(ys), rng.below(e_max + 1))
        for j in errs:
            ys[j] = field.add(ys[j], rng.nonzero_below(16))
        assert decode_queries_bw(field, lambdas, ys, deg_bound, e_max) == coeffs[0]


def test_bw_zero_error_budget_is_interpolation():
    field = field_from_order(8)
    lambdas = _interpolation_lambdas(8, 5)
    ys = [3, 1, 4, 1, 5, 0]
    assert decode_queries_bw(field, lambdas, ys, 5, 0) == \
        decode_queries_interpolate(field, lambdas, ys)


def test_bw_overloaded_lines_raise_or_misdecode():
    field = field_from_order(16)
    lambdas = _full_lambdas(16)
    rng = SplitMix64(6)
    outcomes = set()
    for _ in range(100):
        coeffs = [rng.below(16) for _ in range(10)]
        def ev(x):
            acc = 0
            for c in reversed(coeffs):
                acc = field.add(field.mul(acc, x), c)
            return acc
        ys = [ev(x) for x in lambdas]
        for j in rng.sample(len(ys), 6):       # far beyond e_max = 2
            ys[j] = field.add(ys[j], rng.nonzero_below(16))
        try:
            got = decode_queries_bw(field, lambdas, ys, 9, 2)
            outcomes.add(got == coeffs[0])
        except DecodingFailure:
            outcomes.add(False)
    assert False in outcomes                   # overload is actually detected


def test_simulation_zero_delta():
    rep = simulate_correction(CodePair(8, 2, 5, 4), "A", 0.0, 500, seed=1)
    assert isinstance(rep, SimulationReport)
    assert rep.failures == 0 and rep.failure_rate == 0.0
    rep = simulate_correction(CodePair(16, 2, 9, 8), "B", 0.0, 200, seed=2)
    assert rep.failures == 0


def test_simulation_reports_query_and_leak_flags():
    rep = simulate_correction(CodePair(8, 2, 6, 5), "A", 0.0, 10, seed=3)
    assert rep.queries == 7
    assert rep.t1 == 6 and rep.r1 == 22 and rep.t2 == 12
    assert rep.queries_above_t1 is True
    assert rep.single_symbol_leak is True      # t_2 = 12 >= 7 queries
    assert rep.queries < rep.r1
    d = rep.as_dict()
    assert d["failure_rate"] == 0.0 and d["queries"] == 7


def test_simulation_monotone_in_delta_with_paired_seeds():
    pair = CodePair(16, 2, 9, 8)
    rates = []
    for delta in (0.0, 0.02, 0.05, 0.1):
        rep = simulate_correction(pair, "B", delta, 1500, seed=77)
        rates.append(rep.failures)
    assert rates == sorted(rates)


def test_simulation_oblivious_to_secret():
    pair = CodePair(8, 2, 5, 4)
    _, out1 = simulate_correction(pair, "A", 0.05, 400, seed=11,
                                  fixed_secret=[0] * pair.codim, collect=True)
    _, out2 = simulate_correction(pair, "A", 0.05, 400, seed=11,
                                  fixed_secret=[1, 2, 3, 4, 5, 6], collect=True)
    assert out1 == out2
    _, out3 = simulate_correction(pair, "B", 0.05, 200, seed=13,
                                  fixed_secret=[0] * pair.codim, collect=True)
    _, out4 = simulate_correction(pair, "B", 0.05, 200, seed=13,
                                  fixed_secret=[7, 0, 1, 2, 0, 4], collect=True)
    assert out3 == out4


def test_simulation_deterministic_and_batch_independent():
    pair = CodePair(8, 2, 5, 4)
    r1 = simulate_correction(pair, "A", 0.05, 300, seed=21)
    r2 = simulate_correction(pair, "A", 0.05, 300, seed=21)
    assert r1.failures == r2.failures
    _, outcomes = simulate_correction(pair, "A", 0.05, 300, seed=21,
                                      collect=True)
    _, first_half = simulate_correction(pair, "A", 0.05, 150, seed=21,
                                        collect=True)
    assert outcomes[:150] == first_half
