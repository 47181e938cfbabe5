from itertools import product

import pytest

from rmramp.errors import InvalidWindow, MixedShapes, WindowTooLarge
from rmramp.monomials import (ClippedWindow, Window, antilex_key, cmp_antilex,
                              cmp_lex, degree, leq_partial, lex_prefix,
                              lower_shadow, lower_shadow_size, mu,
                              upward_shadow, upward_shadow_size,
                              window_members)
from rmramp.rng import SplitMix64


def test_degree():
    assert degree((2, 3)) == 5
    assert degree((0,) * 6) == 0
    assert degree((9, 10, 14, 11, 15, 15, 15)) == 89


def test_antilex_full_chain_q3_s2():
    # X = first coordinate, Y = second; smallest first
    expected = [(2, 2), (1, 2), (0, 2), (2, 1), (1, 1), (0, 1),
                (2, 0), (1, 0), (0, 0)]
    cube = sorted(product(range(3), repeat=2), key=antilex_key)
    assert cube == expected
    for a, b in zip(expected, expected[1:]):
        assert cmp_antilex(a, b) == -1
        assert cmp_antilex(b, a) == 1


def test_lex_chain_prefix():
    chain = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1)]
    for a, b in zip(chain, chain[1:]):
        assert cmp_lex(a, b) == -1
    assert cmp_lex((1, 2), (1, 2)) == 0
    assert cmp_antilex((2, 2), (2, 2)) == 0


def test_antilex_last_coordinate_dominates():
    assert cmp_antilex((2, 3), (3, 2)) == -1   # larger last coordinate first


def test_order_axioms_random():
    rng = SplitMix64(11)
    for _ in range(500):
        s = 1 + rng.below(4)
        a = tuple(rng.below(7) for _ in range(s))
        b = tuple(rng.below(7) for _ in range(s))
        for cmp in (cmp_lex, cmp_antilex):
            assert cmp(a, b) == -cmp(b, a)
            assert (cmp(a, b) == 0) == (a == b)


def test_mixed_shapes():
    with pytest.raises(MixedShapes):
        cmp_antilex((1, 2), (1, 2, 3))
    with pytest.raises(MixedShapes):
        cmp_lex((1,), (1, 2))


def test_mu_examples():
    assert mu((3, 1), 5) == (3, 1)             # fixed point
    assert mu((0, 0, 0), 4) == (3, 3, 3)
    assert mu((2, 3), 4) == (0, 1)


def test_mu_involution_and_degree():
    rng = SplitMix64(3)
    for _ in range(300):
        q = 2 + rng.below(15)
        s = 1 + rng.below(4)
        a = tuple(rng.below(q) for _ in range(s))
        assert mu(mu(a, q), q) == a
        assert degree(mu(a, q)) == s * (q - 1) - degree(a)


def test_shadow_examples():
    assert upward_shadow([(2, 3)], 4, 2) == {(2, 3), (3, 3)}
    assert upward_shadow_size([(2, 3)], 4, 2) == 2
    expected_lower = {(2, 3), (1, 3), (0, 3), (2, 2), (1, 2), (0, 2),
                      (2, 1), (1, 1), (0, 1), (2, 0), (1, 0), (0, 0)}
    assert lower_shadow([(2, 3)], 4, 2) == expected_lower
    assert lower_shadow_size([(2, 3)], 4, 2) == 12
    assert upward_shadow_size([(0, 0)], 7, 2) == 49
    assert lower_shadow_size([(6, 6)], 7, 2) == 49
    assert upward_shadow_size([(0, 4), (1, 3), (2, 2)], 5, 2) == 12


def test_partial_order_not_total():
    assert not leq_partial((3, 2), (2, 3))
    assert not leq_partial((2, 3), (3, 2))


def test_shadow_size_matches_set_size_randomized():
    rng = SplitMix64(17)
    for _ in range(200):
        q = 2 + rng.below(4)
        s = 1 + rng.below(3)
        k = 1 + rng.below(5)
        pts = {tuple(rng.below(q) for _ in range(s)) for _ in range(k)}
        pts = sorted(pts)
        assert upward_shadow_size(pts, q, s) == len(upward_shadow(pts, q, s))
        assert lower_shadow_size(pts, q, s) == len(lower_shadow(pts, q, s))
        # reflection exchanges the two shadows
        assert lower_shadow_size([mu(a, q) for a in pts], q, s) == \
            upward_shadow_size(pts, q, s)


def test_inclusion_exclusion_path_agrees_with_dense_grid():
    import rmramp.monomials as M
    rng = SplitMix64(23)
    for _ in range(50):
        q, s = 5, 3
        pts = sorted({tuple(rng.below(q) for _ in range(s))
                      for _ in range(1 + rng.below(6))})
        dense_up = upward_shadow_size(pts, q, s)
        dense_lo = lower_shadow_size(pts, q, s)
        old = M._DENSE_CAP
        M._DENSE_CAP = 0
        try:
            assert upward_shadow_size(pts, q, s) == dense_up
            assert lower_shadow_size(pts, q, s) == dense_lo
        finally:
            M._DENSE_CAP = old


def test_window_validation():
    with pytest.raises(InvalidWindow):
        Window(5, 2, 3, 2)
    with pytest.raises(InvalidWindow):
        Window(5, 2, 0, 9)
    with pytest.raises(InvalidWindow):
        ClippedWindow(5, 2, 0, 5, 3, 2)
    with pytest.raises(InvalidWindow):
        ClippedWindow(5, 2, 0, 5, 0, 5)


def test_window_members_examples():
    wm = window_members(Window(5, 2, 4, 5))
    assert len(wm) == 9
    assert wm[:3] == [(1, 4), (0, 4), (2, 3)]
    assert window_members(Window(7, 3, 0, 0)) == [(0, 0, 0)]
    assert len(window_members(Window(5, 2, 0, 5))) == 19


def test_window_members_sorted_and_bounded():
    for q in (2, 3, 5):
        for s in (1, 2, 3):
            top = s * (q - 1)
            for lo in range(top + 1):
                for hi in range(lo, top + 1):
                    members = window_members(Window(q, s, lo, hi))
                    assert members == sorted(members, key=antilex_key)
                    assert len(set(members)) == len(members)
                    assert all(lo <= degree(a) <= hi for a in members)


def test_clipped_window_members():
    wm = window_members(ClippedWindow(5, 2, 4, 5, 4, 4))
    assert wm == [(1, 4), (0, 4)]
    full = window_members(Window(5, 2, 2, 6))
    sliced = []
    for w in range(5):
        sliced.extend(window_members(ClippedWindow(5, 2, 2, 6, w, w)))
    assert sorted(sliced) == sorted(full)


def test_window_too_large_guard(monkeypatch):
    import rmramp.monomials as M
    monkeypatch.setattr(M, "MATERIALIZE_CAP", 10)
    with pytest.raises(WindowTooLarge):
        window_members(Window(5, 2, 0, 5))    # 19 members > patched cap


def test_partial_implies_lex_and_antilex():
    for q, s in ((3, 2), (4, 2), (3, 3)):
        cube = list(product(range(q), repeat=s))
        for a in cube:
            for b in cube:
                if leq_partial(a, b):
                    assert cmp_lex(a, b) <= 0
                    assert cmp_antilex(a, b) >= 0


def test_lex_prefix_matches_direct_sort():
    for q, s in ((3, 2), (4, 2), (3, 3)):
        top = s * (q - 1)
        for lo in range(top + 1):
            for hi in range(lo, top + 1):
                members = window_members(Window(q, s, lo, hi))
                by_lex = sorted(members)
                for m in (1, len(members) // 2 + 1, len(members)):
                    assert lex_prefix(Window(q, s, lo, hi), m) == by_lex[:m]


def test_prefix_minimizes_upward_shadow_exhaustively():
    # anti-lex prefixes minimize |upward shadow| among same-size subsets
    for q in (2, 3, 4):
        s = 2
        cube = sorted(product(range(q), repeat=s), key=antilex_key)
        index = {a: i for i, a in enumerate(cube)}
        cone_masks = {}
        for a in cube:
            mask = 0
            for b in product(*(range(x, q) for x in a)):
                mask |= 1 << index[b]
            cone_masks[a] = mask
        top = s * (q - 1)
        for lo in range(top + 1):
            for hi in range(lo, top + 1):
                members = window_members(Window(q, s, lo, hi))
                k = len(members)
                masks = [cone_masks[a] for a in members]
                best = [None] * (k + 1)
                shadow = [0] * (1 << k)
                for sub in range(1, 1 << k):
                    low = (sub & -sub).bit_length() - 1
                    shadow[sub] = shadow[sub ^ (1 << low)] | masks[low]
                    size = bin(sub).count("1")
                    val = shadow[sub].bit_count()
                    if best[size] is None or val < best[size]:
                        best[size] = val
                for m in range(1, k + 1):
                    prefix_val = upward_shadow_size(members[:m], q, s)
                    assert prefix_val == best[m], (q, lo, hi, m)
