import json
from fractions import Fraction

import pytest

from helpers import strongly_connected_brute
from wmscss.errors import PreconditionError
from wmscss.exact import exact_opt
from wmscss.instances import (
    GENERATOR,
    gen_bidirected,
    gen_cycle,
    gen_half_integral_corpus,
    gen_mixture_point,
    gen_random_corpus,
    gen_random_strong,
    read_corpus,
    write_corpus,
)
from wmscss.lp import check_wmscss_feasible, solve_wmscss_lp

HALF = Fraction(1, 2)


def test_cycle():
    g = gen_cycle(4, HALF)
    assert g.m == 4 and solve_wmscss_lp(g).objective == 2
    assert gen_cycle(1).m == 0


def test_bidirected_rules():
    g = gen_bidirected(2, [(0, 1)], "asymmetric", [(1, 4)])
    assert [(a.tail, a.head, a.weight) for a in g.arcs] == [(0, 1, 1), (1, 0, 4)]
    g = gen_bidirected(3, [(0, 1), (1, 2)], "per-edge", [2, 3])
    assert g.weights == (2, 2, 3, 3)
    with pytest.raises(PreconditionError):
        gen_bidirected(3, [(0, 1)])
    with pytest.raises(PreconditionError):
        gen_bidirected(2, [(0, 1)], "weird")


def test_star_opt():
    star = gen_bidirected(4, [(0, 1), (0, 2), (0, 3)])
    assert exact_opt(star)[1] == 6


def test_random_deterministic_and_strong():
    for seed in range(20):
        g = gen_random_strong(6, 13, (1, 5), seed=seed, max_den=3)
        assert g == gen_random_strong(6, 13, (1, 5), seed=seed, max_den=3)
        assert g.m == 13 and strongly_connected_brute(g)
        assert all(1 <= w <= 5 and w.denominator <= 3 for w in g.weights)


def test_random_corpus_ranges():
    corpus = gen_random_corpus(30, (3, 6), 12, seed=2)
    assert corpus == gen_random_corpus(30, (3, 6), 12, seed=2)
    assert all(3 <= g.n <= 6 and g.m <= max(12, g.n) for g in corpus)


def test_half_corpus():
    pairs = gen_half_integral_corpus(30, (3, 7), seed=1)
    for g, x in pairs:
        assert check_wmscss_feasible(g, x) is None
        assert x.is_half_integral() and x.f in (HALF, 1)
    assert [g for g, _ in pairs] == [g for g, _ in gen_half_integral_corpus(30, (3, 7), seed=1)]


def test_half_corpus_needs_three_vertices():
    with pytest.raises(PreconditionError):
        gen_half_integral_corpus(1, (2, 4))


def test_mixture_feasible():
    g = gen_random_strong(6, 14, seed=9)
    for seed in range(10):
        x = gen_mixture_point(g, 3, seed=seed)
        assert check_wmscss_feasible(g, x) is None


def test_corpus_roundtrip(tmp_path):
    pairs = gen_half_integral_corpus(3, seed=4)
    items = [(f"h{k}", g, x) for k, (g, x) in enumerate(pairs)] + [("c", gen_cycle(3), None)]
    write_corpus(tmp_path, items, {"family": "test"})
    back = read_corpus(tmp_path)
    assert [name for name, _, _ in back] == ["c", "h0", "h1", "h2"]
    assert back[0][2] is None
    assert [(g, x) for _, g, x in back[1:]] == pairs
    assert json.loads((tmp_path / "meta.json").read_text())["generator"] == GENERATOR
