"""Exit criteria. Each test prints one PASS/FAIL line and is echoed in the summary."""

import functools
import time

import pytest

import conftest
from conftest import naive_neighborhood_poly, named_families, random_chordal_corpus, random_graph
from nbhdpoly.chordal import find_peo
from nbhdpoly.engine import anchor_width, compute
from nbhdpoly.graph import Graph, gen_basic, gen_interval_family, gen_random_chordal, gen_split
from nbhdpoly.oracle import (
    brute_neighborhood_poly,
    check_complement_identity,
    closure_anchor_family,
    replay_attachment,
)
from nbhdpoly.poly import ONE, Polynomial, binomial_power


def criterion(name):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                conftest.ACCEPTANCE[name] = "FAIL"
                print(f"FAIL {name}")
                raise
            conftest.ACCEPTANCE[name] = "PASS"
            print(f"PASS {name}")

        return run

    return wrap


@criterion("1 oracle equivalence")
def test_oracle_equivalence():
    corpus = list(random_chordal_corpus(520, 16, 5, seed=1))
    corpus += list(named_families(12))
    assert len(corpus) >= 500
    mismatches = [g for g in corpus if compute(g).poly != brute_neighborhood_poly(g)]
    assert not mismatches


@criterion("2 split-family width")
def test_split_family_width():
    for m in range(2, 11):
        assert anchor_width(gen_split(m)) == 2**m - 1, m
    for m in range(1, 13):
        assert len(closure_anchor_family(gen_split(m), range(m))) == 2**m - 1, m


@criterion("3a interval-family width bounds")
def test_interval_family_bounds():
    for m in range(1, 7):
        w = anchor_width(gen_interval_family(m))
        assert m * m <= w <= (4 * m + 1) ** 2, (m, w)


@criterion("3b interval-family central clique has 25 anchor sets at m=5")
def test_interval_family_central_clique_exact():
    g = gen_interval_family(5)
    assert len(closure_anchor_family(g, range(11))) == 25


@criterion("4 complement identity")
def test_complement_identity():
    corpus = list(random_chordal_corpus(150, 14, 5, seed=4))
    corpus += [random_graph(1 + s % 14, 0.1 + (s % 8) * 0.1, 4000 + s) for s in range(150)]
    corpus += [gen_basic("cycle", n) for n in range(3, 15)]
    corpus += [g for g in named_families(12) if g.n <= 14]
    assert all(check_complement_identity(g) for g in corpus)


@criterion("5 fixed vectors")
def test_fixed_vectors():
    k4_minus_e = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    cases = [
        (gen_basic("path", 4), Polynomial([1, 4, 2])),
        (k4_minus_e, Polynomial([1, 4, 6, 2])),
        (gen_basic("star", 4), Polynomial([1, 4, 3, 1])),
        (gen_basic("complete", 1), ONE),
    ]
    cases += [
        (gen_basic("complete", n), binomial_power(n) - Polynomial.monomial(n)) for n in range(2, 11)
    ]
    for g, expected in cases:
        assert naive_neighborhood_poly(g) == expected
        assert compute(g).poly == expected


@criterion("6 second pipeline")
def test_second_pipeline():
    for g in random_chordal_corpus(100, 14, 8, seed=6):
        order = list(reversed(find_peo(g)))
        assert replay_attachment(g, order) == compute(g).poly


@criterion("7 comparability bound")
def test_comparability_bound():
    for n in range(1, 21):
        assert anchor_width(gen_basic("complete", n)) <= 2 * n
    for m in range(1, 21):
        star = gen_basic("star", m + 1)
        assert anchor_width(star) <= 2 * star.n


def _timed(n, seed):
    g = gen_random_chordal(n, 4, seed)
    start = time.perf_counter()
    compute(g)
    return time.perf_counter() - start


@pytest.mark.slow
@criterion("8 scaling smoke")
def test_scaling_smoke():
    g = gen_random_chordal(5000, 4, 8)
    start = time.perf_counter()
    res = compute(g)
    elapsed = time.perf_counter() - start
    print(f"n=5000 time={elapsed:.2f}s peak_width={res.peak_width}")
    assert elapsed < 60
    assert res.peak_width >= res.anchor_width >= 1

    small = sum(_timed(1000, 8) for _ in range(3)) / 3
    large = sum(_timed(2000, 8) for _ in range(3)) / 3
    print(f"n=1000 {small:.3f}s n=2000 {large:.3f}s ratio={large / small:.2f}")
    assert large / small <= 12


@criterion("9 order invariance")
def test_order_invariance():
    corpus = list(random_chordal_corpus(44, 40, 5, seed=9))
    corpus += [
        gen_split(4),
        gen_split(5),
        gen_interval_family(2),
        gen_interval_family(3),
        gen_basic("star", 9),
        gen_basic("path", 12),
    ]
    assert len(corpus) == 50
    for g in corpus:
        runs = [compute(g, tie_seed=s) for s in range(10)]
        assert len({(r.poly, r.anchor_width) for r in runs}) == 1
