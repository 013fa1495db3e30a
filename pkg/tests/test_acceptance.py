"""Corpus completos y escalamiento; correr con `pytest -m slow`."""

from fractions import Fraction as F
import math
import random

import pytest

from cli.bench import run_bench, summarize
from cli.generators import gen_comb, gen_walk
from config import BENCH_SEED, BENCH_SIDE, BENCH_SIZES
from contribution import contribution_at
from hotspot3d import cube_hotspot
from instances import horizontal_corpus, orthogonal_corpus, random_horizontal_edge
from kinetic_half import KineticStats, half_hotspot, half_hotspot_horizontal
from oracle import corner_anchored_oracle, exact_hotspot_2d, exact_hotspot_3d
from quarter_sweep import corner_anchored_max, quarter_hotspot
from test_kinetic_half import _check_invariants
from traj_model import EdgeSet, partition, square_weight

pytestmark = pytest.mark.slow

WINNER_CHANGE_C = 32


def test_horizontal_exactness():
    failures = 0
    for H, s in horizontal_corpus(100, 200, 64, n_min=4):
        failures += half_hotspot_horizontal(H, s).weight != exact_hotspot_2d(H, s).weight
    assert failures == 0


def test_half_and_quarter_bounds():
    for T, s in orthogonal_corpus(101, 200, 64):
        h = exact_hotspot_2d(T, s).weight
        half = half_hotspot(T, s).weight
        assert 2 * half >= h
        assert 4 * quarter_hotspot(T, s).weight >= h
        for part in partition(T):
            if part:
                assert half >= exact_hotspot_2d(part, s).weight


def test_anchored_exactness():
    for H, s in horizontal_corpus(102, 200, 32):
        assert corner_anchored_max(H, s).weight == corner_anchored_oracle(H, s).weight


def test_structural_invariants_corpus():
    for H, s in horizontal_corpus(103, 50, 32):
        assert _check_invariants(H, s) == []


def test_contribution_suite():
    rng = random.Random(104)
    for _ in range(100):
        e = random_horizontal_edge(rng)
        s = F(rng.randint(1, 8))
        lo, hi = e.a[0] - s - 1, e.b[0] + 1
        for _ in range(1000):
            x = lo + (hi - lo) * F(rng.randint(0, 10 ** 6), 10 ** 6)
            assert contribution_at(e, s, x)(x) == square_weight(EdgeSet.of([e]), x, e.a[1], s)


def test_cube_reduction():
    for T, s in orthogonal_corpus(105, 100, 16, dim=3):
        h = exact_hotspot_3d(T, s).weight
        assert cube_hotspot(T, s, exact_hotspot_2d).weight == h
        assert 2 * cube_hotspot(T, s, half_hotspot).weight >= h


@pytest.mark.parametrize("n, side", [(4000, F(8)), (4000, F(3, 10)), (10_000, F(8))])
def test_float_mode_agrees_on_long_walks(n, side):
    T = gen_walk(n, BENCH_SEED)
    exact = half_hotspot(T, side).weight
    assert half_hotspot(T.to_float(), float(side)).weight == pytest.approx(float(exact), rel=1e-9)


# ────────────────────────────────────────────────────────────
# Escalamiento (modo float, mismo arnés que `hotspot bench`)
# ────────────────────────────────────────────────────────────
def _doubling_ratios(algo, sizes, reps=3):
    raw = run_bench([algo], sizes, reps=reps, seed=BENCH_SEED, side=BENCH_SIDE)
    return summarize(raw)["doubling_ratio"].dropna().tolist()


def test_scaling_half():
    assert max(_doubling_ratios("half", BENCH_SIZES)) <= 2.6


def test_scaling_quarter():
    assert max(_doubling_ratios("quarter", BENCH_SIZES)) <= 2.3


def test_scaling_oracle():
    assert min(_doubling_ratios("exact", [256, 512, 1024], reps=1)) >= 3.2


def test_half_100k_run_time():
    raw = run_bench(["half"], [100_000], reps=1, seed=BENCH_SEED, side=BENCH_SIDE)
    assert raw["runtime_ns"].iloc[0] < 10 * 10 ** 9


def test_winner_changes_bounded():
    ratios = []
    for n in (64, 128, 256, 512):
        for T in (gen_walk(n, n), gen_comb(n)):
            stats = KineticStats()
            half_hotspot(T, F(8), stats=stats)
            ratios.append(stats.winner_changes / (n * math.log2(n) ** 2))
    # una sola constante C para todo el corpus, peine incluido
    assert max(ratios) <= WINNER_CHANGE_C
