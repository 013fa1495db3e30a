"""
Benchmark de escalamiento.

Cada celda (algoritmo, n, repetición) genera su instancia, mide el tiempo
de pared con perf_counter_ns y guarda los contadores del algoritmo. El
resumen da la mediana por (algoritmo, n), el cociente T(2n)/T(n) y los
cambios de ganador normalizados por n·log²n.
"""

from __future__ import annotations

import logging
import math
import time
from multiprocessing import Pool
from pathlib import Path
from typing import Sequence

import pandas as pd

from cli.generators import generate_vertices
from cli.solvers import solve
from config import BENCH_COLUMNS
from traj_model import build_edge_set

logger = logging.getLogger(__name__)


def run_cell(algo: str, n: int, rep: int, seed: int, kind: str, side: int, mode: str) -> dict:
    T = build_edge_set(generate_vertices(kind, n, seed + rep))
    s = side
    if mode == "float":
        T, s = T.to_float(), float(side)

    t0 = time.perf_counter_ns()
    solved = solve(algo, T, s)
    elapsed = time.perf_counter_ns() - t0

    c = solved.counters
    row = {
        "algo": algo,
        "n": n,
        "rep": rep,
        "runtime_ns": elapsed,
        "events": c.get("events", c.get("fenwick_updates", 0)),
        "winner_changes": c.get("winner_changes", 0),
        "stale_events": c.get("stale_events", 0),
    }
    logger.info("bench %s n=%d rep=%d: %.3f s", algo, n, rep, elapsed / 1e9)
    return row


def run_bench(
    algos: Sequence[str],
    sizes: Sequence[int],
    *,
    reps: int,
    seed: int,
    kind: str = "walk",
    side: int = 8,
    mode: str = "float",
    jobs: int = 1,
) -> pd.DataFrame:
    cells = [(a, n, r, seed, kind, side, mode) for a in algos for n in sizes for r in range(reps)]
    if jobs > 1:
        # una celda por proceso: cada medición sigue siendo secuencial
        with Pool(jobs) as pool:
            rows = pool.starmap(run_cell, cells)
    else:
        rows = [run_cell(*cell) for cell in cells]
    return pd.DataFrame(rows, columns=list(BENCH_COLUMNS))


def summarize(raw: pd.DataFrame) -> pd.DataFrame:
    """Mediana por (algo, n), cociente de duplicación y cambios/(n·log²n)."""
    df = (
        raw.groupby(["algo", "n"], as_index=False)
        .agg(median_runtime_ns=("runtime_ns", "median"),
             winner_changes=("winner_changes", "median"))
        .sort_values(["algo", "n"])
        .reset_index(drop=True)
    )
    prev_n = df.groupby("algo")["n"].shift(1)
    prev_t = df.groupby("algo")["median_runtime_ns"].shift(1)
    df["doubling_ratio"] = (df["median_runtime_ns"] / prev_t).where(df["n"] == 2 * prev_n)
    df["changes_per_nlog2n"] = df.apply(
        lambda r: r["winner_changes"] / (r["n"] * math.log2(r["n"]) ** 2) if r["n"] > 1 else float("nan"),
        axis=1,
    )
    return df


def summary_path(out: str | Path) -> Path:
    out = Path(out)
    return out.with_name(f"{out.stem}_summary.csv")


def write_bench(raw: pd.DataFrame, out: str | Path) -> pd.DataFrame:
    summary = summarize(raw)
    raw.to_csv(out, index=False)
    summary.to_csv(summary_path(out), index=False)
    logger.info("bench: %d filas en %s", len(raw), out)
    return summary
