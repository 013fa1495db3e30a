"""Despacho de --algo a las funciones de la librería, en 2D y 3D."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Callable

from hotspot3d import cube_hotspot
from kinetic_half import KineticStats, TraceRecord, half_hotspot
from oracle import exact_hotspot_2d, exact_hotspot_3d
from quarter_sweep import QuarterStats, quarter_hotspot
from traj_model import EdgeSet, Placement, Scalar

logger = logging.getLogger(__name__)

ALGORITHMS = ("exact", "quarter", "half")


@dataclass
class Solved:
    placement: Placement
    counters: dict[str, int] = field(default_factory=dict)
    parts: dict[str, Scalar] = field(default_factory=dict)


def solve(
    algo: str,
    T: EdgeSet,
    s: Scalar,
    *,
    workers: int | None = None,
    trace: Callable[[TraceRecord], None] | None = None,
) -> Solved:
    """En 3D el algoritmo 2D elegido corre dentro de cube_hotspot."""
    parts: dict[str, Scalar] = {}
    if algo == "exact":
        if T.dim == 3:
            return Solved(exact_hotspot_3d(T, s))
        return Solved(exact_hotspot_2d(T, s, workers=workers))

    if algo == "quarter":
        qstats = QuarterStats()
        if T.dim == 3:
            best = cube_hotspot(T, s, partial(quarter_hotspot, stats=qstats))
        else:
            best = quarter_hotspot(T, s, stats=qstats, parts=parts)
        return Solved(best, asdict(qstats), parts)

    if algo == "half":
        kstats = KineticStats()
        if T.dim == 3:
            best = cube_hotspot(T, s, partial(half_hotspot, stats=kstats))
        else:
            best = half_hotspot(T, s, stats=kstats, trace=trace, parts=parts)
        return Solved(best, asdict(kstats), parts)

    raise ValueError(f"algoritmo desconocido: {algo}")
