"""
Barrido con árboles de Fenwick: cuadrado de peso máximo con una esquina
izquierda sobre un vértice de una trayectoria horizontal, en O(n log n),
y el envoltorio 1/4-aproximado para trayectorias ortogonales.
"""

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass, field

from contribution import ZERO, LinearFn, require_horizontal, sweep_updates
from errors import IndexOutOfRange
from traj_model import EdgeSet, Placement, Scalar, partition, rotate, rotate_square, square_weight

logger = logging.getLogger(__name__)


# ────────────────────────────────────────────────────────────
# Fenwick
# ────────────────────────────────────────────────────────────
class FenwickTree:
    """Sumas prefijas con actualizaciones puntuales; todo en O(log n)."""

    def __init__(self, size: int) -> None:
        self._v: list[Scalar] = [0] * size

    def __len__(self) -> int:
        return len(self._v)

    def add(self, idx: int, delta: Scalar) -> None:
        """Suma delta a la posición idx (0-based)."""
        idx += 1
        while idx <= len(self._v):
            self._v[idx - 1] += delta
            idx += idx & -idx

    def prefix_sum(self, stop: int) -> Scalar:
        """Suma de las posiciones [0, stop)."""
        total: Scalar = 0
        while stop > 0:
            total += self._v[stop - 1]
            stop -= stop & -stop
        return total


@dataclass
class FenwickPair:
    """
    Dos árboles de Fenwick: A guarda pendientes y B ordenadas al origen,
    indexados por el rango de la arista en σ (1-based).
    """
    size: int
    slopes: FenwickTree = field(init=False)
    intercepts: FenwickTree = field(init=False)
    updates: int = field(default=0, init=False)
    _current: list[LinearFn] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.slopes = FenwickTree(self.size)
        self.intercepts = FenwickTree(self.size)
        self._current = [ZERO] * self.size

    def _check(self, i: int, j: int) -> None:
        if not 1 <= i <= j <= self.size:
            raise IndexOutOfRange(f"rango [{i}, {j}] fuera de [1, {self.size}]")

    def set(self, i: int, fn: LinearFn) -> None:
        """Reemplaza el par (a_i, b_i)."""
        self._check(i, i)
        delta = fn - self._current[i - 1]
        self._current[i - 1] = fn
        self.updates += 1
        if delta.slope:
            self.slopes.add(i - 1, delta.slope)
        if delta.intercept:
            self.intercepts.add(i - 1, delta.intercept)

    def get(self, i: int) -> LinearFn:
        self._check(i, i)
        return self._current[i - 1]

    def range_sum_fn(self, i: int, j: int) -> LinearFn:
        """Σ c_{e_q} para q en [i, j]."""
        self._check(i, j)
        return LinearFn(
            self.slopes.prefix_sum(j) - self.slopes.prefix_sum(i - 1),
            self.intercepts.prefix_sum(j) - self.intercepts.prefix_sum(i - 1),
        )


@dataclass
class QuarterStats:
    fenwick_updates: int = 0
    evaluations: int = 0


# ────────────────────────────────────────────────────────────
# Barrido anclado a esquinas
# ────────────────────────────────────────────────────────────
def corner_anchored_max(H: EdgeSet, s: Scalar, *, stats: QuarterStats | None = None) -> Placement:
    """
    Máximo entre los cuadrados cuya esquina inferior izquierda o superior
    izquierda coincide con un extremo de arista de H.
    """
    H.require_nonempty()
    edges = H.edges
    for e in edges:
        require_horizontal(e)

    order = sorted(range(len(edges)), key=lambda i: (edges[i].a[1], i))
    rank = {edge_id: pos + 1 for pos, edge_id in enumerate(order)}
    ys = [edges[i].a[1] for i in order]

    # x → (actualizaciones inmediatas, vértices a evaluar, salidas diferidas)
    now: dict[Scalar, list] = defaultdict(list)
    later: dict[Scalar, list] = defaultdict(list)
    probes: dict[Scalar, list] = defaultdict(list)
    for i, e in enumerate(edges):
        for upd in sweep_updates(e, s):
            (later if upd.deferred else now)[upd.x].append((rank[i], upd.fn))
        for vx in sorted({e.a[0], e.b[0]}):
            probes[vx].append(e.a[1])

    fenwick = FenwickPair(len(edges))
    best: Placement | None = None
    evaluations = 0

    for x in sorted(now.keys() | later.keys()):
        for r, fn in now.get(x, ()):
            fenwick.set(r, fn)

        for y in sorted(probes.get(x, ())):
            # esquina inferior izquierda: filas con altura en [y, y+s]
            lo, hi = bisect_left(ys, y), bisect_right(ys, y + s)
            w = fenwick.range_sum_fn(lo + 1, hi)(x)
            if best is None or w > best.weight:
                best = Placement(x, y, s, w)
            # esquina superior izquierda: alturas en [y−s, y]
            lo, hi = bisect_left(ys, y - s), bisect_right(ys, y)
            w = fenwick.range_sum_fn(lo + 1, hi)(x)
            if w > best.weight:
                best = Placement(x, y - s, s, w)
            evaluations += 2

        for r, fn in later.get(x, ()):
            fenwick.set(r, fn)

    if stats is not None:
        stats.fenwick_updates += fenwick.updates
        stats.evaluations += evaluations
    logger.debug(
        "corner_anchored_max: n=%d actualizaciones=%d evaluaciones=%d → %s",
        len(edges), fenwick.updates, evaluations, best,
    )
    return best


# ────────────────────────────────────────────────────────────
# Envoltorio 1/4
# ────────────────────────────────────────────────────────────
def quarter_configurations(T: EdgeSet) -> list[tuple[str, EdgeSet, int]]:
    """(etiqueta, parte, cuartos de vuelta) de las cuatro corridas no vacías."""
    H, V = partition(T)
    runs = [("H", H, 0), ("H180", H, 2), ("V90", V, 1), ("V270", V, 3)]
    return [(label, part, k) for label, part, k in runs if part]


def quarter_hotspot(
    T: EdgeSet,
    s: Scalar,
    *,
    stats: QuarterStats | None = None,
    parts: dict[str, Scalar] | None = None,
) -> Placement:
    """
    Cuadrado con peso ≥ h(T)/4. Cada ganador se devuelve a las coordenadas
    originales y se re-evalúa contra T completa antes de tomar el máximo.
    """
    T.require_nonempty()
    best: Placement | None = None
    for label, part, k in quarter_configurations(T):
        local = corner_anchored_max(rotate(part, k), s, stats=stats)
        x, y = rotate_square(local.x, local.y, s, (4 - k) % 4)
        w = square_weight(T, x, y, s)
        if parts is not None:
            parts[label] = w
        if best is None or w > best.weight:
            best = Placement(x, y, s, w)
    logger.debug("quarter_hotspot: n=%d → %s", len(T), best)
    return best
