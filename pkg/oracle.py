"""
Hotspot exacto por fuerza bruta sobre la grilla de candidatos.

La función (x, y) ↦ square_weight(T, x, y, s) es lineal dentro de cada celda
de la grilla {x_v, x_v − s} × {y_v, y_v − s}, así que su máximo está en un
punto de la grilla. Es la referencia contra la que se comparan los barridos.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Sequence

from hotspot3d import Slab, project_slab
from traj_model import EdgeSet, Placement, Scalar, cube_weight, square_weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CandidateGrid:
    xs: tuple[Scalar, ...]
    ys: tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.xs) * len(self.ys)


def candidate_grid(T: EdgeSet, s: Scalar) -> CandidateGrid:
    pts = T.endpoints()
    xs = sorted({p[0] for p in pts} | {p[0] - s for p in pts})
    ys = sorted({p[1] for p in pts} | {p[1] - s for p in pts})
    return CandidateGrid(tuple(xs), tuple(ys))


def _column(T: EdgeSet, x: Scalar, s: Scalar) -> EdgeSet:
    """Aristas cuya extensión en x toca [x, x+s]; las demás pesan 0 ahí."""
    return EdgeSet(tuple(e for e in T if e.a[0] <= x + s and e.b[0] >= x), T.dim)


def _best_in_columns(T: EdgeSet, s: Scalar, xs: Sequence[Scalar],
                     ys: Sequence[Scalar]) -> Placement | None:
    best: Placement | None = None
    for x in xs:
        col = _column(T, x, s)
        for y in ys:
            w = square_weight(col, x, y, s) if col else 0
            if best is None or w > best.weight:
                best = Placement(x, y, s, w)
    return best


def _chunks(xs: Sequence[Scalar], k: int) -> list[Sequence[Scalar]]:
    size = -(-len(xs) // k)
    return [xs[i:i + size] for i in range(0, len(xs), size)]


def exact_hotspot_2d(T: EdgeSet, s: Scalar, *, workers: int | None = None) -> Placement:
    """
    Máximo de square_weight en la grilla; los empates quedan en el (x, y)
    lexicográficamente menor. Con workers > 1 las columnas se reparten en
    bloques contiguos entre procesos.
    """
    T.require_nonempty()
    grid = candidate_grid(T, s)
    logger.debug("exact_hotspot_2d: n=%d grilla=%dx%d", len(T), len(grid.xs), len(grid.ys))

    if not workers or workers <= 1 or len(grid.xs) < 2:
        return _best_in_columns(T, s, grid.xs, grid.ys)

    chunks = _chunks(grid.xs, workers)
    with Pool(min(workers, len(chunks))) as pool:
        partial = pool.starmap(_best_in_columns, [(T, s, c, grid.ys) for c in chunks])

    # bloques en orden creciente de x: con > estricto gana el menor (x, y)
    best: Placement | None = None
    for cand in partial:
        if cand is not None and (best is None or cand.weight > best.weight):
            best = cand
    return best


def corner_anchored_oracle(H: EdgeSet, s: Scalar) -> Placement:
    """Cuadrados con una esquina izquierda sobre un vértice, uno por uno."""
    H.require_nonempty()
    best: Placement | None = None
    for x, y in H.endpoints():
        for cy in (y, y - s):
            w = square_weight(H, x, cy, s)
            if best is None or w > best.weight:
                best = Placement(x, cy, s, w)
    return best


def exact_hotspot_3d(T: EdgeSet, s: Scalar) -> Placement:
    """Fuerza bruta por planos z ∈ {z_v, z_v − s} y la grilla de cada losa."""
    T.require_nonempty()
    zs = sorted({p[2] for p in T.endpoints()} | {p[2] - s for p in T.endpoints()})
    best: Placement | None = None
    for z in zs:
        shadow = project_slab(T, Slab(z, s))
        if not shadow:
            continue
        grid = candidate_grid(shadow, s)
        for x in grid.xs:
            col = _column(T, x, s)
            for y in grid.ys:
                w = cube_weight(col, x, y, z, s) if col else 0
                if best is None or w > best.weight:
                    best = Placement(x, y, s, w, z)
    logger.debug("exact_hotspot_3d: n=%d planos=%d → %s", len(T), len(zs), best)
    return best
