"""
Cubos de peso máximo reduciendo a 2D por losas.

Para cada vértice v se proyecta la parte de la trayectoria que cae entre
z = z(v) y z = z(v) + s y se resuelve el problema 2D; el cuadrado obtenido
se levanta a un cubo con la cara inferior en z(v). Repetir con el eje z
invertido cubre los cubos con la cara superior sobre un vértice. El factor
de aproximación del algoritmo 2D se conserva.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from errors import InvalidEdge
from traj_model import EdgeSet, Orientation, Placement, Scalar, WeightedEdge, cube_weight

logger = logging.getLogger(__name__)

Algo2D = Callable[[EdgeSet, Scalar], Placement]


@dataclass(frozen=True, slots=True)
class Slab:
    """Franja cerrada [z0, z0 + side]."""
    z0: Scalar
    side: Scalar

    @property
    def z1(self) -> Scalar:
        return self.z0 + self.side

    def __contains__(self, z: Scalar) -> bool:
        return self.z0 <= z <= self.z1


def z_rate(e: WeightedEdge) -> Scalar:
    """d(e): duración por unidad de longitud de una arista paralela a z."""
    if e.orientation is not Orientation.Z:
        raise InvalidEdge(f"se esperaba una arista paralela a z, no {e.orientation.value}")
    return e.rate


def project_slab(T3: EdgeSet, slab: Slab) -> EdgeSet:
    """
    Sombra 2D de la losa. Las aristas en x/y (y los puntos) dentro de la losa
    se copian enteras; las aristas en z que la atraviesan se vuelven aristas
    punto con la duración del tramo que queda dentro.
    """
    if T3.dim != 3:
        raise InvalidEdge("project_slab() sólo admite conjuntos 3D")
    out: list[WeightedEdge] = []
    for e in T3:
        a2, b2 = e.a[:2], e.b[:2]
        if e.orientation is Orientation.Z:
            lo, hi = max(e.a[2], slab.z0), min(e.b[2], slab.z1)
            if hi <= lo:
                continue
            if lo == e.a[2] and hi == e.b[2]:
                duration = e.duration
            else:
                duration = z_rate(e) * (hi - lo)
            out.append(WeightedEdge.between(a2, a2, duration))
        elif e.a[2] in slab:
            out.append(WeightedEdge.between(a2, b2, e.duration))
    return EdgeSet(tuple(out), 2)


def mirror_z(T3: EdgeSet) -> EdgeSet:
    if T3.dim != 3:
        raise InvalidEdge("mirror_z() sólo admite conjuntos 3D")
    return EdgeSet(tuple(e.map_points(lambda p: (p[0], p[1], -p[2])) for e in T3), 3)


def cube_hotspot(T3: EdgeSet, s: Scalar, algo2d: Algo2D) -> Placement:
    """Mejor cubo entre las losas ancladas a vértices, en ambos sentidos de z."""
    T3.require_nonempty()
    if T3.dim != 3:
        raise InvalidEdge("cube_hotspot() sólo admite conjuntos 3D")

    best: Placement | None = None
    slabs = 0
    for mirrored, frame in ((False, T3), (True, mirror_z(T3))):
        for z in sorted({p[2] for p in frame.endpoints()}):
            shadow = project_slab(frame, Slab(z, s))
            if not shadow:
                logger.warning("cube_hotspot: losa vacía en z=%s", z)
                continue
            slabs += 1
            square = algo2d(shadow, s)
            z_low = -z - s if mirrored else z
            w = cube_weight(T3, square.x, square.y, z_low, s)
            if best is None or w > best.weight:
                best = Placement(square.x, square.y, s, w, z_low)

    logger.debug("cube_hotspot[%s]: n=%d losas=%d → %s",
                 getattr(algo2d, "__name__", algo2d), len(T3), slabs, best)
    return best
