"""
Familias de trayectorias sintéticas para pruebas y benchmarks.

Todas las coordenadas y tiempos son enteros (como Fraction), los tiempos
crecen estrictamente y cada paso cambia a lo sumo una coordenada. Misma
semilla → misma trayectoria.
"""

from __future__ import annotations

import random
from fractions import Fraction

from config import (
    CLUSTER_BOX,
    CLUSTER_REVISIT_RATE,
    CLUSTER_SPREAD,
    MAX_STEP_DURATION,
    STAY_PROBABILITY,
    WALK_MAX_STEP,
)
from traj_model import EdgeSet, TimedVertex, build_edge_set


def _check(n: int, dim: int) -> None:
    if n < 1:
        raise ValueError(f"n debe ser ≥ 1: {n}")
    if dim not in (2, 3):
        raise ValueError(f"dimensión no soportada: {dim}")


def walk_vertices(n: int, seed: int, dim: int = 2) -> list[TimedVertex]:
    """Paseo aleatorio ortogonal de n pasos; algunos pasos son estacionarios."""
    _check(n, dim)
    rng = random.Random(seed)
    t = Fraction(0)
    p = [Fraction(0)] * dim
    out = [TimedVertex(t, tuple(p))]
    for _ in range(n):
        t += rng.randint(1, MAX_STEP_DURATION)
        if rng.random() >= STAY_PROBABILITY:
            step = rng.randint(1, WALK_MAX_STEP) * rng.choice((-1, 1))
            p[rng.randrange(dim)] += step
        out.append(TimedVertex(t, tuple(p)))
    return out


def cluster_vertices(n: int, seed: int, revisit_rate: float = CLUSTER_REVISIT_RATE,
                     dim: int = 2) -> list[TimedVertex]:
    """
    Trayectoria que vuelve una y otra vez a la caja [0, CLUSTER_BOX]^dim.
    Con probabilidad revisit_rate el paso cae dentro de la caja (primero en
    el eje que haya quedado afuera); si no, sale de excursión.
    """
    _check(n, dim)
    rng = random.Random(seed)
    t = Fraction(0)
    p = [Fraction(0)] * dim
    out = [TimedVertex(t, tuple(p))]
    for _ in range(n):
        t += rng.randint(1, MAX_STEP_DURATION)
        if rng.random() < revisit_rate:
            outside = [k for k in range(dim) if not 0 <= p[k] <= CLUSTER_BOX]
            axis = outside[0] if outside else rng.randrange(dim)
            p[axis] = Fraction(rng.randint(0, CLUSTER_BOX))
        else:
            axis = rng.randrange(dim)
            p[axis] = Fraction(rng.randint(-CLUSTER_SPREAD, CLUSTER_SPREAD))
        out.append(TimedVertex(t, tuple(p)))
    return out


def comb_vertices(n: int, dim: int = 2) -> list[TimedVertex]:
    """
    Serpentina de dientes horizontales cada vez más anchos, uno por altura,
    con duraciones variables: muchos intervalos [y − s, y] entrelazados.
    """
    _check(n, dim)
    t = Fraction(0)
    p = [Fraction(0)] * dim
    out = [TimedVertex(t, tuple(p))]
    for i in range(n):
        k = i // 2
        if i % 2 == 0:
            p[0] = Fraction(k + 1) * (1 if k % 2 == 0 else -1)
        else:
            p[1] += 1
        t += 1 + (7 * i) % 5
        out.append(TimedVertex(t, tuple(p)))
    return out


def gen_walk(n: int, seed: int, dim: int = 2) -> EdgeSet:
    return build_edge_set(walk_vertices(n, seed, dim))


def gen_cluster(n: int, seed: int, revisit_rate: float = CLUSTER_REVISIT_RATE,
                dim: int = 2) -> EdgeSet:
    return build_edge_set(cluster_vertices(n, seed, revisit_rate, dim))


def gen_comb(n: int, dim: int = 2) -> EdgeSet:
    return build_edge_set(comb_vertices(n, dim))


GENERATORS = {
    "walk": lambda n, seed, dim, rate: walk_vertices(n, seed, dim),
    "cluster": lambda n, seed, dim, rate: cluster_vertices(n, seed, rate, dim),
    "comb": lambda n, seed, dim, rate: comb_vertices(n, dim),
}


def generate_vertices(kind: str, n: int, seed: int, dim: int = 2,
                      revisit_rate: float = CLUSTER_REVISIT_RATE) -> list[TimedVertex]:
    try:
        gen = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"familia desconocida: {kind}") from None
    return gen(n, seed, dim, revisit_rate)
