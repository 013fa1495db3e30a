"""Figuras SVG estáticas: trayectoria con su hotspot y el plano de curvas h_i(x)."""

from __future__ import annotations

import logging
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

from contribution import update_events
from kinetic_half import KineticTree, half_hotspot_horizontal, tracked_square_weights
from traj_model import EdgeSet, Placement, Scalar, partition

logger = logging.getLogger(__name__)


def plot_trajectory(T: EdgeSet, out: str | Path, placement: Placement | None = None) -> None:
    """Aristas en el plano xy (la sombra si T es 3D), puntos como marcadores."""
    fig = plt.Figure(figsize=(8, 8))
    ax = fig.subplots()

    for e in T:
        if e.is_point:
            continue
        ax.plot([float(e.a[0]), float(e.b[0])], [float(e.a[1]), float(e.b[1])],
                color="#336699", linewidth=1)
    stays = [e for e in T if e.is_point or e.axis == 2]
    if stays:
        ax.scatter([float(e.a[0]) for e in stays], [float(e.a[1]) for e in stays],
                   s=12, color="#cc6600", zorder=3)

    if placement is not None:
        ax.add_patch(plt.Rectangle(
            (float(placement.x), float(placement.y)), float(placement.side), float(placement.side),
            fill=False, edgecolor="red", linewidth=2,
        ))
        ax.set_title(f"peso = {float(placement.weight):.6g}")

    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.tight_layout()
    fig.savefig(out, format="svg")
    logger.info("figura escrita en %s", out)


def envelope_table(H: EdgeSet, s: Scalar) -> pd.DataFrame:
    """Una fila por x de evento, una columna h_i por arista de H."""
    xs = sorted({x for e in H for x in update_events(e, s).xs})
    rows = [[float(w) for w in tracked_square_weights(H, s, x)] for x in xs]
    return pd.DataFrame(rows, index=[float(x) for x in xs],
                        columns=[f"h{i}" for i in range(len(H))])


def plot_envelope(T: EdgeSet, s: Scalar, out: str | Path) -> Placement:
    """
    Curvas de los cuadrados rastreados de la parte horizontal de T y la
    envolvente superior f_raíz(x) que mantiene el barrido cinético.
    """
    H, _ = partition(T)
    roots: list[tuple[float, float]] = []

    def record(tree: KineticTree, x: Scalar) -> None:
        roots.append((float(x), float(tree.root_value(x))))

    best = half_hotspot_horizontal(H, s, on_event=record)
    table = envelope_table(H, s)

    fig = plt.Figure(figsize=(10, 6))
    ax = fig.subplots()
    cmap = plt.get_cmap("tab20")
    for idx, col in enumerate(table.columns):
        ax.plot(table.index, table[col], color=cmap(idx % cmap.N), linewidth=0.8)
    env = pd.DataFrame(roots, columns=["x", "f_root"]).drop_duplicates("x", keep="first")
    ax.plot(env["x"], env["f_root"], color="black", linewidth=2, linestyle="--")
    ax.scatter([float(best.x)], [float(best.weight)], color="red", zorder=4)
    ax.set_xlabel("x")
    ax.set_ylabel("peso")
    fig.tight_layout()
    fig.savefig(out, format="svg")
    logger.info("envolvente escrita en %s", out)
    return best
