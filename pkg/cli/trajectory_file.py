"""
Formatos de archivo de la CLI.

• TrajectoryFile: un vértice por línea `t,x,y[,z]`, comentarios con `#`,
  encabezado opcional. Los números se leen como Fraction exactas.
• ResultRecord: resultado de `hotspot`, serializado como JSON de una línea.
• TraceWriter: una línea por evento cinético (formato versionado).
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence, TextIO

from config import TRACE_COLUMNS, TRACE_HEADER, TRAJECTORY_HEADER_2D, TRAJECTORY_HEADER_3D
from errors import InvalidTrajectory, TrajectoryFileError
from kinetic_half import TraceRecord
from traj_model import EdgeSet, Placement, Scalar, TimedVertex, build_edge_set

logger = logging.getLogger(__name__)

_HEADERS = {TRAJECTORY_HEADER_2D: 2, TRAJECTORY_HEADER_3D: 3}


# ────────────────────────────────────────────────────────────
# Números
# ────────────────────────────────────────────────────────────
def parse_scalar(token: str) -> Fraction:
    return Fraction(token.strip())


def render_scalar(v: Scalar) -> str:
    """Entero, decimal exacto o p/q; parse_scalar lo lee sin pérdida."""
    if isinstance(v, float):
        return repr(v)
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    d, k2, k5 = v.denominator, 0, 0
    while d % 2 == 0:
        d, k2 = d // 2, k2 + 1
    while d % 5 == 0:
        d, k5 = d // 5, k5 + 1
    if d != 1:
        return f"{v.numerator}/{v.denominator}"
    k = max(k2, k5)
    n = (v * 10 ** k).numerator
    digits = str(abs(n)).rjust(k + 1, "0")
    return f"{'-' if n < 0 else ''}{digits[:-k]}.{digits[-k:]}"


def render_decimal(v: Scalar) -> str:
    return f"{float(v):.12g}"


# ────────────────────────────────────────────────────────────
# TrajectoryFile
# ────────────────────────────────────────────────────────────
def parse_trajectory(text: str, dim: int | None = None) -> list[TimedVertex]:
    """
    Lee los vértices de un TrajectoryFile. dim None → se deduce del
    encabezado o de la primera fila de datos.
    """
    vertices: list[TimedVertex] = []
    line_of: list[int] = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        compact = line.replace(" ", "").lower()
        if not seen_data:
            seen_data = True
            if compact in _HEADERS:
                dim = _check_dim(dim, _HEADERS[compact], lineno)
                continue

        try:
            values = [parse_scalar(tok) for tok in line.split(",")]
        except (ValueError, ZeroDivisionError):
            raise TrajectoryFileError(lineno, f"número inválido en {line!r}") from None
        dim = _check_dim(dim, len(values) - 1, lineno)
        vertices.append(TimedVertex(values[0], tuple(values[1:])))
        line_of.append(lineno)

    if not vertices:
        raise TrajectoryFileError(max(1, len(text.splitlines())), "el archivo no tiene vértices")
    try:
        build_edge_set(vertices)
    except InvalidTrajectory as exc:
        raise TrajectoryFileError(line_of[exc.index], str(exc)) from exc
    return vertices


def _check_dim(expected: int | None, found: int, lineno: int) -> int:
    if found not in (2, 3):
        raise TrajectoryFileError(lineno, f"se esperaban 3 o 4 columnas, hay {found + 1}")
    if expected is not None and expected != found:
        raise TrajectoryFileError(lineno, f"se esperaban datos {expected}D, la línea es {found}D")
    return found


def read_trajectory(path: str | Path, dim: int | None = None) -> EdgeSet:
    text = Path(path).read_text(encoding="utf-8")
    vertices = parse_trajectory(text, dim)
    logger.info("leídos %d vértices de %s", len(vertices), path)
    return build_edge_set(vertices)


def render_trajectory(vertices: Sequence[TimedVertex]) -> str:
    dim = len(vertices[0].p) if vertices else 2
    header = TRAJECTORY_HEADER_3D if dim == 3 else TRAJECTORY_HEADER_2D
    rows = [",".join(render_scalar(c) for c in (v.t, *v.p)) for v in vertices]
    return "\n".join([header, *rows]) + "\n"


def write_trajectory(path: str | Path, vertices: Sequence[TimedVertex]) -> None:
    Path(path).write_text(render_trajectory(vertices), encoding="utf-8")


# ────────────────────────────────────────────────────────────
# ResultRecord
# ────────────────────────────────────────────────────────────
@dataclass
class ResultRecord:
    algo: str
    side: str
    dim: int
    corner: list[str]
    weight: str
    weight_decimal: str
    counters: dict[str, int] = field(default_factory=dict)
    runtime_ns: int = 0
    parts: dict[str, str] = field(default_factory=dict)

    @classmethod
    def build(cls, algo: str, placement: Placement, *, counters: dict[str, int] | None = None,
              runtime_ns: int = 0, parts: dict[str, Scalar] | None = None) -> "ResultRecord":
        return cls(
            algo=algo,
            side=render_scalar(placement.side),
            dim=placement.dim,
            corner=[render_scalar(c) for c in placement.corner],
            weight=str(placement.weight),
            weight_decimal=render_decimal(placement.weight),
            counters=dict(counters or {}),
            runtime_ns=runtime_ns,
            parts={k: str(v) for k, v in (parts or {}).items()},
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        try:
            return cls(**json.loads(text))
        except (ValueError, TypeError) as exc:
            raise TrajectoryFileError(1, f"registro de resultado inválido: {exc}") from exc

    @property
    def exact_weight(self) -> Fraction:
        return Fraction(self.weight)

    def placement(self) -> Placement:
        corner = [parse_scalar(c) for c in self.corner]
        z = corner[2] if self.dim == 3 else None
        return Placement(corner[0], corner[1], parse_scalar(self.side), self.exact_weight, z)


# ────────────────────────────────────────────────────────────
# Traza
# ────────────────────────────────────────────────────────────
class TraceWriter:
    """Callback de traza que escribe una línea CSV por evento."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self.records = 0
        self._fh: TextIO | None = None

    def __enter__(self) -> "TraceWriter":
        self._fh = self.path.open("w", encoding="utf-8")
        self._fh.write(TRACE_HEADER + "\n")
        self._fh.write(",".join(TRACE_COLUMNS) + "\n")
        return self

    def __exit__(self, *exc) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None
        logger.info("traza: %d eventos en %s", self.records, self.path)

    def __call__(self, rec: TraceRecord) -> None:
        row = (rec.run, render_scalar(rec.x), rec.kind, str(rec.target),
               str(rec.winner), render_scalar(rec.f_root))
        self._fh.write(",".join(row) + "\n")
        self.records += 1


def read_trace(path: str | Path) -> list[dict[str, str]]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != TRACE_HEADER:
        raise TrajectoryFileError(1, f"se esperaba {TRACE_HEADER!r}")
    return [dict(zip(TRACE_COLUMNS, ln.split(","))) for ln in lines[2:] if ln]
