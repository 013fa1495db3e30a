"""
Modelo de datos de trayectorias ortogonales.

• Vértices con marca de tiempo, aristas ponderadas paralelas a un eje
• EdgeSet: la trayectoria como conjunto (sin orden) de aristas
• Partición H/V, rotaciones de un cuarto de vuelta
• Peso exacto de un cuadrado / cubo cerrado (la primitiva contra la que
  se verifica todo lo demás)

Las coordenadas y tiempos son Fraction (modo exacto) o float (modo
benchmark); ninguna función mezcla ambos.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from config import FLOAT_RESIDUE
from errors import (
    EmptyTrajectory,
    InvalidEdge,
    InvalidTrajectory,
    NonMonotoneTime,
    NonOrthogonalStep,
)

Scalar = Fraction | float
Point = tuple[Scalar, ...]


class Orientation(Enum):
    X = "x"
    Y = "y"
    Z = "z"
    POINT = "point"


_AXIS_ORIENTATION = (Orientation.X, Orientation.Y, Orientation.Z)


def format_point(p: Sequence[Scalar]) -> str:
    """(1/3, 2) en lugar del repr de una tupla de Fraction."""
    return "(" + ", ".join(str(c) for c in p) + ")"


# ────────────────────────────────────────────────────────────
# Tipos básicos
# ────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class TimedVertex:
    """Posición registrada en el instante t (τ(v))."""
    t: Scalar
    p: Point


@dataclass(frozen=True, slots=True)
class WeightedEdge:
    """
    Arista paralela a un eje (o punto) con su duración w_e.

    Usar WeightedEdge.between() para construirla: ordena los extremos a lo
    largo del eje que varía y deduce la orientación.
    """
    a: Point
    b: Point
    duration: Scalar
    orientation: Orientation

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise InvalidEdge("extremos de distinta dimensión")
        if self.duration < 0:
            raise InvalidEdge(f"duración negativa: {self.duration}")
        diff = [k for k in range(len(self.a)) if self.a[k] != self.b[k]]
        if len(diff) > 1:
            raise InvalidEdge(
                f"arista no paralela a un eje: {format_point(self.a)} → {format_point(self.b)}"
            )
        expected = _AXIS_ORIENTATION[diff[0]] if diff else Orientation.POINT
        if expected is not self.orientation:
            raise InvalidEdge(f"orientación {self.orientation.value} ≠ {expected.value}")
        if diff and self.a[diff[0]] > self.b[diff[0]]:
            raise InvalidEdge("extremos sin ordenar; usar WeightedEdge.between()")

    @classmethod
    def between(cls, p: Point, q: Point, duration: Scalar) -> "WeightedEdge":
        diff = [k for k in range(len(p)) if p[k] != q[k]]
        if len(diff) > 1:
            raise InvalidEdge(f"arista no paralela a un eje: {format_point(p)} → {format_point(q)}")
        if not diff:
            return cls(tuple(p), tuple(p), duration, Orientation.POINT)
        k = diff[0]
        a, b = (p, q) if p[k] < q[k] else (q, p)
        return cls(tuple(a), tuple(b), duration, _AXIS_ORIENTATION[k])

    # ------------------------------------------------------ derivados
    @property
    def dim(self) -> int:
        return len(self.a)

    @property
    def axis(self) -> int | None:
        """Índice de la coordenada que varía (None para puntos)."""
        if self.orientation is Orientation.POINT:
            return None
        return _AXIS_ORIENTATION.index(self.orientation)

    @property
    def is_point(self) -> bool:
        return self.orientation is Orientation.POINT

    @property
    def length(self) -> Scalar:
        k = self.axis
        return 0 if k is None else self.b[k] - self.a[k]

    @property
    def rate(self) -> Scalar:
        """m_e = duración / longitud; sólo definido si la longitud es > 0."""
        if self.is_point:
            raise InvalidEdge("una arista punto no tiene tasa")
        return self.duration / self.length

    def map_points(self, fn) -> "WeightedEdge":
        return WeightedEdge.between(fn(self.a), fn(self.b), self.duration)


@dataclass(frozen=True, slots=True)
class EdgeSet:
    """Trayectoria representada por su conjunto de aristas."""
    edges: tuple[WeightedEdge, ...] = ()
    dim: int = 2

    def __post_init__(self) -> None:
        if self.dim not in (2, 3):
            raise InvalidEdge(f"dimensión no soportada: {self.dim}")
        for e in self.edges:
            if e.dim != self.dim:
                raise InvalidEdge(f"arista de dimensión {e.dim} en un conjunto {self.dim}D")

    @classmethod
    def of(cls, edges: Iterable[WeightedEdge], dim: int | None = None) -> "EdgeSet":
        edges = tuple(edges)
        if dim is None:
            dim = edges[0].dim if edges else 2
        return cls(edges, dim)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[WeightedEdge]:
        return iter(self.edges)

    def __bool__(self) -> bool:
        return bool(self.edges)

    @property
    def total_duration(self) -> Scalar:
        return sum((e.duration for e in self.edges), 0)

    def endpoints(self) -> list[Point]:
        """Ubicaciones distintas de los vértices, ordenadas."""
        pts = set()
        for e in self.edges:
            pts.add(e.a)
            pts.add(e.b)
        return sorted(pts)

    def to_float(self) -> "EdgeSet":
        def conv(p: Point) -> Point:
            return tuple(float(c) for c in p)
        return EdgeSet(
            tuple(
                WeightedEdge(conv(e.a), conv(e.b), float(e.duration), e.orientation)
                for e in self.edges
            ),
            self.dim,
        )

    def require_nonempty(self) -> None:
        if not self.edges:
            raise EmptyTrajectory("la trayectoria no tiene aristas")


@dataclass(frozen=True, slots=True)
class Placement:
    """Cuadrado (o cubo si z no es None) con esquina inferior izquierda y peso."""
    x: Scalar
    y: Scalar
    side: Scalar
    weight: Scalar
    z: Scalar | None = field(default=None)

    @property
    def dim(self) -> int:
        return 2 if self.z is None else 3

    @property
    def corner(self) -> Point:
        return (self.x, self.y) if self.z is None else (self.x, self.y, self.z)


# ────────────────────────────────────────────────────────────
# Construcción
# ────────────────────────────────────────────────────────────
def build_edge_set(vertices: Sequence[TimedVertex]) -> EdgeSet:
    """
    Convierte una polilínea con marcas de tiempo en su conjunto de aristas.

    w_e = τ(v) − τ(u) para cada par consecutivo. Un par estacionario (mismo
    lugar, tiempo posterior) produce una arista punto con duración positiva.
    """
    if not vertices:
        raise EmptyTrajectory("se necesita al menos un vértice")
    dim = len(vertices[0].p)
    if dim not in (2, 3):
        raise InvalidTrajectory(0, f"dimensión no soportada: {dim}")

    edges: list[WeightedEdge] = []
    for i in range(1, len(vertices)):
        u, v = vertices[i - 1], vertices[i]
        if len(v.p) != dim:
            raise InvalidTrajectory(i, f"se esperaban {dim} coordenadas")
        if v.t <= u.t:
            raise NonMonotoneTime(i, f"t={v.t} no es mayor que t={u.t}")
        if sum(1 for k in range(dim) if u.p[k] != v.p[k]) > 1:
            raise NonOrthogonalStep(
                i, f"{format_point(u.p)} → {format_point(v.p)} cambia más de una coordenada"
            )
        edges.append(WeightedEdge.between(u.p, v.p, v.t - u.t))
    return EdgeSet(tuple(edges), dim)


# ────────────────────────────────────────────────────────────
# Partición y rotación (sólo 2D)
# ────────────────────────────────────────────────────────────
def partition(T: EdgeSet) -> tuple[EdgeSet, EdgeSet]:
    """H = aristas paralelas a x (y los puntos), V = aristas paralelas a y."""
    if T.dim != 2:
        raise InvalidEdge("partition() sólo admite conjuntos 2D")
    H = tuple(e for e in T.edges if e.orientation is not Orientation.Y)
    V = tuple(e for e in T.edges if e.orientation is Orientation.Y)
    return EdgeSet(H, 2), EdgeSet(V, 2)


def rotate_point(p: Point, quarter_turns: int) -> Point:
    x, y = p
    for _ in range(quarter_turns % 4):
        x, y = y, -x
    return (x, y)


def rotate(T: EdgeSet, quarter_turns: int) -> EdgeSet:
    """Aplica (x, y) → (y, −x) quarter_turns veces; conserva las duraciones."""
    if T.dim != 2:
        raise InvalidEdge("rotate() sólo admite conjuntos 2D")
    k = quarter_turns % 4
    if k == 0:
        return T
    return EdgeSet(tuple(e.map_points(lambda p: rotate_point(p, k)) for e in T.edges), 2)


def rotate_square(x: Scalar, y: Scalar, s: Scalar, quarter_turns: int) -> tuple[Scalar, Scalar]:
    """Esquina inferior izquierda de la imagen del cuadrado rotado."""
    for _ in range(quarter_turns % 4):
        # [x, x+s]×[y, y+s] → [y, y+s]×[−x−s, −x]
        x, y = y, -x - s
    return x, y


# ────────────────────────────────────────────────────────────
# Pesos
# ────────────────────────────────────────────────────────────
def _slack(c: Scalar, s: Scalar) -> Scalar:
    # en modo flotante y_i − s + s puede no volver a y_i
    if isinstance(c, float) or isinstance(s, float):
        return FLOAT_RESIDUE * (abs(c) + s)
    return 0


def _clipped_duration(e: WeightedEdge, corner: Sequence[Scalar], s: Scalar) -> Scalar:
    axis = e.axis
    for k, c in enumerate(e.a):
        if k == axis:
            continue
        slack = _slack(corner[k], s)
        if c < corner[k] - slack or c > corner[k] + s + slack:
            return 0
    if axis is None:
        return e.duration
    lo = max(e.a[axis], corner[axis])
    hi = min(e.b[axis], corner[axis] + s)
    if hi <= lo:
        return 0
    if lo == e.a[axis] and hi == e.b[axis]:
        return e.duration
    return e.duration * (hi - lo) / e.length


def box_weight(T: EdgeSet, corner: Sequence[Scalar], s: Scalar) -> Scalar:
    """Tiempo total dentro de la caja cerrada [corner, corner + s]^d."""
    if s <= 0:
        raise ValueError(f"el lado debe ser positivo: {s}")
    if len(corner) != T.dim:
        raise ValueError(f"esquina {format_point(corner)} no es {T.dim}D")
    return sum((_clipped_duration(e, corner, s) for e in T.edges), 0)


def square_weight(T: EdgeSet, x: Scalar, y: Scalar, s: Scalar) -> Scalar:
    return box_weight(T, (x, y), s)


def cube_weight(T: EdgeSet, x: Scalar, y: Scalar, z: Scalar, s: Scalar) -> Scalar:
    return box_weight(T, (x, y, z), s)
