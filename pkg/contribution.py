"""
Función de contribución de una arista horizontal a los cuadrados de barrido.

Con la línea de barrido en x, un cuadrado de barrido ocupa [x, x+s] en el eje
x. La contribución de la arista [x_i, x'_i] (duración w_i, tasa m_i) es lineal
por tramos en x, con seis casos:

    caso  condición                     pendiente  ordenada
    1     x_i ≤ x'_i ≤ x ≤ x+s          0          0
    2     x_i ≤ x ≤ x'_i ≤ x+s          −m_i       m_i·x'_i  (= m_i·x_i + w_i)
    3     x_i ≤ x ≤ x+s ≤ x'_i          0          m_i·s
    4     x ≤ x_i ≤ x'_i ≤ x+s          0          w_i
    5     x ≤ x_i ≤ x+s ≤ x'_i          m_i        m_i·s − m_i·x_i
    6     x ≤ x+s ≤ x_i ≤ x'_i          0          0

En las fronteras gana el caso de número menor, que es siempre el tramo
válido a la derecha de x. La ordenada del caso 2 es la que exige la
continuidad con los casos 3 y 4 (la variante m_i·x_i − m_i·w_i no lo es).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from errors import VerticalEdge
from traj_model import Orientation, Scalar, WeightedEdge


# ────────────────────────────────────────────────────────────
# Funciones lineales
# ────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class LinearFn:
    """c(x) = slope·x + intercept."""
    slope: Scalar = 0
    intercept: Scalar = 0

    def __call__(self, x: Scalar) -> Scalar:
        return self.slope * x + self.intercept

    def __add__(self, other: "LinearFn") -> "LinearFn":
        return LinearFn(self.slope + other.slope, self.intercept + other.intercept)

    def __sub__(self, other: "LinearFn") -> "LinearFn":
        return LinearFn(self.slope - other.slope, self.intercept - other.intercept)

    def __neg__(self) -> "LinearFn":
        return LinearFn(-self.slope, -self.intercept)

    def is_zero(self) -> bool:
        return self.slope == 0 and self.intercept == 0


ZERO = LinearFn()


@dataclass(frozen=True, slots=True)
class EdgeEvents:
    """Posiciones de barrido ordenadas en las que cambia el caso de la arista."""
    xs: tuple[Scalar, ...]


@dataclass(frozen=True, slots=True)
class EdgeUpdate:
    """
    Tramo que un barrido instala en x.

    deferred marca la salida de una arista punto: se aplica después de
    evaluar en x, porque el cuadrado cerrado en x todavía la contiene.
    """
    x: Scalar
    fn: LinearFn
    deferred: bool = False


def require_horizontal(e: WeightedEdge) -> None:
    if e.orientation not in (Orientation.X, Orientation.POINT):
        raise VerticalEdge(f"se esperaba una arista horizontal o punto, no {e.orientation.value}")


# ────────────────────────────────────────────────────────────
# Casos de la tabla
# ────────────────────────────────────────────────────────────
def classify_case(e: WeightedEdge, s: Scalar, x: Scalar) -> int:
    require_horizontal(e)
    xi, xj = e.a[0], e.b[0]
    if e.is_point:
        if x <= xi <= x + s:
            return 4
        return 1 if xi < x else 6

    right = x + s
    if xj <= x:
        return 1
    if xi <= x and xj <= right:
        return 2
    if xi <= x and right <= xj:
        return 3
    if x <= xi and xj <= right:
        return 4
    if x <= xi <= right <= xj:
        return 5
    return 6


def contribution_at(e: WeightedEdge, s: Scalar, x: Scalar) -> LinearFn:
    """Tramo lineal del caso que contiene a x."""
    case = classify_case(e, s, x)
    if e.is_point:
        return LinearFn(0, e.duration) if case == 4 else ZERO

    m = e.rate
    xi, xj = e.a[0], e.b[0]
    if case == 2:
        return LinearFn(-m, m * xj)
    if case == 3:
        return LinearFn(0, m * s)
    if case == 4:
        return LinearFn(0, e.duration)
    if case == 5:
        return LinearFn(m, m * s - m * xi)
    return ZERO


def update_events(e: WeightedEdge, s: Scalar) -> EdgeEvents:
    require_horizontal(e)
    xi, xj = e.a[0], e.b[0]
    return EdgeEvents(tuple(sorted({xi - s, xj - s, xi, xj})))


def contribution_after(e: WeightedEdge, s: Scalar, x: Scalar) -> LinearFn:
    """Tramo válido en el intervalo abierto inmediatamente a la derecha de x."""
    xs = update_events(e, s).xs
    nxt = next((v for v in xs if v > x), None)
    ahead = x + s if nxt is None else (x + nxt) / 2
    return contribution_at(e, s, ahead)


def is_departure(e: WeightedEdge, x: Scalar) -> bool:
    """Salida de una arista punto (x = x_i): se aplica tras evaluar en x."""
    return e.is_point and x == e.a[0]


def sweep_updates(e: WeightedEdge, s: Scalar) -> list[EdgeUpdate]:
    """Una actualización por evento, lista para un barrido hacia +x."""
    return [
        EdgeUpdate(x, contribution_after(e, s, x), is_departure(e, x))
        for x in update_events(e, s).xs
    ]


# ────────────────────────────────────────────────────────────
# Tasas de contribución
# ────────────────────────────────────────────────────────────
def contribution_rate(e: WeightedEdge, x: Scalar, y: Scalar, s: Scalar) -> Scalar:
    """
    r(e): pendiente (por la derecha) de la contribución de e a Square(x, y)
    cuando el cuadrado se mueve hacia +x. Cero si e no corta [y, y+s].
    """
    require_horizontal(e)
    if not y <= e.a[1] <= y + s:
        return 0
    return contribution_after(e, s, x).slope


def trajectory_rate(H: Iterable[WeightedEdge], x: Scalar, y: Scalar, s: Scalar) -> Scalar:
    """r(H) = Σ r(e)."""
    return sum((contribution_rate(e, x, y, s) for e in H), 0)
