"""
Excepciones de la librería de hotspots.

Todas derivan de HotspotError para que la CLI las capture juntas y las
muestre con un mensaje legible (código de salida 1).
"""

from __future__ import annotations


class HotspotError(Exception):
    """Error base de la librería."""


# ────────────────────────────────────────────────────────────
# Trayectorias y aristas
# ────────────────────────────────────────────────────────────
class InvalidTrajectory(HotspotError, ValueError):
    """La secuencia de vértices no forma una trayectoria válida."""

    def __init__(self, index: int, message: str) -> None:
        self.index = index
        super().__init__(f"vértice {index}: {message}")


class NonMonotoneTime(InvalidTrajectory):
    """t[i] <= t[i-1]: las marcas de tiempo deben crecer estrictamente."""


class NonOrthogonalStep(InvalidTrajectory):
    """Dos coordenadas cambian a la vez entre vértices consecutivos."""


class InvalidEdge(HotspotError, ValueError):
    """Arista no paralela a un eje, con duración negativa o dimensión mixta."""


class VerticalEdge(HotspotError, ValueError):
    """Se esperaba una arista paralela a x (o un punto) y llegó otra."""


class EmptyTrajectory(HotspotError, ValueError):
    """El conjunto de aristas está vacío."""


# ────────────────────────────────────────────────────────────
# Estructuras de barrido
# ────────────────────────────────────────────────────────────
class IndexOutOfRange(HotspotError, IndexError):
    pass


class UnknownEdge(HotspotError, LookupError):
    pass


# ────────────────────────────────────────────────────────────
# Archivos
# ────────────────────────────────────────────────────────────
class TrajectoryFileError(HotspotError):
    """Error de lectura con número de línea (1-based)."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"línea {line}: {message}")
