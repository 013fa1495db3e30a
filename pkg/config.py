"""
Valores por defecto del proyecto y configuración de logging.

• Formatos de archivo (traza, CSV de benchmark)
• Parámetros de los generadores de instancias
• Nivel de log, ajustable con la variable de entorno HOTSPOT_LOG_LEVEL
"""

from __future__ import annotations

import logging
import os

# ────────────────────────────────────────────────────────────
# Formatos
# ────────────────────────────────────────────────────────────
TRACE_FORMAT_VERSION = 1
TRACE_HEADER  = f"# hotspot-trace v{TRACE_FORMAT_VERSION}"
TRACE_COLUMNS = ("run", "x", "kind", "target", "winner", "f_root")

BENCH_COLUMNS = (
    "algo", "n", "rep", "runtime_ns", "events", "winner_changes", "stale_events",
)

TRAJECTORY_HEADER_2D = "t,x,y"
TRAJECTORY_HEADER_3D = "t,x,y,z"

# ────────────────────────────────────────────────────────────
# Generadores
# ────────────────────────────────────────────────────────────
WALK_MAX_STEP        = 5      # |Δ| máximo por paso (unidades enteras)
MAX_STEP_DURATION    = 10     # duración máxima de una arista
STAY_PROBABILITY     = 0.05   # paso estacionario → arista punto
CLUSTER_BOX          = 4      # lado de la caja de revisita
CLUSTER_REVISIT_RATE = 0.7
CLUSTER_SPREAD       = 40     # extensión de las excursiones fuera de la caja

# ────────────────────────────────────────────────────────────
# Benchmark
# ────────────────────────────────────────────────────────────
BENCH_SIZES = (8_000, 16_000, 32_000, 64_000, 128_000)
BENCH_REPS  = 3
BENCH_SEED  = 7
BENCH_SIDE  = 8

# ────────────────────────────────────────────────────────────
# Modo flotante
# ────────────────────────────────────────────────────────────
FLOAT_RESIDUE = 1e-9          # |suma| relativa por debajo de la cual se toma cero

# ────────────────────────────────────────────────────────────
# Logging
# ────────────────────────────────────────────────────────────
LOG_LEVEL_ENV = "HOTSPOT_LOG_LEVEL"
LOG_FORMAT    = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def configure_logging(verbose: bool = False) -> None:
    """Configura el handler raíz una sola vez (la variable de entorno manda)."""
    default = "DEBUG" if verbose else "WARNING"
    name = os.environ.get(LOG_LEVEL_ENV, default).upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT)
