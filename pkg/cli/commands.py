"""
Subcomandos de la línea de comandos.

    hotspot   resuelve un archivo de trayectoria e imprime un ResultRecord
    gen       escribe una trayectoria sintética
    bench     mide escalamiento y escribe CSV crudo + resumen
    plot      SVG de la trayectoria con el cuadrado resultado
    envelope  SVG de las curvas de los cuadrados rastreados

Códigos de salida: 0 ok, 1 error de datos, 2 combinación de opciones inviable.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from cli.bench import run_bench, write_bench
from cli.generators import GENERATORS, generate_vertices
from cli.plot import plot_envelope, plot_trajectory
from cli.solvers import ALGORITHMS, solve
from cli.trajectory_file import ResultRecord, TraceWriter, read_trajectory, write_trajectory
from config import BENCH_REPS, BENCH_SEED, BENCH_SIDE, BENCH_SIZES, CLUSTER_REVISIT_RATE

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2


def _scalar(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"número inválido: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de enteros inválida: {text!r}") from None


def _algo_list(text: str) -> list[str]:
    algos = [tok.strip() for tok in text.split(",") if tok.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if unknown:
        raise argparse.ArgumentTypeError(f"algoritmos desconocidos: {', '.join(unknown)}")
    return algos


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hotspot",
        description="Hotspots de trayectorias ortogonales (cuadrados y cubos de lado fijo).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log a nivel DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hotspot", help="calcula el hotspot de un archivo")
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--side", type=_scalar, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--dim", type=int, choices=(2, 3), help="por defecto se deduce del archivo")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--trace", help="archivo de traza (sólo --algo half en 2D)")
    p.add_argument("--workers", type=int, default=1, help="procesos para --algo exact")

    p = sub.add_parser("gen", help="genera una trayectoria sintética")
    p.add_argument("--kind", choices=sorted(GENERATORS), default="walk")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, choices=(2, 3), default=2)
    p.add_argument("--revisit-rate", type=float, default=CLUSTER_REVISIT_RATE)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="benchmark de escalamiento")
    p.add_argument("--algos", type=_algo_list, default=["half", "quarter"])
    p.add_argument("--sizes", type=_int_list, default=list(BENCH_SIZES))
    p.add_argument("--seed", type=int, default=BENCH_SEED)
    p.add_argument("--reps", type=int, default=BENCH_REPS)
    p.add_argument("--kind", choices=sorted(GENERATORS), default="walk")
    p.add_argument("--side", type=int, default=BENCH_SIDE)
    p.add_argument("--mode", choices=("exact", "float"), default="float")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("plot", help="SVG de la trayectoria y el resultado")
    p.add_argument("--input", required=True)
    p.add_argument("--result", help="archivo con un ResultRecord (salida de hotspot)")
    p.add_argument("--out", required=True)

    p = sub.add_parser("envelope", help="SVG de las curvas h_i(x) de la parte horizontal")
    p.add_argument("--input", required=True)
    p.add_argument("--side", type=_scalar, required=True)
    p.add_argument("--out", required=True)
    return parser


# ────────────────────────────────────────────────────────────
# Subcomandos
# ────────────────────────────────────────────────────────────
def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_hotspot(args: argparse.Namespace) -> int:
    if args.side <= 0:
        return _usage("--side debe ser positivo")
    if args.trace and args.algo != "half":
        return _usage("--trace sólo está disponible con --algo half")
    if args.trace and args.dim == 3:
        return _usage("--trace no está disponible en 3D")

    T = read_trajectory(args.input, args.dim)
    if args.trace and T.dim == 3:
        return _usage("--trace no está disponible en 3D")

    s = args.side
    if args.mode == "float":
        T, s = T.to_float(), float(s)

    t0 = time.perf_counter_ns()
    if args.trace:
        with TraceWriter(args.trace) as trace:
            solved = solve(args.algo, T, s, workers=args.workers, trace=trace)
    else:
        solved = solve(args.algo, T, s, workers=args.workers)
    elapsed = time.perf_counter_ns() - t0

    record = ResultRecord.build(args.algo, solved.placement, counters=solved.counters,
                                runtime_ns=elapsed, parts=solved.parts)
    print(record.to_json())
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _usage("--n debe ser ≥ 1")
    vertices = generate_vertices(args.kind, args.n, args.seed, args.dim, args.revisit_rate)
    write_trajectory(args.out, vertices)
    logger.info("gen %s: %d aristas en %s", args.kind, args.n, args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 1 or args.jobs < 1 or args.side <= 0 or not args.sizes:
        return _usage("--reps, --jobs, --side y --sizes deben ser positivos")
    raw = run_bench(args.algos, args.sizes, reps=args.reps, seed=args.seed, kind=args.kind,
                    side=args.side, mode=args.mode, jobs=args.jobs)
    summary = write_bench(raw, args.out)
    print(summary.to_string(index=False))
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    T = read_trajectory(args.input)
    placement = None
    if args.result:
        placement = ResultRecord.from_json(Path(args.result).read_text(encoding="utf-8")).placement()
    plot_trajectory(T, args.out, placement)
    return EXIT_OK


def cmd_envelope(args: argparse.Namespace) -> int:
    if args.side <= 0:
        return _usage("--side debe ser positivo")
    T = read_trajectory(args.input, 2)
    best = plot_envelope(T, args.side, args.out)
    print(ResultRecord.build("half-horizontal", best).to_json())
    return EXIT_OK


COMMANDS = {
    "hotspot": cmd_hotspot,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "plot": cmd_plot,
    "envelope": cmd_envelope,
}
