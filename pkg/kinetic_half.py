"""
Barrido con torneo cinético sobre un árbol de segmentos.

Cada arista horizontal e_i (altura y_i) inserta el segmento g_i = [y_i − s, y_i].
Un nodo v guarda:

    s_v     suma de las contribuciones de los segmentos en I(v)
    f_v     s_v (hoja) o s_v + f del hijo ganador en la x actual
    winner  hoja ganadora del subárbol

Así, la suma de s a lo largo del camino raíz→hoja es el peso del cuadrado de
barrido de esa hoja y f_raíz(x) es el peso máximo entre todos ellos. Los
certificados de los ganadores vencen donde se cruzan las funciones de los
dos hijos; esos vencimientos y los cambios de tramo de cada arista se
procesan en orden de x con una cola de prioridad.
"""

from __future__ import annotations

import heapq
import itertools
import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Callable

from config import FLOAT_RESIDUE
from contribution import (
    ZERO,
    LinearFn,
    contribution_after,
    is_departure,
    require_horizontal,
    update_events,
)
from errors import UnknownEdge
from traj_model import (
    EdgeSet,
    Placement,
    Scalar,
    WeightedEdge,
    partition,
    rotate,
    rotate_square,
    square_weight,
)

logger = logging.getLogger(__name__)

# Orden dentro de una misma x
UPDATE_NOW, UPDATE_DEFERRED, FAILURE = 0, 1, 2


# ────────────────────────────────────────────────────────────
# Tipos
# ────────────────────────────────────────────────────────────
@dataclass(frozen=True, slots=True)
class KineticSegment:
    id: int
    lo: Scalar          # y_i − s
    hi: Scalar          # y_i
    edge: WeightedEdge


@dataclass(slots=True)
class SegTreeNode:
    """
    Nodo del árbol de segmentos. lo/hi es el rango de hojas del subárbol;
    interval es Int(v) (cerrado en las hojas punto, abierto en las demás).
    """
    id: int
    lo: int
    hi: int
    interval: tuple[Scalar, Scalar]
    v_y: Scalar
    parent: int = -1
    left: int = -1
    right: int = -1
    segments: list[int] = field(default_factory=list)
    s: LinearFn = ZERO
    f: LinearFn = ZERO
    winner: int = 0
    version: int = 0

    @property
    def is_leaf(self) -> bool:
        return self.left < 0


@dataclass(frozen=True, slots=True)
class SweepEvent:
    x: Scalar
    rank: int           # UPDATE_NOW | UPDATE_DEFERRED | FAILURE
    target: int         # id de arista o de nodo
    version: int = 0    # versión del nodo al programar el fallo
    index: int = 0      # índice del evento de la arista

    @property
    def kind(self) -> str:
        return "failure" if self.rank == FAILURE else "update"


class EventQueue:
    """Cola de mínimos por (x, rango, id); actualizaciones antes que fallos."""

    def __init__(self) -> None:
        self._heap: list = []
        self._seq = itertools.count()
        self.pending_updates = 0

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)

    def push(self, event: SweepEvent) -> None:
        if event.rank != FAILURE:
            self.pending_updates += 1
        heapq.heappush(self._heap, (event.x, event.rank, event.target, next(self._seq), event))

    def push_update(self, x: Scalar, edge_id: int, index: int, deferred: bool = False) -> None:
        rank = UPDATE_DEFERRED if deferred else UPDATE_NOW
        self.push(SweepEvent(x, rank, edge_id, index=index))

    def push_failure(self, x: Scalar, node_id: int, version: int) -> None:
        self.push(SweepEvent(x, FAILURE, node_id, version=version))

    def peek(self) -> SweepEvent | None:
        return self._heap[0][-1] if self._heap else None

    def pop(self) -> SweepEvent:
        event = heapq.heappop(self._heap)[-1]
        if event.rank != FAILURE:
            self.pending_updates -= 1
        return event


@dataclass
class KineticStats:
    events: int = 0
    updates: int = 0
    failures: int = 0
    stale_events: int = 0
    winner_changes: int = 0


@dataclass(frozen=True, slots=True)
class TraceRecord:
    run: str
    x: Scalar
    kind: str           # update | failure | stale
    target: int
    winner: int
    f_root: Scalar


# ────────────────────────────────────────────────────────────
# Árbol
# ────────────────────────────────────────────────────────────
class KineticTree:
    """Árbol de segmentos balanceado sobre los intervalos elementales."""

    def __init__(self, edges: tuple[WeightedEdge, ...], side: Scalar,
                 stats: KineticStats | None = None) -> None:
        self.side = side
        self.edges = edges
        self.stats = stats if stats is not None else KineticStats()
        self.segments = [
            KineticSegment(i, e.a[1] - side, e.a[1], e) for i, e in enumerate(edges)
        ]
        self.current: list[LinearFn] = [ZERO] * len(edges)
        self.points: list[Scalar] = sorted(
            {g.lo for g in self.segments} | {g.hi for g in self.segments}
        )

        n_leaves = 2 * len(self.points) - 1
        self.nodes: list[SegTreeNode] = []
        self.leaf_nodes: list[int] = [0] * n_leaves
        self.root = self._build(0, n_leaves - 1, -1)

        self.canonical: list[list[int]] = [[] for _ in edges]
        for g in self.segments:
            self._insert(self.root, self.point_leaf(g.lo), self.point_leaf(g.hi), g.id)

    # ------------------------------------------------------ construcción
    def leaf_interval(self, leaf: int) -> tuple[Scalar, Scalar]:
        k, odd = divmod(leaf, 2)
        if odd:
            return self.points[k], self.points[k + 1]
        return self.points[k], self.points[k]

    def _build(self, lo: int, hi: int, parent: int) -> int:
        interval = (self.leaf_interval(lo)[0], self.leaf_interval(hi)[1])
        node = SegTreeNode(len(self.nodes), lo, hi, interval,
                           (interval[0] + interval[1]) / 2, parent=parent, winner=lo)
        self.nodes.append(node)
        if lo == hi:
            self.leaf_nodes[lo] = node.id
            return node.id
        mid = (lo + hi) // 2
        node.left = self._build(lo, mid, node.id)
        node.right = self._build(mid + 1, hi, node.id)
        return node.id

    def _insert(self, node_id: int, lo: int, hi: int, seg_id: int) -> None:
        node = self.nodes[node_id]
        if lo <= node.lo and node.hi <= hi:
            node.segments.append(seg_id)
            self.canonical[seg_id].append(node_id)
            return
        if node.is_leaf:
            return
        if lo <= self.nodes[node.left].hi:
            self._insert(node.left, lo, hi, seg_id)
        if hi >= self.nodes[node.right].lo:
            self._insert(node.right, lo, hi, seg_id)

    # ------------------------------------------------------ consultas
    def point_leaf(self, value: Scalar) -> int:
        """Hoja [value, value]; value debe ser un extremo de segmento."""
        return 2 * bisect_left(self.points, value)

    def leaf_of(self, q: Scalar) -> int | None:
        """Hoja cuyo intervalo contiene q (la hoja punto si q es extremo)."""
        i = bisect_left(self.points, q)
        if i < len(self.points) and self.points[i] == q:
            return 2 * i
        if i == 0 or i == len(self.points):
            return None
        return 2 * i - 1

    def segleaf(self, seg_id: int) -> int:
        return self.point_leaf(self.segments[seg_id].lo)

    def leaf_y(self, leaf: int) -> Scalar:
        return self.nodes[self.leaf_nodes[leaf]].v_y

    def path_to_root(self, leaf: int) -> list[int]:
        path, node_id = [], self.leaf_nodes[leaf]
        while node_id >= 0:
            path.append(node_id)
            node_id = self.nodes[node_id].parent
        return path

    def path_fn(self, leaf: int, top: int | None = None) -> LinearFn:
        """Σ s_p desde la hoja hasta top (la raíz si es None), ambos incluidos."""
        total = ZERO
        for node_id in self.path_to_root(leaf):
            total = total + self.nodes[node_id].s
            if node_id == top:
                break
        return total

    def stab(self, q: Scalar) -> set[int]:
        leaf = self.leaf_of(q)
        if leaf is None:
            return set()
        found: set[int] = set()
        for node_id in self.path_to_root(leaf):
            found.update(self.nodes[node_id].segments)
        return found

    @property
    def root_node(self) -> SegTreeNode:
        return self.nodes[self.root]

    def root_value(self, x: Scalar) -> Scalar:
        return self.root_node.f(x)

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_nodes)


def build_tree(H: EdgeSet, s: Scalar, stats: KineticStats | None = None) -> KineticTree:
    if s <= 0:
        raise ValueError(f"el lado debe ser positivo: {s}")
    H.require_nonempty()
    for e in H:
        require_horizontal(e)
    return KineticTree(H.edges, s, stats)


# ────────────────────────────────────────────────────────────
# Certificados
# ────────────────────────────────────────────────────────────
def _snap(value: Scalar, scale: Scalar) -> Scalar:
    # residuo de redondeo de una suma cuyo valor exacto es cero
    if isinstance(value, float) and abs(value) <= FLOAT_RESIDUE * scale:
        return 0.0
    return value


def _accumulate(acc: LinearFn, delta: LinearFn) -> LinearFn:
    total = acc + delta
    return LinearFn(
        _snap(total.slope, abs(acc.slope) + abs(delta.slope)),
        _snap(total.intercept, abs(acc.intercept) + abs(delta.intercept)),
    )


def _greater(a: Scalar, b: Scalar) -> bool:
    """a > b, salvo diferencias de redondeo en modo flotante."""
    return _snap(a - b, abs(a) + abs(b)) > 0


def _choose(a: SegTreeNode, b: SegTreeNode, x: Scalar, rising: bool) -> tuple[SegTreeNode, SegTreeNode]:
    # Empate en x → mayor pendiente (válido a la derecha de x) → hoja menor.
    values, slopes = (a.f(x), b.f(x)), (a.f.slope, b.f.slope)
    for p, q in ((slopes, values) if rising else (values, slopes)):
        if _greater(p, q):
            return a, b
        if _greater(q, p):
            return b, a
    return (a, b) if a.winner <= b.winner else (b, a)


def _refresh(tree: KineticTree, queue: EventQueue, node_id: int, x: Scalar,
             rising: bool = False) -> bool:
    """Re-decide el ganador de un nodo y reprograma su certificado."""
    node = tree.nodes[node_id]
    old_f, old_winner = node.f, node.winner
    if node.is_leaf:
        node.f = node.s
    else:
        win, lose = _choose(tree.nodes[node.left], tree.nodes[node.right], x, rising)
        node.f = _accumulate(node.s, win.f)
        node.winner = win.winner
        node.version += 1
        if _greater(lose.f.slope, win.f.slope):
            gap = win.f(x) - lose.f(x)
            t = x + gap / (lose.f.slope - win.f.slope)
            queue.push_failure(max(t, x), node_id, node.version)
    if node.winner != old_winner:
        tree.stats.winner_changes += 1
    return node.winner != old_winner or node.f != old_f


def _propagate(tree: KineticTree, queue: EventQueue, node_id: int, x: Scalar) -> None:
    parent = tree.nodes[node_id].parent
    while parent >= 0 and _refresh(tree, queue, parent, x):
        parent = tree.nodes[parent].parent


def process_update(tree: KineticTree, queue: EventQueue, edge_id: int, x: Scalar) -> None:
    """Instala el tramo de c_{g_i} válido a la derecha de x."""
    if not 0 <= edge_id < len(tree.edges):
        raise UnknownEdge(f"arista desconocida: {edge_id}")
    tree.stats.updates += 1
    new = contribution_after(tree.edges[edge_id], tree.side, x)
    delta = new - tree.current[edge_id]
    if delta.is_zero():
        return
    tree.current[edge_id] = new
    for node_id in tree.canonical[edge_id]:
        node = tree.nodes[node_id]
        node.s = _accumulate(node.s, delta)

    # ids en preorden (hijo > padre): de mayor a menor, cada ancestro se
    # refresca una sola vez y después de todos sus descendientes
    pending = set(tree.canonical[edge_id])
    heap = [-node_id for node_id in pending]
    heapq.heapify(heap)
    while heap:
        node_id = -heapq.heappop(heap)
        changed = _refresh(tree, queue, node_id, x)
        parent = tree.nodes[node_id].parent
        if changed and parent >= 0 and parent not in pending:
            pending.add(parent)
            heapq.heappush(heap, -parent)


def process_failure(tree: KineticTree, queue: EventQueue, node_id: int,
                    version: int, x: Scalar) -> bool:
    """Vence un certificado; los eventos con versión vieja se descartan."""
    node = tree.nodes[node_id]
    if node.version != version:
        tree.stats.stale_events += 1
        return False
    tree.stats.failures += 1
    _refresh(tree, queue, node_id, x, rising=True)
    _propagate(tree, queue, node_id, x)
    return True


# ────────────────────────────────────────────────────────────
# Barrido
# ────────────────────────────────────────────────────────────
def schedule_updates(tree: KineticTree, queue: EventQueue) -> None:
    for i, e in enumerate(tree.edges):
        for k, x in enumerate(update_events(e, tree.side).xs):
            queue.push_update(x, i, k, is_departure(e, x))


def half_hotspot_horizontal(
    H: EdgeSet,
    s: Scalar,
    *,
    stats: KineticStats | None = None,
    trace: Callable[[TraceRecord], None] | None = None,
    on_event: Callable[[KineticTree, Scalar], None] | None = None,
    run: str = "H",
) -> Placement:
    """
    Hotspot exacto de una trayectoria horizontal.

    En cada x con actualizaciones se aplican primero las inmediatas y se lee
    f_raíz(x) (el peso cerrado en x); después las salidas diferidas y los
    fallos de certificado. Los fallos sólo cambian el ganador: entre dos x con
    actualizaciones f_raíz es el máximo de funciones lineales, así que su
    máximo está en un extremo. El barrido termina con la última actualización.
    """
    tree = build_tree(H, s, stats)
    queue = EventQueue()
    schedule_updates(tree, queue)

    def dispatch(ev: SweepEvent) -> None:
        tree.stats.events += 1
        kind = ev.kind
        if ev.rank == FAILURE:
            if not process_failure(tree, queue, ev.target, ev.version, ev.x):
                kind = "stale"
        else:
            process_update(tree, queue, ev.target, ev.x)
        if trace is not None:
            root = tree.root_node
            trace(TraceRecord(run, ev.x, kind, ev.target, root.winner, root.f(ev.x)))

    best: Placement | None = None
    while queue.pending_updates:
        head = queue.peek()
        x, at_update = head.x, head.rank != FAILURE
        while queue and queue.peek().x == x and queue.peek().rank == UPDATE_NOW:
            dispatch(queue.pop())

        if at_update:
            value = tree.root_value(x)
            if best is None or _greater(value, best.weight):
                best = Placement(x, tree.leaf_y(tree.root_node.winner), s, value)
        if on_event is not None:
            on_event(tree, x)

        while queue and queue.peek().x == x:
            dispatch(queue.pop())

    logger.debug(
        "half_hotspot_horizontal[%s]: n=%d hojas=%d %s fallos sin procesar=%d → %s",
        run, len(H), tree.n_leaves, tree.stats, len(queue), best,
    )
    return best


def half_hotspot(
    T: EdgeSet,
    s: Scalar,
    *,
    stats: KineticStats | None = None,
    trace: Callable[[TraceRecord], None] | None = None,
    parts: dict[str, Scalar] | None = None,
) -> Placement:
    """
    Cuadrado con peso ≥ h(T)/2: hotspot exacto de H y de V (rotada 90°),
    re-evaluados contra T completa.
    """
    T.require_nonempty()
    H, V = partition(T)
    best: Placement | None = None
    for label, part, k in (("H", H, 0), ("V90", V, 1)):
        if not part:
            logger.debug("half_hotspot: parte %s vacía", label)
            continue
        local = half_hotspot_horizontal(rotate(part, k), s, stats=stats, trace=trace, run=label)
        x, y = rotate_square(local.x, local.y, s, (4 - k) % 4)
        w = square_weight(T, x, y, s)
        if parts is not None:
            parts[label] = w
        if best is None or w > best.weight:
            best = Placement(x, y, s, w)
    return best


def tracked_square_weights(H: EdgeSet, s: Scalar, x: Scalar) -> list[Scalar]:
    """h_i(x): peso de Square(x, y_i − s) para cada arista de H."""
    return [square_weight(H, x, e.a[1] - s, s) for e in H]
