from fractions import Fraction as F
import math

import pytest
from hypothesis import given, settings

from cli.generators import gen_walk
from cli.trajectory_file import TraceWriter
from config import TRACE_COLUMNS, TRACE_HEADER
from contribution import LinearFn, update_events
from errors import EmptyTrajectory, UnknownEdge, VerticalEdge
from instances import horizontal_corpus, horizontal_sets, orthogonal_corpus, sides
from kinetic_half import (
    FAILURE,
    UPDATE_DEFERRED,
    UPDATE_NOW,
    EventQueue,
    KineticStats,
    SweepEvent,
    build_tree,
    half_hotspot,
    half_hotspot_horizontal,
    process_failure,
    process_update,
    tracked_square_weights,
)
from oracle import exact_hotspot_2d
from traj_model import EdgeSet, WeightedEdge, partition, square_weight


def hedge(x0, x1, y, w):
    return WeightedEdge.between((F(x0), F(y)), (F(x1), F(y)), F(w))


# ────────────────────────────────────────────────────────────
# Cola de eventos
# ────────────────────────────────────────────────────────────
def test_event_queue_order():
    q = EventQueue()
    q.push_failure(F(1), 0, 3)
    q.push_update(F(1), 7, 0, deferred=True)
    q.push_update(F(1), 2, 1)
    q.push_update(F(1, 2), 9, 0)
    popped = [q.pop() for _ in range(len(q))]
    assert [(e.x, e.rank, e.target) for e in popped] == [
        (F(1, 2), UPDATE_NOW, 9), (1, UPDATE_NOW, 2), (1, UPDATE_DEFERRED, 7), (1, FAILURE, 0),
    ]
    assert not q and q.peek() is None


def test_event_queue_counts_pending_updates():
    q = EventQueue()
    q.push_update(F(0), 0, 0)
    q.push_update(F(2), 0, 1, deferred=True)
    q.push_failure(F(1), 4, 1)
    assert q.pending_updates == 2
    q.pop()
    q.pop()
    assert q.pending_updates == 1 and len(q) == 1


def test_sweep_event_kind():
    assert SweepEvent(F(0), FAILURE, 1, version=2).kind == "failure"
    assert SweepEvent(F(0), UPDATE_DEFERRED, 1).kind == "update"


# ────────────────────────────────────────────────────────────
# Árbol de segmentos
# ────────────────────────────────────────────────────────────
def test_build_single_edge(single_edge):
    tree = build_tree(single_edge, F(4))
    assert tree.n_leaves == 3
    assert tree.leaf_interval(tree.segleaf(0)) == (-4, -4)
    assert tree.canonical[0] == [tree.root]
    assert tree.root_node.f == LinearFn()
    assert tree.root_node.winner == 0


def test_build_two_overlapping_segments():
    # g_0 = [0, 4], g_1 = [2, 6]
    tree = build_tree(EdgeSet.of([hedge(0, 1, 4, 1), hedge(0, 1, 6, 1)]), F(4))
    assert tree.points == [0, 2, 4, 6]
    assert tree.n_leaves == 7
    assert tree.stab(F(-1)) == set()
    assert tree.stab(F(0)) == {0}
    assert tree.stab(F(1)) == {0}
    assert tree.stab(F(3)) == {0, 1}
    assert tree.stab(F(4)) == {0, 1}
    assert tree.stab(F(6)) == {1}
    assert tree.stab(F(7)) == set()
    for seg_id, nodes in enumerate(tree.canonical):
        assert len(nodes) <= 2 * math.ceil(math.log2(tree.n_leaves)) + 1
        assert all(seg_id in tree.nodes[n].segments for n in nodes)


def test_duplicate_heights():
    tree = build_tree(EdgeSet.of([hedge(0, 2, 3, 1), hedge(5, 9, 3, 2)]), F(1))
    assert tree.points == [2, 3]
    assert tree.stab(F(3)) == {0, 1}


@given(horizontal_sets(max_size=12), sides)
@settings(deadline=None, max_examples=60)
def test_stab_matches_linear_scan(H, s):
    tree = build_tree(H, s)
    probes = set(tree.points) | {p + F(1, 3) for p in tree.points} | {min(tree.points) - 1}
    for q in probes:
        expected = {i for i, e in enumerate(H) if e.a[1] - s <= q <= e.a[1]}
        assert tree.stab(q) == expected


def test_build_rejects_bad_input(l_trajectory):
    with pytest.raises(EmptyTrajectory):
        build_tree(EdgeSet(), F(1))
    with pytest.raises(VerticalEdge):
        build_tree(l_trajectory, F(1))


# ────────────────────────────────────────────────────────────
# Eventos
# ────────────────────────────────────────────────────────────
def test_update_with_zero_delta(single_edge):
    tree, q = build_tree(single_edge, F(4)), EventQueue()
    process_update(tree, q, 0, F(20))
    assert tree.stats.updates == 1
    assert tree.stats.winner_changes == 0
    assert len(q) == 0


def test_update_installs_case_five():
    tree, q = build_tree(EdgeSet.of([hedge(2, 6, 0, 8)]), F(3)), EventQueue()
    process_update(tree, q, 0, F(-1))
    assert tree.root_node.f == LinearFn(2, 2)


def test_unknown_edge(single_edge):
    with pytest.raises(UnknownEdge):
        process_update(build_tree(single_edge, F(4)), EventQueue(), 3, F(0))


def test_stale_failure_is_dropped(two_rows):
    tree, q = build_tree(two_rows, F(4)), EventQueue()
    root = tree.root_node
    before = (root.f, root.winner, root.version)
    assert not process_failure(tree, q, tree.root, root.version + 7, F(0))
    assert tree.stats.stale_events == 1
    assert (root.f, root.winner, root.version) == before
    assert len(q) == 0


def test_crossing_children_flip_winner():
    # A: f = x + 10 en [−10, 0]; B: f = −x; se cruzan en x = −5
    H = EdgeSet.of([hedge(0, 10, 0, 10), hedge(-10, 0, 100, 10)])
    records = []
    best = half_hotspot_horizontal(H, F(10), trace=records.append)

    tree = build_tree(H, F(10))
    leaf_a, leaf_b = tree.segleaf(0), tree.segleaf(1)
    failures = [r for r in records if r.kind == "failure"]
    assert [r.x for r in failures] == [-5]
    assert failures[0].winner == leaf_a and failures[0].f_root == 5
    before = [r for r in records if r.x == -10]
    assert before[-1].winner == leaf_b and before[-1].f_root == 10
    assert best.weight == 10 and best.x == -10


CROSSING_TRACE = [
    "H,-20,update,1,4,0",
    "H,-10,update,0,4,10",
    "H,-10,update,1,4,10",
    "H,-5,failure,0,0,5",
    "H,0,update,0,0,10",
    "H,0,update,1,0,10",
    "H,10,update,0,0,0",
    "H,10,stale,0,0,0",
    "H,10,stale,5,0,0",
]


def test_crossing_trace_golden(tmp_path):
    H = EdgeSet.of([hedge(0, 10, 0, 10), hedge(-10, 0, 100, 10)])
    path = tmp_path / "crossing.csv"
    with TraceWriter(path) as writer:
        half_hotspot_horizontal(H, F(10), trace=writer)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[:2] == [TRACE_HEADER, ",".join(TRACE_COLUMNS)]
    assert lines[2:] == CROSSING_TRACE


def test_sweep_stops_at_last_update():
    for H, s in horizontal_corpus(46, 20, 24):
        records = []
        half_hotspot_horizontal(H, s, trace=records.append)
        last = max(x for e in H for x in update_events(e, s).xs)
        assert records[-1].x == last


def test_parallel_children_schedule_nothing():
    # sólo aristas punto: todas las funciones son constantes
    H = EdgeSet.of([hedge(0, 0, 0, 3), hedge(0, 0, 50, 5)])
    records = []
    best = half_hotspot_horizontal(H, F(2), trace=records.append)
    assert best.weight == 5
    assert {r.kind for r in records} == {"update"}


# ────────────────────────────────────────────────────────────
# Barrido completo
# ────────────────────────────────────────────────────────────
def test_single_edge_weight(single_edge):
    assert half_hotspot_horizontal(single_edge, F(4)).weight == 4


def test_two_rows_weight(two_rows):
    best = half_hotspot_horizontal(two_rows, F(4))
    assert best.weight == 12
    assert square_weight(two_rows, best.x, best.y, F(4)) == 12


@given(horizontal_sets(), sides)
@settings(deadline=None, max_examples=80)
def test_horizontal_exact(H, s):
    best = half_hotspot_horizontal(H, s)
    assert best.weight == exact_hotspot_2d(H, s).weight
    assert square_weight(H, best.x, best.y, s) == best.weight


def test_horizontal_exact_corpus():
    for H, s in horizontal_corpus(41, 25, 24):
        assert half_hotspot_horizontal(H, s).weight == exact_hotspot_2d(H, s).weight


def _check_invariants(H, s):
    violations = []

    def check(tree, x):
        leaf_weights = []
        for leaf in range(tree.n_leaves):
            w = square_weight(H, x, tree.leaf_y(leaf), s)
            leaf_weights.append(w)
            if tree.path_fn(leaf)(x) != w:
                violations.append(("path-sum", x, leaf))
        for node in tree.nodes:
            if tree.path_fn(node.winner, top=node.id) != node.f:
                violations.append(("winner-path", x, node.id))
        if tree.root_value(x) != max(leaf_weights):
            violations.append(("root-max", x))
        seg_best = max(leaf_weights[tree.segleaf(i)] for i in range(len(H)))
        if seg_best != max(leaf_weights):
            violations.append(("segleaf-max", x))
        tracked = tracked_square_weights(H, s, x)
        if max(tracked) != seg_best:
            violations.append(("tracked", x))

    half_hotspot_horizontal(H, s, on_event=check)
    return violations


def test_structural_invariants():
    for H, s in horizontal_corpus(42, 15, 12):
        assert _check_invariants(H, s) == []


@given(horizontal_sets(max_size=8), sides)
@settings(deadline=None, max_examples=40)
def test_structural_invariants_property(H, s):
    assert _check_invariants(H, s) == []


def test_counters_and_trace_order():
    for H, s in horizontal_corpus(43, 10, 20):
        stats, records = KineticStats(), []
        half_hotspot_horizontal(H, s, stats=stats, trace=records.append)
        assert stats.events == stats.updates + stats.failures + stats.stale_events
        assert len(records) == stats.events
        xs = [r.x for r in records]
        assert xs == sorted(xs)


# ────────────────────────────────────────────────────────────
# Envoltorio 1/2
# ────────────────────────────────────────────────────────────
def test_half_l(l_trajectory):
    parts = {}
    best = half_hotspot(l_trajectory, F(2), parts=parts)
    assert best.weight >= 2
    assert set(parts) == {"H", "V90"}


def test_half_without_vertical_edges_is_exact(two_rows):
    assert half_hotspot(two_rows, F(4)).weight == 12


def test_half_bound_corpus():
    for T, s in orthogonal_corpus(44, 25, 24):
        best = half_hotspot(T, s)
        assert 2 * best.weight >= exact_hotspot_2d(T, s).weight
        assert best.weight == square_weight(T, best.x, best.y, s)
        for part in partition(T):
            if part:
                assert best.weight >= exact_hotspot_2d(part, s).weight


def test_float_mode_agrees():
    for T, s in orthogonal_corpus(45, 10, 40):
        exact = half_hotspot(T, s).weight
        approx = half_hotspot(T.to_float(), float(s)).weight
        assert approx == pytest.approx(float(exact), rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("n, seed, side", [
    (200, 3, F(3, 10)),
    (1000, 5, F(3, 10)),
    (1000, 7, F(7, 3)),
])
def test_float_mode_agrees_on_walks(n, seed, side):
    T = gen_walk(n, seed)
    exact = half_hotspot(T, side).weight
    approx = half_hotspot(T.to_float(), float(side)).weight
    assert exact > 0
    assert approx == pytest.approx(float(exact), rel=1e-9)


def test_float_horizontal_run_stays_in_range():
    H = partition(gen_walk(200, 3))[0].to_float()
    records = []
    best = half_hotspot_horizontal(H, 0.3, trace=records.append)
    xs = [x for e in H for x in (e.a[0], e.b[0])]
    assert min(xs) - 0.3 <= best.x <= max(xs)
    assert all(r.x <= max(xs) for r in records)
    assert best.weight == pytest.approx(square_weight(H, best.x, best.y, 0.3), rel=1e-9)
