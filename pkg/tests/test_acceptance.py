"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``ACCEPTANCE <n>: PASS|FAIL`` line before asserting.
"""

import json
import sys
import time
from pathlib import Path

import pytest

from octonode.cli.main import CURVE_CONSENSUS_KEYS, main
from octonode.core import FieldSpec
from octonode.curves import degree_nine_obstruction
from octonode.groebner import projective_chart, zero_dim_radical_equal
from octonode.groebner.ideal import verify_groebner_basis
from octonode.octic.pipeline import (discriminant_octic, jacobian_ideal, node_ideal, node_scheme,
                                     octic_a1_certificate, run_pipeline)
from octonode.octic.triple import default_ring, linear_forms_instance, plane_intersection_points, random_triple

FP = FieldSpec(32003)
SPLIT_TYPES = (0, 1, 2, 3)
SEEDS = (1, 2, 3, 4, 5)
PLANTED = "z1^2*z0^6 + z2^3*z0^5 + z3^8"


@pytest.fixture
def announce(capsys):
    def say(n: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    return say


def _split_runs() -> dict:
    out = {}
    for a in SPLIT_TYPES:
        for s in SEEDS:
            t0 = time.perf_counter()
            rep = run_pipeline(random_triple(a, s, FP), seed=s)
            out[a, s] = (rep, time.perf_counter() - t0)
    return out


def _linear_forms_runs() -> dict:
    out = {}
    for a in (1, 2, 3):
        t0 = time.perf_counter()
        inst = linear_forms_instance(a, 0, FP)
        points = plane_intersection_points(inst.planes, FP)
        degree = node_scheme(inst.triple)[1]
        out[a] = (degree, len(points), time.perf_counter() - t0)
    return out


def _curve_cli(capsys) -> str:
    code = main(["curve", "--preset", "paper-degree8", "--consensus", "32003,65537"])
    text = capsys.readouterr().out
    assert code == 0, text
    return text


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if k != "timings_ms"}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


@pytest.fixture(scope="module")
def split_runs():
    return _split_runs()


@pytest.fixture(scope="module")
def linear_runs():
    return _linear_forms_runs()


def test_criterion_1_split_node_counts(split_runs, announce):
    failures = []
    for a in SPLIT_TYPES:
        reps = [split_runs[a, s][0] for s in SEEDS]
        certified = sum(r.status == "CERTIFIED" for r in reps)
        if certified < 4:
            failures.append(f"a={a}: only {certified}/5 certified")
        for r in reps:
            if r.X_smooth and r.sing_equals_P and r.node_degree != 64 - 4 * a * a:
                failures.append(f"a={a} seed={r.seed}: node_degree {r.node_degree}")
    slowest = {a: round(max(split_runs[a, s][1] for s in SEEDS), 1) for a in SPLIT_TYPES}
    limits = {0: 1800, 1: 600, 2: 600, 3: 600}
    failures += [f"a={a} took {slowest[a]}s" for a in SPLIT_TYPES if slowest[a] > limits[a]]

    # post-hoc Groebner check of the chart bases behind one instance per split type
    for a in SPLIT_TYPES:
        t = random_triple(a, SEEDS[0], FP)
        for I in (node_ideal(t), jacobian_ideal(discriminant_octic(t))):
            ch = projective_chart(I)
            if not (verify_groebner_basis(ch.saturated) and verify_groebner_basis(ch.affine)):
                failures.append(f"a={a}: chart basis fails the S-pair check")

    degrees = {a: sorted({split_runs[a, s][0].node_degree for s in SEEDS}) for a in SPLIT_TYPES}
    announce(1, not failures, f"node degrees {degrees}, slowest instance per a (s) {slowest}"
             + (f"; {failures}" if failures else ""))
    assert not failures


def test_criterion_2_linear_forms_oracle(linear_runs, announce):
    rows = {a: (deg, pts) for a, (deg, pts, _) in linear_runs.items()}
    ok = all(deg == pts == 64 - 4 * a * a for a, (deg, pts) in rows.items())
    ok &= all(t < 60 for *_, t in linear_runs.values())
    announce(2, ok, f"(node_degree, enumerated points) {rows}, "
             f"times (s) {[round(t, 1) for *_, t in linear_runs.values()]}")
    assert ok


def test_criterion_3_singular_locus_is_node_scheme(split_runs, announce):
    checked, bad = 0, []
    for (a, s), (rep, _) in sorted(split_runs.items()):
        if rep.status != "CERTIFIED":
            continue
        t = random_triple(a, s, FP)
        checked += 1
        if not zero_dim_radical_equal(jacobian_ideal(discriminant_octic(t)), node_ideal(t)):
            bad.append((a, s))
    announce(3, not bad and checked > 0, f"radical equality on {checked} certified instances"
             + (f"; failed {bad}" if bad else ""))
    assert not bad and checked > 0


def test_criterion_4_all_nodes_ordinary(split_runs, announce):
    rows = {}
    for a in (2, 3):
        for s in SEEDS:
            rep = split_runs[a, s][0]
            if rep.status == "CERTIFIED":
                rows[a, s] = (rep.tjurina_degree, rep.node_degree, rep.all_A1)
    tjurina_ok = {a for (a, _), (tau, deg, a1) in rows.items() if tau == deg and a1} == {2, 3}
    tjurina_ok &= all(tau == deg and a1 for tau, deg, a1 in rows.values())
    planted = octic_a1_certificate(default_ring(FP).parse(PLANTED))
    ok = tjurina_ok and not planted.passed
    announce(4, ok, f"(tjurina, nodes, all_A1) {rows}; planted octic passed={planted.passed}")
    assert ok


def test_criterion_5_degree8_curve(capsys, announce):
    t0 = time.perf_counter()
    out = json.loads(_curve_cli(capsys))
    elapsed = time.perf_counter() - t0
    reps = out["reports"]
    ok = out["consensus"]["agree"] and len(reps) == 2 and elapsed < 300
    for r in reps:
        ok &= r["generator_profile"] == {"4": 3, "5": 4}
        ok &= r["hilbert_poly"] == "8t" and r["degree_d"] == 8 and r["arithmetic_genus"] == 1
        ok &= r["quartic_cutout_equal"] is True
    ok &= all({k: r[k] for k in CURVE_CONSENSUS_KEYS} == {k: reps[0][k] for k in CURVE_CONSENSUS_KEYS}
              for r in reps)
    announce(5, ok, f"fields {[r['field'] for r in reps]}, profile {reps[0]['generator_profile']}, "
             f"HP {reps[0]['hilbert_poly']}, cutout {reps[0]['quartic_cutout_equal']}, {elapsed:.1f}s")
    assert ok


def test_criterion_6_prediction_table(capsys, announce):
    code = main(["table", "--seed", "0"])
    table = json.loads(capsys.readouterr().out)
    split = {r["a"]: r for r in table["split"]}
    serre = {r["d"]: r for r in table["serre"]}
    ok = code == 0
    ok &= [split[a]["certified_nodes"] for a in (3, 2, 1, 0)] == [28, 48, 60, 64]
    ok &= [split[a]["predicted_nodes"] for a in (3, 2, 1, 0)] == [28, 48, 60, 64]
    ok &= [(serre[d]["gamma"], serre[d]["predicted_nodes"]) for d in (5, 6, 7, 8)] == \
        [(-4, 80), (-8, 96), (-12, 112), (-16, 128)]
    ok &= serre[8]["c3_X"] == -40
    ok &= table["method_bound"] == {"gamma": -24, "predicted_nodes": 160, "exceeds_miyaoka": False}
    ok &= table["all_predictions_divisible_by_4"]
    ok &= {r["gamma"]: r["admissible"] for r in table["admissibility"]} == {5: False, -3: False, 13: False}
    announce(6, ok, f"certified split {[split[a]['certified_nodes'] for a in sorted(split)]}, "
             f"serre {[serre[d]['predicted_nodes'] for d in sorted(serre)]}, "
             f"c3(-16) {serre[8]['c3_X']}, bound {table['method_bound']['predicted_nodes']}")
    assert ok


def test_criterion_7_degree_nine_obstruction(announce):
    nine, eight = degree_nine_obstruction(9), degree_nine_obstruction(8)
    ok = tuple(nine) == (-20, -128, True) and tuple(eight) == (-16, 0, False)
    announce(7, ok, f"d=9 {tuple(nine)}, d=8 {tuple(eight)}")
    assert ok


def _count_cases(test, **kwargs) -> int:
    calls = [0]
    inner = test.hypothesis.inner_test

    def counted(*args, **kw):
        calls[0] += 1
        return inner(*args, **kw)

    test.hypothesis.inner_test = counted
    try:
        test(**kwargs)
    finally:
        test.hypothesis.inner_test = inner
    return calls[0]


def test_criterion_8_engine_properties(announce):
    sys.path.insert(0, str(Path(__file__).parent))
    import test_properties as tp

    runs = {
        "spolynomials": lambda: _count_cases(tp.test_spolynomials_reduce_to_zero),
        "saturation": lambda: _count_cases(tp.test_saturation_idempotent_and_larger),
        "normal_form": lambda: _count_cases(tp.test_normal_form_membership),
        "round_trip_fp": lambda: _count_cases(tp.test_parse_format_round_trip, ring=tp.R3),
        "round_trip_q": lambda: _count_cases(tp.test_parse_format_round_trip, ring=tp.Q3),
        "euler": lambda: _count_cases(tp.test_euler_relation),
    }
    counts = {name: run() for name, run in runs.items()}
    ok = all(c >= 200 for c in counts.values())
    announce(8, ok, f"cases per property {counts}")
    assert ok


def test_criterion_9_determinism(split_runs, linear_runs, capsys, announce):
    again = _split_runs()
    same_split = all(
        json.dumps(split_runs[k][0].to_dict(timings=False), sort_keys=True)
        == json.dumps(again[k][0].to_dict(timings=False), sort_keys=True)
        for k in split_runs)
    lin2 = _linear_forms_runs()
    same_linear = all(linear_runs[a][:2] == lin2[a][:2] for a in linear_runs)
    first = json.dumps(_strip_timings(json.loads(_curve_cli(capsys))), sort_keys=True)
    second = json.dumps(_strip_timings(json.loads(_curve_cli(capsys))), sort_keys=True)
    ok = same_split and same_linear and first == second
    announce(9, ok, f"split reports identical={same_split}, linear forms identical={same_linear}, "
             f"curve reports identical={first == second}")
    assert ok
