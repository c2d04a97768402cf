"""Acceptance suite: one test per release criterion, each prints a status line.

Run with `pytest tests/test_acceptance.py -v -s` to see per-criterion output.
"""

import json
import time

import numpy as np
import pytest

import affilcomm as ac
from affilcomm.build import build_graph
from affilcomm.cli import main
from affilcomm.graph import WeightedGraph
from affilcomm.modularity import NEW_COMMUNITY, Partition, delta_modularity_move, modularity
from affilcomm.synth import SynthBlock, SynthConfig, generate_synthetic

from conftest import make_barbell, random_graph

EXPECTED_MIXING = {
    "Italy": 1,
    "Belgium": 0,
    "Switzerland": 1,
    "Germany": 0,
    "Spain": 1,
    "Netherlands": 0,
    "UK": 1,
    "USA": 3,
}


def report(name, elapsed, limit):
    print(f"PASS {name}: {elapsed:.3f}s (limit {limit}s)")


def test_criterion_1_table1_mixing(capsys):
    t0 = time.perf_counter()
    assert main(["mix", "--memberships", "table1"]) == 0
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - t0
    counts = {
        name: d["mixing"]["mixed_count"]
        for name, d in json.loads(out)["datasets"].items()
    }
    assert counts == EXPECTED_MIXING
    assert elapsed < 0.1
    with capsys.disabled():
        report("criterion 1 (Table 1 mixing reproduction)", elapsed, 0.1)


def test_criterion_2_oracle_dominance():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    optimum_hits = 0
    for k in range(200):
        g = random_graph(rng, int(rng.integers(3, 11)))
        bq = ac.brute_force(g).score.q
        gq = ac.greedy(g).score.q
        aq = ac.anneal(g, ac.OptimizerConfig(seed=k, restarts=5)).score.q
        assert bq >= gq - 1e-12
        assert bq >= aq - 1e-12
        assert gq >= 0.0
        if abs(aq - bq) <= 1e-9:
            optimum_hits += 1
    elapsed = time.perf_counter() - t0
    assert optimum_hits >= 180  # >= 90% of 200
    assert elapsed < 60.0
    print(f"  anneal found the optimum on {optimum_hits}/200 instances")
    report("criterion 2 (oracle dominance)", elapsed, 60)


def test_criterion_3_modularity_identities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3033)
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(2, 40)))
        assert ac.modularity(g, Partition.one_community(g.n)).q == 0.0
    moves = 0
    while moves < 1000:
        n = int(rng.integers(5, 201))
        g = random_graph(rng, n)
        memb = rng.integers(0, max(2, n // 4), n)
        p = Partition(memb)
        score = modularity(g, p)
        assert -0.5 - 1e-12 <= score.q < 1.0
        assert sum(d for _, d in score.per_community) == 2 * g.m
        for _ in range(25):
            v = int(rng.integers(0, n))
            target = int(rng.integers(-1, p.c))
            delta = delta_modularity_move(g, p, v, target)
            moved = p.membership.copy()
            moved[v] = p.c if target == NEW_COMMUNITY else target
            full = modularity(g, Partition(moved)).q - score.q
            assert abs(delta - full) <= 1e-12
            moves += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    report("criterion 3 (modularity identities)", elapsed, 10)


def test_criterion_4_barbell_exactness():
    t0 = time.perf_counter()
    g = make_barbell()
    expected = 5.0 / 14.0
    split = [0, 0, 0, 1, 1, 1]
    for result in (
        ac.brute_force(g),
        ac.greedy(g),
        ac.anneal(g, ac.OptimizerConfig(seed=0, restarts=5)),
    ):
        assert abs(result.score.q - expected) <= 1e-12
        assert result.partition.membership.tolist() == split
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    report("criterion 4 (barbell exactness)", elapsed, 1)


def test_criterion_5_planted_recovery():
    t0 = time.perf_counter()
    recovered = 0
    for seed in range(100):
        cfg = SynthConfig(
            seed=seed,
            n_actors=400,
            blocks=[
                SynthBlock([f"orgA{i}" for i in range(5)], [f"attA{i}" for i in range(3)], 0.5),
                SynthBlock([f"orgB{i}" for i in range(3)], [f"attB{i}" for i in range(2)], 0.5),
            ],
            p_in=0.9,
            p_out=0.05,
        )
        ds, planted = generate_synthetic(cfg)
        built = build_graph(ds.records, ds.catalog)
        res = ac.greedy(built.graph)
        attrs = sorted(built.attribute_index)
        detected = [res.partition.community_of(built.attribute_index[a]) for a in attrs]
        if ac.partition_nmi(detected, [planted[a] for a in attrs]) >= 0.9:
            recovered += 1
    elapsed = time.perf_counter() - t0
    assert recovered >= 95
    assert elapsed < 30.0
    print(f"  recovered planted blocks on {recovered}/100 seeds")
    report("criterion 5 (planted recovery)", elapsed, 30)


def test_criterion_6_detect_determinism(tmp_path, capsys):
    cfg = SynthConfig(
        seed=17,
        n_actors=40,
        blocks=[
            SynthBlock(["o1", "o2", "o3"], ["a1", "a2"], 0.5),
            SynthBlock(["o4", "o5"], ["a3", "a4"], 0.5),
        ],
        p_in=0.85,
        p_out=0.1,
    )
    ds, _ = generate_synthetic(cfg)
    from affilcomm import io as aio

    path = tmp_path / "input.csv"
    aio.write_incidence_csv(ds, path)
    args = ["detect", "--input", str(path), "--algorithm", "anneal", "--seed", "7"]
    t0 = time.perf_counter()
    assert main(args) == 0
    first = capsys.readouterr().out.encode()
    assert main(args) == 0
    second = capsys.readouterr().out.encode()
    elapsed = time.perf_counter() - t0
    assert first == second
    json.loads(first.decode())
    with capsys.disabled():
        report("criterion 6 (detect determinism)", elapsed, 60)
