"""Corpus-level checks across generators, simulator and oracle, with fixed seeds."""
from itertools import product

import pytest

from barClasses import (
    ClassLabel,
    gen_triangle_chain,
    gen_triangle_circuit,
    gen_triangle_cycle,
    generate,
    has_trilateration_ordering,
)
from distsim import metrics, run_full, run_phase1, simulate
from distsim.simulator import DEFAULT_MESSAGE_CONSTANT
from ftg import build_ftg, check_prop1, check_prop2, check_prop3, grow_maximal_tree
from rigidityOracle import is_globally_rigid

WHEELS = [f"wheel:{n}" for n in range(4, 11)]
CYCLES = [f"cycle:{m}" for m in range(3, 11)] + ["cycle:8,zigzag=1", "cycle:10,zigzag=1"]
CIRCUITS = [f"circuit:{m}" for m in range(4, 9)]
BRIDGES = [f"bridge:{m}" for m in range(2, 9)]
NOTCHES = ["notch:tree=claw", "notch:tree=branched", "notch:tree=twinclaw"] + [
    f"notch:tree=star,m={m}" for m in range(4, 9)
]
NETS = (
    ["net:linked"]
    + [f"net:m={m},ext=2,seed=0" for m in range(10, 20)]
    + [f"net:m={m},ext=3,seed=0" for m in range(16, 21)]
    + [f"net:m=12,ext=2,seed={s}" for s in range(1, 5)]
)
STITCHED = ["stitched:circuit7+wheel9+cycle8,seed=1", "stitched:wheel6+circuit6,seed=1"]
TRILATERATION = [f"trilat:n={n},seed={s}" for n in range(6, 21) for s in range(7)]
WHEEL_EXTENSIONS = [f"wheelext:sizes={a}-{b}-{c},seed=0" for a, b, c in product((4, 5, 6), repeat=3)] + [
    f"wheelext:sizes={a}-{b},seed=1" for a, b in product((4, 5, 6), repeat=2)
]

BARS = WHEELS + CYCLES + CIRCUITS + BRIDGES + NOTCHES + NETS + STITCHED + TRILATERATION + WHEEL_EXTENSIONS

NEGATIVE = (
    [f"chain:{m}" for m in range(2, 17)]
    + [f"graft:bar=wheel{n},m={m}" for n in range(5, 9) for m in (2, 3, 4)]
    + [f"graft:bar=cycle6,m={m}" for m in (2, 3, 4)]
    + [f"graft:bar=circuit7,m={m}" for m in (2, 3)]
    + ["tree:plan=branched", "tree:plan=claw", "tree:plan=twinclaw"]
    + [f"tree:star,m={m}" for m in range(4, 9)]
    + [f"tree:m={m},seed={m}" for m in range(6, 16)]
)

BEYOND_TRILATERATION = [
    ("cycle:5", {ClassLabel.WHEEL, ClassLabel.CYCLE}),
    ("cycle:8,zigzag=1", {ClassLabel.CYCLE}),
    ("circuit:6", {ClassLabel.CIRCUIT}),
    ("bridge:4", {ClassLabel.BRIDGE}),
    ("net:linked", {ClassLabel.NET}),
]


def test_corpus_sizes():
    assert len(BARS) == 200
    assert len(NEGATIVE) == 50
    assert sum(1 for s in NETS if s != "net:linked") >= 15


@pytest.mark.parametrize("spec", BARS)
def test_bar_fully_marked_and_rigid(spec, record_property):
    inst = generate(spec)
    report = run_full(inst.graph, inst.seed_triangle)
    m = metrics(report)
    record_property("message_ratio", round(m["ratio"], 2))
    assert report.localizable_nodes == set(inst.graph.nodes)
    assert is_globally_rigid(inst.graph).globally_rigid
    assert m["within_budget"]
    assert m["clock_violations"] == []


@pytest.mark.parametrize("spec", NEGATIVE)
def test_partial_marking_is_sound(spec):
    inst = generate(spec)
    marked = run_full(inst.graph, inst.seed_triangle).localizable_nodes
    assert set(inst.seed_triangle.nodes) <= marked
    assert len(marked) < len(inst.graph)
    assert is_globally_rigid(inst.graph.induced(marked)).globally_rigid


@pytest.mark.parametrize("spec,labels", BEYOND_TRILATERATION)
def test_bars_beyond_trilateration(spec, labels):
    inst = generate(spec)
    assert len(inst.graph) <= 12
    assert not has_trilateration_ordering(inst.graph, inst.seed_triangle)
    sim = simulate(inst.graph, inst.seed_triangle)
    assert sim.localizable_nodes() == set(inst.graph.nodes)
    assert is_globally_rigid(inst.graph).globally_rigid
    assert labels & {b.label for b in sim.bars}


@pytest.mark.parametrize("spec", BARS[::10] + NEGATIVE[::10])
def test_phase1_bounds(spec):
    g = generate(spec).graph
    sim = run_phase1(g)
    assert sim.ftg == build_ftg(g)
    assert all(clock <= 3 * g.degree(v) for v, clock in sim.phase1_clocks.items())


def test_message_constant_calibration(record_property):
    ratios = {}
    for spec in BARS[::5]:
        inst = generate(spec)
        ratios[spec] = metrics(run_full(inst.graph, inst.seed_triangle))["ratio"]
    worst = max(ratios, key=ratios.get)
    record_property("calibrated_c", round(ratios[worst], 2))
    print(f"calibrated c={ratios[worst]:.2f} on {worst} (frozen at {DEFAULT_MESSAGE_CONSTANT})")
    assert ratios[worst] <= DEFAULT_MESSAGE_CONSTANT


@pytest.mark.parametrize("m", range(3, 9))
def test_propositions_on_generator_streams(m):
    g, s = gen_triangle_cycle(m)
    assert check_prop1(g, s)
    chain, cs = gen_triangle_chain(m)
    assert check_prop3(chain, cs)
    assert check_prop3(g, grow_maximal_tree(g))
    if m >= 4:
        circuit, ks, _ = gen_triangle_circuit(m)
        assert check_prop2(circuit, ks)
