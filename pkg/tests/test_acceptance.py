"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to watch the lines as
they pass.  Every numeric assertion is exact; the randomized criteria
use fixed seeds, so the whole suite is reproducible.
"""

import random
import time

from conftest import FIG_DIMACS, FIG4_DIMACS, UNSAT8_DIMACS
from domkit.cnf import parse_dimacs, random_instance, solve_sat
from domkit.domination import (
    domination_number,
    is_dominating_set,
    is_total_dominating_set,
    total_domination_number,
)
from domkit.perturbation import (
    bondage_number,
    reinforcement_number,
    total_bondage_number,
    total_reinforcement_number,
)
from domkit.reductions import (
    ReductionKind,
    assignment_to_witness,
    build,
    build_bondage,
    build_reinforcement,
    build_total_bondage,
    build_total_reinforcement,
)
from domkit.verify import verify
from oracles import (
    brute_bondage,
    brute_domination_number,
    brute_reinforcement,
    brute_total_bondage,
    brute_total_domination_number,
    brute_total_reinforcement,
    random_graph,
)


def _announce(number: int, label: str, started: float, budget_s: float) -> None:
    elapsed = time.perf_counter() - started
    assert elapsed < budget_s, f"criterion {number} took {elapsed:.1f}s, budget {budget_s}s"
    print(f"criterion {number} ({label}): PASS in {elapsed:.1f}s")


def test_criterion_1_bondage_gadget_reproduction():
    started = time.perf_counter()
    inst = parse_dimacs(FIG_DIMACS)
    out = build_bondage(inst)
    assert domination_number(out.graph).value == 9
    assert out.graph.num_edges == 41
    assert out.graph.is_bipartite()
    assert solve_sat(inst) is not None
    assert bondage_number(out.graph, max_k=2).value == 1
    _announce(1, "bondage gadget", started, 10)


def test_criterion_2_total_bondage_gadget_reproduction():
    started = time.perf_counter()
    inst = parse_dimacs(FIG_DIMACS)
    out = build_total_bondage(inst)
    assert total_domination_number(out.graph).value == 10
    assert out.graph.is_bipartite()
    assert total_bondage_number(out.graph, max_k=2).value == 1
    _announce(2, "total bondage gadget", started, 30)


def test_criterion_3_reinforcement_gadget_reproduction():
    started = time.perf_counter()
    inst = parse_dimacs(FIG_DIMACS)
    out = build_reinforcement(inst)
    assert domination_number(out.graph).value == 9
    assert reinforcement_number(out.graph, max_k=1).value == 1
    _announce(3, "reinforcement gadget", started, 10)


def test_criterion_4_total_reinforcement_gadget_reproduction():
    started = time.perf_counter()
    inst = parse_dimacs(FIG4_DIMACS)
    out = build_total_reinforcement(inst)
    assert total_domination_number(out.graph).value == 10
    assert total_reinforcement_number(out.graph, max_k=1).value == 1
    augmented = out.graph.add_edges([("s2", "u1")])
    model = solve_sat(inst)
    assert model is not None
    witness = assignment_to_witness(out, model)
    assert witness.added_edge == ("s2", "u1")
    assert len(witness.vertices) == 9
    assert is_total_dominating_set(augmented, witness.vertices)
    _announce(4, "total reinforcement gadget", started, 30)


def test_criterion_5_equivalence_fuzz():
    started = time.perf_counter()
    failures = []
    for i in range(100):
        inst = random_instance(3 + i % 2, 1 + i % 8, 1000 + i)
        for kind in ReductionKind:
            report = verify(kind, inst)
            if not report.passed:
                failures.append((i, kind.value, [c.claim_id for c in report.claims if not c.passed]))
    assert not failures, failures
    _announce(5, "iff equivalence fuzz, 100 instances x 4 verifiers", started, 15 * 60)


def test_criterion_6_unsat_control():
    started = time.perf_counter()
    inst = parse_dimacs(UNSAT8_DIMACS)
    assert solve_sat(inst) is None

    bond = build_bondage(inst).graph
    assert domination_number(bond).value >= 8
    assert bondage_number(bond, max_k=1).is_undefined  # b >= 2

    total_bond = build_total_bondage(inst).graph
    assert total_domination_number(total_bond).value >= 9
    assert total_bondage_number(total_bond, max_k=1).is_undefined  # b_t >= 2

    reinf = build_reinforcement(inst).graph
    assert domination_number(reinf).value == 7
    assert reinforcement_number(reinf, max_k=1).is_undefined  # r >= 2

    total_reinf = build_total_reinforcement(inst).graph
    assert total_domination_number(total_reinf).value == 8
    assert total_reinforcement_number(total_reinf, max_k=1).is_undefined  # r_t >= 2
    _announce(6, "unsatisfiable control instance", started, 60)


def test_criterion_7_solver_oracle_equivalence():
    started = time.perf_counter()
    rng = random.Random(777001)
    for trial in range(200):
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.6))
        context = f"trial {trial}: {g.vertices} {g.edges}"

        assert domination_number(g).value == brute_domination_number(g), context
        assert (reinforcement_number(g, max_k=49).value or 0) == brute_reinforcement(g), context
        if g.edges:
            assert bondage_number(g, max_k=g.num_edges).value == brute_bondage(g), context
        if not g.isolated_vertices() and g.num_vertices >= 2:
            assert total_domination_number(g).value == brute_total_domination_number(g), context
            assert total_bondage_number(g, max_k=g.num_edges).value == brute_total_bondage(g), context
            assert (total_reinforcement_number(g, max_k=49).value or 0) == brute_total_reinforcement(
                g
            ), context
    _announce(7, "solver vs brute-force oracle, 200 graphs", started, 10 * 60)


def test_criterion_8_property_suite():
    started = time.perf_counter()
    rng = random.Random(888001)

    # single-edge monotonicity, both directions, every edge
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.6))
        gamma = domination_number(g).value
        for edge in g.edges:
            assert domination_number(g.remove_edges([edge])).value in (gamma, gamma + 1)
        for edge in g.complement_edges():
            assert domination_number(g.add_edges([edge])).value in (gamma - 1, gamma)

    # classic sandwich between the two parameters
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.3, 0.7))
        if g.isolated_vertices():
            continue
        checked += 1
        gamma = domination_number(g).value
        gamma_t = total_domination_number(g).value
        assert gamma <= gamma_t <= 2 * gamma

    # builder closed forms, bipartiteness, and witness round trips
    forms = {
        ReductionKind.BONDAGE: (lambda n, m: 6 * n + m + 3, lambda n, m: 6 * n + 5 * m + 2),
        ReductionKind.TOTAL_BONDAGE: (lambda n, m: 5 * n + m + 6, lambda n, m: 6 * n + 5 * m + 7),
        ReductionKind.REINFORCEMENT: (lambda n, m: 6 * n + m + 1, lambda n, m: 6 * n + 4 * m),
        ReductionKind.TOTAL_REINFORCEMENT: (lambda n, m: 5 * n + m + 3, lambda n, m: 6 * n + 4 * m + 2),
    }
    witness_rules = {
        ReductionKind.BONDAGE: (lambda n: 2 * n + 1, is_dominating_set),
        ReductionKind.TOTAL_BONDAGE: (lambda n: 2 * n + 2, is_total_dominating_set),
        ReductionKind.REINFORCEMENT: (lambda n: 2 * n, is_dominating_set),
        ReductionKind.TOTAL_REINFORCEMENT: (lambda n: 2 * n + 1, is_total_dominating_set),
    }
    for i in range(50):
        inst = random_instance(3 + i % 3, i % 9, 2000 + i)
        model = solve_sat(inst)
        for kind in ReductionKind:
            out = build(kind, inst)
            vform, eform = forms[kind]
            assert out.graph.num_vertices == vform(inst.num_vars, inst.num_clauses)
            assert out.graph.num_edges == eform(inst.num_vars, inst.num_clauses)
            assert out.graph.is_bipartite()
            if model is not None:
                size_of, member = witness_rules[kind]
                witness = assignment_to_witness(out, model)
                target = out.graph
                if witness.added_edge is not None:
                    target = target.add_edges([witness.added_edge])
                assert len(witness.vertices) == size_of(inst.num_vars)
                assert member(target, witness.vertices)
    _announce(8, "property suite", started, 10 * 60)
