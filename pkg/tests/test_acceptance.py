"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line that the terminal summary prints
under "acceptance criteria", then asserts.
"""
import io
import json
import re
import subprocess
import sys
import time
from contextlib import redirect_stdout
from itertools import product

from thins.abstract import (builtin_model, check_axioms, check_choice, check_minimality_gap,
                            thins_in_model)
from thins.cli import main
from thins.enumeration import enumerate_pers, enumerate_relations
from thins.general import find_rel_index, has_distinct_lines, is_core, is_rel_index, thins_rel
from thins.lemmas import REGISTRY
from thins.pers import (completion_base, enumerate_per_indexes, find_per_index, is_maximal_per,
                        is_minimal_per, is_per_index, maximal_completion, maximality_condition,
                        thins_per)
from thins.poset import export_thins_poset
from thins.rel import is_coreflexive, is_equivalence, sig, transitive_closure
from thins.suite import SuiteConfig, report_json, run_lemma_suite

import oracles
from conftest import ACCEPTANCE_LINES


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  [{number}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_1_full_suite_under_a_minute():
    buf = io.StringIO()
    start = time.perf_counter()
    with redirect_stdout(buf):
        code = main(["verify", "--size", "3", "--sig", "2x2", "--sig", "3x3", "--json"])
    elapsed = time.perf_counter() - start
    data = json.loads(buf.getvalue())
    by_id = {r["id"]: r for r in data["reports"]}
    failed = [r["id"] for r in data["reports"] if r["status"] != "pass"]
    triples = by_id["itt.order"]["instances"]
    rels = by_id["minimal.is.core"]["instances"]
    ok = (code == 0 and not failed and set(by_id) == set(REGISTRY)
          and triples == 2 ** 3 + 5 ** 3 + 15 ** 3 and rels == 16 + 512 and elapsed < 60)
    record(1, "full lemma suite", ok,
           f"{len(by_id) - len(failed)}/{len(by_id)} lemmas pass, {triples} per triples, "
           f"{rels} relations, {elapsed:.1f}s (limit 60s)")


def test_2_maximal_characterisation():
    counts, ok = [], True
    for n in (1, 2, 3):
        U = enumerate_pers(n)
        for P in U:
            a, b = is_maximal_per(P, U), maximality_condition(P)
            c = P.is_empty() or is_equivalence(P)
            ok &= a == b == c
        counts.append(sum(is_maximal_per(P, U) for P in U))
    expected = [1 + oracles.bell(n) for n in (1, 2, 3)]
    ok &= counts == expected == [2, 3, 6]
    record(2, "maximal pers", ok, f"maximal counts {counts}, expected {expected}")


def test_3_minimal_pers_are_coreflexives():
    counts, ok = [], True
    for n in (1, 2, 3):
        U = enumerate_pers(n)
        minimal = {P for P in U if is_minimal_per(P, U)}
        ok &= minimal == {P for P in U if is_coreflexive(P)}
        counts.append(len(minimal))
        for P in U:
            ok &= all(thins_per(J, P) for J in enumerate_per_indexes(P))
            ok &= is_per_index(find_per_index(P), P)
    ok &= counts == [2, 4, 8]
    record(3, "minimal pers", ok, f"minimal counts {counts}, expected [2, 4, 8]")


COMPLETION_LEMMAS = ("q.domain", "J.atmost.q", "JP.index", "JtoJ", "edRTR",
                     "TopRTop.is.TopPTop", "PRP", "Pcupa", "Jules5", "Jules6")


def test_4_maximal_completion():
    checked, bad = 0, []
    for n in (1, 2, 3):
        for P in enumerate_pers(n):
            _, base = completion_base(P)
            for J in enumerate_per_indexes(base):
                checked += 1
                for lid in COMPLETION_LEMMAS:
                    if not REGISTRY[lid].check(P=P, J=J):
                        bad.append((lid, P, J))
                t = maximal_completion(P, J)
                if t.Q != transitive_closure(t.P | t.R):
                    bad.append(("closure", P, J))
    record(4, "maximal completion", checked > 0 and not bad,
           f"{checked} (P, J) instances x {len(COMPLETION_LEMMAS) + 1} checks, "
           f"{len(bad)} failures")


def test_5_minimal_relations_are_cores():
    detail, ok = [], True
    for s in (sig(2), sig(2, 3), sig(3)):
        rels = enumerate_relations(s)
        minimal = {X for X in rels if all(Y == X for Y in rels if thins_rel(Y, X))}
        cores = {X for X in rels if is_core(X)}
        ok &= minimal == cores == {X for X in rels if has_distinct_lines(X)}
        ok &= all(is_core(find_rel_index(X)) and is_rel_index(find_rel_index(X), X)
                  for X in rels)
        detail.append(f"{s!r}: {len(minimal)} minimal = {len(cores)} cores of {len(rels)}")
    record(5, "minimal relations", ok, "; ".join(detail))


def test_6_abstract_models():
    names = ["one", "two", "three", "four"]
    models = [builtin_model(n) for n in names]
    reports = [check_axioms(M) for M in models]
    core = [r.core_ok for r in reports]
    unary = [r.unary for r in reports]
    choice = [check_choice(M) for M in models]
    witnesses = [M.name(w) for M, (c, w) in zip(models[2:], choice[2:])]
    discrete = [thins_in_model(M)[2] for M in models]
    gap = [check_minimality_gap(M) for M in models]
    ok = (all(core) and unary == [False, True, True, True]
          and [c for c, _ in choice] == [True, True, False, False]
          and witnesses == ["⊤", "⊤"] and all(discrete) and gap == [False, False, True, True])
    record(6, "abstract models", ok,
           f"axioms {core}, unary {unary}, choice {[c for c, _ in choice]} "
           f"(witnesses {witnesses}), discrete {discrete}, gap {gap}")


def test_7_determinism_and_poset():
    # separate processes, so no cache or iteration-order state is shared
    argv = [sys.executable, "-m", "thins", "verify", "--size", "3", "--sig", "2x2",
            "--sig", "3x3", "--seed", "11", "--json"]
    first, second = (subprocess.run(argv, capture_output=True, check=False).stdout
                     for _ in range(2))
    cfg = SuiteConfig(max_size=3, sigs=("2x2", "3x3"), seed=11)
    in_process = (report_json(cfg, run_lemma_suite(cfg)) + "\n").encode()
    dot = export_thins_poset(2)
    nodes = len(re.findall(r"^\s*n\d+ \[label=", dot, re.M))
    edges = len(re.findall(r"^\s*n\d+ -> n\d+;", dot, re.M))
    ok = first == second == in_process and len(first) > 0 and nodes == 5 and edges == 2
    record(7, "determinism and poset export", ok,
           f"reports identical: {first == second} ({len(first)} bytes); "
           f"size-2 poset has {nodes} nodes and {edges} cover edges")
