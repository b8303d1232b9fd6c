"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in a summary section at the end of the pytest run.
"""

from __future__ import annotations

import io
import json
import time

import pytest

from figures import CUBIC_012_EDGES, QUARTIC_1_EDGES, all_triples
from vietacluster import cubic, quartic
from vietacluster.audit import (
    A2_PAIRS,
    DEFAULT_CUBIC_SAMPLE,
    DEFAULT_QUARTIC_SAMPLE,
    AuditConfig,
    a2_orbit,
    laurent,
    rank2_equation,
    render_report,
    run_audit,
    specialization_vs_tree,
)
from vietacluster.cli import run
from vietacluster.cubic import Triple
from vietacluster.gcp import check_sign_flip, explore, mutate_zpolys, negate
from vietacluster.registry import registry
from vietacluster.symmetric import build_symmetric_equation, elementary
from vietacluster.tree import EnumBound, FamilySpec, brute_force, generate, triples

CUBIC_BOUND = 10**4
QUARTIC_BOUND = 10**3


def cli(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), out, io.StringIO())
    return code, out.getvalue()


@pytest.fixture(scope="module")
def enumerations():
    """Tree listings and brute-force sets for the criterion-3 sample, computed once."""
    runs = {}
    for ks in DEFAULT_CUBIC_SAMPLE:
        spec = FamilySpec.cubic(*ks)
        runs[spec] = (triples(generate(spec, EnumBound.entry(CUBIC_BOUND))), brute_force(spec, CUBIC_BOUND))
    for k in DEFAULT_QUARTIC_SAMPLE:
        spec = FamilySpec.quartic(k)
        runs[spec] = (triples(generate(spec, EnumBound.entry(QUARTIC_BOUND))), brute_force(spec, QUARTIC_BOUND))
    return runs


def test_criterion_01_cubic_tree(record):
    start = time.perf_counter()
    code, out = cli("enumerate", "--family", "cubic", "--k", "0,1,2", "--max-depth", "3", "--format", "json")
    elapsed = time.perf_counter() - start
    got = {tuple(r["triple"]) for r in json.loads(out)}
    ok = code == 0 and got == all_triples(CUBIC_012_EDGES) and elapsed < 1
    record(1, ok, f"cubic(0,1,2) depth 3: {len(got)} triples, figure has {len(all_triples(CUBIC_012_EDGES))}, {elapsed:.3f}s")
    assert ok


def test_criterion_02_quartic_tree(record):
    start = time.perf_counter()
    code, out = cli("enumerate", "--family", "quartic", "--k", "1", "--max-depth", "3", "--format", "json")
    elapsed = time.perf_counter() - start
    got = {tuple(r["triple"]) for r in json.loads(out)}
    ok = code == 0 and got == all_triples(QUARTIC_1_EDGES) and elapsed < 1
    ok = ok and {(741, 2, 5), (21, 25, 2), (1, 5, 13)} <= got
    record(2, ok, f"quartic(1) depth 3: {len(got)} triples, {elapsed:.3f}s")
    assert ok


@pytest.mark.slow
def test_criterion_03_oracle(record, enumerations):
    bad = [str(spec) for spec, (listed, found) in enumerations.items() if set(listed) != found]
    spot = [FamilySpec.cubic(*ks) for ks in DEFAULT_CUBIC_SAMPLE[:3]] + [FamilySpec.quartic(1)]
    for spec in spot:
        if brute_force(spec, 100, reference=True) != brute_force(spec, 100):
            bad.append(f"reference loop {spec}")
    cubic_points = sum(1 for s in enumerations if s.kind == "cubic")
    ok = not bad and cubic_points >= 8
    record(3, ok, f"{cubic_points} cubic points at 1e4, {len(enumerations) - cubic_points} quartic at 1e3, mismatches {bad}")
    assert ok


@pytest.mark.slow
def test_criterion_04_uniqueness(record, enumerations):
    dupes = {str(s): len(listed) - len(set(listed)) for s, (listed, _) in enumerations.items()}
    ok = not any(dupes.values())
    record(4, ok, f"repeats per enumeration: {sum(dupes.values())} over {sum(len(l) for l, _ in enumerations.values())} nodes")
    assert ok


@pytest.mark.slow
def test_criterion_05_repeated_entries(record, enumerations):
    bad = []
    for spec, (listed, _) in enumerations.items():
        if spec.kind != "cubic":
            continue
        p = spec.params
        expected = {Triple(1, 1, 1), Triple(p.k2 + 2, 1, 1), Triple(1, p.k3 + 2, 1), Triple(1, 1, p.k1 + 2)}
        if {t for t in listed if len(set(t)) < 3} != expected:
            bad.append(str(spec))
    record(5, not bad, f"cubic enumerations whose repeated-entry set differs: {bad}")
    assert not bad


@pytest.mark.slow
def test_criterion_06_coprime(record, enumerations):
    bad = [t for listed, _ in enumerations.values() for t in listed if not cubic.pairwise_coprime(t)]
    record(6, not bad, f"{sum(len(l) for l, _ in enumerations.values())} solutions checked, {len(bad)} not coprime")
    assert not bad


def test_criterion_07_shared_maximum(record):
    spec = FamilySpec.cubic(0, 1, 2)
    first, second = (1, 81, 17), (7, 81, 2)
    listed = set(triples(generate(spec, EnumBound.depth(3))))
    ok = (
        cli("verify", "--family", "cubic", "--k", "0,1,2", "--triple", "1,81,17")[0] == 0
        and cli("verify", "--family", "cubic", "--k", "0,1,2", "--triple", "7,81,2")[0] == 0
        and first in listed
        and second in listed
        and sorted(first) != sorted(second)
        and max(first) == max(second)
    )
    record(7, ok, "(1,81,17) and (7,81,2) both verified and generated")
    assert ok


@pytest.mark.slow
def test_criterion_08_squares(record):
    notes = []
    lifted = triples(generate(FamilySpec.cubic(2, 2, 2), EnumBound.entry(CUBIC_BOUND)))
    for t in lifted:
        try:
            root = tuple(quartic.exact_sqrt(v) for v in t)
        except quartic.NotAPerfectSquare:
            notes.append(f"{t} not squares")
            continue
        if not cubic.is_solution(cubic.MARKOV, root):
            notes.append(f"root of {t} not Markov")
    markov = triples(generate(FamilySpec.cubic(), EnumBound.entry(100)))
    for t in markov:
        if not cubic.is_solution(cubic.CubicParams(2, 2, 2), cubic.square_lift(t)):
            notes.append(f"lift of {t}")
    checked = 0
    for k in range(3):
        for t in triples(generate(FamilySpec.cubic(2, k, 2), EnumBound.entry(CUBIC_BOUND))):
            checked += 1
            try:
                quartic.exact_sqrt(t.b), quartic.exact_sqrt(t.c)
            except quartic.NotAPerfectSquare:
                notes.append(f"(2,{k},2) {t}")
    ok = not notes
    record(8, ok, f"{len(lifted)} (2,2,2) solutions, {len(markov)} Markov lifts, {checked} (2,k,2) solutions; {notes[:3]}")
    assert ok


def test_criterion_09_mutation_algebra(record):
    start = time.perf_counter()
    entries = registry()
    bad = []
    for e in entries:
        seed = e.seed()
        report = check_sign_flip(seed)
        if not report.holds:
            bad.append(f"{e.name} condition")
        for k in range(seed.rank):
            once = seed.mutate(k)
            if once.B != negate(seed.B) or once.Z != seed.Z or mutate_zpolys(seed.Z, k) != seed.Z:
                bad.append(f"{e.name} mu{k + 1}")
        for _, s in explore(seed, 3):
            for k in range(s.rank):
                if s.mutate(k).mutate(k) != s:
                    bad.append(f"{e.name} involution")
    elapsed = time.perf_counter() - start
    ok = not bad and len(entries) == 18 and elapsed < 10
    record(9, ok, f"{len(entries)} seeds, failures {bad[:3]}, {elapsed:.2f}s")
    assert ok


@pytest.mark.slow
def test_criterion_10_laurent(record):
    start = time.perf_counter()
    results = [laurent(e, 8 if e.rank == 3 else 12) for e in registry()]
    elapsed = time.perf_counter() - start
    bad = [r.line() for r in results if not r.ok]
    ok = not bad and elapsed < 120
    record(10, ok, f"{len(results)} seeds, rank 3 to depth 8, rank 2 to depth 12, failures {bad[:2]}, {elapsed:.1f}s")
    assert ok


def test_criterion_11_specialization(record):
    results = [specialization_vs_tree(e) for e in registry() if e.group == "rank3"]
    results += [rank2_equation(e) for e in registry() if e.rank == 2 and e.equation_id is not None]
    bad = [r.line() for r in results if not r.ok]
    record(11, not bad, f"{len(results)} rows checked, failures {bad[:2]}")
    assert not bad


def test_criterion_12_a2(record):
    result = a2_orbit()
    record(12, result.ok, result.detail)
    assert result.ok


def test_criterion_13_a2_equation(record):
    start = time.perf_counter()
    rel = build_symmetric_equation(elementary(1))
    found = rel.solutions_in_box(1000)
    elapsed = time.perf_counter() - start
    same = rel.cleared == build_symmetric_equation(elementary(5)).cleared
    ok = found == A2_PAIRS and same and elapsed < 5
    record(13, ok, f"{len(found)} pairs in [1,1000]^2, e1 and e5 agree: {same}, {elapsed:.2f}s")
    assert ok


@pytest.mark.slow
def test_criterion_14_determinism(record):
    config = AuditConfig()
    serial = render_report(run_audit(config, threads=1))
    parallel = render_report(run_audit(config, threads=4))
    ok = serial == parallel and serial.endswith(" 0 failed\n")
    record(14, ok, f"{serial.count(chr(10)) - 1} checks, reports identical: {serial == parallel}")
    assert ok
