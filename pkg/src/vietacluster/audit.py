"""Invariant checks over the trees and the registry, collected into one text report.

Every check returns a :class:`CheckResult`; :func:`run_audit` runs a list of
them (optionally on a thread pool) and joins the results in a fixed order, so
the report does not depend on scheduling.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence

from vietacluster import cubic, quartic
from vietacluster.cubic import ROOT, Triple
from vietacluster.gcp import (
    NonIntegerSpecialization,
    check_sign_flip,
    distinct_variables,
    enumerate_a2,
    explore,
    negate,
    positive_integer_values,
)
from vietacluster.laurent import LaurentPoly, NotDivisible
from vietacluster.registry import RegistryEntry, get_entry, registry
from vietacluster.symmetric import build_symmetric_equation, elementary
from vietacluster.tree import (
    EnumBound,
    FamilySpec,
    brute_force,
    generate,
    max_number_gaps,
    thread_count,
    triples,
)

RANK2_LAURENT_DEPTH = 12
SPECIALIZATION_DEPTH = 5
RANK2_EQUATION_DEPTH = 6
A2_PAIRS = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]

DEFAULT_CUBIC_SAMPLE = ((0, 0, 0), (0, 1, 2), (1, 0, 0), (0, 0, 1), (1, 1, 1), (2, 2, 2), (2, 1, 0), (1, 2, 2), (2, 0, 1))
DEFAULT_QUARTIC_SAMPLE = (0, 1, 2)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _guard(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except (AssertionError, ArithmeticError, ValueError) as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


# -- solution trees -----------------------------------------------------------


def tree_oracle(spec: FamilySpec, bound: int) -> CheckResult:
    """Tree listing within ``bound`` equals the brute-force set and has no repeats."""
    listed = triples(generate(spec, EnumBound.entry(bound), threads=1))
    found = brute_force(spec, bound)
    dupes = len(listed) - len(set(listed))
    ok = dupes == 0 and set(listed) == found
    detail = f"{len(listed)} tree nodes, {len(found)} brute-force solutions, {dupes} repeats"
    if not ok:
        missing = sorted(found - set(listed))[:3]
        extra = sorted(set(listed) - found)[:3]
        detail += f", missing {missing}, extra {extra}"
    return CheckResult(f"oracle {spec} bound {bound}", ok, detail)


def repeated_entries(spec: FamilySpec, bound: int) -> CheckResult:
    listed = triples(generate(spec, EnumBound.entry(bound), threads=1))
    repeated = {t for t in listed if len(set(t)) < 3}
    expected = {t for t in spec.singular_triples() if max(t) <= bound}
    ok = repeated == expected
    return CheckResult(f"repeated entries {spec}", ok, " ".join(str(t) for t in sorted(repeated)))


def coprimality(spec: FamilySpec, bound: int) -> CheckResult:
    listed = triples(generate(spec, EnumBound.entry(bound), threads=1))
    bad = [t for t in listed if not cubic.pairwise_coprime(t)]
    return CheckResult(f"coprime {spec}", not bad, f"{len(listed)} checked" + (f", first failure {bad[0]}" if bad else ""))


def counterexample_pair() -> CheckResult:
    spec = FamilySpec.cubic(0, 1, 2)
    first, second = Triple(1, 81, 17), Triple(7, 81, 2)
    listed = set(triples(generate(spec, EnumBound.entry(100), threads=1)))
    ok = (
        spec.is_solution(first)
        and spec.is_solution(second)
        and first in listed
        and second in listed
        and sorted(first) != sorted(second)
    )
    return CheckResult("shared entry 81 in two unrelated solutions of cubic(0,1,2)", ok, f"{first} {second}")


def squares(bound: int) -> CheckResult:
    notes = []
    ok = True
    for t in triples(generate(FamilySpec.cubic(2, 2, 2), EnumBound.entry(bound), threads=1)):
        try:
            root = Triple(*(quartic.exact_sqrt(v) for v in t))
        except quartic.NotAPerfectSquare:
            ok = False
            notes.append(f"{t} not all squares")
            continue
        if not cubic.is_solution(cubic.MARKOV, root):
            ok = False
            notes.append(f"root {root} of {t} not Markov")
    markov = triples(generate(FamilySpec.cubic(), EnumBound.entry(100), threads=1))
    for t in markov:
        if not cubic.is_solution(cubic.CubicParams(2, 2, 2), cubic.square_lift(t)):
            ok = False
            notes.append(f"lift of {t} fails")
    for k in range(3):
        for t in triples(generate(FamilySpec.cubic(2, k, 2), EnumBound.entry(bound), threads=1)):
            try:
                quartic.exact_sqrt(t.b), quartic.exact_sqrt(t.c)
            except quartic.NotAPerfectSquare:
                ok = False
                notes.append(f"cubic(2,{k},2) {t} second/third not squares")
    return CheckResult(f"square correspondence bound {bound}", ok, "; ".join(notes[:3]) or f"{len(markov)} Markov lifts")


def gaps(bound: int) -> CheckResult:
    """Cubic trees: every entry is also the maximum of some solution. Quartic k=1: 11 is not."""
    cubic_spec = FamilySpec.cubic(0, 1, 2)
    missing = sorted(max_number_gaps(cubic_spec, triples(generate(cubic_spec, EnumBound.entry(bound), threads=1))))
    quartic_spec = FamilySpec.quartic(1)
    never = max_number_gaps(quartic_spec, triples(generate(quartic_spec, EnumBound.entry(bound), threads=1)))
    ok = not missing and 11 in never
    return CheckResult(
        f"maximal entries bound {bound}",
        ok,
        f"cubic(0,1,2) gaps {missing[:5]}, quartic(1) value 11 {'never' if 11 in never else 'sometimes'} maximal",
    )


# -- cluster patterns ---------------------------------------------------------


def involution(entry: RegistryEntry, depth: int = 3) -> CheckResult:
    count = 0
    for _, seed in explore(entry.seed(), depth):
        for k in range(seed.rank):
            back = seed.mutate(k).mutate(k)
            if back != seed:
                return CheckResult(f"involution {entry.name}", False, f"direction {k + 1} not undone")
            count += 1
    return CheckResult(f"involution {entry.name}", True, f"{count} double mutations")


def sign_flip(entry: RegistryEntry) -> CheckResult:
    report = check_sign_flip(entry.seed())
    return CheckResult(f"sign flip and fixed polynomials {entry.name}", report.holds, f"BD class {report.bd_class}")


def laurent(entry: RegistryEntry, depth: int) -> CheckResult:
    """Every walk up to ``depth`` divides exactly and specializes to positive integers."""
    count = 0
    largest = 0
    walk: tuple[int, ...] = ()
    try:
        for walk, seed in explore(entry.seed(), depth):
            values = positive_integer_values(seed)
            largest = max(largest, *values)
            count += 1
    except (NonIntegerSpecialization, NotDivisible) as exc:
        # on a division failure ``walk`` is the prefix whose extension failed
        return CheckResult(f"laurent {entry.name} depth {depth}", False, f"after walk {_one_based(walk)}: {exc}")
    return CheckResult(f"laurent {entry.name} depth {depth}", True, f"{count} seeds, largest value {largest}")


def _one_based(walk: Sequence[int]) -> str:
    return "".join(str(k + 1) for k in walk) or "-"


def _param_grid(entry: RegistryEntry, values: Sequence[int] = (0, 1, 2, 3)) -> list[dict[str, int]]:
    return [dict(zip(entry.parameters, combo)) for combo in itertools.product(values, repeat=len(entry.parameters))]


def specialization_matches_tree(entry: RegistryEntry, params: Mapping[str, int], depth: int = SPECIALIZATION_DEPTH) -> bool:
    """Direction ``i`` of the pattern and jump ``i`` of the tree replace the same entry.

    Walk by walk, the specialized cluster must equal the triple reached by the
    same jump sequence from the root; the two multisets are compared as well.
    """
    family = entry.family(params)
    if family is None:
        raise ValueError(f"{entry.name} is not bound to a rank-3 family")
    jumped: dict[tuple[int, ...], Triple] = {(): ROOT}
    seen: Counter = Counter()
    for walk, seed in explore(entry.seed(params), depth):
        if walk:
            jumped[walk] = family.jump(jumped[walk[:-1]], walk[-1])
        values = positive_integer_values(seed)
        if values != tuple(jumped[walk]):
            return False
        seen[values] += 1
    tree = Counter(tuple(t) for t in triples(generate(family, EnumBound.depth(depth), threads=1)))
    return seen == tree


def specialization_vs_tree(entry: RegistryEntry, depth: int = SPECIALIZATION_DEPTH) -> CheckResult:
    grid = _param_grid(entry)
    bad = [p for p in grid if not specialization_matches_tree(entry, p, depth)]
    return CheckResult(
        f"specialization equals tree {entry.name} depth {depth}",
        not bad,
        f"{len(grid)} parameter choices" + (f", first mismatch {bad[0]}" if bad else ""),
    )


def rank2_equation(entry: RegistryEntry, depth: int = RANK2_EQUATION_DEPTH) -> CheckResult:
    grid = _param_grid(entry)
    for params in grid:
        eq = entry.equation(params)
        for walk, seed in explore(entry.seed(params), depth):
            values = positive_integer_values(seed)
            if eq.residual(values):
                return CheckResult(f"rank-2 equation {entry.name}", False, f"{params} walk {_one_based(walk)} gives {values}")
    return CheckResult(f"rank-2 equation {entry.name} depth {depth}", True, f"{len(grid)} parameter choices")


def frozen_reduction(entry: RegistryEntry, depth: int = RANK2_EQUATION_DEPTH) -> CheckResult:
    """Rank-3 walks avoiding the frozen direction, with that variable set to 1, give the rank-2 pattern."""
    if entry.reduces is None:
        raise ValueError(f"{entry.name} has no frozen-direction source")
    source = get_entry(entry.reduces[0])
    frozen = entry.reduces[1]
    keep = [i for i in range(3) if i != frozen]
    name = f"frozen reduction {source.name} -> {entry.name}"
    sub = tuple(tuple(source.B[i][j] for j in keep) for i in keep)
    if entry.B not in (sub, negate(sub)):
        return CheckResult(name, False, f"submatrix {sub} differs from {entry.B}")
    for params in _param_grid(entry):
        big_params = {**source.resolve_params(), **params}
        big, small = source.seed(big_params), entry.seed(params)
        if tuple(big.Z[i] for i in keep) != small.Z:
            return CheckResult(name, False, "exchange polynomials differ")
        big_seeds = dict(explore(big, depth))
        for walk, seed in explore(small, depth):
            lifted = big_seeds[tuple(keep[k] for k in walk)]
            for point in ((1, 1), (2, 3)):
                full = [1, 1, 1]
                full[keep[0]], full[keep[1]] = point
                v_big = lifted.specialize(full)
                if v_big[frozen] != 1 or tuple(v_big[i] for i in keep) != seed.specialize(point):
                    return CheckResult(name, False, f"{params} walk {_one_based(walk)} at {point}")
    return CheckResult(name, True, f"B sign {'kept' if entry.B == sub else 'flipped'}")


def a2_orbit() -> CheckResult:
    orbit = enumerate_a2()
    variables = distinct_variables(orbit)
    x, y = LaurentPoly.gens(2)
    expected = {x, y, (y + 1).exact_div(x), (x + y + 1).exact_div(x * y), (x + 1).exact_div(y)}
    pairs = sorted({tuple(int(v.evaluate((1, 1))) for v in c) for c in orbit})
    ok = len(orbit) == 10 and len(variables) == 5 and set(variables) == expected and pairs == A2_PAIRS
    return CheckResult(
        "A2 orbit", ok, f"{len(orbit)} clusters, {len(variables)} variables, pairs {' '.join(map(str, pairs))}"
    )


def a2_equation(bound: int = 1000) -> CheckResult:
    first = build_symmetric_equation(elementary(1))
    last = build_symmetric_equation(elementary(5))
    trivial = build_symmetric_equation([((0, 0, 0, 0, 0), 1)])
    stored = get_entry("a2").equation()
    agree = all(stored.residual(p) == 0 for p in A2_PAIRS)
    found = first.solutions_in_box(bound)
    ok = first.cleared == last.cleared and trivial.is_trivial() and agree and found == A2_PAIRS
    return CheckResult(f"A2 equation and box search to {bound}", ok, f"{first} = 0 has {len(found)} solutions")


# -- assembly -----------------------------------------------------------------


@dataclass(frozen=True)
class AuditConfig:
    depth: int = 8
    rank2_depth: int = RANK2_LAURENT_DEPTH
    tree_bound: int = 1000
    quartic_bound: int = 300
    seeds: Optional[tuple[str, ...]] = None  # None selects every registry seed
    trees: bool = True


def audit_tasks(config: AuditConfig) -> list[tuple[str, Callable[[], CheckResult]]]:
    tasks: list[tuple[str, Callable[[], CheckResult]]] = []

    def add(name: str, fn: Callable[[], CheckResult]) -> None:
        tasks.append((name, fn))

    if config.trees:
        for ks in DEFAULT_CUBIC_SAMPLE:
            spec = FamilySpec.cubic(*ks)
            add(f"oracle {spec}", lambda s=spec: tree_oracle(s, config.tree_bound))
            add(f"repeated {spec}", lambda s=spec: repeated_entries(s, config.tree_bound))
            add(f"coprime {spec}", lambda s=spec: coprimality(s, config.tree_bound))
        for k in DEFAULT_QUARTIC_SAMPLE:
            spec = FamilySpec.quartic(k)
            add(f"oracle {spec}", lambda s=spec: tree_oracle(s, config.quartic_bound))
            add(f"coprime {spec}", lambda s=spec: coprimality(s, config.quartic_bound))
        add("counterexample", counterexample_pair)
        add("squares", lambda: squares(config.tree_bound))
        add("gaps", lambda: gaps(config.tree_bound))

    entries = registry()
    if config.seeds is not None:
        entries = [get_entry(name) for name in config.seeds]
    for e in entries:
        add(f"sign flip {e.name}", lambda e=e: sign_flip(e))
        add(f"involution {e.name}", lambda e=e: involution(e))
        depth = config.depth if e.rank == 3 else config.rank2_depth
        add(f"laurent {e.name}", lambda e=e, d=depth: laurent(e, d))
        if e.group == "rank3":
            add(f"tree {e.name}", lambda e=e: specialization_vs_tree(e))
        if e.rank == 2 and e.equation_id is not None:
            add(f"rank2 {e.name}", lambda e=e: rank2_equation(e))
        if e.reduces is not None:
            add(f"frozen {e.name}", lambda e=e: frozen_reduction(e))
        if e.name == "a2":
            add("a2 orbit", a2_orbit)
            add("a2 equation", a2_equation)
    return tasks


def run_audit(config: AuditConfig = AuditConfig(), threads: Optional[int] = None) -> list[CheckResult]:
    threads = thread_count() if threads is None else threads
    tasks = audit_tasks(config)
    run = lambda task: _guard(task[0], task[1])  # noqa: E731
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(run, tasks))
    return [run(t) for t in tasks]


def render_report(results: Sequence[CheckResult]) -> str:
    failed = sum(not r.ok for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
