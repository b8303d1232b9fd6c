"""Solution trees: generation, descent paths and the brute-force oracle."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Literal, Optional, Sequence, Union

import numpy as np

from vietacluster import cubic, quartic
from vietacluster.cubic import ROOT, CubicParams, NotASolution, Triple, as_triple
from vietacluster.quartic import QuarticParams

THREADS_ENV = "VIETACLUSTER_THREADS"


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    kind: Literal["cubic", "quartic"]
    params: Union[CubicParams, QuarticParams]

    @classmethod
    def cubic(cls, k1: int = 0, k2: int = 0, k3: int = 0) -> FamilySpec:
        return cls("cubic", CubicParams(k1, k2, k3))

    @classmethod
    def quartic(cls, k: int = 0) -> FamilySpec:
        return cls("quartic", QuarticParams(k))

    def __str__(self) -> str:
        return f"{self.kind}({self.params})"

    def residual(self, t: Sequence[int]) -> int:
        if self.kind == "cubic":
            return cubic.cubic_residual(self.params, t)
        return quartic.quartic_residual(self.params, t)

    def is_solution(self, t: Sequence[int]) -> bool:
        return min(t) >= 1 and self.residual(t) == 0

    def jump(self, t: Sequence[int], direction: int) -> Triple:
        if self.kind == "cubic":
            return cubic.vieta(self.params, t, direction)
        return quartic.quartic_jump(self.params, t, direction)

    def children(self, t: Sequence[int]) -> list[tuple[Triple, int]]:
        if self.kind == "cubic":
            return cubic.children(self.params, t)
        return quartic.quartic_children(self.params, t)

    def parent_step(self, t: Sequence[int]) -> tuple[Triple, int]:
        if self.kind == "cubic":
            return cubic.parent_step(self.params, t)
        return quartic.quartic_parent_step(self.params, t)

    def singular_triples(self) -> set[Triple]:
        if self.kind == "cubic":
            return set(cubic.singular_triples(self.params).values())
        return {ROOT, *quartic.singular_triples(self.params)}


@dataclass(frozen=True)
class TreeNode:
    triple: Triple
    depth: int
    parent: Optional[int] = None
    direction: Optional[int] = None  # 0-based jump index from the parent


@dataclass(frozen=True)
class EnumBound:
    max_depth: Optional[int] = None
    max_entry: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.max_depth is None) == (self.max_entry is None):
            raise ValueError("set exactly one of max_depth and max_entry")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be nonnegative")
        if self.max_entry is not None and self.max_entry < 1:
            raise ValueError("max_entry must be positive")

    @classmethod
    def depth(cls, n: int) -> EnumBound:
        return cls(max_depth=n)

    @classmethod
    def entry(cls, n: int) -> EnumBound:
        return cls(max_entry=n)


def _expand(spec: FamilySpec, bound: EnumBound, index: int, node: TreeNode) -> list[TreeNode]:
    if bound.max_depth is not None and node.depth >= bound.max_depth:
        return []
    kids = []
    for child, direction in spec.children(node.triple):
        # entries never shrink below depth 1, so pruning a subtree at the first
        # oversized triple loses nothing
        if bound.max_entry is not None and max(child) > bound.max_entry:
            continue
        kids.append(TreeNode(child, node.depth + 1, index, direction))
    return kids


def generate(spec: FamilySpec, bound: EnumBound, threads: Optional[int] = None) -> list[TreeNode]:
    """Breadth-first listing of the tree within ``bound``.

    Nodes are ordered by depth, then by parent position, then by jump
    direction; the order does not depend on ``threads``.
    """
    threads = thread_count() if threads is None else threads
    nodes = [TreeNode(ROOT, 0)]
    level = [0]
    with ThreadPoolExecutor(max_workers=threads) if threads > 1 else _Inline() as pool:
        while level:
            batches = list(pool.map(lambda i: _expand(spec, bound, i, nodes[i]), level))
            level = []
            for batch in batches:
                for node in batch:
                    level.append(len(nodes))
                    nodes.append(node)
    return nodes


class _Inline:
    def __enter__(self):
        return self

    def __exit__(self, *exc) -> None:
        return None

    def map(self, fn, items):
        return map(fn, items)


def triples(nodes: Iterable[TreeNode]) -> list[Triple]:
    return [n.triple for n in nodes]


def _cubic_scan(p: CubicParams, bound: int) -> set[Triple]:
    # For each (a, b) solve z^2 - (S ab - k2 b - k3 a) z + (a^2 + b^2 + k1 ab) = 0.
    # int64 is exact here: |linear coefficient| < 9.1e8 for S <= 9 and bound <= 1e4.
    if p.total * bound * bound >= 3 * 10**9:
        return _cubic_scan_python(p, bound)
    found: set[Triple] = set()
    bs = np.arange(1, bound + 1, dtype=np.int64)
    for a in range(1, bound + 1):
        lin = p.total * a * bs - p.k2 * bs - p.k3 * a
        const = a * a + bs * bs + p.k1 * a * bs
        disc = lin * lin - 4 * const
        ok = disc >= 0
        if not ok.any():
            continue
        d = np.where(ok, disc, 0)
        r = np.floor(np.sqrt(d.astype(np.float64))).astype(np.int64)
        r = np.where(r * r > d, r - 1, r)
        r = np.where((r + 1) * (r + 1) <= d, r + 1, r)
        square = ok & (r * r == d)
        for sign in (1, -1):
            num = lin + sign * r
            hit = square & (num % 2 == 0) & (num >= 2) & (num <= 2 * bound)
            for idx in np.nonzero(hit)[0]:
                t = Triple(a, int(bs[idx]), int(num[idx]) // 2)
                if cubic.cubic_residual(p, t) == 0:
                    found.add(t)
    return found


def _cubic_scan_python(p: CubicParams, bound: int) -> set[Triple]:
    found: set[Triple] = set()
    for a in range(1, bound + 1):
        for b in range(1, bound + 1):
            lin = p.total * a * b - p.k2 * b - p.k3 * a
            disc = lin * lin - 4 * (a * a + b * b + p.k1 * a * b)
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for num in {lin + r, lin - r}:
                if num % 2 == 0 and 2 <= num <= 2 * bound:
                    t = Triple(a, b, num // 2)
                    if cubic.cubic_residual(p, t) == 0:
                        found.add(t)
    return found


def _quartic_scan(q: QuarticParams, bound: int) -> set[Triple]:
    # For each (b, c) solve x^2 - ((7+k) b^2 c^2 - 2b^2 - 2c^2) x + (b^4 + k b^2 c^2 + c^4) = 0.
    found: set[Triple] = set()
    for b in range(1, bound + 1):
        b2 = b * b
        for c in range(1, bound + 1):
            c2 = c * c
            lin = q.total * b2 * c2 - 2 * b2 - 2 * c2
            const = b2 * b2 + q.k * b2 * c2 + c2 * c2
            # positive roots need lin > 0; the smaller root is at least const / lin
            if lin <= 0 or const > bound * lin:
                continue
            disc = lin * lin - 4 * const
            if disc < 0:
                continue
            r = isqrt(disc)
            if r * r != disc:
                continue
            for num in {lin + r, lin - r}:
                if num % 2 == 0 and 2 <= num <= 2 * bound:
                    t = Triple(num // 2, b, c)
                    if quartic.quartic_residual(q, t) == 0:
                        found.add(t)
    return found


def brute_force_reference(spec: FamilySpec, bound: int) -> set[Triple]:
    """Every triple in [1, bound]^3 checked one by one."""
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = range(1, bound + 1)
    return {Triple(a, b, c) for a in rng for b in rng for c in rng if spec.residual((a, b, c)) == 0}


def brute_force(spec: FamilySpec, bound: int, reference: bool = False) -> set[Triple]:
    """All solutions in [1, bound]^3, found without using the tree.

    The default path fixes two entries and solves the remaining quadratic;
    ``reference=True`` runs the plain triple loop instead.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    if reference:
        return brute_force_reference(spec, bound)
    if spec.kind == "cubic":
        return _cubic_scan(spec.params, bound)
    return _quartic_scan(spec.params, bound)


def membership_path(spec: FamilySpec, t: Sequence[int]) -> list[tuple[Triple, int]]:
    """Descent from ``t`` to the root as ``(triple, jump taken from it)`` steps.

    The root itself is not listed; ``[]`` means ``t`` is the root.
    """
    t = as_triple(t)
    if spec.residual(t):
        raise NotASolution(f"{t} does not solve {spec}")
    path: list[tuple[Triple, int]] = []
    current = t
    while current != ROOT:
        nxt, direction = spec.parent_step(current)
        path.append((current, direction))
        current = nxt
    return path


def verify_uniqueness(spec: FamilySpec, bound: int) -> bool:
    listed = triples(generate(spec, EnumBound.entry(bound)))
    if len(listed) != len(set(listed)):
        return False
    return set(listed) == brute_force(spec, bound)


def max_number_gaps(spec: FamilySpec, solutions: Iterable[Triple]) -> set[int]:
    """Entries that occur in some solution but are the maximum of none.

    A witness for a value ``v`` has maximum ``v``, so a set holding every
    solution with maximum at most ``B`` is complete for all ``v <= B``.
    """
    solutions = list(solutions)
    values = {v for t in solutions for v in t}
    maxima = {max(t) for t in solutions}
    return values - maxima
