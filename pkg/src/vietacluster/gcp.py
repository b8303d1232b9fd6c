"""Generalized cluster patterns without coefficients.

A labeled seed is a cluster of Laurent polynomials in the initial variables,
a skew-symmetrizable exchange matrix ``B`` and one exchange polynomial per
direction; the degree matrix ``D`` is read off the exchange polynomials.
Directions are 0-based in this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from vietacluster.laurent import ExchangePoly, LaurentPoly

Matrix = tuple[tuple[int, ...], ...]

BD_MARKOV_CLASS: Matrix = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))
BD_LAMPE_CLASS: Matrix = ((0, 1, -1), (-4, 0, 2), (4, -2, 0))


class NonIntegerSpecialization(ArithmeticError):
    """A specialized cluster variable was not a positive integer."""


class NonTermination(RuntimeError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(v) for v in row) for row in rows)
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("exchange matrix must be square and nonempty")
    return m


def negate(b: Matrix) -> Matrix:
    return tuple(tuple(-v for v in row) for row in b)


def is_skew_symmetrized_by(b: Matrix, s: Sequence[int]) -> bool:
    n = len(b)
    return all(s[i] * b[i][j] == -s[j] * b[j][i] for i in range(n) for j in range(n))


def find_skew_symmetrizer(
    b: Matrix, hint: Optional[Sequence[int]] = None, max_entry: int = 8
) -> Optional[tuple[int, ...]]:
    """A positive diagonal S with S B skew-symmetric, or None if the search fails."""
    n = len(b)
    if any(b[i][i] for i in range(n)):
        return None
    if hint is not None and is_skew_symmetrized_by(b, hint):
        return tuple(hint)
    for s in itertools.product(range(1, max_entry + 1), repeat=n):
        if is_skew_symmetrized_by(b, s):
            return s
    return None


def mat_mul_diag(b: Matrix, d: Sequence[int]) -> Matrix:
    """B D for diagonal D."""
    return tuple(tuple(v * d[j] for j, v in enumerate(row)) for row in b)


def mutate_matrix(b: Matrix, d: Sequence[int], k: int) -> Matrix:
    n = len(b)
    if not 0 <= k < n:
        raise IndexError(f"direction {k} out of range for rank {n}")
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                bik, bkj = b[i][k], b[k][j]
                row.append(b[i][j] + d[k] * (max(bik, 0) * bkj + bik * max(-bkj, 0)))
        out.append(tuple(row))
    return tuple(out)


def mutate_zpolys(zs: Sequence[ExchangePoly], k: int) -> tuple[ExchangePoly, ...]:
    return tuple(z.reciprocal() if j == k else z for j, z in enumerate(zs))


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    B: Matrix
    Z: tuple[ExchangePoly, ...]
    symmetrizer: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "B", as_matrix(self.B))
        object.__setattr__(self, "cluster", tuple(self.cluster))
        object.__setattr__(self, "Z", tuple(self.Z))
        n = len(self.B)
        if len(self.cluster) != n or len(self.Z) != n:
            raise ValueError("cluster, exchange matrix and exchange polynomials disagree on rank")
        if any(x.rank != n or x.is_zero() for x in self.cluster):
            raise ValueError("cluster variables must be nonzero Laurent polynomials of the seed rank")
        if self.symmetrizer is None:
            object.__setattr__(self, "symmetrizer", find_skew_symmetrizer(self.B, self.D))
        elif not is_skew_symmetrized_by(self.B, self.symmetrizer):
            raise ValueError(f"{self.symmetrizer} does not skew-symmetrize {self.B}")

    @classmethod
    def initial(cls, b: Sequence[Sequence[int]], zs: Sequence[ExchangePoly]) -> Seed:
        b = as_matrix(b)
        return cls(LaurentPoly.gens(len(b)), b, tuple(zs))

    @property
    def rank(self) -> int:
        return len(self.B)

    @property
    def D(self) -> tuple[int, ...]:
        return tuple(z.degree for z in self.Z)

    def mutate(self, k: int) -> Seed:
        return mutate_seed(self, k)

    def specialize(self, point: Optional[Sequence[int]] = None) -> tuple[Fraction, ...]:
        point = point or (1,) * self.rank
        return tuple(x.evaluate(point) for x in self.cluster)


def mutate_cluster(seed: Seed, k: int) -> tuple[LaurentPoly, ...]:
    n = seed.rank
    if not 0 <= k < n:
        raise IndexError(f"direction {k} out of range for rank {n}")
    # With u = P / Q split by the sign of column k, the numerator
    # (prod x_i^[-b_ik]_+)^d_k * Z_k(u) equals Q^d_k Z_k(P / Q), a polynomial in P and Q.
    one = LaurentPoly.one(n)
    pos, neg = one, one
    for i in range(n):
        bik = seed.B[i][k]
        if bik > 0:
            pos = pos * seed.cluster[i] ** bik
        elif bik < 0:
            neg = neg * seed.cluster[i] ** (-bik)
    numerator = seed.Z[k].homogenized(pos, neg)
    new = numerator.exact_div(seed.cluster[k])
    return tuple(new if j == k else x for j, x in enumerate(seed.cluster))


def mutate_seed(seed: Seed, k: int) -> Seed:
    b = mutate_matrix(seed.B, seed.D, k)
    s = seed.symmetrizer
    if s is not None and not is_skew_symmetrized_by(b, s):
        raise AssertionError(f"mutation in direction {k} lost the skew-symmetrizer {s}")
    return Seed(mutate_cluster(seed, k), b, mutate_zpolys(seed.Z, k), symmetrizer=s)


@dataclass(frozen=True)
class PatternWalk:
    seed: Seed
    directions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "directions", tuple(self.directions))
        for i, k in enumerate(self.directions):
            if not 0 <= k < self.seed.rank:
                raise ValueError(f"direction {k} out of range for rank {self.seed.rank}")
            if i and self.directions[i - 1] == k:
                raise ValueError(f"walk repeats direction {k} at step {i}")

    def seeds(self) -> list[Seed]:
        out = [self.seed]
        for k in self.directions:
            out.append(out[-1].mutate(k))
        return out


def walks(rank: int, depth: int) -> Iterator[tuple[int, ...]]:
    """All walks of length <= depth without immediate repeats, in lexicographic order."""

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) == depth:
            return
        for k in range(rank):
            if not prefix or prefix[-1] != k:
                yield from extend(prefix + (k,))

    yield from extend(())


def explore(seed: Seed, depth: int) -> Iterator[tuple[tuple[int, ...], Seed]]:
    """Every seed reachable by a walk of length <= depth, in lexicographic walk order.

    Each mutation is computed once and shared by all walks extending it.
    """

    def extend(prefix: tuple[int, ...], current: Seed) -> Iterator[tuple[tuple[int, ...], Seed]]:
        yield prefix, current
        if len(prefix) == depth:
            return
        for k in range(current.rank):
            if not prefix or prefix[-1] != k:
                yield from extend(prefix + (k,), current.mutate(k))

    yield from extend((), seed)


def positive_integer_values(seed: Seed, point: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    values = seed.specialize(point)
    for v in values:
        if v.denominator != 1 or v <= 0:
            raise NonIntegerSpecialization(f"specialized value {v} is not a positive integer")
    return tuple(int(v) for v in values)


def specialize_walk(
    seed: Seed, walk: Sequence[int], point: Optional[Sequence[int]] = None
) -> list[tuple[int, ...]]:
    """Specialized clusters along a walk, starting with the initial cluster."""
    return [positive_integer_values(s, point) for s in PatternWalk(seed, tuple(walk)).seeds()]


@dataclass(frozen=True)
class SignFlipReport:
    negated: tuple[bool, ...]
    z_invariant: tuple[bool, ...]
    bd: Matrix
    bd_class: str

    @property
    def holds(self) -> bool:
        return all(self.negated) and all(self.z_invariant)


def classify_bd(bd: Matrix) -> str:
    if bd == BD_MARKOV_CLASS:
        return "markov"
    if bd == BD_LAMPE_CLASS:
        return "lampe"
    return "other"


def check_sign_flip(seed: Seed) -> SignFlipReport:
    d = seed.D
    negated = tuple(mutate_matrix(seed.B, d, k) == negate(seed.B) for k in range(seed.rank))
    z_fixed = tuple(mutate_zpolys(seed.Z, k) == seed.Z for k in range(seed.rank))
    bd = mat_mul_diag(seed.B, d)
    return SignFlipReport(negated, z_fixed, bd, classify_bd(bd))


def a2_seed() -> Seed:
    return Seed.initial(((0, 1), (-1, 0)), (ExchangePoly.of(1, 1), ExchangePoly.of(1, 1)))


def enumerate_a2(seed: Optional[Seed] = None, cap: int = 100) -> list[tuple[LaurentPoly, ...]]:
    """Clusters met by alternating mutations, second direction first, until the labeled seed recurs."""
    start = seed or a2_seed()
    if start.rank != 2:
        raise ValueError("the alternating orbit needs a rank-2 seed")
    orbit = [start.cluster]
    current = start
    for step in range(cap):
        current = current.mutate(1 if step % 2 == 0 else 0)
        if current == start:
            return orbit
        orbit.append(current.cluster)
    raise NonTermination(f"labeled seed did not recur within {cap} mutations")


def distinct_variables(clusters: Sequence[Sequence[LaurentPoly]]) -> list[LaurentPoly]:
    seen: dict[LaurentPoly, None] = {}
    for cluster in clusters:
        for x in cluster:
            seen.setdefault(x, None)
    return list(seen)
