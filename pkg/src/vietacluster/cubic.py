"""The equation x^2 + y^2 + z^2 + k1 xy + k2 yz + k3 zx = (3 + k1 + k2 + k3) xyz.

Triples are positional: entry ``i`` is replaced by the ``i``-th Vieta jump
(``i`` = 0, 1, 2 for the first, second and third jump).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple, Sequence

DIRECTION_NAMES = ("first", "second", "third")


class Triple(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


ROOT = Triple(1, 1, 1)


class NotASolution(ValueError):
    pass


class IsSingular(ValueError):
    pass


class IsRoot(ValueError):
    pass


def as_triple(values: Sequence[int]) -> Triple:
    if len(values) != 3:
        raise ValueError(f"expected three entries, got {len(values)}")
    t = Triple(*(int(v) for v in values))
    if min(t) < 1:
        raise ValueError(f"entries must be positive integers: {t}")
    return t


@dataclass(frozen=True)
class CubicParams:
    k1: int = 0
    k2: int = 0
    k3: int = 0

    def __post_init__(self) -> None:
        if min(self.k1, self.k2, self.k3) < 0:
            raise ValueError(f"parameters must be nonnegative: {self}")

    @property
    def total(self) -> int:
        """The coefficient 3 + k1 + k2 + k3 of xyz."""
        return 3 + self.k1 + self.k2 + self.k3

    def __str__(self) -> str:
        return f"{self.k1},{self.k2},{self.k3}"


MARKOV = CubicParams(0, 0, 0)


def cubic_residual(p: CubicParams, t: Sequence[int]) -> int:
    """Left side minus right side; zero exactly on solutions."""
    a, b, c = t
    return (
        a * a + b * b + c * c
        + p.k1 * a * b + p.k2 * b * c + p.k3 * c * a
        - p.total * a * b * c
    )


def is_solution(p: CubicParams, t: Sequence[int]) -> bool:
    return min(t) >= 1 and cubic_residual(p, t) == 0


def _require_solution(p: CubicParams, t: Sequence[int]) -> Triple:
    t = as_triple(t)
    if cubic_residual(p, t):
        raise NotASolution(f"{t} does not solve the ({p}) equation")
    return t


def vieta_first(p: CubicParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(p, t)
    new = p.total * b * c - a - p.k1 * b - p.k3 * c
    assert new * a == b * b + p.k2 * b * c + c * c
    return Triple(new, b, c)


def vieta_second(p: CubicParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(p, t)
    new = p.total * a * c - b - p.k1 * a - p.k2 * c
    assert new * b == a * a + p.k3 * a * c + c * c
    return Triple(a, new, c)


def vieta_third(p: CubicParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(p, t)
    new = p.total * a * b - c - p.k2 * b - p.k3 * a
    assert new * c == a * a + p.k1 * a * b + b * b
    return Triple(a, b, new)


_JUMPS = (vieta_first, vieta_second, vieta_third)


def vieta(p: CubicParams, t: Sequence[int], direction: int) -> Triple:
    return _JUMPS[direction](p, t)


class SingularKind(enum.Enum):
    NOT_SINGULAR = "not-singular"
    ORIGIN = "origin"
    FIRST_AXIS = "first-axis"
    SECOND_AXIS = "second-axis"
    THIRD_AXIS = "third-axis"


def singular_triples(p: CubicParams) -> dict[SingularKind, Triple]:
    return {
        SingularKind.ORIGIN: ROOT,
        SingularKind.FIRST_AXIS: Triple(p.k2 + 2, 1, 1),
        SingularKind.SECOND_AXIS: Triple(1, p.k3 + 2, 1),
        SingularKind.THIRD_AXIS: Triple(1, 1, p.k1 + 2),
    }


def classify_singular(p: CubicParams, t: Sequence[int]) -> SingularKind:
    t = _require_solution(p, t)
    for kind, triple in singular_triples(p).items():
        if t == triple:
            return kind
    if len(set(t)) < 3:
        raise AssertionError(f"solution {t} repeats an entry but is not one of the four singular triples")
    return SingularKind.NOT_SINGULAR


def _argmax_distinct(values: Sequence[int]) -> int:
    top = max(values)
    if sum(1 for v in values if v == top) != 1:
        raise AssertionError(f"maximum of {tuple(values)} is not unique")
    return values.index(top)


def descend(p: CubicParams, t: Sequence[int]) -> tuple[Triple, int]:
    """Jump in the direction of the maximal entry of a nonsingular solution."""
    t = _require_solution(p, t)
    if classify_singular(p, t) is not SingularKind.NOT_SINGULAR:
        raise IsSingular(f"{t} is singular")
    direction = _argmax_distinct(t)
    lower = vieta(p, t, direction)
    assert max(lower) < max(t)
    return lower, direction


def parent_step(p: CubicParams, t: Sequence[int]) -> tuple[Triple, int]:
    """Parent in the solution tree together with the jump that reaches it."""
    t = _require_solution(p, t)
    kind = classify_singular(p, t)
    if kind is SingularKind.ORIGIN:
        raise IsRoot("(1,1,1) has no parent")
    if kind is not SingularKind.NOT_SINGULAR:
        direction = t.index(max(t))
        assert vieta(p, t, direction) == ROOT
        return ROOT, direction
    return descend(p, t)


def parent(p: CubicParams, t: Sequence[int]) -> Triple:
    return parent_step(p, t)[0]


def children(p: CubicParams, t: Sequence[int]) -> list[tuple[Triple, int]]:
    t = _require_solution(p, t)
    if t == ROOT:
        return [(vieta(p, t, d), d) for d in range(3)]
    _, back = parent_step(p, t)
    return [(vieta(p, t, d), d) for d in range(3) if d != back]


def pairwise_coprime(t: Sequence[int]) -> bool:
    a, b, c = t
    return gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(a, c) == 1


def square_lift(t: Sequence[int]) -> Triple:
    """Send a Markov triple to the solution (a^2, b^2, c^2) of the k = (2,2,2) equation."""
    a, b, c = _require_solution(MARKOV, t)
    lifted = Triple(a * a, b * b, c * c)
    assert cubic_residual(CubicParams(2, 2, 2), lifted) == 0
    return lifted
