"""The equation x^2 + y^4 + z^4 + k y^2 z^2 + 2xy^2 + 2xz^2 = (7 + k) x y^2 z^2.

A solution ``(a, b, c)`` corresponds to the solution ``(a, b^2, c^2)`` of the
cubic equation with parameters ``(2, k, 2)``; jumps and tree order are
conjugated through that map.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from vietacluster.cubic import (
    ROOT,
    CubicParams,
    IsRoot,
    NotASolution,
    Triple,
    as_triple,
    cubic_residual,
)


class NotAPerfectSquare(ArithmeticError):
    pass


class InternalNonIntegral(ArithmeticError):
    """A jump that must be integral was not; a theorem has been falsified."""


@dataclass(frozen=True)
class QuarticParams:
    k: int = 0

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"parameter must be nonnegative: k={self.k}")

    @property
    def total(self) -> int:
        return 7 + self.k

    def cubic(self) -> CubicParams:
        return CubicParams(2, self.k, 2)

    def __str__(self) -> str:
        return str(self.k)


def quartic_residual(q: QuarticParams, t: Sequence[int]) -> int:
    a, b, c = t
    b2, c2 = b * b, c * c
    return (
        a * a + b2 * b2 + c2 * c2 + q.k * b2 * c2 + 2 * a * b2 + 2 * a * c2
        - q.total * a * b2 * c2
    )


def is_solution(q: QuarticParams, t: Sequence[int]) -> bool:
    return min(t) >= 1 and quartic_residual(q, t) == 0


def _require_solution(q: QuarticParams, t: Sequence[int]) -> Triple:
    t = as_triple(t)
    if quartic_residual(q, t):
        raise NotASolution(f"{t} does not solve the quartic equation with k={q.k}")
    return t


def _exact_quotient(num: int, den: int) -> int:
    quo, rem = divmod(num, den)
    if rem:
        raise InternalNonIntegral(f"{num}/{den} is not an integer")
    return quo


def quartic_jump_first(q: QuarticParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(q, t)
    b2, c2 = b * b, c * c
    new = q.total * b2 * c2 - a - 2 * b2 - 2 * c2
    assert new * a == b2 * b2 + q.k * b2 * c2 + c2 * c2
    return Triple(new, b, c)


def quartic_jump_second(q: QuarticParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(q, t)
    return Triple(a, _exact_quotient(a + c * c, b), c)


def quartic_jump_third(q: QuarticParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(q, t)
    return Triple(a, b, _exact_quotient(a + b * b, c))


_JUMPS = (quartic_jump_first, quartic_jump_second, quartic_jump_third)


def quartic_jump(q: QuarticParams, t: Sequence[int], direction: int) -> Triple:
    return _JUMPS[direction](q, t)


def singular_triples(q: QuarticParams) -> tuple[Triple, ...]:
    return (Triple(q.k + 2, 1, 1), Triple(1, 2, 1), Triple(1, 1, 2))


def quartic_parent_step(q: QuarticParams, t: Sequence[int]) -> tuple[Triple, int]:
    t = _require_solution(q, t)
    if t == ROOT:
        raise IsRoot("(1,1,1) has no parent")
    if t in singular_triples(q):
        direction = [t.a, t.b, t.c].index(max(t))
        return ROOT, direction
    weights = (t.a, t.b * t.b, t.c * t.c)
    top = max(weights)
    if weights.count(top) != 1:
        raise AssertionError(f"maximum of {weights} is not unique")
    direction = weights.index(top)
    return quartic_jump(q, t, direction), direction


def quartic_parent(q: QuarticParams, t: Sequence[int]) -> Triple:
    return quartic_parent_step(q, t)[0]


def quartic_children(q: QuarticParams, t: Sequence[int]) -> list[tuple[Triple, int]]:
    t = _require_solution(q, t)
    if t == ROOT:
        kids = [(quartic_jump(q, t, d), d) for d in range(3)]
        assert [k for k, _ in kids] == list(singular_triples(q))
        return kids
    _, back = quartic_parent_step(q, t)
    return [(quartic_jump(q, t, d), d) for d in range(3) if d != back]


def exact_sqrt(n: int) -> int:
    if n < 0:
        raise NotAPerfectSquare(f"{n} is negative")
    r = isqrt(n)
    if r * r != n:
        raise NotAPerfectSquare(f"{n} is not a perfect square")
    return r


def to_cubic(q: QuarticParams, t: Sequence[int]) -> Triple:
    a, b, c = _require_solution(q, t)
    return Triple(a, b * b, c * c)


def from_cubic(q: QuarticParams, t: Sequence[int]) -> Triple:
    t = as_triple(t)
    if cubic_residual(q.cubic(), t):
        raise NotASolution(f"{t} does not solve the cubic equation with parameters ({q.cubic()})")
    return Triple(t.a, exact_sqrt(t.b), exact_sqrt(t.c))
