"""Diophantine equations that registry seeds are bound to.

Each equation is stored as ``lhs - rhs`` so a residual of zero means a solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from vietacluster.cubic import CubicParams, cubic_residual
from vietacluster.quartic import QuarticParams, quartic_residual


def _rank2_cubic(args: Mapping[str, int], v: Sequence[int]) -> int:
    x, y = v
    k1, k2 = args["k1"], args["k2"]
    return x * x + y * y + k1 * x + k2 * y + 1 - (3 + k1 + k2) * x * y


def _rank2_quartic(args: Mapping[str, int], v: Sequence[int]) -> int:
    x, y = v
    k = args["k"]
    y2 = y * y
    return x * x + y2 * y2 + k * y2 + 2 * x + 1 - (5 + k) * x * y2


def _a2(args: Mapping[str, int], v: Sequence[int]) -> int:
    x, y = v
    return x * x + y * y + 2 * x + 2 * y + x * x * y + x * y * y + 1 - 9 * x * y


def _cubic(args: Mapping[str, int], v: Sequence[int]) -> int:
    return cubic_residual(CubicParams(args["k1"], args["k2"], args["k3"]), v)


def _quartic(args: Mapping[str, int], v: Sequence[int]) -> int:
    return quartic_residual(QuarticParams(args["k"]), v)


@dataclass(frozen=True)
class EquationKind:
    name: str
    arity: int
    params: tuple[str, ...]
    template: str
    residual_fn: Callable[[Mapping[str, int], Sequence[int]], int] = field(repr=False)


EQUATIONS: dict[str, EquationKind] = {
    e.name: e
    for e in (
        EquationKind(
            "cubic", 3, ("k1", "k2", "k3"),
            "x^2 + y^2 + z^2 + {k1}xy + {k2}yz + {k3}zx = ({S})xyz", _cubic,
        ),
        EquationKind(
            "quartic", 3, ("k",),
            "x^2 + y^4 + z^4 + {k}y^2z^2 + 2xy^2 + 2xz^2 = ({S})xy^2z^2", _quartic,
        ),
        EquationKind(
            "rank2_cubic", 2, ("k1", "k2"),
            "x^2 + y^2 + {k1}x + {k2}y + 1 = ({S})xy", _rank2_cubic,
        ),
        EquationKind(
            "rank2_quartic", 2, ("k",),
            "x^2 + y^4 + {k}y^2 + 2x + 1 = ({S})xy^2", _rank2_quartic,
        ),
        EquationKind(
            "a2", 2, (),
            "x^2 + y^2 + 2x + 2y + x^2y + xy^2 + 1 = 9xy", _a2,
        ),
    )
}

_BASE = {"cubic": 3, "quartic": 7, "rank2_cubic": 3, "rank2_quartic": 5, "a2": 0}


@dataclass(frozen=True)
class Equation:
    """An equation kind with its parameters fixed."""

    kind: str
    args: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        spec = EQUATIONS.get(self.kind)
        if spec is None:
            raise KeyError(f"unknown equation {self.kind!r}")
        if tuple(name for name, _ in self.args) != spec.params:
            raise ValueError(f"{self.kind} takes parameters {spec.params}, got {self.args}")
        if any(v < 0 for _, v in self.args):
            raise ValueError("equation parameters must be nonnegative")

    @classmethod
    def of(cls, kind: str, **args: int) -> Equation:
        spec = EQUATIONS[kind]
        return cls(kind, tuple((name, int(args[name])) for name in spec.params))

    @property
    def arity(self) -> int:
        return EQUATIONS[self.kind].arity

    def residual(self, values: Sequence[int]) -> int:
        if len(values) != self.arity:
            raise ValueError(f"{self.kind} takes {self.arity} values, got {len(values)}")
        return EQUATIONS[self.kind].residual_fn(dict(self.args), values)

    def __str__(self) -> str:
        args = dict(self.args)
        return EQUATIONS[self.kind].template.format(S=_BASE[self.kind] + sum(args.values()), **args)
