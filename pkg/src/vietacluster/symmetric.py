"""Two-variable relations obtained from symmetric polynomials in five variables.

The five cluster variables of the A2 pattern are, in the initial variables
``x, y``: ``x, y, (y+1)/x, (x+y+1)/(xy), (x+1)/y``.  Any symmetric polynomial
``f`` takes the same value on every cluster, so ``f(vars) - f(vars)|_{x=y=1}``
vanishes at every specialized cluster.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from vietacluster.laurent import LaurentPoly, graded_lex_key

Exponents = tuple[int, ...]
SymmetricInput = Iterable[tuple[Sequence[int], int]]


class NotSymmetric(ValueError):
    pass


def a2_variables() -> tuple[LaurentPoly, ...]:
    x, y = LaurentPoly.gens(2)
    return (x, y, (y + 1).exact_div(x), (x + y + 1).exact_div(x * y), (x + 1).exact_div(y))


def _collect(f: SymmetricInput) -> dict[Exponents, int]:
    out: dict[Exponents, int] = {}
    for exps, coeff in f:
        exps = tuple(int(e) for e in exps)
        if len(exps) != 5 or min(exps) < 0:
            raise ValueError(f"expected five nonnegative exponents, got {exps}")
        out[exps] = out.get(exps, 0) + int(coeff)
    return {e: c for e, c in out.items() if c}


def check_symmetric(terms: dict[Exponents, int]) -> None:
    # adjacent transpositions generate the whole symmetric group
    for i in range(4):
        swapped = {}
        for e, c in terms.items():
            s = list(e)
            s[i], s[i + 1] = s[i + 1], s[i]
            swapped[tuple(s)] = c
        if swapped != terms:
            raise NotSymmetric(f"not invariant under swapping variables {i + 1} and {i + 2}")


def elementary(j: int) -> list[tuple[Exponents, int]]:
    """The j-th elementary symmetric polynomial in five variables."""
    if not 0 <= j <= 5:
        raise ValueError("degree must be between 0 and 5")
    return [(tuple(int(i in idx) for i in range(5)), 1) for idx in itertools.combinations(range(5), j)]


@dataclass(frozen=True)
class SymmetricRelation:
    """``relation`` is zero exactly where the cleared polynomial is (for x, y > 0)."""

    relation: LaurentPoly
    cleared: tuple[tuple[Exponents, int], ...]

    def cleared_terms(self) -> dict[Exponents, int]:
        return dict(self.cleared)

    def residual(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        if x <= 0 or y <= 0:
            raise ValueError("the relation is only evaluated at positive points")
        return sum((c * x ** e[0] * y ** e[1] for e, c in self.cleared), Fraction(0))

    def is_trivial(self) -> bool:
        return not self.cleared

    def solutions_in_box(self, bound: int) -> list[tuple[int, int]]:
        """All positive integer zeros of the cleared form with both entries at most ``bound``."""
        if bound < 1:
            raise ValueError("bound must be positive")
        if self.is_trivial():
            return [(a, b) for a in range(1, bound + 1) for b in range(1, bound + 1)]
        worst = sum(abs(c) * bound ** (e[0] + e[1]) for e, c in self.cleared)
        dtype = np.int64 if worst < 2**62 else object
        xs = np.arange(1, bound + 1, dtype=np.int64).astype(dtype)[:, None]
        ys = np.arange(1, bound + 1, dtype=np.int64).astype(dtype)[None, :]
        total = np.zeros((bound, bound), dtype=dtype)
        for e, c in self.cleared:
            total = total + c * xs ** e[0] * ys ** e[1]
        hits = np.argwhere(total == 0)
        return sorted((int(i) + 1, int(j) + 1) for i, j in hits)

    def __str__(self) -> str:
        if self.is_trivial():
            return "0"
        return str(LaurentPoly(dict(self.cleared), 2))


def build_symmetric_equation(f: SymmetricInput) -> SymmetricRelation:
    """The relation on ``(x, y)`` induced by a symmetric polynomial ``f``.

    ``f`` is a list of (exponent vector of length 5, integer coefficient)
    pairs.  The cleared form has no negative exponents, no common variable or
    integer factor, and a positive leading coefficient in graded-lex order.
    """
    terms = _collect(f)
    check_symmetric(terms)
    gens = a2_variables()
    ones = (1, 1)
    total = LaurentPoly.zero(2)
    for exps, coeff in terms.items():
        mono = LaurentPoly.one(2)
        for g, e in zip(gens, exps):
            if e:
                mono = mono * g ** e
        total = total + mono * coeff
    base = total.evaluate(ones)
    assert base.denominator == 1
    relation = total - int(base)
    raw = relation.terms()
    if not raw:
        return SymmetricRelation(relation, ())
    low = [min(e[i] for e in raw) for i in range(2)]
    shifted = {(e[0] - low[0], e[1] - low[1]): c for e, c in raw.items()}
    g = 0
    for c in shifted.values():
        g = gcd(g, c)
    lead = max(shifted, key=graded_lex_key)
    if shifted[lead] < 0:
        g = -g
    cleared = sorted(((e, c // g) for e, c in shifted.items()), key=lambda t: graded_lex_key(t[0]), reverse=True)
    return SymmetricRelation(relation, tuple(cleared))
