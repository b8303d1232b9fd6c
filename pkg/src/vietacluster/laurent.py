"""Exact sparse Laurent polynomials over the integers, and exchange polynomials.

A nonzero Laurent polynomial is stored as ``x^shift * P`` where ``P`` is an
ordinary integer polynomial divisible by no variable.  That factorisation is
unique, so two equal values always have equal ``(shift, P)`` and compare
structurally.  ``P`` lives in FLINT's ``fmpz_mpoly``; the pure-Python
:func:`reference_divide` implements the same exact division independently and
is used to cross-check it.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

import flint
from flint.utils.flint_exceptions import DomainError

Exponents = tuple[int, ...]
Rational = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """No Laurent polynomial quotient exists."""


class RankMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def _context(rank: int) -> flint.fmpz_mpoly_ctx:
    return flint.fmpz_mpoly_ctx.get(("x", rank), "deglex")


def graded_lex_key(exps: Exponents) -> tuple[int, Exponents]:
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable element of Z[x1^±1, ..., xn^±1]."""

    __slots__ = ("_rank", "_shift", "_poly", "_hash")

    def __init__(self, terms: Mapping[Exponents, int], rank: int):
        if rank < 1:
            raise ValueError("rank must be positive")
        clean: dict[Exponents, int] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise RankMismatch(f"monomial {exps} does not have rank {rank}")
            coeff = int(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
        clean = {e: c for e, c in clean.items() if c}
        ctx = _context(rank)
        if not clean:
            shift = (0,) * rank
            poly = ctx.from_dict({})
        else:
            shift = tuple(min(e[i] for e in clean) for i in range(rank))
            poly = ctx.from_dict(
                {tuple(a - s for a, s in zip(e, shift)): c for e, c in clean.items()}
            )
        self._rank = rank
        self._shift = shift
        self._poly = poly
        self._hash: int | None = None

    @classmethod
    def _make(cls, rank: int, shift: Exponents, poly) -> LaurentPoly:
        # Caller guarantees poly has no variable factor (or is zero).
        obj = object.__new__(cls)
        obj._rank = rank
        obj._shift = shift if not poly.is_zero() else (0,) * rank
        obj._poly = poly
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, rank: int, shift: Exponents, poly) -> LaurentPoly:
        if poly.is_zero():
            return cls._make(rank, (0,) * rank, poly)
        common = poly.term_content().monoms()[0]
        if any(common):
            poly = poly / _context(rank).term(exp_vec=common)
            shift = tuple(s + c for s, c in zip(shift, common))
        return cls._make(rank, shift, poly)

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: int, rank: int) -> LaurentPoly:
        return cls({(0,) * rank: value}, rank)

    @classmethod
    def zero(cls, rank: int) -> LaurentPoly:
        return cls({}, rank)

    @classmethod
    def one(cls, rank: int) -> LaurentPoly:
        return cls.constant(1, rank)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> LaurentPoly:
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def variable(cls, index: int, rank: int) -> LaurentPoly:
        """The generator ``x_{index+1}`` (0-based index)."""
        if not 0 <= index < rank:
            raise IndexError(f"variable index {index} out of range for rank {rank}")
        return cls.monomial(tuple(1 if i == index else 0 for i in range(rank)))

    @classmethod
    def gens(cls, rank: int) -> tuple[LaurentPoly, ...]:
        return tuple(cls.variable(i, rank) for i in range(rank))

    # -- inspection ---------------------------------------------------------

    @property
    def rank(self) -> int:
        return self._rank

    def terms(self) -> dict[Exponents, int]:
        shift = self._shift
        return {
            tuple(int(a) + s for a, s in zip(e, shift)): int(c)
            for e, c in self._poly.to_dict().items()
        }

    def __len__(self) -> int:
        return len(self._poly)

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def is_monomial(self) -> bool:
        return len(self._poly) == 1

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return self.is_zero() or min(self._shift) >= 0

    def coefficient_sum(self) -> int:
        """Value at the all-ones point."""
        return int(sum(self._poly.coeffs(), flint.fmpz(0)))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (
            self._rank == other._rank
            and self._shift == other._shift
            and self._poly == other._poly
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._rank, frozenset(self.terms().items())))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other._rank != self._rank:
                raise RankMismatch(f"rank {self._rank} vs rank {other._rank}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._rank)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        ctx = _context(self._rank)
        low = tuple(min(a, b) for a, b in zip(self._shift, other._shift))
        left = self._poly * ctx.term(exp_vec=tuple(a - m for a, m in zip(self._shift, low)))
        right = other._poly * ctx.term(exp_vec=tuple(b - m for b, m in zip(other._shift, low)))
        return LaurentPoly._normalized(self._rank, low, left + right)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._make(self._rank, self._shift, -self._poly)

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(self._rank)
        # variables are prime, so the product again has no variable factor
        shift = tuple(a + b for a, b in zip(self._shift, other._shift))
        return LaurentPoly._make(self._rank, shift, self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n >= 0:
            if n == 0:
                return LaurentPoly.one(self._rank)
            return LaurentPoly._make(
                self._rank, tuple(s * n for s in self._shift), self._poly**n
            )
        return LaurentPoly.one(self._rank).exact_div(self ** (-n))

    def exact_div(self, other) -> LaurentPoly:
        """Return ``r`` with ``r * other == self``; raise NotDivisible if none exists."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return self
        try:
            quotient = self._poly / other._poly
        except DomainError:
            raise NotDivisible(f"{self} is not divisible by {other}") from None
        shift = tuple(a - b for a, b in zip(self._shift, other._shift))
        return LaurentPoly._make(self._rank, shift, quotient)

    __truediv__ = exact_div

    def evaluate(self, point: Sequence[Rational]) -> Fraction:
        """Exact value at a point with strictly positive rational coordinates."""
        if len(point) != self._rank:
            raise RankMismatch(f"point has {len(point)} coordinates, rank is {self._rank}")
        values = [Fraction(v) for v in point]
        if any(v <= 0 for v in values):
            raise ValueError("evaluation point must be strictly positive")
        scale = Fraction(1)
        for v, s in zip(values, self._shift):
            scale *= v**s
        if all(v.denominator == 1 for v in values):
            return scale * int(self._poly(*(int(v) for v in values)))
        total = Fraction(0)
        for exps, coeff in self._poly.to_dict().items():
            term = Fraction(int(coeff))
            for v, e in zip(values, exps):
                term *= v ** int(e)
            total += term
        return scale * total

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms().items(), key=lambda t: graded_lex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        num_shift = tuple(max(s, 0) for s in self._shift)
        den = tuple(max(-s, 0) for s in self._shift)
        numerator = [
            (tuple(a + s for a, s in zip(e, num_shift)), int(c))
            for e, c in self._poly.to_dict().items()
        ]
        numerator.sort(key=lambda t: graded_lex_key(t[0]), reverse=True)
        text = _render_sum(numerator)
        if not any(den):
            return text
        den_text = _render_monomial(den)
        if len(numerator) > 1:
            text = f"({text})"
        if sum(1 for d in den if d) > 1:
            den_text = f"({den_text})"
        return f"{text}/{den_text}"

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, rank={self._rank})"


def _render_monomial(exps: Exponents) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def _render_sum(terms: list[tuple[Exponents, int]]) -> str:
    out = []
    for idx, (exps, coeff) in enumerate(terms):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        if any(exps):
            body = _render_monomial(exps) if mag == 1 else f"{mag}*{_render_monomial(exps)}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p.exact_div(q)


def lp_eval(p: LaurentPoly, point: Sequence[Rational]) -> Fraction:
    return p.evaluate(point)


def reference_divide(
    dividend: Mapping[Exponents, int], divisor: Mapping[Exponents, int]
) -> dict[Exponents, int]:
    """Exact Laurent division by repeated leading-term cancellation.

    Both operands are first translated into the polynomial ring by their
    componentwise minimum exponents; the divisor's leading term under
    graded-lex order must then divide the leading term of every successive
    remainder.  Pure Python and slow; kept as an independent check on
    :meth:`LaurentPoly.exact_div`.
    """
    dividend = {e: c for e, c in dividend.items() if c}
    divisor = {e: c for e, c in divisor.items() if c}
    if not divisor:
        raise ZeroDivisionError("division by zero")
    if not dividend:
        return {}
    rank = len(next(iter(divisor)))
    low_p = tuple(min(e[i] for e in dividend) for i in range(rank))
    low_q = tuple(min(e[i] for e in divisor) for i in range(rank))
    rem = {tuple(a - m for a, m in zip(e, low_p)): c for e, c in dividend.items()}
    den = {tuple(a - m for a, m in zip(e, low_q)): c for e, c in divisor.items()}
    lead = max(den, key=graded_lex_key)
    lead_coeff = den[lead]

    heap = [(-sum(e), tuple(-a for a in e)) for e in rem]
    heapq.heapify(heap)
    quotient: dict[Exponents, int] = {}
    while rem:
        _, neg = heapq.heappop(heap)
        exps = tuple(-a for a in neg)
        coeff = rem.get(exps)
        if not coeff:
            continue
        step = tuple(a - b for a, b in zip(exps, lead))
        if min(step) < 0 or coeff % lead_coeff:
            raise NotDivisible("nonzero remainder")
        factor = coeff // lead_coeff
        quotient[step] = factor
        for e, c in den.items():
            target = tuple(a + b for a, b in zip(step, e))
            value = rem.get(target, 0) - factor * c
            if value:
                if target not in rem:
                    heapq.heappush(heap, (-sum(target), tuple(-a for a in target)))
                rem[target] = value
            else:
                rem.pop(target, None)
    offset = tuple(a - b for a, b in zip(low_p, low_q))
    return {tuple(a + o for a, o in zip(e, offset)): c for e, c in quotient.items()}


@dataclass(frozen=True)
class ExchangePoly:
    """Z(u) = z_0 + z_1 u + ... + z_d u^d with z_0 = z_d = 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise ValueError("exchange polynomial must have degree at least 1")
        if coeffs[0] != 1 or coeffs[-1] != 1:
            raise ValueError(f"end coefficients must be 1, got {list(coeffs)}")
        if any(c < 0 for c in coeffs):
            raise ValueError(f"coefficients must be nonnegative, got {list(coeffs)}")

    @classmethod
    def of(cls, *coeffs: int) -> ExchangePoly:
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reciprocal(self) -> ExchangePoly:
        """u^d Z(1/u)."""
        return ExchangePoly(self.coeffs[::-1])

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, m: LaurentPoly) -> LaurentPoly:
        result = LaurentPoly.constant(self.coeffs[-1], m.rank)
        for c in reversed(self.coeffs[:-1]):
            result = result * m + c
        return result

    def homogenized(self, p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
        """q^d Z(p / q) = sum_j z_j p^j q^(d-j)."""
        result = LaurentPoly.constant(self.coeffs[-1], p.rank)
        q_pow = LaurentPoly.one(p.rank)
        for c in reversed(self.coeffs[:-1]):
            q_pow = q_pow * q
            result = result * p
            if c:
                result = result + q_pow * c
        return result

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("u" if j == 1 else f"u^{j}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def ep_eval(z: ExchangePoly, m: LaurentPoly) -> LaurentPoly:
    return z(m)


def ep_reciprocal(z: ExchangePoly) -> ExchangePoly:
    return z.reciprocal()


def lp_from_terms(terms: Iterable[tuple[Sequence[int], int]], rank: int) -> LaurentPoly:
    acc: dict[Exponents, int] = {}
    for exps, c in terms:
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + c
    return LaurentPoly(acc, rank)
