"""
Truncated Laurent series over F_q with absolute precision caps.

A :class:`TruncatedSeries` knows its coefficients at exponents strictly below
its ``cap``; everything at or above the cap is unknown.  Laurent polynomials
that are known exactly carry ``cap = INF``, so the large exact part of the
library never loses precision, and only genuine divisions (inverses of
non-monomials) introduce finite caps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import InsufficientPrecision
from .fq import FiniteField, FqElem

INF = math.inf
Cap = Union[int, float]


@dataclass(frozen=True, order=False)
class Valuation:
    """Truncation-honest valuation.

    ``Exact(v)``: the term of valuation ``v`` is provably nonzero.
    ``AtLeast(c)``: everything known vanishes and knowledge stops at ``c``;
    ``AtLeast(INF)`` is a provable zero.
    """

    value: Cap
    exact: bool

    @classmethod
    def Exact(cls, v: int) -> Valuation:
        return cls(int(v), True)

    @classmethod
    def AtLeast(cls, c: Cap) -> Valuation:
        return cls(c if c == INF else int(c), False)

    @property
    def is_zero(self) -> bool:
        return not self.exact and self.value == INF

    def __add__(self, k: Cap) -> Valuation:
        return Valuation(self.value + k, self.exact)

    __radd__ = __add__

    def __sub__(self, k: Cap) -> Valuation:
        return Valuation(self.value - k, self.exact)

    def __repr__(self):
        if self.exact:
            return f"Exact({self.value})"
        return f"AtLeast({'inf' if self.value == INF else self.value})"

    def require_exact(self, what: str = "valuation") -> int:
        if not self.exact:
            raise InsufficientPrecision(f"{what} hidden by truncation: {self!r}")
        return self.value


def min_valuation(vals) -> Valuation:
    """Valuation of a sum of terms with pairwise distinct exact valuations.

    The minimum is exact only if it beats every lower bound."""
    best_exact = INF
    best_bound = INF
    for v in vals:
        if v.exact:
            best_exact = min(best_exact, v.value)
        else:
            best_bound = min(best_bound, v.value)
    if best_exact < best_bound:
        return Valuation.Exact(best_exact)
    return Valuation.AtLeast(best_bound)


def _trim(coeffs: np.ndarray):
    nz = np.flatnonzero(coeffs)
    if len(nz) == 0:
        return 0, coeffs[:0]
    return int(nz[0]), coeffs[nz[0] : nz[-1] + 1]


class TruncatedSeries:
    """Element of F_q((t)) known modulo t^cap.

    Immutable.  ``coeffs[k]`` is the code of the coefficient of
    ``t^(start + k)``; the first and last stored coefficients are nonzero.
    """

    __slots__ = ("field", "start", "coeffs", "cap")

    def __init__(self, field: FiniteField, coeffs=(), start: int = 0, cap: Cap = INF):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if len(arr) and (arr.min() < 0 or arr.max() >= field.q):
            arr = np.array([field.coerce(int(c)) for c in arr], dtype=np.int64)
        if cap != INF:
            cap = int(cap)
            keep = max(0, cap - start)
            arr = arr[:keep]
        off, arr = _trim(arr)
        self.field = field
        self.start = start + off if len(arr) else 0
        self.coeffs = arr
        self.cap = cap
        self.coeffs.setflags(write=False)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field, cap: Cap = INF) -> TruncatedSeries:
        return cls(field, (), 0, cap)

    @classmethod
    def one(cls, field) -> TruncatedSeries:
        return cls(field, (1,), 0)

    @classmethod
    def monomial(cls, field, k: int, c=1, cap: Cap = INF) -> TruncatedSeries:
        return cls(field, (field.coerce(c),), k, cap)

    @classmethod
    def constant(cls, field, c) -> TruncatedSeries:
        return cls(field, (field.coerce(c),), 0)

    @classmethod
    def from_dict(cls, field, terms: dict, cap: Cap = INF) -> TruncatedSeries:
        """``{exponent: coefficient}`` to a series."""
        if not terms:
            return cls.zero(field, cap)
        lo, hi = min(terms), max(terms)
        arr = np.zeros(hi - lo + 1, dtype=np.int64)
        for k, c in terms.items():
            arr[k - lo] = field.coerce(c)
        return cls(field, arr, lo, cap)

    # -- inspection ------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.cap == INF

    def is_nonzero(self) -> bool:
        """True when a nonzero coefficient is known."""
        return len(self.coeffs) > 0

    def is_zero(self) -> bool:
        """Provably zero (exact and no coefficients)."""
        return not len(self.coeffs) and self.cap == INF

    def val(self) -> Valuation:
        if len(self.coeffs):
            return Valuation.Exact(self.start)
        return Valuation.AtLeast(self.cap)

    def _eff_val(self) -> Cap:
        return self.start if len(self.coeffs) else self.cap

    @property
    def end(self) -> int:
        """One past the last stored exponent."""
        return self.start + len(self.coeffs)

    def coefficient(self, k: int) -> int:
        if k >= self.cap:
            raise InsufficientPrecision(f"coefficient of t^{k} lies beyond cap {self.cap}")
        if self.start <= k < self.end:
            return int(self.coeffs[k - self.start])
        return 0

    def leading_coefficient(self) -> int:
        if not len(self.coeffs):
            raise InsufficientPrecision("leading coefficient of a series that is zero up to its cap")
        return int(self.coeffs[0])

    def terms(self) -> dict:
        return {self.start + i: int(c) for i, c in enumerate(self.coeffs) if c}

    # -- arithmetic ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            return self._lift(other)
        if other.field is not self.field:
            raise ValueError("series over different fields")
        return other

    def _lift(self, other):
        if isinstance(other, (int, FqElem)):
            if isinstance(other, int):
                return TruncatedSeries(self.field, (self.field.from_int(other),), 0)
            return TruncatedSeries(self.field, (self.field.coerce(other),), 0)
        return NotImplemented

    def _combine(self, other, op):
        cap = min(self.cap, other.cap)
        if not len(self.coeffs) and not len(other.coeffs):
            return TruncatedSeries(self.field, (), 0, cap)
        if not len(other.coeffs):
            return TruncatedSeries(self.field, self.coeffs, self.start, cap)
        if not len(self.coeffs):
            b = other.coeffs if op is None else self.field.NEG[other.coeffs]
            return TruncatedSeries(self.field, b, other.start, cap)
        lo = min(self.start, other.start)
        hi = max(self.end, other.end)
        if cap != INF:
            hi = min(hi, cap)
        if hi <= lo:
            return TruncatedSeries(self.field, (), 0, cap)
        a = np.zeros(hi - lo, dtype=np.int64)
        b = np.zeros(hi - lo, dtype=np.int64)
        sa = self.coeffs[: max(0, hi - self.start)]
        sb = other.coeffs[: max(0, hi - other.start)]
        a[self.start - lo : self.start - lo + len(sa)] = sa
        b[other.start - lo : other.start - lo + len(sb)] = sb
        F = self.field
        if F.m == 1:
            out = (a + b) % F.p if op is None else (a - b) % F.p
        else:
            out = F.ADD[a, b] if op is None else F.SUB[a, b]
        return TruncatedSeries(F, out, lo, cap)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, None)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, "sub")

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other._combine(self, "sub")

    def __neg__(self):
        return TruncatedSeries(self.field, self.field.NEG[self.coeffs], self.start, self.cap)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        cap = min(self.cap + other._eff_val(), other.cap + self._eff_val())
        if not len(self.coeffs) or not len(other.coeffs):
            return TruncatedSeries(self.field, (), 0, cap)
        if len(self.coeffs) == 1 and len(other.coeffs) == 1:
            prod = np.array([self.field.MUL[self.coeffs[0], other.coeffs[0]]], dtype=np.int64)
        else:
            prod = self.field.convolve(self.coeffs, other.coeffs)
        return TruncatedSeries(self.field, prod, self.start + other.start, cap)

    __rmul__ = __mul__

    def scale(self, c) -> TruncatedSeries:
        """Multiply by an F_q scalar: an ``FqElem`` or an integer of F_p."""
        if isinstance(c, FqElem):
            return self.scale_code(self.field.coerce(c))
        return self.scale_code(self.field.from_int(int(c)))

    def scale_code(self, code: int) -> TruncatedSeries:
        if code == 0:
            return TruncatedSeries(self.field, (), 0, self.cap)
        if code == 1:
            return self
        return TruncatedSeries(self.field, self.field.MUL[code][self.coeffs], self.start, self.cap)

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by t^k."""
        return TruncatedSeries(self.field, self.coeffs, self.start + k, self.cap + k)

    def truncate(self, cap: Cap) -> TruncatedSeries:
        if cap >= self.cap:
            return self
        return TruncatedSeries(self.field, self.coeffs, self.start, cap)

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self, prec: Cap | None = None) -> TruncatedSeries:
        """Multiplicative inverse.

        The relative precision of a truncated input carries over.  An exact
        input has an infinite inverse unless it is a monomial, so ``prec``
        (absolute cap of the result) is then required.
        """
        if not len(self.coeffs):
            raise InsufficientPrecision("inverse of a series that is zero up to its cap")
        v = self.start
        F = self.field
        if self.cap == INF and len(self.coeffs) == 1:
            return TruncatedSeries(F, (F.inv(int(self.coeffs[0])),), -v)
        if self.cap == INF:
            if prec is None:
                raise InsufficientPrecision("inverse of an exact non-monomial needs a working cap")
            rel = int(prec) + v
        else:
            rel = self.cap - v
            if prec is not None:
                rel = min(rel, int(prec) + v)
        if rel <= 0:
            return TruncatedSeries(F, (), 0, rel - v)
        unit = np.zeros(rel, dtype=np.int64)
        head = self.coeffs[:rel]
        unit[: len(head)] = head
        b = np.array([F.inv(int(unit[0]))], dtype=np.int64)
        k = 1
        while k < rel:
            k = min(2 * k, rel)
            ub = F.convolve(unit[:k], b)[:k]
            corr = F.NEG[ub]
            corr[0] = F.add(int(corr[0]), F.from_int(2))
            b = F.convolve(b, corr)[:k]
        return TruncatedSeries(F, b, -v, rel - v)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def frobenius(self) -> TruncatedSeries:
        """Coefficientwise x -> x^p composed with t -> t^p, i.e. a -> a^p."""
        F = self.field
        if not len(self.coeffs):
            return TruncatedSeries(F, (), 0, self.cap * F.p if self.cap != INF else INF)
        arr = np.zeros(F.p * (len(self.coeffs) - 1) + 1, dtype=np.int64)
        arr[:: F.p] = [F.pow(int(c), F.p) for c in self.coeffs]
        cap = INF if self.cap == INF else F.p * self.cap
        return TruncatedSeries(F, arr, self.start * F.p, cap)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        """Equality as far as both operands are known."""
        if isinstance(other, (int, FqElem)):
            other = self._lift(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return not (self - other).is_nonzero()

    __hash__ = None

    def identical(self, other: TruncatedSeries) -> bool:
        """Same coefficients and same cap."""
        return (
            self.cap == other.cap
            and self.start == other.start
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        if not len(self.coeffs):
            body = "0"
        else:
            parts = []
            for k, c in self.terms().items():
                cs = repr(self.field.__call__(c)) if self.field.m > 1 else str(c)
                if self.field.m > 1 and "+" in cs:
                    cs = f"({cs})"
                mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
                if not mono:
                    parts.append(cs)
                elif cs == "1":
                    parts.append(mono)
                else:
                    parts.append(f"{cs}*{mono}")
            body = " + ".join(parts)
        if self.cap == INF:
            return body
        return f"{body} + O(t^{self.cap})"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_inv(a: TruncatedSeries, prec: Cap | None = None) -> TruncatedSeries:
    return a.inverse(prec)


def series_val(a: TruncatedSeries) -> Valuation:
    return a.val()
