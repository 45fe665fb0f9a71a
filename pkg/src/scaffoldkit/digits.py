"""
Base-p digit combinatorics on S = {0, 1, ..., p^n - 1}.

``b(s)`` pairs digit ``i`` of ``s`` with the break ``b_{n-i}``; ``a`` is the
inverse of ``s -> r(-b(s))``; ``preceq`` is the digitwise partial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from .errors import BreakDivisibleByP


def digits(s: int, p: int, n: int) -> tuple:
    """Base-p digits ``(s_(0), ..., s_(n-1))``, least significant first."""
    out = []
    for _ in range(n):
        s, d = divmod(s, p)
        out.append(d)
    return tuple(out)


def from_digits(ds, p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


def preceq(s: int, t: int, p: int, n: int) -> bool:
    return all(a <= b for a, b in zip(digits(s, p, n), digits(t, p, n)))


def lucas_preceq(s: int, t: int, p: int) -> bool:
    """``p`` does not divide ``C(t, s)``; agrees with :func:`preceq`."""
    return comb(t, s) % p != 0


def rfun(a: int, P: int) -> int:
    return a % P


def bfun(s: int, breaks, p: int) -> int:
    n = len(breaks)
    return sum(d * p**i * breaks[n - 1 - i] for i, d in enumerate(digits(s, p, n)))


def afun(breaks, p: int) -> tuple:
    """Table of ``a`` on S, the inverse of ``s -> r(-b(s))``."""
    n = len(breaks)
    for b in breaks:
        if b % p == 0:
            raise BreakDivisibleByP(f"p = {p} divides break {b}")
    P = p**n
    table = [None] * P
    for s in range(P):
        table[rfun(-bfun(s, breaks, p), P)] = s
    return tuple(table)


@dataclass(frozen=True)
class DigitSystem:
    """The digit data attached to a break vector ``b_1 <= ... <= b_n``."""

    p: int
    breaks: tuple

    @property
    def n(self) -> int:
        return len(self.breaks)

    @property
    def P(self) -> int:
        return self.p**self.n

    def digits(self, s: int) -> tuple:
        return digits(s, self.p, self.n)

    def r(self, a: int) -> int:
        return a % self.P

    def b(self, s: int) -> int:
        return bfun(s, self.breaks, self.p)

    @cached_property
    def a_table(self) -> tuple:
        return afun(self.breaks, self.p)

    def a(self, s: int) -> int:
        return self.a_table[s]

    def preceq(self, s: int, t: int) -> bool:
        return preceq(s, t, self.p, self.n)

    def shift(self, i: int) -> int:
        """``p^(n-i) b_i``, the valuation shift of the i-th scaffold operator."""
        return self.p ** (self.n - i) * self.breaks[i - 1]

    def scaffold_digit(self, i: int, t: int) -> int:
        """``a(r(t))_(n-i)``, the digit that decides which case of the
        scaffold congruence applies to ``(i, t)``."""
        return self.digits(self.a(self.r(t)))[self.n - i]
