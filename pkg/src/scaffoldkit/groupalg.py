"""
Group algebras K[G] and L[G] for G = Gal(L/K) = (Z/p)^n.

Elements are finite families ``{sigma: c_sigma}``.  The coefficients are
:class:`TruncatedSeries` (K[G], operators on L) or :class:`ExtElement`
(L[G], images of the phi map).
"""

from __future__ import annotations

from functools import cached_property

from . import dense
from .fq import FqElem
from .series import TruncatedSeries
from .tower import ArtinSchreierExtension, ExtElement


def _is_exact_zero(c) -> bool:
    return c.is_zero()


class GroupAlgebraElem:
    __slots__ = ("ext", "coeffs", "over", "__dict__")

    def __init__(self, ext: ArtinSchreierExtension, coeffs: dict, over: str | None = None):
        self.ext = ext
        clean = {}
        for s, c in coeffs.items():
            s = tuple(x % ext.p for x in s)
            if len(s) != ext.n:
                raise ValueError(f"group element {s} has the wrong length")
            if isinstance(c, (int, FqElem)):
                c = TruncatedSeries.constant(ext.F, ext.F.from_int(c) if isinstance(c, int) else c)
            if s in clean:
                c = clean[s] + c
            clean[s] = c
        clean = {s: c for s, c in clean.items() if not _is_exact_zero(c)}
        if over is None:
            over = "L" if any(isinstance(c, ExtElement) for c in clean.values()) else "K"
        if over == "L":
            clean = {s: (c if isinstance(c, ExtElement) else ext.from_base(c)) for s, c in clean.items()}
        self.over = over
        self.coeffs = dict(sorted(clean.items()))

    # -- constructors ----------------------------------------------------

    @classmethod
    def identity(cls, ext) -> GroupAlgebraElem:
        return cls(ext, {ext.identity(): 1})

    @classmethod
    def sigma(cls, ext, s) -> GroupAlgebraElem:
        return cls(ext, {tuple(s): 1})

    @classmethod
    def sigma_minus_one(cls, ext, s) -> GroupAlgebraElem:
        return cls(ext, {tuple(s): 1, ext.identity(): -1})

    @classmethod
    def trace(cls, ext) -> GroupAlgebraElem:
        return cls(ext, {s: 1 for s in ext.group()})

    @classmethod
    def zero(cls, ext, over="K") -> GroupAlgebraElem:
        return cls(ext, {}, over)

    # -- access ----------------------------------------------------------

    def coefficient(self, s):
        s = tuple(x % self.ext.p for x in s)
        if s in self.coeffs:
            return self.coeffs[s]
        zero = TruncatedSeries.zero(self.ext.F)
        return zero if self.over == "K" else self.ext.from_base(zero)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_nonzero(self) -> bool:
        return any(c.is_nonzero() for c in self.coeffs.values())

    def augmentation(self):
        """Sum of the coefficients, i.e. the image of ``1`` under the operator."""
        out = TruncatedSeries.zero(self.ext.F)
        if self.over == "L":
            out = self.ext.from_base(out)
        for c in self.coeffs.values():
            out = out + c
        return out

    # -- arithmetic ------------------------------------------------------

    def _same(self, other):
        if not isinstance(other, GroupAlgebraElem) or other.ext is not self.ext:
            raise ValueError("group algebra elements of different extensions")

    def __add__(self, other):
        self._same(other)
        d = dict(self.coeffs)
        for s, c in other.coeffs.items():
            d[s] = d[s] + c if s in d else c
        return GroupAlgebraElem(self.ext, d)

    def __neg__(self):
        return GroupAlgebraElem(self.ext, {s: -c for s, c in self.coeffs.items()}, self.over)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElem):
            self._same(other)
            d = {}
            for s, a in self.coeffs.items():
                for t, b in other.coeffs.items():
                    st = self.ext.compose(s, t)
                    ab = a * b
                    d[st] = d[st] + ab if st in d else ab
            over = "L" if "L" in (self.over, other.over) else "K"
            return GroupAlgebraElem(self.ext, d, over)
        if isinstance(other, (TruncatedSeries, ExtElement, int, FqElem)):
            return GroupAlgebraElem(self.ext, {s: c * other for s, c in self.coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (TruncatedSeries, ExtElement, int, FqElem)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> GroupAlgebraElem:
        if k < 0:
            raise ValueError("negative powers are not supported in K[G]")
        result = GroupAlgebraElem.identity(self.ext)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> GroupAlgebraElem:
        """Multiply every coefficient by t^k."""
        return GroupAlgebraElem(self.ext, {s: c.shift(k) for s, c in self.coeffs.items()}, self.over)

    def hadamard(self, other: GroupAlgebraElem) -> GroupAlgebraElem:
        self._same(other)
        d = {s: c * other.coeffs[s] for s, c in self.coeffs.items() if s in other.coeffs}
        return GroupAlgebraElem(self.ext, d, "L" if "L" in (self.over, other.over) else "K")

    def hadamard_power(self, k: int) -> GroupAlgebraElem:
        """Coefficientwise ``k``-th power over the whole group (``0^0 = 1``)."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        if k == 0:
            one = GroupAlgebraElem.trace(self.ext)
            return one if self.over == "K" else GroupAlgebraElem(self.ext, one.coeffs, "L")
        return GroupAlgebraElem(self.ext, {s: c**k for s, c in self.coeffs.items()}, self.over)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElem):
            return NotImplemented
        return not (self - other).is_nonzero()

    __hash__ = None

    # -- action on L -----------------------------------------------------

    @cached_property
    def _matrix(self):
        """Columns ``xi(Y^J)`` of the K-linear operator, K[G] case only."""
        ext = self.ext
        cols = [[TruncatedSeries.zero(ext.F)] * ext.P for _ in range(ext.P)]
        for s, c in self.coeffs.items():
            if not any(s):
                for j in range(ext.P):
                    cols[j][j] = cols[j][j] + c
                continue
            images = ext.sigma_matrix(s)
            for j in range(ext.P):
                col = images[j]
                for i in range(ext.P):
                    if not col[i].is_zero():
                        cols[j][i] = cols[j][i] + col[i] * c
        return cols

    @cached_property
    def _matrix_block(self):
        return dense.matrix_block(self._matrix)

    def apply(self, y: ExtElement) -> ExtElement:
        """``sum_sigma c_sigma sigma(y)``."""
        ext = self.ext
        if self.over == "L":
            out = ext.zero()
            for s, c in self.coeffs.items():
                out = out + c * ext.apply_automorphism(s, y)
            return out
        if ext.m == 1:
            M, yb = self._matrix_block, dense.to_block(y.coords)
            if M is not None and yb is not None:
                return ExtElement(ext, dense.from_block(ext.F, dense.trim(dense.matvec(ext.F, M, yb))))
        cols = self._matrix
        out = [TruncatedSeries.zero(ext.F)] * ext.P
        for j, c in enumerate(y.coords):
            if c.is_zero():
                continue
            col = cols[j]
            for i in range(ext.P):
                if not col[i].is_zero():
                    out[i] = out[i] + col[i] * c
        return ExtElement(ext, out)

    __call__ = apply

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for s, c in self.coeffs.items():
            name = "id" if not any(s) else "s" + "".join(map(str, s))
            parts.append(f"({c!r})*{name}")
        return " + ".join(parts)


def apply(xi: GroupAlgebraElem, y: ExtElement) -> ExtElement:
    return xi.apply(y)


def hadamard_power(xi: GroupAlgebraElem, k: int) -> GroupAlgebraElem:
    return xi.hadamard_power(k)
