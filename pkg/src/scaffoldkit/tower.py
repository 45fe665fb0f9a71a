"""
Elementary abelian Artin-Schreier extensions L/K of K = F_q((t)).

``L = K(x_1, ..., x_n)`` with ``x_j^p - x_j = u_j t^(-e_j)``.  Elements of L
are stored in a *reduced* monomial basis ``Y^J = Y_1^(c_1) ... Y_n^(c_n)``,
``0 <= c_j < p``, where ``Y_j = x_j - z_j`` and ``z_j`` lies in
``K(x_1, ..., x_(j-1))``.  The ``z_j`` are chosen so that ``v_L(Y_j)`` is
``-m_j p^(n-j)`` with ``p`` not dividing ``m_j``; then the basis monomials have
pairwise distinct valuations modulo ``p^n`` and

    v_L(sum_J c_J Y^J) = min_J ( p^n v_K(c_J) + v_L(Y^J) )

holds with no cancellation.  For ``n = 1`` the reduction is trivial and
``Y_1 = x_1``.

Galois automorphisms are tuples ``(i_1, ..., i_n)`` of integers mod p acting by
``x_j -> x_j + i_j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import dense
from .digits import DigitSystem
from .errors import BreakDivisibleByP, ImportedFactViolation, InsufficientPrecision, NotTotallyRamified, SpecError
from .fq import GF, FqElem, is_prime
from .series import INF, TruncatedSeries, Valuation, min_valuation

Automorphism = tuple


@dataclass(frozen=True, eq=False)
class Generator:
    """One Artin-Schreier generator ``x^p - x = u t^(-e)``."""

    e: int
    u: TruncatedSeries


@dataclass(frozen=True, eq=False)
class ExtensionSpec:
    p: int
    m: int
    generators: tuple

    @property
    def n(self) -> int:
        return len(self.generators)

    @classmethod
    def simple(cls, p: int, es, us=None, m: int = 1) -> ExtensionSpec:
        """Convenience constructor: ``us`` are lists of coefficient codes of
        unit polynomials in t (default: all ones)."""
        F = GF(p, m)
        es = (es,) if isinstance(es, int) else tuple(es)
        if us is None:
            us = [[1]] * len(es)
        gens = tuple(Generator(e, TruncatedSeries(F, u)) for e, u in zip(es, us))
        return cls(p, m, gens)

    def validate(self) -> None:
        if not is_prime(self.p):
            raise SpecError(f"p = {self.p} is not prime")
        if self.m < 1:
            raise SpecError("m must be positive")
        if self.n < 1:
            raise SpecError("at least one generator is required (degree 1 is excluded)")
        F = GF(self.p, self.m)
        prev = 0
        for j, g in enumerate(self.generators, 1):
            if g.e < 1:
                raise SpecError(f"generator {j}: exponent e = {g.e} must be >= 1")
            if g.e % self.p == 0:
                raise SpecError(f"generator {j}: p = {self.p} divides e = {g.e}")
            if g.e < prev:
                raise SpecError(f"generator {j}: exponents must be nondecreasing")
            prev = g.e
            if g.u.field is not F:
                raise SpecError(f"generator {j}: unit lives over {g.u.field}, expected {F}")
            if g.u.val() != Valuation.Exact(0):
                raise SpecError(f"generator {j}: u must be a unit of O_K, got valuation {g.u.val()!r}")


@dataclass(frozen=True)
class RamificationData:
    breaks: tuple  # lower breaks, ascending, with multiplicity
    d: int  # exponent of the different
    i0: int  # d - p^n + 1
    ig: dict  # sigma -> i_G(sigma) for sigma != 1


class ExtElement:
    """An element of L, as coordinates over K in the reduced monomial basis."""

    __slots__ = ("ext", "coords")

    def __init__(self, ext: ArtinSchreierExtension, coords):
        coords = tuple(coords)
        if len(coords) != ext.P:
            raise ValueError(f"expected {ext.P} coordinates, got {len(coords)}")
        self.ext = ext
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.ext is not self.ext:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, (TruncatedSeries, int, FqElem)):
            return self.ext.from_base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.ext, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.ext, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return ExtElement(self.ext, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ExtElement(self.ext, [a * other for a in self.coords])
        if isinstance(other, (int, FqElem)):
            return ExtElement(self.ext, [a.scale(other) for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ext = self.ext
        if ext._w_blocks is not None:
            x, y = dense.to_block(self.coords), dense.to_block(other.coords)
            if x is not None and y is not None:
                return ExtElement(ext, dense.from_block(ext.F, ext._dmul(x, y, ext.n)))
        return ExtElement(ext, ext._mul(self.coords, other.coords, ext.n))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ext.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> ExtElement:
        """Multiply by t^k."""
        return ExtElement(self.ext, [a.shift(k) for a in self.coords])

    def val(self) -> Valuation:
        return self.ext.val(self)

    def is_zero(self) -> bool:
        """Provably zero."""
        return all(c.is_zero() for c in self.coords)

    def is_nonzero(self) -> bool:
        return any(c.is_nonzero() for c in self.coords)

    def in_base(self) -> TruncatedSeries:
        """The element as a member of K; raises if it has other coordinates."""
        for c in self.coords[1:]:
            if c.is_nonzero():
                raise ValueError("element does not lie in K")
        return self.coords[0]

    def inverse(self, prec=None) -> ExtElement:
        return self.ext.inverse(self, prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other):
        """Equality as far as both operands are known."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return not (self - other).is_nonzero()

    __hash__ = None

    def __repr__(self):
        names = self.ext.monomial_names()
        parts = [f"({c!r})*{names[i]}" if i else f"({c!r})" for i, c in enumerate(self.coords) if c.is_nonzero()]
        return " + ".join(parts) if parts else "0"


class ArtinSchreierExtension:
    """Handle for a built extension; immutable after construction."""

    def __init__(self, spec: ExtensionSpec, cap: int = 64):
        spec.validate()
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.n = spec.n
        self.P = self.p**self.n
        self.F = GF(self.p, self.m)
        self.cap = cap
        self._zero = TruncatedSeries.zero(self.F)
        self._one = TruncatedSeries.one(self.F)
        self._w = [None]  # _w[j]: relation Y_j^p - Y_j = w_j, coords of length p^(j-1)
        self._z = [None]  # _z[j]: x_j = Y_j + z_j
        self.tower_breaks = []  # m_j, break of K_j / K_(j-1)
        for j, g in enumerate(spec.generators, 1):
            z, w, mj = self._reduce_generator(j, g)
            self._z.append(z)
            self._w.append(w)
            self.tower_breaks.append(mj)
        self.vb = self._basis_valuations(self.n)
        self._sigma_mats = {}
        if sorted(v % self.P for v in self.vb) != list(range(self.P)):
            raise NotTotallyRamified("basis valuations do not cover all residues mod p^n")

    # -- basis bookkeeping ----------------------------------------------

    def _basis_valuations(self, level: int) -> list:
        """Valuations of the basis monomials of K_level, normalised on K_level."""
        p = self.p
        vals = []
        for idx in range(p**level):
            v = 0
            for j in range(1, level + 1):
                c = (idx // p ** (j - 1)) % p
                v -= c * self.tower_breaks[j - 1] * p ** (level - j)
            vals.append(v)
        return vals

    def exponents(self, idx: int) -> tuple:
        return tuple((idx // self.p**j) % self.p for j in range(self.n))

    def index(self, exps) -> int:
        return sum(c * self.p**j for j, c in enumerate(exps))

    def monomial_names(self) -> list:
        names = []
        for idx in range(self.P):
            parts = []
            for j, c in enumerate(self.exponents(idx), 1):
                if c:
                    sym = "x" if self.n == 1 else f"Y{j}"
                    parts.append(sym if c == 1 else f"{sym}^{c}")
            names.append("*".join(parts) or "1")
        return names

    # -- construction ----------------------------------------------------

    def _zero_vec(self, size):
        return (self._zero,) * size

    def _mul(self, a, b, level):
        if level == 0:
            return (a[0] * b[0],)
        p = self.p
        size = p ** (level - 1)
        A = [a[k * size : (k + 1) * size] for k in range(p)]
        B = [b[k * size : (k + 1) * size] for k in range(p)]
        live_a = [k for k in range(p) if not all(c.is_zero() for c in A[k])]
        live_b = [k for k in range(p) if not all(c.is_zero() for c in B[k])]
        C = [None] * (2 * p - 1)
        for i in live_a:
            for j in live_b:
                prod = self._mul(A[i], B[j], level - 1)
                C[i + j] = prod if C[i + j] is None else tuple(x + y for x, y in zip(C[i + j], prod))
        w = self._w[level]
        for k in range(2 * p - 2, p - 1, -1):
            if C[k] is None:
                continue
            lo = k - p + 1
            C[lo] = C[k] if C[lo] is None else tuple(x + y for x, y in zip(C[lo], C[k]))
            wc = self._mul(w, C[k], level - 1)
            C[k - p] = wc if C[k - p] is None else tuple(x + y for x, y in zip(C[k - p], wc))
        out = []
        for k in range(p):
            out.extend(C[k] if C[k] is not None else self._zero_vec(size))
        return tuple(out)

    @cached_property
    def _w_blocks(self):
        """The relations as dense blocks, or None if a unit is truncated."""
        out = [None]
        for w in self._w[1:]:
            b = dense.to_block(w)
            if b is None:
                return None
            out.append(b)
        return out

    def _dmul(self, x, y, level):
        """``_mul`` on dense blocks of exact coordinates."""
        F, p = self.F, self.p
        if level == 0:
            return x[0] + y[0], F.convolve(x[1][0], y[1][0])[None, :]
        size = p ** (level - 1)
        if level == 1:
            # rows p..2p-2 are only read during the reduction, so it is one step
            off, rows = dense.kron_product(F, x, y, p)
            pad = np.zeros((1, rows.shape[1]), dtype=np.int64)
            low = dense.add(F, (off, rows[:p]), (off, np.vstack([pad, rows[p:]])))
            wo, wh = dense.scale_rows(F, self._w_blocks[1], (off, rows[p:]))
            low = dense.add(F, low, (wo, np.vstack([wh, np.zeros((1, wh.shape[1]), dtype=np.int64)])))
            return dense.trim(low)
        A = [(x[0], x[1][k * size : (k + 1) * size]) for k in range(p)]
        B = [(y[0], y[1][k * size : (k + 1) * size]) for k in range(p)]
        C = [None] * (2 * p - 1)
        for i, a in enumerate(A):
            if dense.is_zero(a):
                continue
            for j, b in enumerate(B):
                if dense.is_zero(b):
                    continue
                prod = self._dmul(a, b, level - 1)
                C[i + j] = prod if C[i + j] is None else dense.add(F, C[i + j], prod)
        w = self._w_blocks[level]
        for k in range(2 * p - 2, p - 1, -1):
            if C[k] is None or dense.is_zero(C[k]):
                continue
            lo = k - p + 1
            C[lo] = C[k] if C[lo] is None else dense.add(F, C[lo], C[k])
            wc = self._dmul(w, C[k], level - 1)
            C[k - p] = wc if C[k - p] is None else dense.add(F, C[k - p], wc)
        empty = (0, np.zeros((size, 1), dtype=np.int64))
        return dense.trim(dense.stack([C[k] if C[k] is not None else empty for k in range(p)]))

    def _level_val(self, coords, vb, P):
        return min_valuation(
            (Valuation.Exact(P * c.start + vb[i]) if c.is_nonzero() else Valuation.AtLeast(P * c.cap + vb[i]))
            for i, c in enumerate(coords)
        )

    def _level_leading(self, coords, vb, P):
        v = self._level_val(coords, vb, P)
        if not v.exact:
            raise InsufficientPrecision(f"leading term hidden by truncation: {v!r}")
        for i, c in enumerate(coords):
            if c.is_nonzero() and P * c.start + vb[i] == v.value:
                return v.value, i, c.start, c.leading_coefficient()
        raise AssertionError("unreachable")

    def _reduce_generator(self, j, g):
        """Find z in K_(j-1) with v(u t^-e - (z^p - z)) negative and prime to p."""
        p = self.p
        level = j - 1
        size = p**level
        Pl = p**level
        vb = self._basis_valuations(level) if level else [0]
        w = [g.u.shift(-g.e)] + [self._zero] * (size - 1)
        w = tuple(w)
        z = self._zero_vec(size)
        for _ in range(10 * p * (g.e + 1) * Pl + 10):
            v = self._level_val(w, vb, Pl)
            if v.is_zero:
                raise NotTotallyRamified(f"generator {j} is F_p-dependent on the earlier ones")
            if not v.exact:
                raise InsufficientPrecision(f"reduction of generator {j} hidden by truncation at {v!r}")
            if v.value >= 0:
                raise NotTotallyRamified(f"generator {j} does not give a totally ramified step (v = {v.value})")
            if v.value % p:
                return z, w, -v.value
            vv, idx, k, lc = self._level_leading(w, vb, Pl)
            target = vv // p
            jdx = next(i for i in range(size) if (target - vb[i]) % Pl == 0)
            kk = (target - vb[jdx]) // Pl
            mono = [self._zero] * size
            mono[jdx] = TruncatedSeries.monomial(self.F, kk)
            mono = tuple(mono)
            mono_p = mono
            for _ in range(p - 1):
                mono_p = self._mul(mono_p, mono, level)
            _, idx2, k2, lc2 = self._level_leading(mono_p, vb, Pl)
            assert (idx2, k2) == (idx, k)
            gamma = self.F.pth_root(self.F.mul(lc, self.F.inv(lc2)))
            c = tuple(s.scale_code(gamma) for s in mono)
            cp = tuple(s.scale_code(self.F.pow(gamma, p)) for s in mono_p)
            z = tuple(a + b for a, b in zip(z, c))
            w = tuple(a - b + d for a, b, d in zip(w, cp, c))
        raise InsufficientPrecision(f"reduction of generator {j} did not terminate")

    # -- element constructors -------------------------------------------

    def element(self, coords) -> ExtElement:
        return ExtElement(self, coords)

    def zero(self) -> ExtElement:
        return ExtElement(self, self._zero_vec(self.P))

    def one(self) -> ExtElement:
        return self.from_base(self._one)

    def from_base(self, a) -> ExtElement:
        if isinstance(a, int):
            a = TruncatedSeries.constant(self.F, self.F.from_int(a))
        elif isinstance(a, FqElem):
            a = TruncatedSeries.constant(self.F, a)
        return ExtElement(self, (a,) + self._zero_vec(self.P - 1))

    def t(self) -> ExtElement:
        return self.from_base(TruncatedSeries.monomial(self.F, 1))

    def basis_monomial(self, idx: int, k: int = 0, c: int = 1) -> ExtElement:
        """``c t^k Y^J`` for the basis index ``idx``."""
        coords = [self._zero] * self.P
        coords[idx] = TruncatedSeries.monomial(self.F, k, c)
        return ExtElement(self, coords)

    def Y(self, j: int) -> ExtElement:
        return self.basis_monomial(self.p ** (j - 1))

    def gen(self, j: int) -> ExtElement:
        """The defining generator ``x_j``."""
        z = self._z[j]
        coords = list(z) + [self._zero] * (self.P - len(z))
        coords[self.p ** (j - 1)] = coords[self.p ** (j - 1)] + self._one
        return ExtElement(self, coords)

    def from_x_coordinates(self, coeffs: dict) -> ExtElement:
        """Element from ``{(c_1, ..., c_n): series}`` in the x-monomial basis."""
        out = self.zero()
        gens = [self.gen(j) for j in range(1, self.n + 1)]
        for exps, c in coeffs.items():
            term = self.from_base(c)
            for g, e in zip(gens, exps):
                term = term * g**e
            out = out + term
        return out

    @cached_property
    def _x_monomials(self):
        gens = [self.gen(j) for j in range(1, self.n + 1)]
        out = []
        for idx in range(self.P):
            term = self.one()
            for g, e in zip(gens, self.exponents(idx)):
                term = term * g**e
            out.append(term)
        return out

    def x_coordinates(self, y: ExtElement) -> dict:
        """Coordinates of ``y`` in the x-monomial basis (unitriangular solve)."""
        rest = list(y.coords)
        out = {}
        for idx in range(self.P - 1, -1, -1):
            c = rest[idx]
            out[self.exponents(idx)] = c
            if c.is_nonzero() or not c.is_exact:
                col = self._x_monomials[idx].coords
                for k in range(idx):
                    rest[k] = rest[k] - col[k] * c
        return out

    # -- valuation -------------------------------------------------------

    def val(self, y: ExtElement) -> Valuation:
        """v_L, read off the reduced basis."""
        return self._level_val(y.coords, self.vb, self.P)

    def leading(self, y: ExtElement):
        """``(v, idx, k, code)`` for the leading term ``code * t^k * Y^idx``."""
        return self._level_leading(y.coords, self.vb, self.P)

    def norm(self, y: ExtElement) -> TruncatedSeries:
        """N_{L/K}(y) as the product of all conjugates."""
        out = y
        for s in self.group()[1:]:
            out = out * self.apply_automorphism(s, y)
        return out.in_base()

    def inverse(self, y: ExtElement, prec=None) -> ExtElement:
        if y.val().is_zero:
            raise ZeroDivisionError("inverse of zero in L")
        v = y.val()
        if not v.exact:
            raise InsufficientPrecision(f"inverse of an element with valuation {v!r}")
        if y.coords[0].is_nonzero() and all(not c.is_nonzero() and c.is_exact for c in y.coords[1:]):
            c = y.coords[0]
            return self.from_base(c.inverse(self.cap if prec is None else prec))
        conj = self.one()
        for s in self.group()[1:]:
            conj = conj * self.apply_automorphism(s, y)
        nrm = (y * conj).in_base()
        if prec is None:
            prec = self.cap
        return conj * nrm.inverse(prec)

    # -- Galois action ---------------------------------------------------

    def group(self) -> list:
        """All automorphisms, identity first, in lexicographic order."""
        return [tuple(s) for s in itertools.product(range(self.p), repeat=self.n)]

    def compose(self, s: Automorphism, t: Automorphism) -> Automorphism:
        return tuple((a + b) % self.p for a, b in zip(s, t))

    def identity(self) -> Automorphism:
        return (0,) * self.n

    def sigma_matrix(self, s: Automorphism) -> list:
        """Images of the basis monomials under ``s`` (list of coordinate tuples)."""
        s = tuple(x % self.p for x in s)
        if s in self._sigma_mats:
            return self._sigma_mats[s]
        p = self.p
        images = [None] * self.P
        images[0] = self.one().coords
        gen_images = {}
        for idx in range(1, self.P):
            exps = self.exponents(idx)
            top = max(j for j, c in enumerate(exps) if c)
            lower = self.index(exps[:top] + (exps[top] - 1,) + exps[top + 1 :])
            if top not in gen_images:
                j = top + 1
                z = self._z[j]
                zs = self._zero_vec(self.P)
                for k, c in enumerate(z):
                    if c.is_nonzero() or not c.is_exact:
                        zs = tuple(a + c * b for a, b in zip(zs, images[k]))
                zfull = tuple(z) + self._zero_vec(self.P - len(z))
                img = list(self.Y(j).coords)
                img[0] = img[0] + TruncatedSeries.constant(self.F, self.F.from_int(s[top]))
                gen_images[top] = tuple(a + b - c for a, b, c in zip(img, zfull, zs))
            images[idx] = self._mul(images[lower], gen_images[top], self.n)
        self._sigma_mats[s] = images
        return images

    def _sigma_block(self, s: Automorphism):
        key = ("block", tuple(x % self.p for x in s))
        if key not in self._sigma_mats:
            self._sigma_mats[key] = dense.matrix_block(self.sigma_matrix(s))
        return self._sigma_mats[key]

    def apply_automorphism(self, s: Automorphism, y: ExtElement) -> ExtElement:
        if not any(x % self.p for x in s):
            return y
        if self.m == 1:
            M, yb = self._sigma_block(s), dense.to_block(y.coords)
            if M is not None and yb is not None:
                return ExtElement(self, dense.from_block(self.F, dense.trim(dense.matvec(self.F, M, yb))))
        images = self.sigma_matrix(s)
        out = [self._zero] * self.P
        for j, c in enumerate(y.coords):
            if c.is_zero():
                continue
            col = images[j]
            for i in range(self.P):
                if not col[i].is_zero():
                    out[i] = out[i] + col[i] * c
        return ExtElement(self, out)

    # -- uniformizer, ramification --------------------------------------

    @cached_property
    def uniformizer(self) -> ExtElement:
        """A basis monomial ``t^d Y^J`` of valuation 1."""
        idx = next(i for i in range(self.P) if (1 - self.vb[i]) % self.P == 0)
        pi = self.basis_monomial(idx, (1 - self.vb[idx]) // self.P)
        assert self.val(pi) == Valuation.Exact(1)
        if self.val(self.t()) != Valuation.Exact(self.P):
            raise NotTotallyRamified("v_L(t) != p^n")
        return pi

    @cached_property
    def pi_inverse(self) -> ExtElement:
        return self.inverse(self.uniformizer)

    def pi_power(self, i: int) -> ExtElement:
        """``pi_L^i`` for any integer ``i`` (negative powers are truncated)."""
        if i >= 0:
            return self._pi_cached("_pi_cache", self.uniformizer, i)
        return self._pi_cached("_pi_neg_cache", self.pi_inverse, -i)

    def _pi_cached(self, name, step, i):
        cache = self.__dict__.setdefault(name, [self.one()])
        while len(cache) <= i:
            cache.append(cache[-1] * step)
        return cache[i]

    @cached_property
    def ramification(self) -> RamificationData:
        pi = self.uniformizer
        ig = {}
        for s in self.group()[1:]:
            v = (self.apply_automorphism(s, pi) - pi).val()
            ig[s] = v.require_exact(f"i_G({s})")
        d = sum(ig.values())
        i0 = d - self.P + 1
        jumps = sorted(set(v - 1 for v in ig.values()))
        breaks = []
        for b in jumps:
            size_b = 1 + sum(1 for v in ig.values() if v - 1 >= b)
            size_next = 1 + sum(1 for v in ig.values() if v - 1 >= b + 1)
            ratio = size_b // size_next
            mult = 0
            while ratio > 1:
                ratio //= self.p
                mult += 1
            breaks.extend([b] * mult)
        breaks = tuple(breaks)
        for b in breaks:
            if b % self.p == 0:
                raise BreakDivisibleByP(f"p = {self.p} divides lower break {b}")
        if DigitSystem(self.p, breaks).b(self.P - 1) != i0:
            raise ImportedFactViolation("b(p^n - 1) = i_0", i0, DigitSystem(self.p, breaks).b(self.P - 1))
        return RamificationData(breaks, d, i0, ig)

    @cached_property
    def digits(self) -> DigitSystem:
        return DigitSystem(self.p, self.ramification.breaks)

    @property
    def i0(self) -> int:
        return self.ramification.i0

    @property
    def h(self) -> int:
        """The representative of i_0 in {0, ..., p^n - 1}."""
        return self.i0 % self.P

    def __repr__(self):
        gens = ", ".join(f"x^{self.p} - x = ({g.u!r})*t^-{g.e}" for g in self.spec.generators)
        return f"ArtinSchreierExtension(p={self.p}, m={self.m}: {gens})"


def build_extension(spec: ExtensionSpec, cap: int = 64) -> ArtinSchreierExtension:
    ext = ArtinSchreierExtension(spec, cap)
    ext.uniformizer
    ext.ramification
    return ext


def v_L(y: ExtElement) -> Valuation:
    return y.val()


def find_uniformizer(ext: ArtinSchreierExtension) -> ExtElement:
    return ext.uniformizer


def apply_automorphism(s: Automorphism, y: ExtElement) -> ExtElement:
    return y.ext.apply_automorphism(s, y)


def ramification_data(ext: ArtinSchreierExtension) -> RamificationData:
    return ext.ramification


class LambdaFamily:
    """``lambda_t = t^floor(t / p^n) * base[t mod p^n]`` with ``v_L(base[r]) = r``."""

    def __init__(self, ext: ArtinSchreierExtension, base=None, kind: str = "pi"):
        self.ext = ext
        if base is None:
            if kind == "pi":
                base = [ext.pi_power(r) for r in range(ext.P)]
            elif kind == "monomial":
                base = []
                for r in range(ext.P):
                    idx = next(i for i in range(ext.P) if (r - ext.vb[i]) % ext.P == 0)
                    base.append(ext.basis_monomial(idx, (r - ext.vb[idx]) // ext.P))
            else:
                raise ValueError(f"unknown lambda family kind {kind!r}")
        base = list(base)
        if len(base) != ext.P:
            raise ValueError(f"need {ext.P} base elements")
        for r, b in enumerate(base):
            if b.val() != Valuation.Exact(r):
                raise ValueError(f"base element {r} has valuation {b.val()!r}, expected Exact({r})")
        self.kind = kind
        self.base = tuple(base)

    def __call__(self, t: int) -> ExtElement:
        k, r = divmod(t, self.ext.P)
        return self.base[r].shift(k)

    def with_units(self, units) -> LambdaFamily:
        """Family with ``base[r]`` replaced by ``units[r] * base[r]``."""
        return LambdaFamily(self.ext, [u * b for u, b in zip(units, self.base)], kind="custom")


def lambda_family(ext: ArtinSchreierExtension, kind: str = "pi") -> LambdaFamily:
    return LambdaFamily(ext, kind=kind)
