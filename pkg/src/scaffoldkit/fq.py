"""
Finite fields F_q, q = p^m.

Elements are encoded as integers ``0 <= c < q``: the base-p digits of ``c``
are the coefficients of a polynomial in a fixed generator ``w`` whose
minimal polynomial is the pinned Conway polynomial for ``(p, m)``.  All
arithmetic goes through small lookup tables, which keeps the vectorised
series kernels in :mod:`scaffoldkit.series` simple.
"""

from __future__ import annotations

import functools

import numpy as np

# Conway polynomials, low degree first, monic.  Pinned so that element codes
# are reproducible across runs and machines.
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


class FiniteField:
    """The field with ``p**m`` elements.

    Use :func:`GF` rather than the constructor so that fields are shared and
    can be compared by identity.
    """

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if (p, m) not in CONWAY:
            raise ValueError(f"no pinned Conway polynomial for (p, m) = ({p}, {m})")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = CONWAY[(p, m)]
        q = self.q
        digits = np.array([[(c // p**k) % p for k in range(m)] for c in range(q)], dtype=np.int64)
        self._digits = digits
        self._weights = np.array([p**k for k in range(m)], dtype=np.int64)
        add = (digits[:, None, :] + digits[None, :, :]) % p
        self.ADD = add @ self._weights
        self.NEG = ((-digits) % p) @ self._weights
        self.SUB = self.ADD[:, self.NEG]
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                mul[a, b] = mul[b, a] = self._encode(self._polymul(digits[a], digits[b]))
        self.MUL = mul
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            (b,) = np.nonzero(mul[a] == 1)[0]
            inv[a] = b
        self.INV = inv
        # w^s for s = m .. 2m-2 in terms of 1, w, ..., w^(m-1)
        self._reductions = []
        for s in range(m, 2 * m - 1):
            e = [0] * (2 * m - 1)
            e[s] = 1
            self._reductions.append(self._reduce(e))

    def _reduce(self, coeffs):
        c = [int(x) % self.p for x in coeffs]
        m, p = self.m, self.p
        for s in range(len(c) - 1, m - 1, -1):
            lead = c[s]
            if lead:
                for k in range(m):
                    c[s - m + k] = (c[s - m + k] - lead * self.modulus[k]) % p
                c[s] = 0
        return c[:m] + [0] * (m - len(c[:m]))

    def _polymul(self, a, b):
        out = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += int(x) * int(y)
        return self._reduce(out)

    def _encode(self, digits):
        return int(sum(int(d) * self.p**k for k, d in enumerate(digits)))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.m))

    # -- scalars ---------------------------------------------------------

    def __call__(self, value) -> FqElem:
        return FqElem(self, self.coerce(value))

    def coerce(self, value) -> int:
        """Integer code of ``value`` (an int is read in the prime field when
        ``m == 1`` and as a code otherwise; an ``FqElem`` passes through)."""
        if isinstance(value, FqElem):
            if value.field is not self:
                raise ValueError("element of a different field")
            return value.code
        if isinstance(value, (list, tuple)):
            if len(value) > self.m:
                raise ValueError(f"too many digits for {self}")
            return self._encode([d % self.p for d in value])
        value = int(value)
        if self.m == 1:
            return value % self.p
        if not 0 <= value < self.q:
            raise ValueError(f"code {value} out of range for {self}")
        return value

    def from_int(self, n: int) -> int:
        """Code of the image of the integer ``n`` in the prime field."""
        return n % self.p

    def gen(self) -> FqElem:
        return FqElem(self, self.p if self.m > 1 else self.coerce(-self.modulus[0]))

    def elements(self):
        return [FqElem(self, c) for c in range(self.q)]

    def add(self, a: int, b: int) -> int:
        return int(self.ADD[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.SUB[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.MUL[a, b])

    def neg(self, a: int) -> int:
        return int(self.NEG[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return int(self.INV[a])

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def pth_root(self, a: int) -> int:
        """Inverse of Frobenius (F_q is perfect)."""
        return self.pow(a, self.q // self.p) if self.m > 1 else a

    # -- vector kernels --------------------------------------------------

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Cauchy product of two coefficient arrays of codes."""
        p = self.p
        if self.m == 1:
            return np.convolve(a, b) % p
        m = self.m
        da = self._digits[a]
        db = self._digits[b]
        n = len(a) + len(b) - 1
        acc = np.zeros((2 * m - 1, n), dtype=np.int64)
        for i in range(m):
            if not da[:, i].any():
                continue
            for j in range(m):
                acc[i + j] += np.convolve(da[:, i], db[:, j])
        acc %= p
        for s in range(2 * m - 2, m - 1, -1):
            red = self._reductions[s - m]
            for k in range(m):
                if red[k]:
                    acc[k] += red[k] * acc[s]
            acc[s] = 0
        acc %= p
        return self._weights @ acc[:m]

    def scale(self, c: int, a: np.ndarray) -> np.ndarray:
        return self.MUL[c][a]


@functools.lru_cache(maxsize=None)
def GF(p: int, m: int = 1) -> FiniteField:
    return FiniteField(p, m)


@functools.total_ordering
class FqElem:
    """A single element of a :class:`FiniteField`, with operators."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = int(code)

    def _other(self, other):
        if isinstance(other, FqElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.field, self.field.mul(self.code, self.field.inv(o)))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def __pow__(self, k: int):
        return FqElem(self.field, self.field.pow(self.code, k))

    def frobenius(self) -> FqElem:
        return self ** self.field.p

    def inverse(self) -> FqElem:
        return FqElem(self.field, self.field.inv(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __eq__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.code == o

    def __lt__(self, other):
        return self.code < other.code

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __int__(self):
        return self.code

    def __repr__(self):
        if self.field.m == 1:
            return str(self.code)
        terms = []
        for k, d in enumerate(self.field._digits[self.code]):
            if d:
                mono = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
                terms.append(f"{d}{mono}" if k == 0 or d != 1 else mono)
        return " + ".join(reversed(terms)) if terms else "0"
