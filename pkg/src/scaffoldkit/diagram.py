"""
Diagrams of elements of K[G].

A coset ``[a, b]`` is the class of ``(a, b)`` modulo ``(p^n, -p^n)``; it is
stored normalised with ``0 <= b < p^n``.  The diagram of ``xi`` is read off
the valuation profile ``f_xi(a) = min v_L(xi(y))`` over ``y`` of valuation
at least ``a``.  Since ``{lambda_t : t >= a}`` spans that ideal over O_K, the
minimum runs over ``t`` in ``[a, a + p^n)`` only, and ``v_L(xi(lambda_{t+p^n}))
= v_L(xi(lambda_t)) + p^n`` means one period of evaluations is enough.

The tensor side (``TensorElem``, ``phi_forward``, ``phi_inverse_oracle``,
``R_support``) is an independent route used to cross-check the diagram.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DiagonalShapeViolation, InsufficientPrecision, PreconditionError
from .groupalg import GroupAlgebraElem
from .linalg import solve
from .series import INF, Valuation
from .tower import ExtElement, LambdaFamily, lambda_family


class Coset(NamedTuple):
    a: int
    b: int


def coset(a: int, b: int, P: int) -> Coset:
    k, r = divmod(b, P)
    return Coset(a + k * P, r)


def coset_le(x, y, P: int) -> bool:
    """``[a,b] <= [c,d]``: some representative ``(c', d')`` of ``y`` has ``a <= c'`` and ``b <= d'``."""
    a, b = x
    c, d = y
    return -((c - a) // P) <= (d - b) // P


def coset_complement_rule(x, y, P: int) -> bool:
    """``[a,b] not<= [c,d]`` iff ``[c+1, d-P+1] <= [a,b]``."""
    a, b = x
    c, d = y
    return (not coset_le(x, y, P)) == coset_le((c + 1, d - P + 1), x, P)


def _window_min(vals) -> Valuation:
    """Minimum of separately known valuations (not the valuation of a sum)."""
    best_exact = INF
    best_bound = INF
    for v in vals:
        if v.exact:
            best_exact = min(best_exact, v.value)
        elif not v.is_zero:
            best_bound = min(best_bound, v.value)
    if best_exact <= best_bound and best_exact != INF:
        return Valuation.Exact(best_exact)
    return Valuation.AtLeast(best_bound)


class ValuationProfile:
    """``g(r) = v_L(xi(lambda_r))`` for ``0 <= r < p^n``, and ``f_xi`` derived from it."""

    def __init__(self, xi: GroupAlgebraElem, lam: LambdaFamily | None = None):
        if xi.over != "K":
            raise ValueError("diagrams are defined for operators in K[G]")
        ext = xi.ext
        self.xi = xi
        self.ext = ext
        self.lam = lam or lambda_family(ext)
        self.g = tuple(xi.apply(self.lam(r)).val() for r in range(ext.P))
        if all(v.is_zero for v in self.g):
            raise ValueError("xi is zero")

    @property
    def truncated(self) -> bool:
        return any(not v.exact and not v.is_zero for v in self.g)

    def value(self, t: int) -> Valuation:
        k, r = divmod(t, self.ext.P)
        return self.g[r] + k * self.ext.P

    def f(self, a: int) -> Valuation:
        return _window_min(self.value(t) for t in range(a, a + self.ext.P))

    def contains(self, x) -> bool:
        """Membership of the coset ``x = [a, b]`` in the diagram D."""
        a, b = x
        v = self.f(-b - self.ext.i0)
        if v.exact:
            return v.value <= a
        if v.value > a:
            return False
        raise InsufficientPrecision(f"f_xi({-b - self.ext.i0}) is {v!r}, cannot compare with {a}")


def f_xi(xi: GroupAlgebraElem, a: int, lam: LambdaFamily | None = None) -> Valuation:
    return ValuationProfile(xi, lam).f(a)


@dataclass(frozen=True)
class Diagram:
    P: int
    i0: int
    G: tuple
    N: tuple
    d: int
    precision: float
    caveats: tuple = ()

    def as_dict(self) -> dict:
        return {
            "G": [list(x) for x in self.G],
            "N": [list(x) for x in self.N],
            "d": self.d,
            "precision": self.precision,
            "caveats": list(self.caveats),
        }


def _diagram_from_profile(prof: ValuationProfile) -> Diagram:
    ext = prof.ext
    P, i0 = ext.P, ext.i0
    fs = [prof.f(m).require_exact(f"f_xi({m})") for m in range(P + 1)]
    G = []
    for m in range(P):
        if fs[m] < fs[m + 1]:
            G.append(coset(fs[m], -m - i0, P))
    G.sort(key=lambda x: x.b)
    d = min(a + b for a, b in G)
    N = tuple(x for x in G if x.a + x.b == d)
    rest = [x.a + x.b - d for x in G if x.a + x.b != d]
    precision = min(rest) if rest else INF
    caveats = []
    if prof.truncated or any(not c.is_exact for c in prof.xi.coeffs.values()):
        caveats.append(f"certified up to cap {ext.cap}")
    return Diagram(P, i0, tuple(G), N, d, precision, tuple(caveats))


def big_G(xi: GroupAlgebraElem, lam: LambdaFamily | None = None) -> Diagram:
    """Minimal elements G, the diagonal N, its level d and the gap to the next level."""
    return _diagram_from_profile(ValuationProfile(xi, lam))


def big_D_member(xi: GroupAlgebraElem, x, lam: LambdaFamily | None = None) -> bool:
    return ValuationProfile(xi, lam).contains(x)


@dataclass(frozen=True)
class Verdict:
    semistable: bool
    stable: bool
    diagram: Diagram
    reasons: tuple = ()

    @property
    def d(self):
        return self.diagram.d

    @property
    def N(self):
        return self.diagram.N

    @property
    def precision(self):
        return self.diagram.precision

    def as_dict(self) -> dict:
        out = self.diagram.as_dict()
        out.update(semistable=self.semistable, stable=self.stable, reasons=list(self.reasons))
        return out


def _verdict(diag: Diagram, p: int) -> Verdict:
    reasons = []
    if diag.d % p == 0:
        reasons.append(f"p divides d = {diag.d}")
    if len(diag.N) != 2:
        reasons.append(f"|N| = {len(diag.N)}")
    semi = not reasons
    stable = semi and diag.G == diag.N
    if semi and not stable:
        reasons.append(f"G != N (precision {diag.precision})")
    return Verdict(semi, stable, diag, tuple(reasons))


def is_semistable_witness(xi: GroupAlgebraElem, lam: LambdaFamily | None = None) -> Verdict:
    return _verdict(big_G(xi, lam), xi.ext.p)


def is_stable_witness(xi: GroupAlgebraElem, lam: LambdaFamily | None = None) -> Verdict:
    return is_semistable_witness(xi, lam)


def _diagonal_shape(diag: Diagram, level: int) -> bool:
    P = diag.P
    want = sorted([coset(level, 0, P), coset(0, level, P)], key=lambda x: x.b)
    return list(diag.N) == want


def normalize_witness(xi: GroupAlgebraElem, lam: LambdaFamily | None = None) -> GroupAlgebraElem:
    """Shift a semistable witness by a power of t so that N = {[h,0],[0,h]}."""
    ext = xi.ext
    verdict = is_semistable_witness(xi, lam)
    if not verdict.semistable:
        raise PreconditionError(f"not a semistable witness: {', '.join(verdict.reasons)}")
    d, h, P = verdict.d, ext.h, ext.P
    if (d - h) % P:
        raise PreconditionError(f"d = {d} is not congruent to i_0 = {ext.i0} mod {P}")
    if not _diagonal_shape(verdict.diagram, d):
        raise DiagonalShapeViolation(f"N = {list(verdict.N)} is not {{[{d},0],[0,{d}]}}")
    m = (d - h) // P
    out = xi.shift(-m)
    check = big_G(out, lam)
    if check.d != h or not _diagonal_shape(check, h):
        raise DiagonalShapeViolation(f"normalised N = {list(check.N)}, expected {{[{h},0],[0,{h}]}}")
    return out


# -- tensor side ---------------------------------------------------------


class TensorElem:
    """A finite sum of pure tensors ``a (x) b`` in L (x)_K L."""

    def __init__(self, ext, pairs):
        self.ext = ext
        self.pairs = tuple((ext.from_base(a) if not isinstance(a, ExtElement) else a,
                            ext.from_base(b) if not isinstance(b, ExtElement) else b) for a, b in pairs)

    @classmethod
    def one(cls, ext) -> TensorElem:
        return cls(ext, [(ext.one(), ext.one())])

    def __add__(self, other: TensorElem) -> TensorElem:
        return TensorElem(self.ext, self.pairs + other.pairs)

    def __mul__(self, other: TensorElem) -> TensorElem:
        return TensorElem(self.ext, [(a * c, b * d) for a, b in self.pairs for c, d in other.pairs])

    def __pow__(self, k: int) -> TensorElem:
        out = TensorElem.one(self.ext)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return " + ".join(f"({a!r})#({b!r})" for a, b in self.pairs) or "0"


def phi_forward(beta: TensorElem) -> GroupAlgebraElem:
    """``a (x) b  ->  sum_sigma a sigma(b) sigma``."""
    ext = beta.ext
    coeffs = {}
    for s in ext.group():
        c = ext.zero()
        for a, b in beta.pairs:
            c = c + a * ext.apply_automorphism(s, b)
        coeffs[s] = c
    return GroupAlgebraElem(ext, coeffs, "L")


_PHI_INV = weakref.WeakKeyDictionary()


def _phi_inverse_matrix(ext):
    """Inverse of ``M[sigma][j] = sigma(pi^j)``, computed once per extension."""
    if ext not in _PHI_INV:
        group = ext.group()
        pis = [ext.pi_power(j) for j in range(ext.P)]
        M = [[ext.apply_automorphism(s, pj) for pj in pis] for s in group]
        eye = [[ext.one() if i == j else ext.zero() for j in range(ext.P)] for i in range(ext.P)]
        _PHI_INV[ext] = solve(M, eye)
    return _PHI_INV[ext]


def phi_inverse_oracle(xi: GroupAlgebraElem) -> list:
    """Coefficients ``c_j`` with ``xi = phi(sum_j c_j (x) pi^j)``."""
    ext = xi.ext
    Minv = _phi_inverse_matrix(ext)
    group = ext.group()
    xs = [xi.coefficient(s) for s in group]
    xs = [x if isinstance(x, ExtElement) else ext.from_base(x) for x in xs]
    out = []
    for j in range(ext.P):
        c = ext.zero()
        for k, x in enumerate(xs):
            if not x.is_zero():
                c = c + Minv[j][k] * x
        out.append(c)
    return out


def tensor_from_coefficients(ext, cs) -> TensorElem:
    return TensorElem(ext, [(c, ext.pi_power(j)) for j, c in enumerate(cs)])


def pi_adic_digits(y: ExtElement, upto: int) -> dict:
    """Teichmueller digits ``{i: code}`` of ``y = sum a_i pi^i`` for ``i <= upto``."""
    ext = y.ext
    F = ext.F
    digits = {}
    rem = y
    while True:
        v = rem.val()
        if v.is_zero:
            return digits
        if not v.exact:
            if v.value > upto:
                return digits
            raise InsufficientPrecision(f"pi-adic digit {v.value} hidden by truncation")
        if v.value > upto:
            return digits
        i = v.value
        pi_i = ext.pi_power(i)
        _, _, _, c_rem = ext.leading(rem)
        _, _, _, c_pi = ext.leading(pi_i)
        g = F.mul(c_rem, F.inv(c_pi))
        digits[i] = g
        rem = rem - pi_i * F(g)


def R_support(cs, upto: int) -> set:
    """``{[i, j] : a_ij != 0, i <= upto}`` for ``beta = sum_j c_j (x) pi^j``."""
    out = set()
    for j, c in enumerate(cs):
        for i in pi_adic_digits(c, upto):
            out.add((i, j))
    return out


def up_closure_member(R, x, P: int) -> bool:
    return any(coset_le(r, x, P) for r in R)
