"""
Galois scaffolds: verification, construction from valuation data or from a
semistable witness, and the passage back from a scaffold to a witness.

A scaffold is a tuple ``Psi_1..Psi_n`` in K[G] together with a lambda family.
It has precision ``c`` when for every ``i`` and ``t``

    Psi_i(lambda_t) == u_it * lambda_(t + p^(n-i) b_i)   if a(r(t))_(n-i) >= 1
    Psi_i(lambda_t) == 0                                 otherwise

modulo ``lambda_(t + p^(n-i) b_i) * M_L^c``, with ``u_it`` a unit of O_K.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .diagram import big_G, coset, is_semistable_witness
from .errors import (
    HypothesisViolation,
    ImportedFactViolation,
    InsufficientPrecision,
    NotAScaffold,
    NotIntegral,
    NotNilpotent,
    PreconditionError,
)
from .groupalg import GroupAlgebraElem
from .series import INF, TruncatedSeries
from .tower import ArtinSchreierExtension, LambdaFamily, lambda_family


@dataclass(frozen=True)
class Scaffold:
    ext: ArtinSchreierExtension
    Psi: tuple
    lam: LambdaFamily
    precision: float | None = None
    units: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def n(self) -> int:
        return len(self.Psi)


@dataclass(frozen=True)
class ScaffoldReport:
    precision: float
    margins: dict
    units: dict
    caveats: tuple = ()

    def as_dict(self) -> dict:
        return {
            "precision": self.precision,
            "margins": {f"{i},{t}": m for (i, t), m in sorted(self.margins.items())},
            "units": {f"{i},{t}": repr(u) for (i, t), u in sorted(self.units.items())},
            "caveats": list(self.caveats),
        }


def _margin(z, lam: LambdaFamily, T: int, unit_case: bool, max_c: int):
    """Best ``c`` (capped at ``max_c``, INF for an exact zero) and the unit used.

    In the unit case the unit is built greedily: each step cancels the leading
    term of ``z - u lambda_T`` while its valuation is congruent to ``T`` mod
    p^n, which is the only way ``u`` can affect it.  This yields the optimal
    ``u`` without inverting anything.
    """
    ext = lam.ext
    F, P = ext.F, ext.P
    terms = {}
    rem = z
    if unit_case:
        v = rem.val()
        if not v.exact:
            raise InsufficientPrecision(f"leading term of Psi(lambda) hidden: {v!r}")
        if v.value != T:
            return v.value - T, None
        lt = lam(T)
        _, _, _, c_lam = ext.leading(lt)
        while True:
            v = rem.val()
            if v.is_zero:
                return INF, TruncatedSeries.from_dict(F, terms)
            if not v.exact or (v.value - T) % P or v.value - T >= max_c:
                break
            k = (v.value - T) // P
            _, _, _, c_rem = ext.leading(rem)
            g = F.mul(c_rem, F.inv(c_lam))
            terms[k] = g
            rem = rem - lt.shift(k) * ext.from_base(ext._one.scale_code(g))
        unit = TruncatedSeries.from_dict(F, terms)
    else:
        unit = None
    v = rem.val()
    if v.is_zero:
        return INF, unit
    if v.exact:
        return min(v.value - T, max_c), unit
    if v.value - T >= max_c:
        return max_c, unit
    raise InsufficientPrecision(f"margin hidden by truncation: {v!r} against target {T}")


def verify_scaffold(scaffold: Scaffold, max_c: int = 8, guard: bool = True, threads: int = 1) -> ScaffoldReport:
    """Largest ``c <= max_c`` for which the scaffold congruences hold.

    ``t`` runs over one period; with ``guard`` the neighbouring periods are
    checked too and must give the same margins.  The (i, t) cases are
    independent and may be spread over ``threads`` workers; results are
    collected in a fixed order."""
    ext, lam = scaffold.ext, scaffold.lam
    ds = ext.digits
    P = ext.P
    if scaffold.n != ext.n:
        raise PreconditionError(f"need {ext.n} operators, got {scaffold.n}")

    def case(it):
        i, t = it
        psi = scaffold.Psi[i - 1]
        shift = ds.shift(i)
        unit_case = ds.scaffold_digit(i, t) >= 1
        m, u = _margin(psi.apply(lam(t)), lam, t + shift, unit_case, max_c)
        notes = []
        if guard:
            for tt in (t - P, t + P):
                mg, _ = _margin(psi.apply(lam(tt)), lam, tt + shift, unit_case, max_c)
                if mg != m:
                    notes.append(f"margin at t={tt} differs from t={t}: {mg} != {m}")
        return m, u, notes

    cases = [(i, t) for i in range(1, ext.n + 1) for t in range(P)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(case, cases))
    else:
        results = [case(c) for c in cases]
    margins, units, caveats = {}, {}, []
    for key, (m, u, notes) in zip(cases, results):
        margins[key] = m
        if u is not None:
            units[key] = u
        caveats.extend(notes)
    for i, psi in enumerate(scaffold.Psi, 1):
        if psi.augmentation().is_nonzero():
            caveats.append(f"Psi_{i}(1) != 0: not in the augmentation ideal")
    precision = min(min(margins.values()), max_c)
    report = ScaffoldReport(precision, margins, units, tuple(caveats))
    if precision < 1:
        bad = sorted(k for k, m in margins.items() if m < 1)
        raise NotAScaffold(f"congruence fails at precision 1 for (i, t) in {bad}", report)
    return report


def certify(scaffold: Scaffold, max_c: int = 8, threads: int = 1) -> Scaffold:
    """Copy of ``scaffold`` carrying the verified precision and unit table."""
    rep = verify_scaffold(scaffold, max_c, threads=threads)
    return replace(scaffold, precision=rep.precision, units=rep.units, notes=scaffold.notes + rep.caveats)


def monomial(scaffold: Scaffold, s: int) -> GroupAlgebraElem:
    """``Psi_n^(s_0) Psi_(n-1)^(s_1) ... Psi_1^(s_(n-1))``."""
    ext = scaffold.ext
    out = GroupAlgebraElem.identity(ext)
    for k, d in enumerate(ext.digits.digits(s)):
        if d:
            out = out * scaffold.Psi[ext.n - 1 - k] ** d
    return out


def psis_check(scaffold: Scaffold, max_c: int = 8) -> ScaffoldReport:
    """The congruences for every monomial ``Psi^(s)``, shift ``b(s)``.

    Returns the margins keyed by ``(s, t)`` and the units ``U_st``."""
    ext, lam = scaffold.ext, scaffold.lam
    ds = ext.digits
    margins, units = {}, {}
    for s in range(ext.P):
        xi = monomial(scaffold, s)
        for t in range(ext.P):
            unit_case = ds.preceq(s, ds.a(ds.r(t)))
            m, u = _margin(xi.apply(lam(t)), lam, t + ds.b(s), unit_case, max_c)
            margins[(s, t)] = m
            if u is not None:
                units[(s, t)] = u
    return ScaffoldReport(min(min(margins.values()), max_c), margins, units)


def sigma_minus_one_scaffold(ext: ArtinSchreierExtension, lam: LambdaFamily | None = None) -> Scaffold:
    """``Psi_i = sigma_i - 1`` with ``sigma_i`` the i-th standard generator.

    A natural candidate in degree p; for n >= 2 it need not verify."""
    psis = []
    for i in range(ext.n):
        s = tuple(1 if j == i else 0 for j in range(ext.n))
        psis.append(GroupAlgebraElem.sigma_minus_one(ext, s))
    return Scaffold(ext, tuple(psis), lam or lambda_family(ext))


def build_from_Phi(Phis, lam: LambdaFamily, max_c: int = 8, threads: int = 1) -> Scaffold:
    """Check the valuation hypotheses on one period, then subtract ``Phi_i(1)``."""
    ext = lam.ext
    ds = ext.digits
    for i, phi in enumerate(Phis, 1):
        shift = ds.shift(i)
        for t in range(ext.P):
            T = t + shift
            v = phi.apply(lam(t)).val()
            if ds.scaffold_digit(i, t) >= 1:
                if not v.exact:
                    raise InsufficientPrecision(f"valuation of Phi_{i}(lambda_{t}) hidden: {v!r}")
                if v.value != T:
                    raise HypothesisViolation(i, t, v, f"= {T}")
            else:
                if v.value <= T:
                    if not v.exact:
                        raise InsufficientPrecision(f"valuation of Phi_{i}(lambda_{t}) hidden: {v!r}")
                    raise HypothesisViolation(i, t, v, f"> {T}")
    psis = tuple(phi - GroupAlgebraElem.identity(ext) * phi.augmentation() for phi in Phis)
    return certify(Scaffold(ext, psis, lam), max_c, threads)


def build_from_semistable(xi: GroupAlgebraElem, lam: LambdaFamily | None = None, max_c: int = 8,
                          threads: int = 1) -> Scaffold:
    """Scaffold of precision at least 1 from a normalised semistable witness."""
    ext = xi.ext
    lam = lam or lambda_family(ext)
    P, h, i0, p = ext.P, ext.h, ext.i0, ext.p
    diag = big_G(xi, lam)
    want = sorted([coset(h, 0, P), coset(0, h, P)], key=lambda x: x.b)
    if diag.d != h or list(diag.N) != want:
        raise PreconditionError(f"witness is not normalised: d = {diag.d}, N = {list(diag.N)}")
    Phis = []
    for i in range(1, ext.n + 1):
        k = P - p ** (ext.n - i) - 1
        theta = xi.hadamard_power(k)
        num = k * h + i0 - ext.digits.shift(i)
        if num % P:
            raise NotIntegral(f"v_{i} = {num}/{P} is not an integer")
        Phis.append(theta.shift(-(num // P)))
    return build_from_Phi(Phis, lam, max_c, threads)


def semistable_from_scaffold(scaffold: Scaffold):
    """``xi = Psi^(p^n - 2)`` and its verdict; checks the predicted diagonal."""
    ext = scaffold.ext
    if scaffold.precision is None:
        scaffold = certify(scaffold)
    P = ext.P
    bn = ext.ramification.breaks[-1]
    xi = monomial(scaffold, P - 2)
    verdict = is_semistable_witness(xi, scaffold.lam)
    if not verdict.semistable:
        raise ImportedFactViolation("semistable witness from scaffold", "semistable", verdict.reasons)
    if verdict.d != -bn:
        raise ImportedFactViolation("d of the witness", -bn, verdict.d)
    want = tuple(sorted([coset(-bn, 0, P), coset(0, -bn, P)], key=lambda x: x.b))
    if verdict.N != want:
        raise ImportedFactViolation("N of the witness", want, verdict.N)
    if verdict.precision < scaffold.precision:
        raise ImportedFactViolation("witness precision >= scaffold precision", scaffold.precision, verdict.precision)
    return xi, verdict


def stability_threshold(ext: ArtinSchreierExtension) -> int:
    h = ext.h
    return max(h - 1, ext.P - h - 1)


def breaks_congruence(ext: ArtinSchreierExtension) -> tuple:
    """Per break, whether ``b_i == -i_0 (mod p^n)``."""
    rd = ext.ramification
    return tuple((b + rd.i0) % ext.P == 0 for b in rd.breaks)


@dataclass(frozen=True)
class FalsifierResult:
    falsified: bool
    tested: int
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {"falsified": self.falsified, "tested": self.tested, "witness": self.witness}


def default_family(ext: ArtinSchreierExtension, budget: int, seed: int) -> list:
    """Products of ``sigma_j - 1`` over all digit vectors, plus seeded random
    elements with small support and coefficients ``c t^k``, ``|k| <= 1``."""
    fam = []
    gens = [GroupAlgebraElem.sigma_minus_one(ext, tuple(int(j == i) for j in range(ext.n))) for i in range(ext.n)]
    for s in range(ext.P):
        xi = GroupAlgebraElem.identity(ext)
        for j, d in enumerate(ext.digits.digits(s)):
            xi = xi * gens[j] ** d
        fam.append(xi)
    rng = random.Random(seed)
    group = ext.group()
    while len(fam) < ext.P + budget:
        coeffs = {}
        for s in rng.sample(group, rng.randint(1, min(3, len(group)))):
            c = rng.randrange(1, ext.F.q)
            coeffs[s] = TruncatedSeries.monomial(ext.F, rng.randint(-1, 1), c)
        xi = GroupAlgebraElem(ext, coeffs)
        if not xi.is_zero():
            fam.append(xi)
    return fam


def _cancellation_chain(xi, rho, basis, images, steps: int):
    """Successively cancel the leading term of ``xi(rho)`` with ``t^k``
    multiples of basis operators; yields each intermediate operator.

    Pushing ``v(xi(rho))`` up while the other ``lambda_t`` are left alone is
    the natural way to break the inequality being tested."""
    ext = xi.ext
    F = ext.F
    z = xi.apply(rho)
    for _ in range(steps):
        v = z.val()
        if not v.exact:
            return
        _, idx, _, c = ext.leading(z)
        for op, w in zip(basis, images):
            vw = w.val()
            if not vw.exact or (v.value - vw.value) % ext.P:
                continue
            _, idx2, _, c2 = ext.leading(w)
            if idx2 != idx:
                continue
            coef = TruncatedSeries.monomial(F, (v.value - vw.value) // ext.P, F.mul(c, F.inv(c2)))
            xi = xi - op * coef
            z = z - w * ext.from_base(coef)
            yield xi
            break
        else:
            return


def criterion_c_falsifier(ext: ArtinSchreierExtension, family=None, budget: int = 50,
                          seed: int = 0, lam: LambdaFamily | None = None, steps: int = 8) -> FalsifierResult:
    """Search for ``xi`` and ``lambda`` with ``v(xi(rho)) - v(rho) > v(xi(lambda)) - v(lambda)``
    where ``v(rho) == -i_0 (mod p^n)``.  A negative result is not a proof.

    Every family member is also run through a cancellation chain at ``rho``."""
    lam = lam or lambda_family(ext)
    P = ext.P
    r0 = (-ext.i0) % P
    rhos = [lam(r0), lam(r0) + lam(r0 + 1)]
    fam = default_family(ext, budget, seed) if family is None else list(family)
    basis = default_family(ext, 0, seed)[1:]
    tested = 0
    for rho in rhos:
        images = [op.apply(rho) for op in basis]
        for xi0 in fam:
            for xi in [xi0, *_cancellation_chain(xi0, rho, basis, images, steps)]:
                tested += 1
                z = xi.apply(rho).val()
                if not z.exact and not z.is_zero:
                    raise InsufficientPrecision(f"v(xi(rho)) hidden: {z!r}")
                lhs = z.value - rho.val().value
                for t in range(P):
                    w = xi.apply(lam(t)).val()
                    if not w.exact:
                        if w.is_zero:
                            continue
                        raise InsufficientPrecision(f"v(xi(lambda_{t})) hidden: {w!r}")
                    if lhs > w.value - t:
                        return FalsifierResult(True, tested, {
                            "xi": repr(xi), "rho_valuation": rho.val().value, "lhs": lhs,
                            "lambda_valuation": t, "rhs": w.value - t,
                        })
    return FalsifierResult(False, tested)


def charp_promotion(scaffold: Scaffold) -> Scaffold:
    """Precision INF when every ``Psi_i^p`` vanishes exactly in K[G].

    In characteristic p the congruences then hold with equality; the check is
    algebraic and uses no truncated arithmetic."""
    ext = scaffold.ext
    for i, psi in enumerate(scaffold.Psi, 1):
        if any(not c.is_exact for c in psi.coeffs.values()):
            raise InsufficientPrecision(f"Psi_{i} has truncated coefficients")
        pw = psi ** ext.p
        if not pw.is_zero():
            s, c = next(iter(pw.coeffs.items()))
            raise NotNilpotent(f"Psi_{i}^{ext.p} != 0: coefficient {c!r} at {s}")
    return replace(scaffold, precision=INF,
                   notes=scaffold.notes + ("precision promoted algebraically: Psi_i^p = 0 in K[G]",))
