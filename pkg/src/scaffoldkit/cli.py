"""
Batch front end.

    scaffoldkit <task> --config job.json [--cap N] [--format json|text] [--seed N] [--threads N]

Tasks: analyze, diagram, scaffold-verify, scaffold-build, roundtrip, falsify.
The job file is JSON; unknown fields are rejected.  The result is a
certificate, written to stdout in canonical JSON (sorted keys, infinity as the
string "infinity") or as a plain text report.

Exit codes: 0 success (negative verdicts included), 1 usage or parse error,
2 precision ceiling reached, 3 a theorem-predicted fact failed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .diagram import (
    R_support,
    ValuationProfile,
    is_semistable_witness,
    normalize_witness,
    phi_inverse_oracle,
    up_closure_member,
)
from .errors import (
    DiagonalShapeViolation,
    HypothesisViolation,
    ImportedFactViolation,
    InsufficientPrecision,
    NotAScaffold,
    NotIntegral,
    NotNilpotent,
    PreconditionError,
    SpecError,
)
from .fq import GF
from .groupalg import GroupAlgebraElem
from .scaffold import (
    Scaffold,
    breaks_congruence,
    build_from_Phi,
    build_from_semistable,
    certify,
    charp_promotion,
    criterion_c_falsifier,
    psis_check,
    semistable_from_scaffold,
    sigma_minus_one_scaffold,
    stability_threshold,
)
from .series import INF, TruncatedSeries
from .tower import ArtinSchreierExtension, ExtensionSpec, Generator, lambda_family

TASKS = ("analyze", "diagram", "scaffold-verify", "scaffold-build", "roundtrip", "falsify")

EXIT_OK, EXIT_USAGE, EXIT_PRECISION, EXIT_FACT = 0, 1, 2, 3


class ConfigError(Exception):
    def __init__(self, path: str, message: str, line: int | None = None):
        where = f" (line {line})" if line else ""
        super().__init__(f"{path or '<root>'}{where}: {message}")
        self.path, self.line = path, line


# -- config parsing ------------------------------------------------------

TOP_FIELDS = {"extension", "cap", "cap_ceiling", "seed", "task", "params"}
EXT_FIELDS = {"p", "m", "n", "generators"}
GEN_FIELDS = {"e", "u"}
PARAM_FIELDS = {"xi", "scaffold", "Phi", "max_c", "budget", "family", "lambda", "oracle", "normalize", "psis"}


class _Parser:
    def __init__(self, text: str):
        self.text = text

    def line_of(self, key: str):
        m = re.search(r'"' + re.escape(key) + r'"\s*:', self.text)
        return self.text.count("\n", 0, m.start()) + 1 if m else None

    def fail(self, path, message):
        key = path.rsplit(".", 1)[-1].split("[")[0] if path else ""
        raise ConfigError(path, message, self.line_of(key) if key else None)

    def obj(self, value, path, allowed, required=()):
        if not isinstance(value, dict):
            self.fail(path, "expected an object")
        for k in value:
            if k not in allowed:
                self.fail(f"{path}.{k}" if path else k, "unknown field")
        for k in required:
            if k not in value:
                self.fail(path, f"missing required field {k!r}")
        return value

    def int_(self, value, path, lo=None):
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(path, f"expected an integer, got {value!r}")
        if lo is not None and value < lo:
            self.fail(path, f"must be >= {lo}")
        return value

    def codes(self, value, path, F):
        if not isinstance(value, list) or not value:
            self.fail(path, "expected a nonempty list of coefficient codes")
        for i, c in enumerate(value):
            self.int_(c, f"{path}[{i}]", 0)
            if c >= F.q:
                self.fail(f"{path}[{i}]", f"code {c} out of range for F_{F.q}")
        return value

    def series(self, value, path, F):
        """``{"exponent": code}`` with string keys."""
        if not isinstance(value, dict):
            self.fail(path, "expected an object {exponent: code}")
        terms = {}
        for k, c in value.items():
            try:
                e = int(k)
            except ValueError:
                self.fail(f"{path}.{k}", "exponent must be an integer")
            self.int_(c, f"{path}.{k}", 0)
            if c >= F.q:
                self.fail(f"{path}.{k}", f"code {c} out of range for F_{F.q}")
            terms[e] = c
        return TruncatedSeries.from_dict(F, terms)

    def table(self, value, path, ext):
        if not isinstance(value, list):
            self.fail(path, "expected a list of {sigma, coeff} entries")
        coeffs = {}
        for i, entry in enumerate(value):
            p_ = f"{path}[{i}]"
            self.obj(entry, p_, {"sigma", "coeff"}, ("sigma", "coeff"))
            s = entry["sigma"]
            if not isinstance(s, list) or len(s) != ext.n:
                self.fail(f"{p_}.sigma", f"expected a list of {ext.n} integers")
            s = tuple(self.int_(x, f"{p_}.sigma", 0) % ext.p for x in s)
            c = self.series(entry["coeff"], f"{p_}.coeff", ext.F)
            coeffs[s] = coeffs[s] + c if s in coeffs else c
        xi = GroupAlgebraElem(ext, coeffs)
        return xi


def load_config(text: str) -> tuple:
    """Parse and validate a job file; returns ``(raw dict, parser)``."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError("", f"invalid JSON: {e.msg} at column {e.colno}", e.lineno) from None
    ps = _Parser(text)
    ps.obj(raw, "", TOP_FIELDS, ("extension",))
    ext = ps.obj(raw["extension"], "extension", EXT_FIELDS, ("p", "generators"))
    ps.int_(ext["p"], "extension.p", 2)
    ps.int_(ext.get("m", 1), "extension.m", 1)
    gens = ext["generators"]
    if not isinstance(gens, list) or not gens:
        ps.fail("extension.generators", "expected a nonempty list")
    if "n" in ext and ps.int_(ext["n"], "extension.n", 1) != len(gens):
        ps.fail("extension.n", f"n = {ext['n']} but {len(gens)} generators given")
    for j, g in enumerate(gens):
        ps.obj(g, f"extension.generators[{j}]", GEN_FIELDS, ("e",))
        ps.int_(g["e"], f"extension.generators[{j}].e", 1)
    for k in ("cap", "cap_ceiling", "seed"):
        if k in raw:
            ps.int_(raw[k], k, 0 if k == "seed" else 1)
    if "task" in raw and raw["task"] not in TASKS:
        ps.fail("task", f"unknown task {raw['task']!r}; expected one of {', '.join(TASKS)}")
    params = ps.obj(raw.get("params", {}), "params", PARAM_FIELDS)
    for k in ("max_c", "budget"):
        if k in params:
            ps.int_(params[k], f"params.{k}", 1)
    if params.get("lambda", "pi") not in ("pi", "monomial"):
        ps.fail("params.lambda", "expected 'pi' or 'monomial'")
    for k in ("oracle", "normalize", "psis"):
        if k in params and not isinstance(params[k], bool):
            ps.fail(f"params.{k}", "expected true or false")
    return raw, ps


def build_spec(raw: dict, ps: _Parser, cap: int) -> ExtensionSpec:
    e = raw["extension"]
    p, m = e["p"], e.get("m", 1)
    try:
        F = GF(p, m)
    except (ValueError, KeyError) as ex:
        ps.fail("extension.p", str(ex))
    gens = []
    for j, g in enumerate(e["generators"]):
        path = f"extension.generators[{j}].u"
        u = g.get("u", [1])
        if isinstance(u, list):
            us = TruncatedSeries(F, ps.codes(u, path, F))
        elif isinstance(u, dict):
            ps.obj(u, path, {"num", "den"}, ("num", "den"))
            num = TruncatedSeries(F, ps.codes(u["num"], f"{path}.num", F))
            den = TruncatedSeries(F, ps.codes(u["den"], f"{path}.den", F))
            if den.val().value != 0:
                ps.fail(f"{path}.den", "denominator must have a nonzero constant term")
            us = num * den.inverse(cap)
        else:
            ps.fail(path, "expected a list of codes or {num, den}")
        gens.append(Generator(g["e"], us))
    spec = ExtensionSpec(p, m, tuple(gens))
    spec.validate()
    return spec


# -- serialisation -------------------------------------------------------


def _enc(x):
    if isinstance(x, float) and x == INF:
        return "infinity"
    if isinstance(x, dict):
        return {str(k): _enc(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_enc(v) for v in x]
    return x


def series_json(c: TruncatedSeries) -> dict:
    return {"terms": {str(k): v for k, v in sorted(c.terms().items())}, "cap": _enc(c.cap)}


def table_json(xi: GroupAlgebraElem) -> list:
    out = []
    for s, c in xi.coeffs.items():
        if xi.over == "L":
            out.append({"sigma": list(s), "coeff": repr(c)})
        else:
            out.append({"sigma": list(s), **series_json(c)})
    return out


def _key(k) -> str:
    return ",".join(map(str, k)) if isinstance(k, tuple) else str(k)


def emit(cert: dict, fmt: str = "json") -> bytes:
    """Canonical bytes for a certificate."""
    if fmt == "json":
        return (json.dumps(_enc(cert), sort_keys=True, indent=1, ensure_ascii=True) + "\n").encode()
    return render_text(_enc(cert)).encode()


def _diagram_table(name: str, diag: dict) -> list:
    lines = [f"{name}:", "  d(beta) | N(beta)", f"  {diag['d']!s:>7} | " + " ".join(f"[{a},{b}]" for a, b in diag["N"])]
    lines.append("  G(beta): " + " ".join(f"[{a},{b}]" for a, b in diag["G"]))
    lines.append(f"  precision: {diag['precision']}")
    for c in diag.get("caveats", []):
        lines.append(f"  caveat: {c}")
    return lines


def render_text(cert: dict) -> str:
    lines = [f"scaffoldkit {cert['tool']['version']}  task: {cert['task']}  status: {cert['status']}"]
    ext = cert.get("extension")
    if ext:
        lines.append(f"extension: p={ext['p']} m={ext['m']} n={ext['n']} e={ext['e']}")
    ram = cert.get("ramification")
    if ram:
        lines.append(f"lower breaks: {ram['breaks']}  d: {ram['d']}  i_0: {ram['i0']}  h: {ram['h']}")
    if "congruences" in cert:
        lines.append(f"b_i == -i_0 mod p^n: {cert['congruences']}")
    if "digits" in cert:
        lines.append(f"a: {cert['digits']['a']}")
        lines.append(f"b: {cert['digits']['b']}")
    for name in ("diagram", "witness"):
        if name in cert:
            lines.extend(_diagram_table(name, cert[name]))
    if "verdicts" in cert:
        lines.append("verdicts:")
        for k, v in sorted(cert["verdicts"].items()):
            lines.append(f"  {k}: {v}")
    for name in ("scaffold", "rebuilt_scaffold"):
        if name in cert and "precision" in cert[name]:
            lines.append(f"{name} precision: {cert[name]['precision']}")
    if "falsifier" in cert:
        f = cert["falsifier"]
        lines.append(f"falsifier: falsified={f['falsified']} tested={f['tested']}")
        if f.get("witness"):
            lines.append(f"  witness: {f['witness']}")
    pr = cert["precision"]
    lines.append(f"working cap: {pr['cap']} (initial {pr['initial_cap']}, ceiling {pr['ceiling']}, retries {pr['retries']})")
    for c in cert.get("caveats", []):
        lines.append(f"caveat: {c}")
    if cert.get("error"):
        lines.append(f"error: {cert['error']['kind']}: {cert['error']['message']}")
    return "\n".join(lines) + "\n"


# -- tasks -------------------------------------------------------------


def _common(ext: ArtinSchreierExtension) -> dict:
    rd = ext.ramification
    ds = ext.digits
    return {
        "extension": {
            "p": ext.p, "m": ext.m, "n": ext.n,
            "e": [g.e for g in ext.spec.generators],
            "tower_breaks": list(ext.tower_breaks),
        },
        "ramification": {
            "breaks": list(rd.breaks), "d": rd.d, "i0": rd.i0, "h": ext.h,
            "i_G": {_key(s): v for s, v in sorted(rd.ig.items())},
        },
        "digits": {"a": list(ds.a_table), "b": [ds.b(s) for s in range(ext.P)]},
        "congruences": list(breaks_congruence(ext)),
    }


def _scaffold_json(sc: Scaffold, report=None) -> dict:
    out = {"Psi": [table_json(psi) for psi in sc.Psi], "precision": sc.precision, "notes": list(sc.notes)}
    if sc.units:
        out["units"] = {_key(k): repr(u) for k, u in sorted(sc.units.items())}
    if report is not None:
        out["margins"] = {_key(k): m for k, m in sorted(report.margins.items())}
    return out


def _lam(ext, params):
    return lambda_family(ext, params.get("lambda", "pi"))


def _scaffold_from_params(ext, params, ps):
    lam = _lam(ext, params)
    given = params.get("scaffold", "sigma-minus-one")
    if given == "sigma-minus-one":
        return sigma_minus_one_scaffold(ext, lam)
    if not isinstance(given, list) or len(given) != ext.n:
        ps.fail("params.scaffold", f"expected 'sigma-minus-one' or a list of {ext.n} tables")
    psis = tuple(ps.table(t, f"params.scaffold[{i}]", ext) for i, t in enumerate(given))
    return Scaffold(ext, psis, lam)


def _xi(ext, params, ps):
    if "xi" not in params:
        ps.fail("params", "this task needs 'xi'")
    xi = ps.table(params["xi"], "params.xi", ext)
    if xi.is_zero():
        ps.fail("params.xi", "xi must be nonzero")
    return xi


def task_analyze(ext, params, ps, ctx):
    return {"uniformizer": repr(ext.uniformizer), "stability_threshold": stability_threshold(ext)}


def _oracle_check(xi, diag, lam):
    """D from the valuation profile against the up-closure of R(phi^-1(xi))."""
    ext = xi.ext
    P = ext.P
    lo, hi = diag.d - P, diag.d + 2 * P
    cs = phi_inverse_oracle(xi)
    R = R_support(cs, hi + P)
    prof = ValuationProfile(xi, lam)
    ok = True
    for b in range(P):
        for a in range(lo - b, hi - b):
            if prof.contains((a, b)) != up_closure_member(R, (a, b), P):
                ok = False
    return {"window": [lo, hi], "agrees": ok}


def task_diagram(ext, params, ps, ctx):
    lam = _lam(ext, params)
    xi = _xi(ext, params, ps)
    verdict = is_semistable_witness(xi, lam)
    out = {"diagram": verdict.diagram.as_dict(),
           "verdicts": {"semistable": verdict.semistable, "stable": verdict.stable, "reasons": list(verdict.reasons)}}
    if verdict.semistable:
        try:
            out["normalized"] = table_json(normalize_witness(xi, lam))
        except PreconditionError as e:
            out["verdicts"]["normalizable"] = str(e)
    if params.get("oracle"):
        out["oracle"] = _oracle_check(xi, verdict.diagram, lam)
    return out


def task_scaffold_verify(ext, params, ps, ctx):
    sc = _scaffold_from_params(ext, params, ps)
    max_c = params.get("max_c", 8)
    try:
        sc = certify(sc, max_c, ctx["threads"])
    except NotAScaffold as e:
        return {"scaffold": {"Psi": [table_json(p) for p in sc.Psi],
                             "margins": {_key(k): m for k, m in sorted(e.report.margins.items())}},
                "verdicts": {"scaffold": False, "reason": str(e)}}
    out = {"scaffold": _scaffold_json(sc), "verdicts": {"scaffold": True, "precision": sc.precision}}
    if params.get("psis"):
        rep = psis_check(sc, max_c)
        out["psis"] = {"precision": rep.precision, "U": {_key(k): repr(u) for k, u in sorted(rep.units.items())}}
    return out


def task_scaffold_build(ext, params, ps, ctx):
    lam = _lam(ext, params)
    max_c = params.get("max_c", 8)
    if "Phi" in params:
        phis = params["Phi"]
        if not isinstance(phis, list) or len(phis) != ext.n:
            ps.fail("params.Phi", f"expected a list of {ext.n} tables")
        phis = [ps.table(t, f"params.Phi[{i}]", ext) for i, t in enumerate(phis)]
        try:
            sc = build_from_Phi(phis, lam, max_c, ctx["threads"])
        except HypothesisViolation as e:
            return {"verdicts": {"scaffold": False, "reason": str(e)}}
        return {"scaffold": _scaffold_json(sc), "verdicts": {"scaffold": True, "precision": sc.precision}}
    xi = _xi(ext, params, ps)
    if params.get("normalize", True):
        xi = normalize_witness(xi, lam)
    sc = build_from_semistable(xi, lam, max_c, ctx["threads"])
    return {"witness_used": table_json(xi), "scaffold": _scaffold_json(sc),
            "verdicts": {"scaffold": True, "precision": sc.precision}}


def task_roundtrip(ext, params, ps, ctx):
    lam = _lam(ext, params)
    max_c = params.get("max_c", 8)
    sc = _scaffold_from_params(ext, params, ps)
    try:
        sc = certify(sc, max_c, ctx["threads"])
    except NotAScaffold as e:
        return {"verdicts": {"scaffold": False, "reason": str(e)}}
    xi, verdict = semistable_from_scaffold(sc)
    out = {"scaffold": _scaffold_json(sc), "witness": verdict.diagram.as_dict(), "witness_xi": table_json(xi)}
    nx = normalize_witness(xi, lam)
    rebuilt = build_from_semistable(nx, lam, max_c, ctx["threads"])
    out["normalized_witness"] = table_json(nx)
    out["rebuilt_scaffold"] = _scaffold_json(rebuilt)
    threshold = stability_threshold(ext)
    try:
        promoted = charp_promotion(sc)
        effective = promoted.precision
        out["promotion"] = {"promoted": True, "note": promoted.notes[-1]}
    except NotNilpotent as e:
        effective = sc.precision
        out["promotion"] = {"promoted": False, "reason": str(e)}
    out["verdicts"] = {
        "scaffold": True,
        "scaffold_precision": sc.precision,
        "effective_precision": effective,
        "semistable": verdict.semistable,
        "witness_precision": verdict.precision,
        "stable_witness": verdict.stable,
        "stability_threshold": threshold,
        "stable_by_threshold": effective >= threshold,
        "rebuilt_precision": rebuilt.precision,
    }
    return out


def task_falsify(ext, params, ps, ctx):
    family = None
    if "family" in params:
        if not isinstance(params["family"], list):
            ps.fail("params.family", "expected a list of tables")
        family = [ps.table(t, f"params.family[{i}]", ext) for i, t in enumerate(params["family"])]
    cong = breaks_congruence(ext)
    res = criterion_c_falsifier(ext, family, params.get("budget", 50), ctx["seed"], _lam(ext, params))
    return {
        "falsifier": res.as_dict(),
        "verdicts": {
            "congruences_hold": all(cong),
            "semistable": "no" if (not all(cong) or res.falsified) else "not excluded",
        },
    }


TASK_FUNCS = {
    "analyze": task_analyze,
    "diagram": task_diagram,
    "scaffold-verify": task_scaffold_verify,
    "scaffold-build": task_scaffold_build,
    "roundtrip": task_roundtrip,
    "falsify": task_falsify,
}


def run(task: str, text: str, cap: int | None = None, seed: int | None = None, threads: int = 1):
    """Run a job; returns ``(certificate, exit code)``.  Config errors raise ConfigError."""
    raw, ps = load_config(text)
    if "task" in raw and raw["task"] != task:
        raise ConfigError("task", f"config is for {raw['task']!r}, command is {task!r}", ps.line_of("task"))
    cap0 = cap if cap is not None else raw.get("cap", 64)
    ceiling = max(raw.get("cap_ceiling", 1024), cap0)
    seed = seed if seed is not None else raw.get("seed", 0)
    cert = {
        "tool": {"name": "scaffoldkit", "version": __version__},
        "task": task,
        "input": raw,
        "seed": seed,
        "caveats": [],
    }
    retries = []
    cur = cap0
    code = EXIT_OK
    while True:
        try:
            spec = build_spec(raw, ps, cur)
            ext = ArtinSchreierExtension(spec, cur)
            body = _common(ext)
            body.update(TASK_FUNCS[task](ext, raw.get("params", {}), ps, {"seed": seed, "threads": threads}))
            cert.update(body)
            cert["status"] = "ok"
            break
        except InsufficientPrecision as e:
            retries.append(cur)
            if cur * 2 > ceiling:
                cert["status"] = "error"
                cert["error"] = {"kind": "precision ceiling", "message": str(e)}
                code = EXIT_PRECISION
                break
            cur *= 2
        except (ImportedFactViolation, DiagonalShapeViolation, NotIntegral, HypothesisViolation) as e:
            cert["status"] = "error"
            cert["error"] = {"kind": type(e).__name__, "message": str(e)}
            code = EXIT_FACT
            break
        except (SpecError, PreconditionError) as e:
            raise ConfigError("extension" if isinstance(e, SpecError) else "params", str(e)) from None
    cert["precision"] = {"cap": cur, "initial_cap": cap0, "ceiling": ceiling, "retries": retries}
    if _claims_infinity(cert):
        cert["caveats"].append(f"infinite precision claims from truncated data are certified up to cap {cur}")
    return cert, code


def _claims_infinity(cert) -> bool:
    """True if some diagram with truncated input claims infinite precision."""
    for name in ("diagram", "witness"):
        d = cert.get(name)
        if d and d.get("precision") == INF and d.get("caveats"):
            return True
    return False


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="scaffoldkit", description="Galois scaffolds and semistability certificates.")
    ap.add_argument("--version", action="version", version=f"scaffoldkit {__version__}")
    sub = ap.add_subparsers(dest="task", required=True)
    for t in TASKS:
        sp = sub.add_parser(t)
        sp.add_argument("--config", required=True, help="JSON job file")
        sp.add_argument("--cap", type=int, help="initial working precision (default from config, else 64)")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--seed", type=int, help="seed for randomised searches")
        sp.add_argument("--threads", type=int, default=1, help="workers for verification sweeps")
        sp.add_argument("--output", help="write the certificate here instead of stdout")
    args = ap.parse_args(argv)
    try:
        with open(args.config, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: cannot read config: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert, code = run(args.task, text, args.cap, args.seed, max(1, args.threads))
    except ConfigError as e:
        print(f"error: {args.config}: {e}", file=sys.stderr)
        return EXIT_USAGE
    data = emit(cert, args.format)
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    if code:
        print(f"error: {cert['error']['kind']}: {cert['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
