"""Verification sweeps: one suite per family of identities.

A suite expands its parameters into independent instances; each instance is
run by :func:`run_instance` and yields one :class:`CheckReport`.  Instances
carry only plain data so they can be shipped to worker processes.
"""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

from .arith import parse_rational, rational_to_str
from .finite import (
    check_interp_F_ohno,
    check_finite_ohno,
    check_sum_formula_F,
    binomial_identity_check,
    depth2_closed_form_check,
    mhs_mod_p,
    primes_between,
    zeta_A_t,
)
from .indices import admissible_indices_upto, nonempty_indices_upto
from .interp import (
    CheckOutcome,
    G_poly,
    dep_closed_form_check,
    g_specialize_checks,
    h_poly,
    f_four_term_check,
    ohno_rhs,
    recurrence_checks,
)
from .numeric import DEFAULT_TOL, DEFAULT_TRUNC, check_ohno_numeric, check_sum_formula_numeric
from .words import NCSeries, X_series, dual_side_series, genfun_h_closed, sigma


@dataclass
class CheckReport:
    claim: str
    params: dict
    passed: bool
    counterexample: Any = None
    wall_time: float = 0.0

    def to_dict(self, stable: bool = False) -> dict:
        out = {"claim": self.claim, **self.params, "pass": self.passed}
        if not self.passed:
            out["counterexample"] = self.counterexample
        if not stable:
            out["time"] = round(self.wall_time, 6)
        return out


class SuiteError(ValueError):
    """Unknown suite or parameters outside the supported range."""


@dataclass
class SuiteParams:
    max_weight: int | None = None
    max_m: int | None = None
    k_max: int | None = None
    primes: tuple[int, int] | None = None
    trunc: int = DEFAULT_TRUNC
    tol: float = DEFAULT_TOL
    t_values: tuple[Fraction, ...] = field(default_factory=lambda: (Fraction(0), Fraction(1, 2), Fraction(1)))


def parse_prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i, hi_i = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError as exc:
        raise SuiteError(f"bad prime range {text!r}, expected a..b") from exc
    if lo_i > hi_i or hi_i < 3:
        raise SuiteError(f"empty prime range {text!r}")
    return lo_i, hi_i


def parse_t_values(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise SuiteError(str(exc)) from exc


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return rational_to_str(obj)
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, list):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(_jsonable(k)) if isinstance(k, tuple) else str(k): _jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj


def _failures(outcomes: Iterable[CheckOutcome]) -> list[dict]:
    return [
        {"check": o.name, "lhs": _jsonable(o.lhs), "rhs": _jsonable(o.rhs), **_jsonable(o.extra)}
        for o in outcomes if not o
    ]


# --- instance runners -------------------------------------------------------

def _run_recurrences(k, m):
    bad = _failures(recurrence_checks(k, m))
    return not bad, bad or None


def _run_f_identity(k, e, i):
    ok = f_four_term_check(k, e, i)
    return ok, None if ok else {"k": k, "e": e, "i": i}


def _run_gh(k, m):
    G, h = G_poly(m, k), h_poly(m, k)
    ok = G == h
    return ok, None if ok else {"G": G.to_json(), "h": h.to_json()}


def _run_genfun(k, U):
    direct = X_series(k, U, "direct")
    closed = X_series(k, U, "closed")
    via_sigma = sigma(closed)
    product = genfun_h_closed(k, U)
    layers = NCSeries.from_layers(U, [h_poly(m, k) for m in range(U + 1)])
    checks = {
        "X-direct-vs-closed": direct == closed,
        "sigma-X-vs-product": via_sigma == product,
        "product-vs-h-layers": product == layers,
    }
    ok = all(checks.values())
    return ok, None if ok else checks


def _run_dual_genfun(k, U):
    series = dual_side_series(k, U)
    want = NCSeries.from_layers(U, [ohno_rhs(k, m, True) for m in range(U + 1)])
    ok = series == want
    return ok, None if ok else {"series": series.to_json(), "expected": want.to_json()}


def _run_specialize(k, m):
    outcomes = g_specialize_checks(m, k)
    if len(k) <= 2:
        outcomes.append(dep_closed_form_check(k, m))
    bad = _failures(outcomes)
    return not bad, bad or None


def _run_fmzv_ohno(k, m, p):
    plain = check_finite_ohno(k, m, p)
    interp = check_interp_F_ohno(k, m, p)
    bad = _failures([plain, interp])
    return not bad, bad or None


def _run_fmzv_sum(k, r, p):
    out = check_sum_formula_F(k, r, p)
    return out.passed, None if out else _failures([out])


def _run_depth2(a, b, p):
    ok = depth2_closed_form_check(a, b, p)
    return ok, None if ok else {"a": a, "b": b, "p": p}


def _run_claim(k, r):
    ok = binomial_identity_check(k, r)
    return ok, None


def _run_numeric_ohno(k, m, t, N, tol):
    out = check_ohno_numeric(k, m, parse_rational(t), N, tol)
    return out.passed, None if out else _failures([out])


def _run_numeric_sum(k, r, t, N, tol):
    out = check_sum_formula_numeric(k, r, parse_rational(t), N, tol)
    return out.passed, None if out else _failures([out])


def _run_star_oracle(k, p):
    via_interp = zeta_A_t(k, p).eval(1)
    direct = mhs_mod_p(k, p, star=True)
    ok = via_interp == direct
    return ok, None if ok else {"interpolated_at_1": via_interp, "star_sum": direct}


RUNNERS = {
    "recurrences": _run_recurrences,
    "f-identity": _run_f_identity,
    "gh-equality": _run_gh,
    "genfun": _run_genfun,
    "dual-genfun": _run_dual_genfun,
    "specialize": _run_specialize,
    "fmzv-ohno": _run_fmzv_ohno,
    "fmzv-sum": _run_fmzv_sum,
    "depth2-closed-form": _run_depth2,
    "claim": _run_claim,
    "numeric-ohno": _run_numeric_ohno,
    "numeric-sum": _run_numeric_sum,
    "star-oracle": _run_star_oracle,
}

PARAM_NAMES = {
    "recurrences": ("k", "m"),
    "f-identity": ("k", "e", "i"),
    "gh-equality": ("k", "m"),
    "genfun": ("k", "U"),
    "dual-genfun": ("k", "U"),
    "specialize": ("k", "m"),
    "fmzv-ohno": ("k", "m", "p"),
    "fmzv-sum": ("k", "r", "p"),
    "depth2-closed-form": ("a", "b", "p"),
    "claim": ("k", "r"),
    "numeric-ohno": ("k", "m", "t", "trunc", "tol"),
    "numeric-sum": ("k", "r", "t", "trunc", "tol"),
    "star-oracle": ("k", "p"),
}

SUITES = (
    "recurrences", "gh-equality", "genfun", "dual-genfun", "fmzv-ohno", "fmzv-sum",
    "claim", "numeric-ohno", "numeric-sum", "specialize", "star-oracle",
)

# (max_weight, max_m, k_max) used when a flag is not given
DEFAULTS = {
    "recurrences": (7, 4, None),
    "gh-equality": (7, 4, None),
    "genfun": (6, 4, None),
    "dual-genfun": (6, 4, None),
    "specialize": (6, 4, None),
    "fmzv-ohno": (5, 3, None),
    "fmzv-sum": (None, None, 7),
    "claim": (None, None, 10),
    "numeric-ohno": (5, 2, None),
    "numeric-sum": (None, None, 6),
    "star-oracle": (6, None, None),
}

Instance = tuple  # (runner name, args tuple)


def _limits(name: str, params: SuiteParams) -> tuple[int, int, int]:
    dw, dm, dk = DEFAULTS[name]
    w = params.max_weight if params.max_weight is not None else dw
    m = params.max_m if params.max_m is not None else dm
    k = params.k_max if params.k_max is not None else dk
    for label, val in (("max-weight", w), ("max-m", m), ("k-max", k)):
        if val is not None and val < 0:
            raise SuiteError(f"--{label} must be non-negative")
    return w, m, k


def instances(name: str, params: SuiteParams) -> list[Instance]:
    """Expand a suite into its instance list, in deterministic order."""
    if name not in DEFAULTS:
        raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    W, M, K = _limits(name, params)
    default_primes = (5, 47) if name == "star-oracle" else (11, 47)
    primes = primes_between(*(params.primes or default_primes))
    out: list[Instance] = []
    if name == "recurrences":
        out += [("recurrences", (k, m)) for k in nonempty_indices_upto(W) for m in range(M + 1)]
        out += [("f-identity", (k, e, i)) for k in range(1, W + 2)
                for e in range(M + 3) for i in range(M + 1)]
    elif name == "gh-equality":
        out += [(name, (k, m)) for k in nonempty_indices_upto(W) for m in range(M + 1)]
    elif name == "genfun":
        out += [(name, (k, M)) for k in nonempty_indices_upto(W)]
    elif name == "dual-genfun":
        out += [(name, (k, M)) for k in admissible_indices_upto(W)]
    elif name == "specialize":
        out += [(name, (k, m)) for k in nonempty_indices_upto(W) for m in range(M + 1)]
    elif name == "fmzv-ohno":
        out += [(name, (k, m, p)) for k in nonempty_indices_upto(W) for m in range(M + 1)
                for p in primes if p > sum(k) + m + 2]
    elif name == "fmzv-sum":
        out += [(name, (k, r, p)) for k in range(2, K + 1) for r in range(1, k)
                for p in primes if p > k + 2]
        out += [("depth2-closed-form", (a, b, p)) for s in range(2, K + 2)
                for a in range(1, s) for b in (s - a,) for p in primes if s <= p - 2]
    elif name == "claim":
        out += [(name, (k, r)) for k in range(3, K + 1) for r in range(2, k)]
    elif name == "numeric-ohno":
        if params.trunc < 10:
            raise SuiteError("--trunc must be >= 10")
        ts = [rational_to_str(t) for t in params.t_values]
        out += [(name, (k, m, t, params.trunc, params.tol)) for k in admissible_indices_upto(W)
                for m in range(M + 1) for t in ts]
    elif name == "numeric-sum":
        if params.trunc < 10:
            raise SuiteError("--trunc must be >= 10")
        ts = [rational_to_str(t) for t in params.t_values]
        out += [(name, (k, r, t, params.trunc, params.tol)) for k in range(2, K + 1)
                for r in range(1, k) for t in ts]
    elif name == "star-oracle":
        primes = [p for p in primes if p >= 5]
        out += [(name, (k, p)) for k in nonempty_indices_upto(W) for p in primes]
    return out


def run_instance(inst: Instance) -> CheckReport:
    runner, args = inst
    start = time.perf_counter()
    passed, counterexample = RUNNERS[runner](*args)
    elapsed = time.perf_counter() - start
    params = {key: (list(v) if isinstance(v, tuple) else v) for key, v in zip(PARAM_NAMES[runner], args)}
    return CheckReport(runner, params, bool(passed), counterexample, elapsed)


def run_suite(name: str, params: SuiteParams, jobs: int = 1) -> Iterator[CheckReport]:
    """Run every instance of a suite; reports come back in instance order."""
    todo = instances(name, params)
    if jobs <= 1:
        for inst in todo:
            yield run_instance(inst)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() preserves submission order regardless of completion order
        yield from pool.map(run_instance, todo, chunksize=max(1, len(todo) // (8 * jobs)))


CSV_FIELDS = ("claim", "params", "pass", "counterexample", "time")


def format_report(report: CheckReport, fmt: str, stable: bool) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(stable), sort_keys=False, separators=(",", ":"))
    buf = io.StringIO()
    row = [
        report.claim,
        json.dumps(report.params, separators=(",", ":")),
        "true" if report.passed else "false",
        "" if report.passed else json.dumps(report.counterexample, separators=(",", ":")),
        "" if stable else f"{report.wall_time:.6f}",
    ]
    csv.writer(buf, lineterminator="").writerow(row)
    return buf.getvalue()
