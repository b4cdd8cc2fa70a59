"""Reference moments by direct numerical integration.

The MLE estimators are integrated against the exact density of the MLE of
alpha, and the UMVUE estimators against the gamma density of
``S = log t - n log k``. No series expansion is involved, so these values are
the yardstick for the closed forms in :mod:`paretoest.exact_moments`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from . import exact_moments as em
from .estimators import EstimatorKind, Tag, Target
from .exceptions import DomainError, MomentDoesNotExistError, ParetoError, QuadratureAccuracyError
from .model import ParetoParams, cdf, pdf
from .quadrature import QuadratureConfig, integrate_halfline_log, integrate_log
from .reports import Engine, MomentReport, assemble

__all__ = [
    "OracleValue",
    "moment_mle",
    "moment_umvue",
    "moment",
    "mse_via_quadrature",
    "mse_exact_special",
    "DeviationRow",
    "deviation_report",
    "ALL_KINDS",
]

ALL_KINDS = (
    EstimatorKind(Tag.MLE, Target.PDF),
    EstimatorKind(Tag.UMVUE, Target.PDF),
    EstimatorKind(Tag.MLE, Target.CDF),
    EstimatorKind(Tag.UMVUE, Target.CDF),
)


@dataclass(frozen=True)
class OracleValue:
    value: float
    abs_error: float
    converged: bool = True


def _finish(results, raise_on_failure):
    value = sum(r.value for r in results)
    err = sum(r.abs_error for r in results)
    ok = all(r.converged for r in results)
    if not ok and raise_on_failure:
        raise QuadratureAccuracyError("quadrature did not converge", value, err)
    return OracleValue(value, err, ok)


def _c(k, x):
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    return math.log(x / k)


def moment_mle(statistic: Target, r: int, n: int, alpha: float, k: float = 1.0,
               x: float | None = None, cfg: QuadratureConfig | None = None, *,
               raise_on_failure: bool = True) -> OracleValue:
    """``int_0^inf stat(w)^r g(w) dw`` with ``g`` the density of the MLE of alpha."""
    statistic = Target(statistic)
    if r < 1 or n < 1:
        raise DomainError("need r >= 1 and n >= 1")

    def log_g(w):
        return em.log_g_density(w, n, alpha)

    if statistic is Target.ALPHA:
        if n <= r:
            raise MomentDoesNotExistError(f"E(W^{r}) diverges for n <= {r}")
        log_f = lambda w: r * np.log(w) + log_g(w)  # noqa: E731
    else:
        c = _c(k, x)
        if statistic is Target.PDF:
            if c == 0 and n <= r:
                raise MomentDoesNotExistError(f"E(f_mle(k)^{r}) diverges for n <= {r}")
            lx = math.log(x)
            log_f = lambda w: r * (np.log(w) - c * w - lx) + log_g(w)  # noqa: E731
        else:
            if c == 0:
                return OracleValue(0.0, 0.0)
            log_f = lambda w: r * np.log(-np.expm1(-c * w)) + log_g(w)  # noqa: E731
    res = integrate_halfline_log(log_f, 0.0, cfg, raise_on_failure=False)
    return _finish([res], raise_on_failure)


def moment_umvue(statistic: Target, r: int, n: int, alpha: float, k: float = 1.0,
                 x: float | None = None, cfg: QuadratureConfig | None = None, *,
                 raise_on_failure: bool = True) -> OracleValue:
    """``E(stat^r)`` over ``z = log t - n log k``, which is Gamma(n, rate alpha).

    The support is split at ``z = log(x/k)``: below it the density estimate is
    0 and the cdf estimate is 1.
    """
    statistic = Target(statistic)
    if n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    if r < 1:
        raise DomainError("r must be >= 1")
    la = math.log(alpha)
    lgn = float(gammaln(n))

    def log_h(z):
        return n * la + (n - 1) * np.log(z) - alpha * z - lgn

    if statistic is Target.ALPHA:
        if n <= r + 1:
            raise MomentDoesNotExistError(f"E(alpha_umvue^{r}) diverges for n <= {r + 1}")
        ln1 = math.log(n - 1)
        res = integrate_halfline_log(lambda z: r * (ln1 - np.log(z)) + log_h(z), 0.0, cfg,
                                     raise_on_failure=False)
        return _finish([res], raise_on_failure)

    c = _c(k, x)
    if statistic is Target.PDF:
        if c == 0 and n <= r:
            raise MomentDoesNotExistError(f"E(f_umvue(k)^{r}) diverges for n <= {r}")
        lx, ln1 = math.log(x), math.log(n - 1)

        def log_f(u):
            z = u + c
            return r * (ln1 + (n - 2) * np.log(u) - lx - (n - 1) * np.log(z)) + log_h(z)

        res = integrate_halfline_log(log_f, 0.0, cfg, raise_on_failure=False)
        return _finish([res], raise_on_failure)

    if c == 0:
        return OracleValue(0.0, 0.0)

    def log_f(u):
        z = u + c
        return r * np.log(-np.expm1((n - 1) * np.log1p(-c / z))) + log_h(z)

    upper = integrate_halfline_log(log_f, 0.0, cfg, raise_on_failure=False)
    lower = integrate_log(log_h, 0.0, c, cfg, raise_on_failure=False)
    return _finish([upper, lower], raise_on_failure)


def moment(kind: EstimatorKind, r: int, n: int, alpha: float, k: float = 1.0,
           x: float | None = None, cfg: QuadratureConfig | None = None, **kw) -> OracleValue:
    fn = moment_mle if kind.tag is Tag.MLE else moment_umvue
    return fn(kind.target, r, n, alpha, k, x, cfg, **kw)


def _target_value(kind, alpha, k, x):
    if kind.target is Target.ALPHA:
        return alpha
    p = ParetoParams(alpha, k)
    return pdf(p, x) if kind.target is Target.PDF else cdf(p, x)


def mse_via_quadrature(kind: EstimatorKind, n: int, alpha: float, k: float = 1.0,
                       x: float | None = None, cfg: QuadratureConfig | None = None, *,
                       raise_on_failure: bool = True) -> MomentReport:
    """Mean, second moment and MSE from the r = 1 and r = 2 quadrature moments."""
    m1 = moment(kind, 1, n, alpha, k, x, cfg, raise_on_failure=raise_on_failure)
    m2 = moment(kind, 2, n, alpha, k, x, cfg, raise_on_failure=raise_on_failure)
    flags = () if (m1.converged and m2.converged) else ("quadrature_not_converged",)
    return assemble(Engine.QUADRATURE, kind, None if kind.target is Target.ALPHA else x,
                    _target_value(kind, alpha, k, x), m1.value, m2.value, flags)


def mse_exact_special(kind: EstimatorKind, n: int, alpha: float, k: float, x: float,
                      cfg: QuadratureConfig | None = None) -> MomentReport:
    """MSE from the Bessel-K (MLE) or Kummer-U (UMVUE) exact moments."""
    from . import special as sp

    target = _target_value(kind, alpha, k, x)
    if kind.target is Target.ALPHA:
        raise DomainError("alpha moments have elementary closed forms; no special function needed")
    if kind.tag is Tag.MLE:
        if kind.target is Target.PDF:
            mean = sp.exact_mle_moment_bessel(n, alpha, k, x, 1, cfg)
            second = sp.exact_mle_moment_bessel(n, alpha, k, x, 2, cfg)
        else:
            mean = sp.exact_mle_cdf_moment_bessel(n, alpha, k, x, 1, cfg)
            second = sp.exact_mle_cdf_moment_bessel(n, alpha, k, x, 2, cfg)
        return assemble(Engine.BESSEL_EXACT, kind, x, target, mean, second)
    if kind.target is Target.PDF:
        second = sp.exact_umvue_pdf_second_moment_kummer(n, alpha, k, x, cfg)
    else:
        second = sp.exact_umvue_cdf_second_moment_kummer(n, alpha, k, x, cfg)
    return assemble(Engine.KUMMER_EXACT, kind, x, target, target, second)


_CLOSED = {
    (Tag.MLE, Target.PDF): em.mse_mle_pdf,
    (Tag.MLE, Target.CDF): em.mse_mle_cdf,
    (Tag.UMVUE, Target.PDF): em.mse_umvue_pdf,
    (Tag.UMVUE, Target.CDF): em.mse_umvue_cdf,
}


def mse_closed_form(kind: EstimatorKind, n: int, alpha: float, k: float = 1.0,
                    x: float | None = None) -> MomentReport:
    if kind.target is Target.ALPHA:
        return (em.mle_alpha_moments if kind.tag is Tag.MLE else em.umvue_alpha_moments)(n, alpha)
    return _CLOSED[(kind.tag, kind.target)](n, alpha, k, x)


@dataclass
class DeviationRow:
    n: int
    alpha: float
    k: float
    x: float | None
    estimator: str
    target: str
    closed: float
    quadrature: float
    exact_special: float
    rel_dev: float
    flags: list[str] = field(default_factory=list)
    special_rel_dev: float = math.nan
    mc: float = math.nan
    mc_se: float = math.nan

    @property
    def flag(self) -> str:
        return ";".join(self.flags) if self.flags else "ok"


def deviation_report(n: int, alpha: float, k: float, x_grid, cfg: QuadratureConfig | None = None, *,
                     include_alpha: bool = False, mc_reps: int | None = None, seed: int = 0,
                     special_rtol: float = 1e-8) -> list[DeviationRow]:
    """Closed-form MSE against quadrature and the exact special-function MSE.

    One row per ``(x, estimator, target)``. ``rel_dev`` is
    ``|closed - quadrature| / max(|quadrature|, abs_tol)``. With ``mc_reps``
    each row is also checked against a seeded brute-force Monte Carlo MSE,
    and rows further than 4 standard errors from quadrature are flagged.
    """
    cfg = cfg or QuadratureConfig()
    xs = [float(v) for v in x_grid]
    if not xs:
        raise ValueError("x_grid must not be empty")
    jobs = [(x, kind) for x in xs for kind in ALL_KINDS]
    if include_alpha:
        jobs.append((None, EstimatorKind(Tag.MLE, Target.ALPHA)))
    rows = []
    for x, kind in jobs:
        flags = []
        try:
            closed = mse_closed_form(kind, n, alpha, k, x).mse
        except ParetoError as exc:
            closed = math.nan
            flags.append(f"closed_undefined:{type(exc).__name__}")
        try:
            quad = mse_via_quadrature(kind, n, alpha, k, x, cfg, raise_on_failure=False)
            if quad.flags:
                flags.extend(quad.flags)
            quad_mse = quad.mse
        except ParetoError as exc:
            quad_mse = math.nan
            flags.append(f"quadrature_undefined:{type(exc).__name__}")
        special = math.nan
        special_dev = math.nan
        if kind.target is not Target.ALPHA:
            try:
                special = mse_exact_special(kind, n, alpha, k, x, cfg).mse
                special_dev = abs(special - quad_mse) / max(abs(quad_mse), cfg.abs_tol)
                if special_dev > special_rtol:
                    flags.append("special_mismatch")
            except (ParetoError, QuadratureAccuracyError) as exc:
                flags.append(f"special_failed:{type(exc).__name__}")
        rel_dev = abs(closed - quad_mse) / max(abs(quad_mse), cfg.abs_tol)
        row = DeviationRow(n, alpha, k, x, kind.tag.value, kind.target.value, closed, quad_mse,
                           special, rel_dev, flags, special_dev)
        if mc_reps:
            from .montecarlo import brute_force_moment

            try:
                mc = brute_force_moment(kind, 1, n, alpha, k, x, mc_reps, seed)
                row.mc, row.mc_se = mc.mse, mc.mse_std_error
                if abs(mc.mse - quad_mse) > 4.0 * mc.mse_std_error:
                    flags.append("mc_outside_4se")
            except ParetoError as exc:
                flags.append(f"mc_failed:{type(exc).__name__}")
        rows.append(row)
    return rows
