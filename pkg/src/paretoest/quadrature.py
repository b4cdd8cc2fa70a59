"""Adaptive Gauss-Kronrod quadrature on log-domain integrands.

Integrands are supplied as vectorised functions returning ``log f``. Each
integral is shifted by the largest log-value seen on the initial panels
before exponentiation, so results whose magnitude is far outside the double
range (large-order Bessel K values, for instance) are still representable as
a log.

Half-line integrals are mapped to a finite or truncated interval after the
peak of ``y * f(y)`` has been located, so the transformed integrand is
centred whatever the natural scale of the problem is.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import QuadratureAccuracyError

__all__ = [
    "Transform",
    "QuadratureConfig",
    "QuadResult",
    "integrate_log",
    "integrate_halfline_log",
]

# 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
_XGK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525452892,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(21)
GAUSS_WEIGHTS[1:10:2] = _WG
GAUSS_WEIGHTS[11:20:2] = _WG[::-1]

_EPS = np.finfo(float).eps


class Transform(enum.Enum):
    RATIONAL = "rational"  # y = m u / (1 - u), u in (0, 1)
    EXP = "exp"  # y = m exp(v), v truncated to where the integrand matters


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000
    infinite_transform: Transform = Transform.RATIONAL
    initial_panels: int = 8

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 50:
            raise ValueError("max_subdivisions must be >= 50")

    @property
    def log_floor(self) -> float:
        """Log-integrand values this far below the peak are treated as zero."""
        return math.log(self.abs_tol) - 40.0


@dataclass(frozen=True)
class QuadResult:
    log_value: float
    rel_error: float
    subdivisions: int
    converged: bool = True

    @property
    def value(self) -> float:
        return math.exp(self.log_value) if self.log_value > -math.inf else 0.0

    @property
    def abs_error(self) -> float:
        if self.log_value == -math.inf:
            return 0.0
        try:
            return self.rel_error * math.exp(self.log_value)
        except OverflowError:
            return math.inf


def _panel_rules(log_f, lo, hi, shift, floor):
    """Kronrod estimate, error estimate and peak log value per panel."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    pts = mid[:, None] + half[:, None] * NODES[None, :]
    with np.errstate(all="ignore"):
        lf = np.asarray(log_f(pts), dtype=float)
    lf = np.where(np.isnan(lf), -np.inf, lf)
    peak = lf.max(axis=1)
    rel = lf - shift
    fv = np.where(rel > floor, np.exp(np.minimum(rel, 700.0)), 0.0)
    k = fv @ KRONROD_WEIGHTS * half
    g = fv @ GAUSS_WEIGHTS * half
    mean = k / (2.0 * half)
    resasc = np.abs(fv - mean[:, None]) @ KRONROD_WEIGHTS * half
    resabs = fv @ KRONROD_WEIGHTS * half
    err = np.abs(k - g)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where(resasc > 0, scaled, err)
    err = np.maximum(err, 50.0 * _EPS * resabs)
    return k, err, peak


def integrate_log(log_f, a: float, b: float, cfg: QuadratureConfig | None = None, *,
                  raise_on_failure: bool = True) -> QuadResult:
    """Integrate ``exp(log_f)`` over the finite interval ``[a, b]``."""
    cfg = cfg or QuadratureConfig()
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integrate_log needs a finite interval; see integrate_halfline_log")
    if b == a:
        return QuadResult(-math.inf, 0.0, 0)
    if b < a:
        raise ValueError("b must be >= a")
    edges = np.linspace(a, b, cfg.initial_panels + 1)
    lo, hi = edges[:-1], edges[1:]
    # first pass only to find the scale
    _, _, peak = _panel_rules(log_f, lo, hi, 0.0, -np.inf)
    shift = float(np.max(peak))
    if not math.isfinite(shift):
        if shift == math.inf:
            raise QuadratureAccuracyError("integrand overflowed", math.inf, math.inf)
        return QuadResult(-math.inf, 0.0, len(lo))
    floor = cfg.log_floor
    k, err, peak = _panel_rules(log_f, lo, hi, shift, floor)
    # refinement can uncover a higher peak; rescale if it is large
    frozen = np.zeros(len(lo), dtype=bool)
    min_width = 64 * _EPS * max(abs(a), abs(b), b - a)
    converged = True
    while True:
        total = float(k.sum())
        toterr = float(err.sum())
        log_abs_tol = math.log(cfg.abs_tol) - shift
        abs_tol_scaled = math.exp(log_abs_tol) if log_abs_tol < 700 else math.inf
        tol = max(abs_tol_scaled, cfg.rel_tol * abs(total))
        if toterr <= tol:
            break
        live = ~frozen
        if not live.any():
            converged = toterr <= 10 * tol
            break
        if len(lo) >= cfg.max_subdivisions:
            converged = False
            break
        order = np.argsort(-np.where(live, err, -1.0))
        cum = toterr - np.cumsum(err[order])
        n_split = int(np.searchsorted(-cum, -0.5 * tol)) + 1
        n_split = min(n_split, int(live.sum()), max(1, cfg.max_subdivisions - len(lo)))
        pick = order[:n_split]
        keep = np.ones(len(lo), dtype=bool)
        keep[pick] = False
        plo, phi = lo[pick], hi[pick]
        pmid = 0.5 * (plo + phi)
        nlo = np.concatenate([plo, pmid])
        nhi = np.concatenate([pmid, phi])
        nk, nerr, npeak = _panel_rules(log_f, nlo, nhi, shift, floor)
        nfrozen = (nhi - nlo) < min_width
        lo = np.concatenate([lo[keep], nlo])
        hi = np.concatenate([hi[keep], nhi])
        k = np.concatenate([k[keep], nk])
        err = np.concatenate([err[keep], nerr])
        frozen = np.concatenate([frozen[keep], nfrozen])
        new_peak = float(np.max(npeak))
        if new_peak > shift + 30.0:
            factor = math.exp(shift - new_peak)
            k *= factor
            err *= factor
            shift = new_peak
    total = float(k.sum())
    toterr = float(err.sum())
    log_value = math.log(total) + shift if total > 0 else -math.inf
    rel_error = toterr / total if total > 0 else (0.0 if toterr == 0 else math.inf)
    result = QuadResult(log_value, rel_error, len(lo), converged)
    if not converged and raise_on_failure:
        raise QuadratureAccuracyError(
            f"no convergence after {len(lo)} subintervals (rel err {result.rel_error:.3g})",
            result.value, result.abs_error)
    return result


def _locate_peak(h, lo=-60.0, hi=60.0, num=481):
    """Maximiser of a log-density ``h(v)`` by a coarse scan plus local refinement."""
    v = np.linspace(lo, hi, num)
    with np.errstate(all="ignore"):
        hv = np.asarray(h(v), dtype=float)
    hv = np.where(np.isnan(hv), -np.inf, hv)
    i = int(np.argmax(hv))
    if not math.isfinite(hv[i]):
        return None, -math.inf
    step = v[1] - v[0]
    center, best = v[i], hv[i]
    for _ in range(3):
        vv = np.linspace(center - step, center + step, 41)
        with np.errstate(all="ignore"):
            hh = np.asarray(h(vv), dtype=float)
        hh = np.where(np.isnan(hh), -np.inf, hh)
        j = int(np.argmax(hh))
        center, best = vv[j], hh[j]
        step = vv[1] - vv[0]
    return float(center), float(best)


def _expand(h, center, peak, floor, direction):
    step = 1.0
    v = center
    for _ in range(200):
        v = center + direction * step
        with np.errstate(all="ignore"):
            val = float(np.asarray(h(np.array([v])))[0])
        if not (val - peak > floor):  # also catches nan
            return v
        step *= 1.5
    return v


def integrate_halfline_log(log_f, lower: float = 0.0, cfg: QuadratureConfig | None = None, *,
                           raise_on_failure: bool = True) -> QuadResult:
    """Integrate ``exp(log_f(w))`` for ``w`` in ``(lower, inf)``.

    The peak of ``y f(lower + y)`` in ``log y`` sets the scale ``m`` of the
    map; the transform in ``cfg`` then decides how the half line is folded.
    """
    cfg = cfg or QuadratureConfig()

    def h(v):
        y = np.exp(v)
        return log_f(lower + y) + v

    center, peak = _locate_peak(h)
    if center is None:
        return QuadResult(-math.inf, 0.0, 0)
    log_m = center
    m = math.exp(log_m)

    if cfg.infinite_transform is Transform.RATIONAL:
        def g(u):
            y = m * u / (1.0 - u)
            return log_f(lower + y) + log_m - 2.0 * np.log1p(-u)

        return integrate_log(g, 0.0, 1.0, cfg, raise_on_failure=raise_on_failure)

    def g(v):
        return log_f(lower + m * np.exp(v)) + log_m + v

    floor = cfg.log_floor
    v_lo = _expand(g, 0.0, peak, floor, -1.0)
    v_hi = _expand(g, 0.0, peak, floor, 1.0)
    return integrate_log(g, v_lo, v_hi, cfg, raise_on_failure=raise_on_failure)
