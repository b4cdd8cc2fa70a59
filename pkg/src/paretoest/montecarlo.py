"""Seeded Monte Carlo: brute-force estimator moments and the random-x MSE tables.

Two kinds of simulation live here. :func:`brute_force_moment` draws many
samples and looks at the spread of the estimator itself, which makes it
independent of every analytic formula in the package. :func:`simulate_table`
follows the random-evaluation-point protocol: draw a sample, take its first
observation as ``x``, compute the per-point MSE analytically and average.

Every random stream is addressed by a key, never by position in a loop, so
serial and parallel runs agree bit for bit.
"""
from __future__ import annotations

import enum
import itertools
import math
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import exact_moments as em
from .estimators import EstimatorKind, Tag, Target, evaluate_from_stat
from .exceptions import DegenerateSampleError, DomainError, ParetoError, QuadratureAccuracyError
from .model import ParetoParams, cdf, make_rng, pdf, quantile
from .oracle import ALL_KINDS, mse_closed_form, mse_via_quadrature
from .quadrature import QuadratureConfig
from .reports import Engine, MomentReport

__all__ = [
    "XPolicy",
    "PerRepEngine",
    "SimulationConfig",
    "TableRow",
    "brute_force_moment",
    "simulate_cell",
    "simulate_table",
    "EfficiencySummary",
    "efficiency_report",
    "PAPER_N_GRID",
    "PAPER_PAIRS",
    "paper_config",
]

_BLOCK_ROWS = 8192
_BRUTE_STREAM = 0x42525554  # tags brute-force streams apart from table streams
_TABLE_STREAM = 0x5441424C
_MAX_DEGENERATE_FRACTION = 1e-4

PAPER_N_GRID = tuple(range(4, 16)) + tuple(range(20, 101, 5))
PAPER_PAIRS = ((0.5, 0.5), (1.0, 1.0), (1.5, 1.5), (2.0, 2.0), (0.5, 2.0), (2.0, 0.5))


def _bits(v: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", float(v)))[0]


def _target(kind: EstimatorKind, alpha, k, x):
    if kind.target is Target.ALPHA:
        return alpha
    p = ParetoParams(alpha, k)
    return float(pdf(p, x) if kind.target is Target.PDF else cdf(p, x))


def _stat_block(rng, rows, n, alpha):
    # same inverse-cdf transform as model.sample, reduced to log(x/k)
    u = rng.random((rows, n))
    return (-np.log1p(-u) / alpha).sum(axis=1)


def brute_force_moment(kind: EstimatorKind, r: int, n: int, alpha: float, k: float = 1.0,
                       x: float | None = None, reps: int = 100_000, seed: int = 0) -> MomentReport:
    """Empirical moments of ``estimator^r`` over ``reps`` fresh samples.

    For ``r = 1`` this is the ordinary mean, second moment and MSE. For
    ``r > 1`` the statistic is ``estimator^r`` and its target ``target^r``.
    Block ``b`` of replications uses the stream keyed ``(seed, tag, b)``.

    Samples whose sum of logs is 0 (every draw at ``k``) make the estimators
    undefined. They are dropped if rarer than 0.01% of ``reps``.
    """
    if reps < 100:
        raise DomainError("reps must be >= 100")
    if r < 1:
        raise DomainError("r must be >= 1")
    if kind.tag is Tag.UMVUE and n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    if kind.target is not Target.ALPHA:
        if x is None or not x >= k:
            raise DomainError(f"x must be given and >= k={k}")
    ParetoParams(alpha, k)
    parts = []
    done = 0
    b = 0
    while done < reps:
        rows = min(_BLOCK_ROWS, reps - done)
        s = _stat_block(make_rng(seed, _BRUTE_STREAM, b), rows, n, alpha)
        with np.errstate(divide="ignore", invalid="ignore"):
            parts.append(np.asarray(evaluate_from_stat(kind, s, n, k, x), dtype=float))
        done += rows
        b += 1
    v = np.concatenate(parts)
    ok = np.isfinite(v)
    bad = int(v.size - ok.sum())
    flags = ()
    if bad:
        if bad > _MAX_DEGENERATE_FRACTION * reps:
            raise DegenerateSampleError(f"{bad} of {reps} samples were degenerate")
        v = v[ok]
        flags = (f"excluded_degenerate:{bad}",)
    t = _target(kind, alpha, k, x) ** r
    if r > 1:
        v = v ** r
    m = v.size
    d2 = (v - t) ** 2
    mean = float(v.mean())
    second = float((v * v).mean())
    mse = float(d2.mean())
    bias = mean - t
    root = math.sqrt(m)
    return MomentReport(
        Engine.MONTE_CARLO, kind, None if kind.target is Target.ALPHA else x, t,
        mean, second, mse - bias * bias, bias, mse,
        std_error=float(v.std(ddof=1)) / root,
        second_std_error=float((v * v).std(ddof=1)) / root,
        mse_std_error=float(d2.std(ddof=1)) / root,
        flags=flags,
    )


class XPolicy(enum.Enum):
    FIRST_OBSERVATION = "first"
    FIXED_POINT = "fixed"


class PerRepEngine(enum.Enum):
    CLOSED_FORM = "closed"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class SimulationConfig:
    """Grid and protocol for :func:`simulate_table`.

    Cells are ``n_grid x pairs`` when ``pairs`` is given, otherwise
    ``n_grid x alpha_grid x k_grid``.
    """

    reps: int = 1000
    n_grid: tuple[int, ...] = (10,)
    alpha_grid: tuple[float, ...] = (1.0,)
    k_grid: tuple[float, ...] = (1.0,)
    seed: int = 0
    x_policy: XPolicy = XPolicy.FIRST_OBSERVATION
    fixed_x: float | None = None
    engine_for_per_rep_mse: PerRepEngine = PerRepEngine.QUADRATURE
    pairs: tuple[tuple[float, float], ...] | None = None
    quadrature: QuadratureConfig = field(default_factory=lambda: QuadratureConfig(rel_tol=1e-9))

    def __post_init__(self):
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if not self.n_grid or not (self.pairs or (self.alpha_grid and self.k_grid)):
            raise ValueError("grids must be nonempty")
        if min(self.n_grid) < 3:
            raise ValueError("n_grid entries must be >= 3")
        for a, k in self.cell_pairs():
            ParetoParams(a, k)
        if self.x_policy is XPolicy.FIXED_POINT and self.fixed_x is None:
            raise ValueError("FixedPoint policy needs fixed_x")

    def cell_pairs(self):
        if self.pairs:
            return [tuple(map(float, p)) for p in self.pairs]
        return [(float(a), float(k)) for a, k in itertools.product(self.alpha_grid, self.k_grid)]

    def cells(self):
        return [(int(n), a, k) for a, k in self.cell_pairs() for n in self.n_grid]


@dataclass(frozen=True)
class TableRow:
    n: int
    alpha: float
    k: float
    mse_umvue_pdf: float
    mse_mle_pdf: float
    mse_umvue_cdf: float
    mse_mle_cdf: float
    se_umvue_pdf: float
    se_mle_pdf: float
    se_umvue_cdf: float
    se_mle_cdf: float
    reps: int
    failed_reps: int = 0
    flags: tuple[str, ...] = ()

    FIELDS = ("n", "alpha", "k", "mse_umvue_pdf", "mse_mle_pdf", "mse_umvue_cdf",
              "mse_mle_cdf", "se_umvue_pdf", "se_mle_pdf", "se_umvue_cdf", "se_mle_cdf",
              "reps", "failed_reps", "flags")

    @property
    def std_errors(self):
        return (self.se_umvue_pdf, self.se_mle_pdf, self.se_umvue_cdf, self.se_mle_cdf)

    def as_dict(self):
        d = {f: getattr(self, f) for f in self.FIELDS}
        d["flags"] = ";".join(self.flags)
        return d


# column order of TableRow
_ROW_KINDS = (ALL_KINDS[1], ALL_KINDS[0], ALL_KINDS[3], ALL_KINDS[2])


def _per_point(config: SimulationConfig, n, alpha, k, x):
    out = []
    ok = True
    for kind in _ROW_KINDS:
        if config.engine_for_per_rep_mse is PerRepEngine.QUADRATURE:
            rep = mse_via_quadrature(kind, n, alpha, k, x, config.quadrature, raise_on_failure=False)
            ok &= not rep.flags or rep.flags == ("negative_mse",)
        else:
            rep = mse_closed_form(kind, n, alpha, k, x)
        out.append(rep.mse)
    return out, ok


def simulate_cell(config: SimulationConfig, n: int, alpha: float, k: float) -> TableRow:
    """One table cell. Replication ``i`` uses the stream keyed by the cell's values and ``i``."""
    params = ParetoParams(alpha, k)
    vals = np.empty((config.reps, 4))
    failed = 0
    flags = []
    for i in range(config.reps):
        if config.x_policy is XPolicy.FIRST_OBSERVATION:
            rng = make_rng(config.seed, _TABLE_STREAM, n, _bits(alpha), _bits(k), i)
            x = float(quantile(params, rng.random(n))[0])
        else:
            x = float(config.fixed_x)
        try:
            row, ok = _per_point(config, n, alpha, k, x)
        except (ParetoError, QuadratureAccuracyError):
            row, ok = [math.nan] * 4, False
        if not ok or not all(math.isfinite(v) for v in row):
            failed += 1
        vals[i] = row
    finite = np.isfinite(vals).all(axis=1)
    if failed:
        flags.append(f"failed_reps:{failed}")
    if not finite.all():
        flags.append(f"excluded_nonfinite:{int((~finite).sum())}")
    v = vals[finite]
    m = v.shape[0]
    means = v.mean(axis=0) if m else np.full(4, math.nan)
    ses = v.std(axis=0, ddof=1) / math.sqrt(m) if m > 1 else np.full(4, math.nan)
    return TableRow(n, alpha, k, *map(float, means), *map(float, ses), reps=config.reps,
                    failed_reps=failed, flags=tuple(flags))


def _cell_job(args):
    config, n, alpha, k = args
    return simulate_cell(config, n, alpha, k)


def simulate_table(config: SimulationConfig, workers: int | None = None) -> list[TableRow]:
    """All cells of ``config``, serially or across ``workers`` processes.

    The rows depend only on ``config``; ``workers`` changes wall time, not values.
    """
    jobs = [(config, n, a, k) for n, a, k in config.cells()]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_cell_job, jobs))
    return [_cell_job(j) for j in jobs]


def paper_config(reps: int = 1000, seed: int = 0, **kw) -> SimulationConfig:
    """n in 4..15 then 20..100 by 5 (29 values), with the six (alpha, k) column pairs."""
    return SimulationConfig(reps=reps, n_grid=PAPER_N_GRID, seed=seed, pairs=PAPER_PAIRS, **kw)


@dataclass
class EfficiencySummary:
    ratios: list[dict]
    pdf_cells_mle_better: int
    cdf_cells_mle_better: int
    cells: int
    alpha_comparison: list[dict]

    @property
    def all_ratios_finite(self) -> bool:
        return all(math.isfinite(r["pdf_ratio"]) and math.isfinite(r["cdf_ratio"]) for r in self.ratios)


def efficiency_report(rows: list[TableRow], *, alpha_reps: int = 100_000, seed: int = 0
                      ) -> EfficiencySummary:
    """MLE-to-UMVUE MSE ratios per cell, plus the alpha-estimator comparison.

    A ratio below 1 means the MLE has the smaller MSE. For each distinct
    ``(n, alpha)`` the exact MSE of the MLE of alpha is set against a Monte
    Carlo MSE of the UMVUE of alpha.
    """
    if not rows:
        raise ValueError("rows must be nonempty")
    ratios = []
    for r in rows:
        ratios.append({
            "n": r.n, "alpha": r.alpha, "k": r.k,
            "pdf_ratio": r.mse_mle_pdf / r.mse_umvue_pdf if r.mse_umvue_pdf > 0 else math.nan,
            "cdf_ratio": r.mse_mle_cdf / r.mse_umvue_cdf if r.mse_umvue_cdf > 0 else math.nan,
        })
    alpha_rows = []
    for n, a in sorted({(r.n, r.alpha) for r in rows}):
        mle = em.mle_alpha_moments(n, a).mse
        mc = brute_force_moment(EstimatorKind(Tag.UMVUE, Target.ALPHA), 1, n, a, 1.0, None,
                                alpha_reps, seed)
        alpha_rows.append({"n": n, "alpha": a, "mse_mle_alpha": mle, "mse_umvue_alpha_mc": mc.mse,
                           "se_umvue_alpha_mc": mc.mse_std_error,
                           "umvue_better": mc.mse < mle})
    return EfficiencySummary(
        ratios,
        sum(1 for q in ratios if q["pdf_ratio"] < 1),
        sum(1 for q in ratios if q["cdf_ratio"] < 1),
        len(ratios),
        alpha_rows,
    )
