"""Pareto distribution with shape ``alpha`` and known minimum ``k``.

The density is ``alpha * k**alpha / x**(alpha + 1)`` on ``x >= k``. Evaluation
below the support returns 0 instead of raising, so grids that straddle ``k``
can be evaluated directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import DomainError

__all__ = [
    "ParetoParams",
    "SampleData",
    "pdf",
    "cdf",
    "quantile",
    "sample",
    "make_rng",
]


@dataclass(frozen=True)
class ParetoParams:
    alpha: float
    k: float

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be a positive finite number, got {self.alpha!r}")
        if not (self.k > 0 and math.isfinite(self.k)):
            raise DomainError(f"k must be a positive finite number, got {self.k!r}")


@dataclass(frozen=True)
class SampleData:
    """An i.i.d. sample together with its sufficient statistics.

    ``s_stat`` is ``sum(log(x_i / k_ref))`` and ``log_t`` is ``sum(log(x_i))``;
    both are computed once at construction and every estimator reads them
    from here.
    """

    values: tuple[float, ...]
    k_ref: float
    s_stat: float = field(init=False)
    log_t: float = field(init=False)

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if len(values) < 1:
            raise DomainError("a sample needs at least one observation")
        if not (self.k_ref > 0 and math.isfinite(self.k_ref)):
            raise DomainError(f"k must be a positive finite number, got {self.k_ref!r}")
        arr = np.asarray(values)
        if not np.all(np.isfinite(arr)):
            raise DomainError("sample values must be finite")
        if np.any(arr < self.k_ref):
            raise DomainError(f"every observation must be >= k={self.k_ref}")
        object.__setattr__(self, "values", values)
        s = float(np.sum(np.log(arr / self.k_ref)))
        object.__setattr__(self, "s_stat", max(s, 0.0))
        object.__setattr__(self, "log_t", s + len(values) * math.log(self.k_ref))

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def from_values(cls, values, k: float) -> SampleData:
        return cls(tuple(values), float(k))


def pdf(params: ParetoParams, x):
    """Density at ``x``; zero below ``k``. Accepts scalars or arrays."""
    a, k = params.alpha, params.k
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        logf = math.log(a) + a * math.log(k) - (a + 1.0) * np.log(x)
        out = np.where(x >= k, np.exp(logf), 0.0)
    return float(out) if out.ndim == 0 else out


def cdf(params: ParetoParams, x):
    a, k = params.alpha, params.k
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        # -expm1 keeps precision for x just above k
        out = np.where(x > k, -np.expm1(a * np.log(k / x)), 0.0)
    return float(out) if out.ndim == 0 else out


def quantile(params: ParetoParams, u):
    """Inverse cdf ``k * (1 - u) ** (-1 / alpha)`` for ``u`` in ``[0, 1)``."""
    u = np.asarray(u, dtype=float)
    if np.any(~((u >= 0.0) & (u < 1.0))):
        raise DomainError("quantile requires 0 <= u < 1")
    out = params.k * np.exp(-np.log1p(-u) / params.alpha)
    return float(out) if out.ndim == 0 else out


def make_rng(*key: int) -> np.random.Generator:
    """Counter-based generator keyed by one or more non-negative integers.

    Philox is used so that a stream can be addressed directly by its key,
    which keeps parallel replications reproducible.
    """
    if not key:
        raise ValueError("at least one key is required")
    entropy = [int(v) & 0xFFFFFFFFFFFFFFFF for v in key]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample(params: ParetoParams, n: int, seed: int) -> SampleData:
    """Draw ``n`` observations by inverse transform of uniforms on ``[0, 1)``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    u = make_rng(seed).random(n)
    return SampleData(tuple(quantile(params, u).tolist()), params.k)
