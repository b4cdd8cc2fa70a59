"""MLE and UMVUE estimators of alpha, f(x) and F(x) for the known-k Pareto.

Everything here is a function of the sufficient statistic
``s = sum(log(x_i / k))``. The ``*_from_stat`` kernels take ``s`` as an
array so that Monte Carlo code can evaluate a whole block of replications at
once; the sample-level functions wrap them with argument checking.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateSampleError, DomainError, InsufficientSampleError
from .model import SampleData

__all__ = [
    "Tag",
    "Target",
    "EstimatorKind",
    "mle_alpha",
    "umvue_alpha",
    "mle_pdf_at",
    "mle_cdf_at",
    "umvue_pdf_at",
    "umvue_cdf_at",
    "evaluate_from_stat",
    "umvue_support_end",
]


class Tag(enum.Enum):
    MLE = "mle"
    UMVUE = "umvue"


class Target(enum.Enum):
    ALPHA = "alpha"
    PDF = "pdf"
    CDF = "cdf"


@dataclass(frozen=True)
class EstimatorKind:
    tag: Tag
    target: Target

    @classmethod
    def parse(cls, tag, target) -> EstimatorKind:
        return cls(Tag(str(tag).lower()), Target(str(target).lower()))

    def __str__(self):
        return f"{self.tag.value}/{self.target.value}"


# --- array kernels -----------------------------------------------------------


def mle_alpha_from_stat(s, n):
    return n / np.asarray(s, dtype=float)


def umvue_alpha_from_stat(s, n):
    return (n - 1) / np.asarray(s, dtype=float)


def mle_pdf_from_stat(s, n, k, x):
    a = mle_alpha_from_stat(s, n)
    return a * np.exp(-a * math.log(x / k)) / x


def mle_cdf_from_stat(s, n, k, x):
    a = mle_alpha_from_stat(s, n)
    return -np.expm1(-a * math.log(x / k))


def umvue_pdf_from_stat(s, n, k, x):
    s = np.asarray(s, dtype=float)
    c = math.log(x / k)
    inside = c < s
    safe = np.where(inside, s, 1.0 + c)
    with np.errstate(divide="ignore", invalid="ignore"):
        # (s - c)^(n-2) / s^(n-1) written as (1 - c/s)^(n-2) / s
        val = (n - 1) * np.exp((n - 2) * np.log1p(-c / safe)) / (x * safe)
    return np.where(inside, val, 0.0)


def umvue_cdf_from_stat(s, n, k, x):
    s = np.asarray(s, dtype=float)
    if x < k:
        return np.zeros_like(s)
    c = math.log(x / k)
    inside = c <= s
    safe = np.where(inside & (s > 0), s, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = -np.expm1((n - 1) * np.log1p(-c / safe))
    return np.where(inside, val, 1.0)


_KERNELS = {
    (Tag.MLE, Target.ALPHA): lambda s, n, k, x: mle_alpha_from_stat(s, n),
    (Tag.UMVUE, Target.ALPHA): lambda s, n, k, x: umvue_alpha_from_stat(s, n),
    (Tag.MLE, Target.PDF): mle_pdf_from_stat,
    (Tag.MLE, Target.CDF): mle_cdf_from_stat,
    (Tag.UMVUE, Target.PDF): umvue_pdf_from_stat,
    (Tag.UMVUE, Target.CDF): umvue_cdf_from_stat,
}


def evaluate_from_stat(kind: EstimatorKind, s, n: int, k: float, x: float | None = None):
    """Vectorised estimator value for an array of sufficient statistics."""
    return _KERNELS[(kind.tag, kind.target)](s, n, k, x)


# --- sample-level API ----------------------------------------------------------


def _require_nondegenerate(sample: SampleData):
    if not sample.s_stat > 0:
        raise DegenerateSampleError("all observations equal k; the estimators are undefined")


def _require_n2(sample: SampleData):
    if sample.n < 2:
        raise InsufficientSampleError("the UMVUE needs n >= 2")


def _require_x(sample: SampleData, x: float):
    if not x >= sample.k_ref:
        raise DomainError(f"x={x} is below k={sample.k_ref}")


def mle_alpha(sample: SampleData) -> float:
    """``n / sum(log(x_i / k))``."""
    _require_nondegenerate(sample)
    return sample.n / sample.s_stat


def umvue_alpha(sample: SampleData) -> float:
    """``(n - 1) / (log t - n log k)``, i.e. ``(n - 1) / s``."""
    _require_n2(sample)
    _require_nondegenerate(sample)
    return (sample.n - 1) / sample.s_stat


def mle_pdf_at(sample: SampleData, x: float) -> float:
    """Plug-in density ``a k^a / x^(a+1)`` with ``a`` the MLE of alpha."""
    _require_nondegenerate(sample)
    _require_x(sample, x)
    return float(mle_pdf_from_stat(sample.s_stat, sample.n, sample.k_ref, x))


def mle_cdf_at(sample: SampleData, x: float) -> float:
    _require_nondegenerate(sample)
    _require_x(sample, x)
    return float(mle_cdf_from_stat(sample.s_stat, sample.n, sample.k_ref, x))


def umvue_support_end(sample: SampleData) -> float:
    """Right end ``t * k**(1 - n)`` of the UMVUE density's support."""
    return sample.k_ref * math.exp(sample.s_stat)


def umvue_pdf_at(sample: SampleData, x: float) -> float:
    """UMVUE of the density.

    Nonzero only for ``k <= x < t k^(1-n)``, where it equals
    ``(n-1) (s - log(x/k))^(n-2) / (x s^(n-1))``. At the right end of the
    support the value is 0, including the ``n = 2`` case where the bracket
    power would be ``0**0``.
    """
    _require_n2(sample)
    _require_x(sample, x)
    return float(umvue_pdf_from_stat(sample.s_stat, sample.n, sample.k_ref, x))


def umvue_cdf_at(sample: SampleData, x: float) -> float:
    """UMVUE of the cdf: 0 below ``k``, 1 from ``t k^(1-n)`` on."""
    _require_n2(sample)
    return float(umvue_cdf_from_stat(sample.s_stat, sample.n, sample.k_ref, x))
