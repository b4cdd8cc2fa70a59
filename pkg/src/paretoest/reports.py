"""Moment summaries shared by the closed-form, quadrature and Monte Carlo engines."""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field

from .estimators import EstimatorKind

__all__ = ["Engine", "MomentReport", "assemble"]


class Engine(enum.Enum):
    CLOSED_FORM = "closed"
    QUADRATURE = "quadrature"
    MONTE_CARLO = "mc"
    BESSEL_EXACT = "bessel"
    KUMMER_EXACT = "kummer"


@dataclass(frozen=True)
class MomentReport:
    engine: Engine
    estimator: EstimatorKind
    eval_x: float | None
    target: float
    mean: float
    second_moment: float
    variance: float
    bias: float
    mse: float
    std_error: float | None = None
    second_std_error: float | None = None
    mse_std_error: float | None = None
    flags: tuple[str, ...] = field(default=())

    def check(self, rtol: float = 1e-12) -> None:
        """Raise ``AssertionError`` if the internal identities are violated.

        Tolerances are relative to the magnitude of the quantities entering
        each identity, since MSE can be much smaller than the moments it is
        assembled from.
        """
        if (self.std_error is None) == (self.engine is Engine.MONTE_CARLO):
            raise AssertionError("std_error must be present iff engine is Monte Carlo")
        vals = (self.mean, self.second_moment, self.variance, self.mse)
        if not all(math.isfinite(v) for v in vals):
            return
        scale = abs(self.second_moment) + self.mean ** 2 + self.target ** 2
        if abs(self.variance - (self.second_moment - self.mean ** 2)) > rtol * scale:
            raise AssertionError("variance != second - mean^2")
        if abs(self.mse - (self.variance + self.bias ** 2)) > rtol * scale:
            raise AssertionError("mse != variance + bias^2")

    def as_dict(self) -> dict:
        d = asdict(self)
        d["engine"] = self.engine.value
        d["estimator"] = self.estimator.tag.value
        d["target_kind"] = self.estimator.target.value
        d["flags"] = list(self.flags)
        return d


def assemble(engine: Engine, kind: EstimatorKind, x, target: float, mean: float,
             second: float, flags=(), **extra) -> MomentReport:
    """Build a report from first and second moments.

    MSE is ``second - 2 target mean + target^2``; variance and bias follow
    from the same two moments.
    """
    variance = second - mean * mean
    bias = mean - target
    mse = second - 2.0 * target * mean + target * target
    flags = tuple(flags)
    if mse < 0 and "negative_mse" not in flags:
        flags += ("negative_mse",)
    return MomentReport(engine, kind, x, target, mean, second, variance, bias, mse,
                        flags=flags, **extra)
