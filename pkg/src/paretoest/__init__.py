"""MLE and UMVUE of the Pareto density and cdf with known scale, and their exact moments."""
from __future__ import annotations

from .estimators import (EstimatorKind, Tag, Target, mle_alpha, mle_cdf_at, mle_pdf_at, umvue_alpha,
                         umvue_cdf_at, umvue_pdf_at, umvue_support_end)
from .exceptions import (DegenerateSampleError, DomainError, InsufficientSampleError,
                         MomentDoesNotExistError, ParetoError, QuadratureAccuracyError)
from .model import ParetoParams, SampleData, cdf, pdf, quantile, sample
from .montecarlo import (SimulationConfig, TableRow, brute_force_moment, efficiency_report, paper_config,
                         simulate_table)
from .oracle import deviation_report, moment_mle, moment_umvue, mse_via_quadrature
from .quadrature import QuadratureConfig
from .reports import Engine, MomentReport

__version__ = "0.1.0"

__all__ = [
    "EstimatorKind", "Tag", "Target",
    "mle_alpha", "umvue_alpha", "mle_pdf_at", "mle_cdf_at", "umvue_pdf_at", "umvue_cdf_at",
    "umvue_support_end",
    "ParetoError", "DomainError", "DegenerateSampleError", "InsufficientSampleError",
    "MomentDoesNotExistError", "QuadratureAccuracyError",
    "ParetoParams", "SampleData", "pdf", "cdf", "quantile", "sample",
    "SimulationConfig", "TableRow", "brute_force_moment", "efficiency_report", "paper_config", "simulate_table",
    "deviation_report", "moment_mle", "moment_umvue", "mse_via_quadrature",
    "QuadratureConfig", "Engine", "MomentReport",
]
