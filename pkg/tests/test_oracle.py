from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paretoest import oracle
from paretoest.estimators import EstimatorKind, Tag, Target
from paretoest.exceptions import DomainError, MomentDoesNotExistError, QuadratureAccuracyError
from paretoest.model import ParetoParams, cdf, pdf
from paretoest.quadrature import QuadratureConfig, Transform
from paretoest.reports import Engine

MLE_PDF = EstimatorKind(Tag.MLE, Target.PDF)
MLE_ALPHA = EstimatorKind(Tag.MLE, Target.ALPHA)
UMVUE_PDF = EstimatorKind(Tag.UMVUE, Target.PDF)


class TestMomentMle:
    def test_cdf_at_scale(self):
        assert oracle.moment_mle(Target.CDF, 1, 5, 1.0, 1.0, 1.0).value == 0.0

    def test_alpha_mean(self):
        assert oracle.moment_mle(Target.ALPHA, 1, 5, 2.0).value == pytest.approx(2.5, abs=1e-9)

    def test_pdf_collapse(self):
        assert oracle.moment_mle(Target.PDF, 1, 3, 1.0, 1.0, 1.0).value == pytest.approx(1.5, abs=1e-9)

    def test_divergent(self):
        with pytest.raises(MomentDoesNotExistError):
            oracle.moment_mle(Target.ALPHA, 2, 2, 1.0)

    def test_below_scale(self):
        with pytest.raises(DomainError):
            oracle.moment_mle(Target.PDF, 1, 3, 1.0, 2.0, 1.0)

    def test_cdf_monotone_in_unit_interval(self):
        xs = [1.0, 1.05, 1.3, 2.0, 5.0, 50.0]
        vals = [oracle.moment_mle(Target.CDF, 1, 6, 0.7, 1.0, x).value for x in xs]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_non_convergence_raises(self):
        cfg = QuadratureConfig(rel_tol=1e-16, abs_tol=1e-300, max_subdivisions=50)
        with pytest.raises(QuadratureAccuracyError):
            oracle.moment_mle(Target.PDF, 2, 40, 1.0, 1.0, 1.7, cfg)
        res = oracle.moment_mle(Target.PDF, 2, 40, 1.0, 1.0, 1.7, cfg, raise_on_failure=False)
        assert not res.converged and math.isfinite(res.value)


class TestMomentUmvue:
    def test_pdf_unbiased(self):
        assert oracle.moment_umvue(Target.PDF, 1, 5, 1.0, 1.0, 2.0).value == pytest.approx(0.25, abs=1e-8)

    def test_cdf_at_scale(self):
        assert oracle.moment_umvue(Target.CDF, 1, 5, 1.0, 1.0, 1.0).value == 0.0

    def test_second_collapse(self):
        assert oracle.moment_umvue(Target.PDF, 2, 5, 1.0, 1.0, 1.0).value == pytest.approx(4 / 3, rel=1e-9)

    @settings(max_examples=30)
    @given(st.integers(3, 60), st.floats(0.2, 4.0), st.floats(0.3, 3.0), st.floats(1.0, 20.0))
    def test_unbiased_property(self, n, a, k, m):
        p, x = ParetoParams(a, k), k * m
        cfg = QuadratureConfig()
        got_pdf = oracle.moment_umvue(Target.PDF, 1, n, a, k, x, cfg).value
        got_cdf = oracle.moment_umvue(Target.CDF, 1, n, a, k, x, cfg).value
        assert abs(got_pdf - pdf(p, x)) <= 10 * cfg.rel_tol * pdf(p, x) + cfg.abs_tol
        assert abs(got_cdf - cdf(p, x)) <= 10 * cfg.rel_tol + cfg.abs_tol


class TestTransformsAndTolerance:
    @pytest.mark.parametrize("kind", oracle.ALL_KINDS)
    @pytest.mark.parametrize("x", [1.0, 1.4, 3.0])
    def test_transforms_agree(self, kind, x):
        a = oracle.moment(kind, 2, 8, 1.5, 1.0, x, QuadratureConfig(infinite_transform=Transform.RATIONAL))
        b = oracle.moment(kind, 2, 8, 1.5, 1.0, x, QuadratureConfig(infinite_transform=Transform.EXP))
        assert a.value == pytest.approx(b.value, rel=2e-10, abs=1e-12)

    @pytest.mark.parametrize("kind", oracle.ALL_KINDS)
    def test_halving_tolerance(self, kind):
        tol = 1e-8
        a = oracle.moment(kind, 2, 10, 1.0, 1.0, 2.0, QuadratureConfig(rel_tol=tol)).value
        b = oracle.moment(kind, 2, 10, 1.0, 1.0, 2.0, QuadratureConfig(rel_tol=tol / 2)).value
        assert abs(a - b) <= tol * abs(b) + 1e-12


class TestMse:
    def test_mle_alpha(self):
        r = oracle.mse_via_quadrature(MLE_ALPHA, 5, 2.0)
        assert r.mse == pytest.approx(4 * 28 / 48, abs=1e-8)
        assert r.engine is Engine.QUADRATURE
        r.check(rtol=1e-9)

    def test_mle_pdf_at_scale(self):
        assert oracle.mse_via_quadrature(MLE_PDF, 5, 1.0, 1.0, 1.0).mse == pytest.approx(7 / 12, abs=1e-8)

    @pytest.mark.parametrize("x", [1.0, 1.5, 2.0, 4.0])
    def test_umvue_pdf_unbiased(self, x):
        assert abs(oracle.mse_via_quadrature(UMVUE_PDF, 6, 1.2, 1.0, x).bias) < 1e-7

    @pytest.mark.parametrize("kind", oracle.ALL_KINDS)
    def test_special_engine_matches(self, kind):
        q = oracle.mse_via_quadrature(kind, 9, 0.8, 1.0, 2.2)
        s = oracle.mse_exact_special(kind, 9, 0.8, 1.0, 2.2)
        assert s.mse == pytest.approx(q.mse, rel=1e-8)

    def test_special_rejects_alpha(self):
        with pytest.raises(DomainError):
            oracle.mse_exact_special(MLE_ALPHA, 5, 1.0, 1.0, 1.0)


class TestDeviationReport:
    def test_shape(self):
        rows = oracle.deviation_report(5, 1.0, 1.0, [1.0, 1.5, 2.0, 2.5, 3.0])
        assert len(rows) == 20
        rows = oracle.deviation_report(5, 1.0, 1.0, [1.0, 2.0], include_alpha=True)
        assert len(rows) == 9 and rows[-1].x is None and rows[-1].target == "alpha"

    def test_scale_rows_agree(self):
        rows = oracle.deviation_report(6, 0.5, 2.0, [2.0, 3.0])
        for row in rows:
            if row.x == 2.0:
                assert row.rel_dev <= 1e-8
            if not math.isnan(row.special_rel_dev):
                assert row.special_rel_dev <= 1e-8
        assert all("special_mismatch" not in r.flags for r in rows)

    def test_flags_undefined_closed_form(self):
        rows = oracle.deviation_report(2, 1.0, 1.0, [1.5])
        assert any(r.flag.startswith("closed_undefined") for r in rows)

    def test_mc_column(self):
        rows = oracle.deviation_report(5, 1.0, 1.0, [1.5], mc_reps=20_000, seed=3)
        assert all(math.isfinite(r.mc) and r.mc_se > 0 for r in rows)

    def test_empty_grid(self):
        with pytest.raises(ValueError):
            oracle.deviation_report(5, 1.0, 1.0, [])
