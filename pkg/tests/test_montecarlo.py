from __future__ import annotations

import math

import numpy as np
import pytest

from paretoest import montecarlo as mc
from paretoest.estimators import EstimatorKind, Tag, Target
from paretoest.exceptions import DegenerateSampleError, DomainError
from paretoest.oracle import ALL_KINDS, mse_via_quadrature
from paretoest.reports import Engine

UMVUE_PDF = EstimatorKind(Tag.UMVUE, Target.PDF)
MLE_ALPHA = EstimatorKind(Tag.MLE, Target.ALPHA)


class TestBruteForce:
    def test_umvue_pdf_unbiased(self):
        r = mc.brute_force_moment(UMVUE_PDF, 1, 15, 1.0, 1.0, 2.0, 100_000, seed=1)
        assert abs(r.mean - 0.25) < 4 * r.std_error
        assert r.engine is Engine.MONTE_CARLO
        r.check(rtol=1e-9)

    def test_mle_alpha_mse(self):
        r = mc.brute_force_moment(MLE_ALPHA, 1, 5, 2.0, reps=1_000_000, seed=2)
        assert abs(r.mse - 7 / 3) < 4 * r.mse_std_error

    def test_deterministic(self):
        a = mc.brute_force_moment(UMVUE_PDF, 1, 6, 1.0, 1.0, 1.5, 20_000, seed=9)
        b = mc.brute_force_moment(UMVUE_PDF, 1, 6, 1.0, 1.0, 1.5, 20_000, seed=9)
        c = mc.brute_force_moment(UMVUE_PDF, 1, 6, 1.0, 1.0, 1.5, 20_000, seed=10)
        assert a == b
        assert a.mean != c.mean

    def test_prefix_stable_across_reps(self):
        # block b always draws from the same stream, so a shorter run is a prefix
        a = mc.brute_force_moment(MLE_ALPHA, 1, 5, 1.0, reps=8192, seed=4)
        b = mc.brute_force_moment(MLE_ALPHA, 1, 5, 1.0, reps=2 * 8192, seed=4)
        assert a.mean != b.mean
        c = mc.brute_force_moment(MLE_ALPHA, 1, 5, 1.0, reps=8192, seed=4)
        assert a == c

    @pytest.mark.parametrize("tag", list(Tag))
    def test_cdf_at_scale_is_zero(self, tag):
        r = mc.brute_force_moment(EstimatorKind(tag, Target.CDF), 1, 5, 1.0, 2.0, 2.0, 1000, seed=0)
        assert r.mse == 0.0 and r.mean == 0.0

    def test_rth_power(self):
        r2 = mc.brute_force_moment(UMVUE_PDF, 2, 6, 1.0, 1.0, 1.5, 5000, seed=3)
        r1 = mc.brute_force_moment(UMVUE_PDF, 1, 6, 1.0, 1.0, 1.5, 5000, seed=3)
        assert r2.mean == pytest.approx(r1.second_moment, rel=1e-12)
        assert r2.target == pytest.approx(r1.target ** 2)

    @pytest.mark.parametrize("kw", [{"reps": 99}, {"x": 0.5}, {"x": None}])
    def test_rejects(self, kw):
        args = {"reps": 1000, "x": 1.5} | kw
        with pytest.raises(DomainError):
            mc.brute_force_moment(UMVUE_PDF, 1, 5, 1.0, 1.0, args["x"], args["reps"], 0)

    def test_degenerate_excluded_when_rare(self, monkeypatch):
        real = mc._stat_block

        calls = []

        def patched(rng, rows, n, alpha):
            s = real(rng, rows, n, alpha)
            if not calls:
                s[0] = 0.0
            calls.append(rows)
            return s

        monkeypatch.setattr(mc, "_stat_block", patched)
        r = mc.brute_force_moment(MLE_ALPHA, 1, 5, 1.0, reps=20_000, seed=0)
        assert r.flags == ("excluded_degenerate:1",)
        assert math.isfinite(r.mse)

    def test_degenerate_raises_when_common(self, monkeypatch):
        real = mc._stat_block

        def patched(rng, rows, n, alpha):
            s = real(rng, rows, n, alpha)
            s[:10] = 0.0
            return s

        monkeypatch.setattr(mc, "_stat_block", patched)
        with pytest.raises(DegenerateSampleError):
            mc.brute_force_moment(MLE_ALPHA, 1, 5, 1.0, reps=20_000, seed=0)

    def test_agrees_with_quadrature_on_grid(self):
        cells = [(n, a, x) for n in (4, 10, 30) for a, x in ((0.5, 1.5), (2.0, 1.2))]
        checked = 0
        for (n, a, x), kind in zip([c for c in cells for _ in range(2)], ALL_KINDS * 3):
            ref = mse_via_quadrature(kind, n, a, 1.0, x)
            r = mc.brute_force_moment(kind, 1, n, a, 1.0, x, 200_000, seed=100 + checked)
            assert abs(r.mean - ref.mean) < 4 * r.std_error
            checked += 1
        assert checked == 12


class TestConfig:
    def test_defaults(self):
        cfg = mc.SimulationConfig()
        assert cfg.reps == 1000 and cfg.x_policy is mc.XPolicy.FIRST_OBSERVATION
        assert cfg.engine_for_per_rep_mse is mc.PerRepEngine.QUADRATURE

    @pytest.mark.parametrize("kw", [{"reps": 0}, {"n_grid": ()}, {"n_grid": (2,)}, {"alpha_grid": (-1.0,)},
                                    {"x_policy": mc.XPolicy.FIXED_POINT}])
    def test_invalid(self, kw):
        with pytest.raises((ValueError, DomainError)):
            mc.SimulationConfig(**kw)

    def test_paper_grid(self):
        cfg = mc.paper_config()
        assert len(cfg.n_grid) == 29 and cfg.n_grid[:3] == (4, 5, 6) and cfg.n_grid[-1] == 100
        assert len(cfg.cells()) == 29 * 6

    def test_cartesian_cells(self):
        cfg = mc.SimulationConfig(n_grid=(3, 4), alpha_grid=(1.0, 2.0), k_grid=(1.0, 3.0))
        assert len(cfg.cells()) == 8


class TestSimulateTable:
    CFG = mc.SimulationConfig(reps=30, n_grid=(4, 7), alpha_grid=(0.5, 2.0), k_grid=(1.0,), seed=5,
                              engine_for_per_rep_mse=mc.PerRepEngine.CLOSED_FORM)

    def test_serial_equals_parallel(self):
        assert mc.simulate_table(self.CFG) == mc.simulate_table(self.CFG, workers=2)

    def test_cell_independent_of_grid(self):
        single = mc.SimulationConfig(reps=30, n_grid=(7,), alpha_grid=(2.0,), seed=5,
                                     engine_for_per_rep_mse=mc.PerRepEngine.CLOSED_FORM)
        rows = {(r.n, r.alpha): r for r in mc.simulate_table(self.CFG)}
        assert mc.simulate_table(single)[0] == rows[(7, 2.0)]

    def test_fixed_point_at_scale(self):
        cfg = mc.SimulationConfig(reps=5, n_grid=(5,), x_policy=mc.XPolicy.FIXED_POINT, fixed_x=1.0)
        row = mc.simulate_table(cfg)[0]
        assert row.mse_umvue_cdf == 0.0 and row.mse_mle_cdf == 0.0
        assert row.mse_mle_pdf == pytest.approx(7 / 12, rel=1e-8)
        assert row.mse_umvue_pdf == pytest.approx(1 / 3, rel=1e-8)

    def test_quadrature_rows(self):
        cfg = mc.SimulationConfig(reps=20, n_grid=(6,), seed=1)
        row = mc.simulate_table(cfg)[0]
        assert row.failed_reps == 0 and not row.flags
        assert all(v > 0 for v in (row.mse_umvue_pdf, row.mse_mle_pdf, row.mse_umvue_cdf, row.mse_mle_cdf))
        assert all(se > 0 for se in row.std_errors)
        assert set(row.as_dict()) == set(mc.TableRow.FIELDS)


class TestEfficiency:
    def test_report(self):
        rows = mc.simulate_table(mc.SimulationConfig(reps=20, n_grid=(5,), alpha_grid=(2.0,), seed=2))
        rep = mc.efficiency_report(rows, alpha_reps=200_000, seed=1)
        assert rep.cells == 1 and rep.all_ratios_finite
        a = rep.alpha_comparison[0]
        assert a["mse_mle_alpha"] == pytest.approx(7 / 3)
        assert a["umvue_better"]
        assert abs(a["mse_umvue_alpha_mc"] - 4 / 3) < 4 * a["se_umvue_alpha_mc"]

    def test_empty(self):
        with pytest.raises(ValueError):
            mc.efficiency_report([])

    def test_counts(self):
        row = mc.TableRow(5, 1.0, 1.0, 2.0, 1.0, 1.0, 3.0, *(0.1,) * 4, reps=10)
        rep = mc.efficiency_report([row], alpha_reps=1000)
        assert rep.pdf_cells_mle_better == 1 and rep.cdf_cells_mle_better == 0
        assert rep.ratios[0]["pdf_ratio"] == pytest.approx(0.5)
