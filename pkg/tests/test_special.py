from __future__ import annotations

import math

import mpmath
import pytest
from scipy.special import hyperu, kv

from paretoest import special as sp
from paretoest.estimators import EstimatorKind, Tag, Target
from paretoest.exceptions import DomainError
from paretoest.montecarlo import brute_force_moment
from paretoest.oracle import moment_mle, moment_umvue
from paretoest.quadrature import QuadratureConfig


class TestBesselK:
    def test_half_order(self):
        assert sp.bessel_k_nu(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-12)
        assert sp.bessel_k_nu(0.5, 1.0) == pytest.approx(0.461068, abs=1e-6)

    @pytest.mark.parametrize("nu", [1.0, 2.5])
    @pytest.mark.parametrize("z", [0.5, 3.0])
    def test_symmetry(self, nu, z):
        assert sp.bessel_k_nu(-nu, z) == pytest.approx(sp.bessel_k_nu(nu, z), rel=1e-10)

    @pytest.mark.parametrize("nu", [0.5, 1.0, 3.0, 7.5])
    @pytest.mark.parametrize("z", [0.3, 1.0, 4.0, 20.0])
    def test_recurrence(self, nu, z):
        lhs = sp.bessel_k_nu(nu + 1, z)
        rhs = sp.bessel_k_nu(nu - 1, z) + 2 * nu / z * sp.bessel_k_nu(nu, z)
        assert lhs == pytest.approx(rhs, rel=1e-8)

    @pytest.mark.parametrize("nu,z", [(0.0, 0.1), (3.0, 2.0), (10.0, 5.0), (40.0, 30.0)])
    def test_against_scipy(self, nu, z):
        assert sp.bessel_k_nu(nu, z) == pytest.approx(kv(nu, z), rel=1e-10)

    @pytest.mark.parametrize("nu,z", [(200.0, 0.5), (150.0, 300.0)])
    def test_large_order_against_mpmath(self, nu, z):
        ref = float(mpmath.log(mpmath.besselk(nu, z)))
        assert sp.log_bessel_k(nu, z) == pytest.approx(ref, rel=1e-11)

    def test_domain(self):
        with pytest.raises(DomainError):
            sp.bessel_k_nu(1.0, 0.0)


class TestKummerU:
    def test_b_equals_a_plus_one(self):
        assert sp.kummer_u(2.0, 3.0, 3.0) == pytest.approx(1 / 9, rel=1e-12)

    def test_decreasing_in_c(self):
        vals = [sp.kummer_u(3.0, 1.5, c) for c in (0.1, 0.5, 1.0, 2.0, 8.0)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("c", [0.2, 1.0, 5.0])
    def test_refinement_consistency(self, c):
        # U(1, 1, c) = e^c E1(c)
        coarse = sp.kummer_u(1.0, 1.0, c, QuadratureConfig(rel_tol=1e-9))
        fine = sp.kummer_u(1.0, 1.0, c, QuadratureConfig(rel_tol=1e-13))
        assert coarse == pytest.approx(fine, rel=1e-9)
        assert fine == pytest.approx(float(mpmath.e ** c * mpmath.e1(c)), rel=1e-12)

    @pytest.mark.parametrize("a,b,c", [(1.5, 0.5, 2.0), (7.0, 4.0, 0.3), (17.0, 9.0, 1.0)])
    def test_against_scipy(self, a, b, c):
        assert sp.kummer_u(a, b, c) == pytest.approx(hyperu(a, b, c), rel=1e-9)

    @pytest.mark.parametrize("a,b,c", [(197.0, 99.0, 0.01), (399.0, 201.0, 2.5)])
    def test_extreme_against_mpmath(self, a, b, c):
        # scipy underflows at these arguments, so mpmath is the reference
        ref = float(mpmath.log(mpmath.hyperu(a, b, c)))
        assert sp.log_kummer_u(a, b, c) == pytest.approx(ref, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            sp.kummer_u(0.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            sp.kummer_u(1.0, 1.0, 0.0)


class TestExactMoments:
    def test_mle_pdf_against_quadrature(self):
        ref = moment_mle(Target.PDF, 1, 6, 1.0, 1.0, 2.0).value
        assert sp.exact_mle_moment_bessel(6, 1.0, 1.0, 2.0, 1) == pytest.approx(ref, rel=1e-8)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_mle_cdf_against_quadrature(self, r):
        ref = moment_mle(Target.CDF, r, 7, 0.5, 1.0, 1.8).value
        assert sp.exact_mle_cdf_moment_bessel(7, 0.5, 1.0, 1.8, r) == pytest.approx(ref, rel=1e-8)

    @pytest.mark.parametrize("r", [1, 2])
    def test_mle_limit_at_scale(self, r):
        n, a, k = 5, 1.0, 1.0
        collapse = (a * n) ** r * math.gamma(n - r) / math.gamma(n) / k ** r
        assert sp.exact_mle_moment_bessel(n, a, k, k, r) == pytest.approx(collapse, rel=1e-14)
        assert sp.exact_mle_moment_bessel(n, a, k, k * (1 + 1e-8), r) == pytest.approx(collapse, rel=1e-6)

    def test_umvue_pdf_against_quadrature(self):
        ref = moment_umvue(Target.PDF, 2, 5, 1.0, 1.0, 2.0).value
        assert sp.exact_umvue_pdf_second_moment_kummer(5, 1.0, 1.0, 2.0) == pytest.approx(ref, rel=1e-8)

    def test_umvue_cdf_against_quadrature(self):
        ref = moment_umvue(Target.CDF, 2, 6, 1.0, 1.0, 2.0).value
        assert sp.exact_umvue_cdf_second_moment_kummer(6, 1.0, 1.0, 2.0) == pytest.approx(ref, rel=1e-8)

    def test_umvue_pdf_limit_at_scale(self):
        collapse = 4 / 3
        assert sp.exact_umvue_pdf_second_moment_kummer(5, 1.0, 1.0, 1.0) == pytest.approx(collapse)
        assert sp.exact_umvue_pdf_second_moment_kummer(5, 1.0, 1.0, 1 + 1e-8) == pytest.approx(collapse, rel=1e-6)

    def test_umvue_pdf_against_mc(self):
        n, a, k, x = 4, 0.5, 0.5, 1.0
        exact = sp.exact_umvue_pdf_second_moment_kummer(n, a, k, x)
        mc = brute_force_moment(EstimatorKind(Tag.UMVUE, Target.PDF), 1, n, a, k, x, 1_000_000, seed=21)
        assert abs(mc.second_moment - exact) < 4 * mc.second_std_error

    def test_domain(self):
        with pytest.raises(DomainError):
            sp.exact_mle_moment_bessel(5, 1.0, 2.0, 1.0)
