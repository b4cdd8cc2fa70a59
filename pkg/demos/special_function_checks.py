"""Bessel-K and Kummer-U moments against quadrature and Monte Carlo."""
import math

from paretoest import EstimatorKind, Tag, Target, brute_force_moment
from paretoest import special as sp
from paretoest.oracle import moment_mle, moment_umvue

n, alpha, k, x = 6, 1.0, 1.0, 2.0

bessel = sp.exact_mle_moment_bessel(n, alpha, k, x, 2)
quad = moment_mle(Target.PDF, 2, n, alpha, k, x).value
print(f"E(f_mle(x)^2)    bessel {bessel:.15g}  quadrature {quad:.15g}")

kummer = sp.exact_umvue_pdf_second_moment_kummer(n, alpha, k, x)
quad = moment_umvue(Target.PDF, 2, n, alpha, k, x).value
mc = brute_force_moment(EstimatorKind(Tag.UMVUE, Target.PDF), 1, n, alpha, k, x, 500_000, seed=3)
print(f"E(f_umvue(x)^2)  kummer {kummer:.15g}  quadrature {quad:.15g}")
print(f"                 mc     {mc.second_moment:.6g} +/- {mc.second_std_error:.2g}")

# large parameters stay finite because everything is summed in logs
print(f"log U(197, 99, 0.01) = {sp.log_kummer_u(197, 99, 0.01):.13f}")
print(f"log K_200(0.5)       = {sp.log_bessel_k(200, 0.5):.13f}")
print(f"K_1/2(1) = {sp.bessel_k_nu(0.5, 1.0):.12f} (closed form {math.sqrt(math.pi / 2) / math.e:.12f})")
