"""Point estimates from one simulated sample."""
from paretoest import ParetoParams, cdf, pdf, sample
from paretoest.estimators import mle_alpha, mle_cdf_at, mle_pdf_at, umvue_alpha, umvue_cdf_at, umvue_pdf_at

params = ParetoParams(alpha=1.5, k=2.0)
data = sample(params, 25, seed=2026)
print(f"alpha: mle {mle_alpha(data):.4f}  umvue {umvue_alpha(data):.4f}  true {params.alpha}")
print(f"{'x':>5} {'f':>8} {'f_mle':>8} {'f_umvue':>8} {'F':>8} {'F_mle':>8} {'F_umvue':>8}")
for x in (2.0, 2.5, 3.0, 5.0, 10.0):
    print(f"{x:5.1f} {pdf(params, x):8.4f} {mle_pdf_at(data, x):8.4f} {umvue_pdf_at(data, x):8.4f} "
          f"{cdf(params, x):8.4f} {mle_cdf_at(data, x):8.4f} {umvue_cdf_at(data, x):8.4f}")
