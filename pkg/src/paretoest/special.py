"""Modified Bessel K and Kummer U by quadrature, and the exact moments they give.

Both functions are evaluated from their integral representations

    K_nu(z)   = int_0^inf exp(-z cosh t) cosh(nu t) dt
    U(a,b,c)  = 1/Gamma(a) int_0^inf t^(a-1) (1+t)^(b-a-1) exp(-c t) dt

on the log scale, so large orders do not overflow.

With ``c = log(x/k)`` and ``W`` the MLE of alpha,

    E[W^r exp(-s W)] = (a n)^n / Gamma(n) * 2 (s/(a n))^((n-r)/2) K_(n-r)(2 sqrt(a n s))

which gives every moment of the MLE density and cdf estimates exactly. The
second moments of the UMVUE estimates reduce to Kummer U with
``a = 2n-3, b = n-1`` (density) and ``a = 2n-1, b = n+1`` (cdf).
"""
from __future__ import annotations

import math
from dataclasses import replace

import numpy as np
from scipy.special import gammaln

from .exceptions import DomainError, MomentDoesNotExistError
from .logsum import SignedLogSum
from .quadrature import QuadratureConfig, integrate_halfline_log

__all__ = [
    "log_bessel_k",
    "bessel_k_nu",
    "log_kummer_u",
    "kummer_u",
    "log_mle_laplace_moment",
    "exact_mle_moment_bessel",
    "exact_mle_cdf_moment_bessel",
    "exact_umvue_pdf_second_moment_kummer",
    "exact_umvue_cdf_second_moment_kummer",
]

_CFG = QuadratureConfig(rel_tol=1e-12, abs_tol=1e-300)
_LN2 = math.log(2.0)


def _cfg(cfg):
    # magnitudes here are arbitrary, so only the relative tolerance is meaningful
    return _CFG if cfg is None else replace(cfg, abs_tol=1e-300)


def _log_cosh(y):
    y = np.abs(y)
    return y + np.log1p(np.exp(-2.0 * y)) - _LN2


def log_bessel_k(nu: float, z: float, cfg: QuadratureConfig | None = None) -> float:
    if not z > 0:
        raise DomainError("K_nu(z) needs z > 0")
    nu = abs(float(nu))
    res = integrate_halfline_log(lambda t: -z * np.cosh(t) + _log_cosh(nu * t), 0.0, _cfg(cfg))
    return res.log_value


def bessel_k_nu(nu: float, z: float, cfg: QuadratureConfig | None = None) -> float:
    """Modified Bessel function of the second kind, ``K_nu(z)``."""
    return math.exp(log_bessel_k(nu, z, cfg))


def log_kummer_u(a: float, b: float, c: float, cfg: QuadratureConfig | None = None) -> float:
    if not (a > 0 and c > 0):
        raise DomainError("U(a, b, c) by this integral needs a > 0 and c > 0")

    def log_f(t):
        return (a - 1.0) * np.log(t) + (b - a - 1.0) * np.log1p(t) - c * t

    return integrate_halfline_log(log_f, 0.0, _cfg(cfg)).log_value - float(gammaln(a))


def kummer_u(a: float, b: float, c: float, cfg: QuadratureConfig | None = None) -> float:
    """Confluent hypergeometric function of the second kind."""
    return math.exp(log_kummer_u(a, b, c, cfg))


def log_mle_laplace_moment(n: int, alpha: float, s: float, r: int = 0,
                           cfg: QuadratureConfig | None = None) -> float:
    """Log of ``E[W^r exp(-s W)]`` for the MLE ``W`` of alpha."""
    an = alpha * n
    base = n * math.log(an) - float(gammaln(n))
    if s == 0:
        if n <= r:
            raise MomentDoesNotExistError(f"E(W^{r}) is infinite for n <= {r}")
        return base + float(gammaln(n - r)) - (n - r) * math.log(an)
    if s < 0:
        raise DomainError("s must be >= 0")
    nu = n - r
    return (base + _LN2 + 0.5 * nu * (math.log(s) - math.log(an))
            + log_bessel_k(nu, 2.0 * math.sqrt(an * s), cfg))


def exact_mle_moment_bessel(n: int, alpha: float, k: float, x: float, r: int = 1,
                            cfg: QuadratureConfig | None = None) -> float:
    """Exact ``E(f_mle(x)^r)``.

    ``f_mle(x)^r = W^r (k/x)^(r W) / x^r``, so the moment is the Laplace
    moment at ``s = r log(x/k)`` divided by ``x^r``. At ``x = k`` the gamma
    limit is used.
    """
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    if r < 1:
        raise DomainError("r must be >= 1")
    c = math.log(x / k)
    return math.exp(log_mle_laplace_moment(n, alpha, r * c, r, cfg) - r * math.log(x))


def exact_mle_cdf_moment_bessel(n: int, alpha: float, k: float, x: float, r: int = 1,
                                cfg: QuadratureConfig | None = None) -> float:
    """Exact ``E(F_mle(x)^r) = sum_j C(r,j) (-1)^j E[exp(-j c W)]``."""
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    c = math.log(x / k)
    if c == 0:
        return 0.0
    acc = SignedLogSum()
    for j in range(r + 1):
        lb = float(gammaln(r + 1) - gammaln(j + 1) - gammaln(r - j + 1))
        acc.add(lb + log_mle_laplace_moment(n, alpha, j * c, 0, cfg), 1 if j % 2 == 0 else -1)
    return acc.value()


def exact_umvue_pdf_second_moment_kummer(n: int, alpha: float, k: float, x: float,
                                         cfg: QuadratureConfig | None = None) -> float:
    """Exact ``E(f_umvue(x)^2)``.

    Equals ``(n-1) a^n / (x^2 (n-2)!) c^(n-2) e^(-a c) Gamma(2n-3) U(2n-3, n-1, a c)``
    for ``x > k``; at ``x = k`` it is ``(n-1) a^2 / ((n-2) k^2)``.
    """
    if n < 3:
        raise MomentDoesNotExistError("E(f_umvue(x)^2) needs n >= 3")
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    c = math.log(x / k)
    if c == 0:
        return (n - 1) * alpha ** 2 / ((n - 2) * k * k)
    lv = (math.log(n - 1) + n * math.log(alpha) - 2 * math.log(x) - float(gammaln(n - 1))
          + (n - 2) * math.log(c) - alpha * c + float(gammaln(2 * n - 3))
          + log_kummer_u(2 * n - 3, n - 1, alpha * c, cfg))
    return math.exp(lv)


def exact_umvue_cdf_second_moment_kummer(n: int, alpha: float, k: float, x: float,
                                         cfg: QuadratureConfig | None = None) -> float:
    """Exact ``E(F_umvue(x)^2) = 1 - 2q + a^n/(n-1)! c^n e^(-a c) Gamma(2n-1) U(2n-1, n+1, a c)``."""
    if n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    c = math.log(x / k)
    if c == 0:
        return 0.0
    q = math.exp(-alpha * c)
    lv = (n * math.log(alpha) - float(gammaln(n)) + n * math.log(c) - alpha * c
          + float(gammaln(2 * n - 1)) + log_kummer_u(2 * n - 1, n + 1, alpha * c, cfg))
    return 1.0 - 2.0 * q + math.exp(lv)
