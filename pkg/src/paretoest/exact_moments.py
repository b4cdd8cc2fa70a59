"""Closed-form sampling densities, moments and MSEs of the four estimators.

The series below come from expanding ``(k/x)^w`` (MLE side) or a binomial
bracket (UMVUE side) and integrating term by term. Only terms whose gamma
argument stays positive are kept, so for ``x > k`` the series are truncations
and are not guaranteed to equal the true moments. At ``x = k`` every series
collapses to its leading term and is exact. :mod:`paretoest.oracle` and
:mod:`paretoest.special` provide the reference values.

Upper summation limits used here:

* mean of the MLE density: ``j <= n - 2``
* second moment of the MLE density: ``j <= n - 3``
* moments of the MLE cdf: ``j <= n - 1``
* UMVUE cdf r-th moment, inner index: ``i <= min(j (n - 1), n - 1)``

All factorials and binomials go through ``gammaln``; terms are summed with
:class:`~paretoest.logsum.SignedLogSum`. The alternating series lose about
``eps * sum|term| / |sum|`` to cancellation, so each series function also
takes ``exact=True``, which sums the same terms in rational arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import comb, factorial

import numpy as np
from scipy.special import gammaln

from .estimators import EstimatorKind, Tag, Target
from .exceptions import DomainError, MomentDoesNotExistError
from .logsum import SignedLogSum, naive_sum, signed_sum
from .model import ParetoParams, cdf, pdf
from .reports import Engine, MomentReport, assemble

__all__ = [
    "g_density",
    "log_g_density",
    "h_star_density",
    "mle_alpha_moments",
    "umvue_alpha_moments",
    "upper_incomplete_gamma_int",
    "log_upper_incomplete_gamma_int",
    "e_mle_pdf",
    "e_mle_cdf",
    "second_moment_mle_pdf",
    "second_moment_mle_cdf",
    "second_moment_umvue_pdf",
    "second_moment_umvue_cdf",
    "mse_mle_pdf",
    "mse_mle_cdf",
    "mse_mle_cdf_printed",
    "mse_umvue_pdf",
    "mse_umvue_cdf",
    "rth_moment_mle_pdf",
    "rth_moment_mle_cdf",
    "rth_moment_umvue_pdf",
    "rth_moment_umvue_cdf",
    "series_terms",
]

_LN2 = math.log(2.0)


def _lbinom(n, k):
    return gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)


def _powlog(j, log_base):
    """``j * log_base`` with the convention ``0 * log(0) == 0``."""
    j = np.asarray(j, dtype=float)
    if log_base == -math.inf:
        return np.where(j == 0, 0.0, -np.inf)
    return j * log_base


def _parity(j):
    return np.where(np.asarray(j) % 2 == 0, 1, -1)


def _log_c(k, x):
    if not x >= k:
        raise DomainError(f"x={x} must be >= k={k}")
    c = math.log(x / k)
    return c, (math.log(c) if c > 0 else -math.inf)


# --- sampling densities -------------------------------------------------------


def log_g_density(w, n: int, alpha: float):
    w = np.asarray(w, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (n * math.log(alpha * n) - gammaln(n) - (n + 1) * np.log(w) - alpha * n / w)
    return np.where(w > 0, out, -np.inf)


def g_density(w, n: int, alpha: float):
    """Density of the MLE of alpha: ``(a n)^n / (Gamma(n) w^(n+1)) exp(-a n / w)``."""
    out = np.exp(log_g_density(w, n, alpha))
    return float(out) if np.ndim(out) == 0 else out


def h_star_density(t, n: int, alpha: float, k: float, *, log_t: bool = False):
    """Density of ``t = prod(x_i)``.

    With ``log_t=True`` the argument is ``log t``, which avoids overflow for
    large ``n``; the returned value is still the density in ``t``.
    """
    lt = np.asarray(t, dtype=float) if log_t else np.log(np.asarray(t, dtype=float))
    z = lt - n * math.log(k)
    with np.errstate(divide="ignore", invalid="ignore"):
        logv = (n * math.log(alpha) + n * alpha * math.log(k) - gammaln(n)
                - (alpha + 1.0) * lt + (n - 1) * np.log(np.where(z > 0, z, 1.0)))
    out = np.where(z > 0, np.exp(logv), 0.0)
    return float(out) if out.ndim == 0 else out


# --- alpha ----------------------------------------------------------------------


def mle_alpha_moments(n: int, alpha: float) -> MomentReport:
    """Exact mean, second moment and MSE of the MLE of alpha (needs ``n >= 3``)."""
    if n < 3:
        raise MomentDoesNotExistError("E(alpha_mle^2) is infinite for n <= 2")
    mean = alpha * n / (n - 1)
    second = (alpha * n) ** 2 / ((n - 1) * (n - 2))
    # closed form avoids the cancellation in second - 2 alpha mean + alpha^2
    mse = alpha ** 2 * (n * n + n - 2) / ((n - 1) ** 2 * (n - 2))
    return MomentReport(Engine.CLOSED_FORM, EstimatorKind(Tag.MLE, Target.ALPHA), None, alpha,
                        mean, second, second - mean * mean, mean - alpha, mse)


def umvue_alpha_moments(n: int, alpha: float) -> MomentReport:
    if n < 3:
        raise MomentDoesNotExistError("E(alpha_umvue^2) is infinite for n <= 2")
    second = (n - 1) * alpha ** 2 / (n - 2)
    return MomentReport(Engine.CLOSED_FORM, EstimatorKind(Tag.UMVUE, Target.ALPHA), None, alpha,
                        alpha, second, alpha ** 2 / (n - 2), 0.0, alpha ** 2 / (n - 2))


# --- incomplete gamma -------------------------------------------------------------


def log_upper_incomplete_gamma_int(m: int, rate: float, a: float) -> float:
    """Log of ``int_a^inf z^(m-1) exp(-rate z) dz`` for integer ``m >= 1``."""
    if int(m) != m or m < 1:
        raise DomainError("the finite-sum form needs an integer shape m >= 1")
    if a < 0 or rate <= 0:
        raise DomainError("need a >= 0 and rate > 0")
    m = int(m)
    i = np.arange(m)
    la = math.log(rate) + math.log(a) if a > 0 else -math.inf
    partial = np.logaddexp.reduce(_powlog(i, la) - gammaln(i + 1))
    return float(gammaln(m) - m * math.log(rate) - rate * a + partial)


def upper_incomplete_gamma_int(m: int, rate: float, a: float) -> float:
    """``Gamma(m)/rate^m * exp(-rate a) * sum_{i<m} (rate a)^i / i!``."""
    return math.exp(log_upper_incomplete_gamma_int(m, rate, a))


# --- term generators ----------------------------------------------------------------
# each returns (log|term|, sign) arrays; the public functions sum them


def _terms_e_mle_pdf(n, alpha, k, x):
    _, lc = _log_c(k, x)
    j = np.arange(n - 1)
    logs = ((j + 1) * math.log(n * alpha) - gammaln(j + 1) + gammaln(n - j - 1)
            + _powlog(j, lc) - gammaln(n) - math.log(x))
    return logs, _parity(j)


def _terms_e_mle_cdf(n, alpha, k, x):
    _, lc = _log_c(k, x)
    j = np.arange(n)
    logs = j * math.log(alpha * n) - gammaln(j + 1) + gammaln(n - j) + _powlog(j, lc) - gammaln(n)
    return np.concatenate([[0.0], logs]), np.concatenate([[1], -_parity(j)])


def _terms_second_mle_pdf(n, alpha, k, x):
    _, lc = _log_c(k, x)
    j = np.arange(n - 2)
    logs = (j * _LN2 + _powlog(j, lc) - gammaln(j + 1) + gammaln(n - j - 2)
            + (j + 2) * math.log(alpha * n) - gammaln(n) - 2 * math.log(x))
    return logs, _parity(j)


def _mle_cdf_sum_terms(n, alpha, lc, power_of_two):
    j = np.arange(n)
    logs = (gammaln(n - j) + j * power_of_two * _LN2 + j * math.log(alpha * n)
            - gammaln(j + 1) + _powlog(j, lc) - gammaln(n))
    return logs, _parity(j)


def _terms_second_mle_cdf(n, alpha, k, x):
    _, lc = _log_c(k, x)
    l1, s1 = _mle_cdf_sum_terms(n, alpha, lc, 0)
    l2, s2 = _mle_cdf_sum_terms(n, alpha, lc, 1)
    logs = np.concatenate([[0.0], l1 + _LN2, l2])
    signs = np.concatenate([[1], -s1, s2])
    return logs, signs


def _terms_second_umvue_pdf(n, alpha, k, x):
    c, lc = _log_c(k, x)
    pre = (math.log(n - 1) + 2 * math.log(alpha) + alpha * math.log(k)
           - (alpha + 2) * math.log(x) - gammaln(n - 1))
    j, i = np.meshgrid(np.arange(n - 2), np.arange(n - 2), indexing="ij")
    keep = i <= n - 3 - j
    j, i = j[keep], i[keep]
    logs = (pre + _lbinom(2 * n - 4, j) + (j + i) * math.log(alpha) + gammaln(n - j - 2)
            + _powlog(j + i, lc) - gammaln(i + 1))
    return logs, _parity(j)


def _terms_second_umvue_cdf(n, alpha, k, x):
    c, lc = _log_c(k, x)
    lq = alpha * math.log(k / x)
    j, i = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    keep = i <= n - 1 - j
    j, i = j[keep], i[keep]
    logs = (lq - gammaln(n) + _lbinom(2 * n - 2, j) + (j + i) * math.log(alpha)
            + gammaln(n - j) + _powlog(j + i, lc) - gammaln(i + 1))
    logs = np.concatenate([[0.0, _LN2 + lq], logs])
    signs = np.concatenate([[1, -1], _parity(j)])
    return logs, signs


# --- exact rational evaluation ------------------------------------------------------------
# Once c = log(x/k) is rounded to a double, every series is rational in
# (c, alpha, x) apart from the common factor q = (k/x)^alpha. A series is
# returned as (P, Q) with value P + q Q; only q and the final conversion are
# rounded.


def _powers(v: Fraction, m: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(m):
        out.append(out[-1] * v)
    return out


def _exp_partials(ac_pow, m: int) -> list[Fraction]:
    """``E[m] = sum_{i<m} (a c)^i / i!`` for ``m = 0..m``."""
    out = [Fraction(0)]
    for i in range(m):
        out.append(out[-1] + ac_pow[i] / factorial(i))
    return out


def _ig_poly(m: int, a: Fraction, partials) -> Fraction:
    """Upper incomplete gamma of integer shape ``m`` at ``c``, divided by ``q``."""
    return factorial(m - 1) * partials[m] / a ** m


def _umvue_double_sum(n, top_binom, shift, limit, ac_pow):
    # sum over j + i <= limit of (-1)^j C(top_binom, j) (n-j-shift)! (ac)^(j+i) / i!,
    # grouped by m = j + i so each coefficient is an integer over m!
    tot = Fraction(0)
    for m in range(limit + 1):
        num = sum((-1) ** j * comb(top_binom, j) * factorial(n - j - shift) * (factorial(m) // factorial(m - j))
                  for j in range(m + 1))
        tot += Fraction(num, factorial(m)) * ac_pow[m]
    return tot


def _rat_mle_power_sum(n, an, c_pow, scale):
    # sum_j (-1)^j (scale c a n)^j (n-j-1)! / (j! (n-1)!)
    tot = Fraction(0)
    for j in range(n):
        tot += (-1) ** j * Fraction(scale) ** j * an ** j * c_pow[j] * factorial(n - j - 1) / factorial(j)
    return tot / factorial(n - 1)


def _rat_series(name, n, a, c, x, r=None):
    a, c, x = Fraction(a), Fraction(c), Fraction(x)
    an = a * n
    top = 2 * n + (0 if r is None else r * n)
    c_pow = _powers(c, top)
    zero = Fraction(0)
    if name in ("e_mle_pdf", "second_mle_pdf", "rth_mle_pdf"):
        rr = {"e_mle_pdf": 1, "second_mle_pdf": 2}.get(name, r)
        tot = sum(((-1) ** j * rr ** j * c_pow[j] * an ** (j + rr) * factorial(n - rr - j - 1) / factorial(j)
                   for j in range(n - rr)), zero)
        return tot / (factorial(n - 1) * x ** rr), zero
    if name == "e_mle_cdf":
        return 1 - _rat_mle_power_sum(n, an, c_pow, 1), zero
    if name == "second_mle_cdf":
        return 1 - 2 * _rat_mle_power_sum(n, an, c_pow, 1) + _rat_mle_power_sum(n, an, c_pow, 2), zero
    if name == "rth_mle_cdf":
        tot = Fraction(1)
        for j in range(1, r + 1):
            tot += (-1) ** j * comb(r, j) * _rat_mle_power_sum(n, an, c_pow, j)
        return tot, zero
    a_pow = _powers(a, top)
    ac_pow = [a_pow[i] * c_pow[i] for i in range(top + 1)]
    if name == "second_umvue_pdf":
        tot = _umvue_double_sum(n, 2 * n - 4, 3, n - 3, ac_pow)
        return zero, (n - 1) * a * a * tot / (x * x * factorial(n - 2))
    if name == "second_umvue_cdf":
        tot = _umvue_double_sum(n, 2 * n - 2, 1, n - 1, ac_pow)
        return Fraction(1), -2 + tot / factorial(n - 1)
    partials = _exp_partials(ac_pow, n)
    if name == "rth_umvue_pdf":
        tot = sum(((-1) ** j * comb(r * (n - 2), j) * c_pow[j] * _ig_poly(n - r - j, a, partials)
                   for j in range(n - r)), zero)
        return zero, (n - 1) ** r * a_pow[n] * tot / (x ** r * factorial(n - 1))
    if name == "rth_umvue_cdf":
        tot = zero
        for j in range(r + 1):
            inner = sum(((-1) ** i * comb(j * (n - 1), i) * c_pow[i] * _ig_poly(n - i, a, partials)
                         for i in range(min(j * (n - 1), n - 1) + 1)), zero)
            tot += (-1) ** j * comb(r, j) * inner
        return Fraction(1), a_pow[n] * tot / factorial(n - 1) - partials[n]
    raise KeyError(name)


def _exact_value(name, n, alpha, k, x, r=None) -> float:
    c, _ = _log_c(k, x)
    p, q_part = _rat_series(name, n, alpha, c, x, r)
    if q_part == 0:
        return float(p)
    q = math.exp(-alpha * c)
    return float(p) + q * float(q_part)


_TERMS = {
    "e_mle_pdf": _terms_e_mle_pdf,
    "e_mle_cdf": _terms_e_mle_cdf,
    "second_mle_pdf": _terms_second_mle_pdf,
    "second_mle_cdf": _terms_second_mle_cdf,
    "second_umvue_pdf": _terms_second_umvue_pdf,
    "second_umvue_cdf": _terms_second_umvue_cdf,
}


def series_terms(name: str, n: int, alpha: float, k: float, x: float):
    """Raw ``(log|term|, sign)`` arrays of one of the named series.

    Exposed so that the log-domain accumulation can be compared against a
    plain floating-point sum of the same terms.
    """
    return _TERMS[name](n, alpha, k, x)


def _sum(name, n, alpha, k, x, naive=False, exact=False):
    if exact:
        return _exact_value(name, n, alpha, k, x)
    logs, signs = _TERMS[name](n, alpha, k, x)
    return naive_sum(logs, signs) if naive else signed_sum(logs, signs)


# --- first and second moments ---------------------------------------------------------


def e_mle_pdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    """Series for the mean of the MLE density estimate, ``j = 0..n-2``."""
    if n < 2:
        raise MomentDoesNotExistError("E(f_mle(x)) series needs n >= 2")
    return _sum("e_mle_pdf", n, alpha, k, x, exact=exact)


def e_mle_cdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    """Series for the mean of the MLE cdf estimate.

    Not clamped: a value outside ``[0, 1]`` is returned as is and flagged by
    :func:`mse_mle_cdf`.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    return _sum("e_mle_cdf", n, alpha, k, x, exact=exact)


def second_moment_mle_pdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    if n < 3:
        raise MomentDoesNotExistError("E(f_mle(x)^2) is infinite at x = k for n <= 2")
    return _sum("second_mle_pdf", n, alpha, k, x, exact=exact)


def second_moment_mle_cdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    if n < 1:
        raise DomainError("n must be >= 1")
    return _sum("second_mle_cdf", n, alpha, k, x, exact=exact)


def second_moment_umvue_pdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    if n < 3:
        raise MomentDoesNotExistError("E(f_umvue(x)^2) is infinite at x = k for n <= 2")
    return _sum("second_umvue_pdf", n, alpha, k, x, exact=exact)


def second_moment_umvue_cdf(n: int, alpha: float, k: float, x: float, *, exact: bool = False) -> float:
    if n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    return _sum("second_umvue_cdf", n, alpha, k, x, exact=exact)


# --- MSE reports -------------------------------------------------------------------------


def mse_mle_pdf(n: int, alpha: float, k: float, x: float) -> MomentReport:
    if n < 3:
        raise MomentDoesNotExistError("MSE of the MLE density needs n >= 3")
    fx = pdf(ParetoParams(alpha, k), x)
    return assemble(Engine.CLOSED_FORM, EstimatorKind(Tag.MLE, Target.PDF), x, fx,
                    e_mle_pdf(n, alpha, k, x), second_moment_mle_pdf(n, alpha, k, x))


def mse_mle_cdf(n: int, alpha: float, k: float, x: float) -> MomentReport:
    mean = e_mle_cdf(n, alpha, k, x)
    second = second_moment_mle_cdf(n, alpha, k, x)
    flags = ()
    if not 0.0 <= mean <= 1.0:
        flags += ("mean_outside_unit_interval",)
    if not 0.0 <= second <= 1.0:
        flags += ("second_outside_unit_interval",)
    return assemble(Engine.CLOSED_FORM, EstimatorKind(Tag.MLE, Target.CDF), x,
                    cdf(ParetoParams(alpha, k), x), mean, second, flags)


def mse_mle_cdf_printed(n: int, alpha: float, k: float, x: float) -> float:
    """MSE of the MLE cdf estimate in its pre-expanded published form.

    ``2 + B - 2 q A + q^2`` with ``A``, ``B`` the two power sums truncated at
    ``j = n - 1`` and ``q = (k/x)^alpha``. The assembled value from
    :func:`mse_mle_cdf` is ``B - 2 q A + q^2``; the two differ by the
    constant 2.
    """
    _, lc = _log_c(k, x)
    la, sa = _mle_cdf_sum_terms(n, alpha, lc, 0)
    lb, sb = _mle_cdf_sum_terms(n, alpha, lc, 1)
    lq = alpha * math.log(k / x)
    acc = SignedLogSum()
    acc.add(_LN2)
    acc.extend(lb, sb)
    acc.extend(la + _LN2 + lq, -sa)
    acc.add(2 * lq)
    return acc.value()


def mse_umvue_pdf(n: int, alpha: float, k: float, x: float) -> MomentReport:
    if n < 3:
        raise MomentDoesNotExistError("MSE of the UMVUE density needs n >= 3")
    fx = pdf(ParetoParams(alpha, k), x)
    return assemble(Engine.CLOSED_FORM, EstimatorKind(Tag.UMVUE, Target.PDF), x, fx, fx,
                    second_moment_umvue_pdf(n, alpha, k, x))


def mse_umvue_cdf(n: int, alpha: float, k: float, x: float) -> MomentReport:
    if n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    Fx = cdf(ParetoParams(alpha, k), x)
    return assemble(Engine.CLOSED_FORM, EstimatorKind(Tag.UMVUE, Target.CDF), x, Fx, Fx,
                    second_moment_umvue_cdf(n, alpha, k, x))


# --- r-th moments ----------------------------------------------------------------------------
# coded independently of the first/second moment series above so that the
# two can be compared


def rth_moment_mle_pdf(n: int, alpha: float, k: float, x: float, r: int, *,
                       exact: bool = False) -> float:
    """``E(f_mle(x)^r)`` series, ``j = 0..n-r-1``."""
    if r < 1:
        raise DomainError("r must be >= 1")
    if n <= r:
        raise MomentDoesNotExistError(f"E(f_mle(x)^{r}) needs n > r")
    _, lc = _log_c(k, x)
    if exact:
        return _exact_value("rth_mle_pdf", n, alpha, k, x, r)
    acc = SignedLogSum()
    lan = math.log(alpha * n)
    base = -gammaln(n) - r * math.log(x)
    for j in range(n - r):
        la = (base + j * math.log(r) + float(_powlog(j, lc)) - gammaln(j + 1)
              + gammaln(n - r - j) + (j + r) * lan)
        acc.add(la, 1 if j % 2 == 0 else -1)
    return acc.value()


def rth_moment_mle_cdf(n: int, alpha: float, k: float, x: float, r: int, *,
                       exact: bool = False) -> float:
    """``E(F_mle(x)^r)`` via the binomial expansion of ``(1 - (k/x)^w)^r``."""
    if r < 1 or n < 1:
        raise DomainError("need r >= 1 and n >= 1")
    c, lc = _log_c(k, x)
    if c == 0:
        return 0.0  # the estimate is identically 0 at x = k
    if exact:
        return _exact_value("rth_mle_cdf", n, alpha, k, x, r)
    acc = SignedLogSum()
    lan = math.log(alpha * n)
    for j in range(r + 1):
        lbin = float(_lbinom(r, j))
        ljc = lc + math.log(j) if j > 0 else -math.inf
        for i in range(n):
            if j == 0 and i > 0:
                continue
            la = (lbin + float(_powlog(i, ljc)) - gammaln(i + 1) + gammaln(n - i)
                  + i * lan - gammaln(n))
            acc.add(la, (1 if j % 2 == 0 else -1) * (1 if i % 2 == 0 else -1))
    return acc.value()


def rth_moment_umvue_pdf(n: int, alpha: float, k: float, x: float, r: int, *,
                         exact: bool = False) -> float:
    """``E(f_umvue(x)^r)``: binomial expansion then integer-shape incomplete gammas."""
    if r < 1:
        raise DomainError("r must be >= 1")
    if n <= r or n < 2:
        raise MomentDoesNotExistError(f"E(f_umvue(x)^{r}) needs n > r")
    c, lc = _log_c(k, x)
    pre = r * math.log(n - 1) + n * math.log(alpha) - r * math.log(x) - gammaln(n)
    if exact:
        return _exact_value("rth_umvue_pdf", n, alpha, k, x, r)
    acc = SignedLogSum()
    for j in range(n - r):
        la = (pre + float(_lbinom(r * (n - 2), j)) + float(_powlog(j, lc))
              + log_upper_incomplete_gamma_int(n - r - j, alpha, c))
        acc.add(la, 1 if j % 2 == 0 else -1)
    return acc.value()


def rth_moment_umvue_cdf(n: int, alpha: float, k: float, x: float, r: int, *,
                         exact: bool = False) -> float:
    """``E(F_umvue(x)^r)``; inner index truncated at ``min(j (n-1), n-1)``."""
    if r < 1:
        raise DomainError("r must be >= 1")
    if n < 2:
        raise DomainError("the UMVUE needs n >= 2")
    c, lc = _log_c(k, x)
    if c == 0:
        return 0.0
    pre = n * math.log(alpha) - gammaln(n)
    if exact:
        return _exact_value("rth_umvue_cdf", n, alpha, k, x, r)
    acc = SignedLogSum()
    for j in range(r + 1):
        lbin = float(_lbinom(r, j))
        for i in range(min(j * (n - 1), n - 1) + 1):
            la = (pre + lbin + float(_lbinom(j * (n - 1), i)) + float(_powlog(i, lc))
                  + log_upper_incomplete_gamma_int(n - i, alpha, c))
            acc.add(la, (1 if j % 2 == 0 else -1) * (1 if i % 2 == 0 else -1))
    # mass of S below log(x/k), where the estimator equals 1
    acc.add(0.0)
    i = np.arange(n)
    lq = alpha * math.log(k / x)
    acc.extend(lq + _powlog(i, math.log(alpha * c) if c > 0 else -math.inf) - gammaln(i + 1),
               -np.ones(n))
    return acc.value()
