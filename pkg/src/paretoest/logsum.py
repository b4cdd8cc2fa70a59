"""Signed accumulation of terms held as ``(log|t|, sign)`` pairs."""
from __future__ import annotations

import math

import numpy as np

__all__ = ["SignedLogSum", "signed_sum", "naive_sum"]


class SignedLogSum:
    """Running sum of signed terms, each stored as a log-magnitude.

    Positive and negative parts are accumulated separately with ``logaddexp``
    and only combined in :meth:`value`, so intermediate terms far outside the
    double range do not overflow.

    >>> acc = SignedLogSum()
    >>> acc.add(math.log(3.0)); acc.add(math.log(1.0), -1)
    >>> round(acc.value(), 12)
    2.0
    """

    __slots__ = ("log_pos", "log_neg", "count")

    def __init__(self):
        self.log_pos = -math.inf
        self.log_neg = -math.inf
        self.count = 0

    def add(self, log_abs: float, sign: int = 1) -> None:
        self.count += 1
        if sign == 0 or log_abs == -math.inf:
            return
        if sign > 0:
            self.log_pos = float(np.logaddexp(self.log_pos, log_abs))
        else:
            self.log_neg = float(np.logaddexp(self.log_neg, log_abs))

    def add_value(self, value: float) -> None:
        if value != 0:
            self.add(math.log(abs(value)), 1 if value > 0 else -1)
        else:
            self.count += 1

    def extend(self, log_abs, signs) -> None:
        log_abs = np.asarray(log_abs, dtype=float)
        signs = np.asarray(signs)
        self.count += log_abs.size
        pos = log_abs[signs > 0]
        neg = log_abs[signs < 0]
        if pos.size:
            self.log_pos = float(np.logaddexp(self.log_pos, np.logaddexp.reduce(pos)))
        if neg.size:
            self.log_neg = float(np.logaddexp(self.log_neg, np.logaddexp.reduce(neg)))

    @property
    def log_scale(self) -> float:
        """Log of the sum of absolute values of all terms."""
        return float(np.logaddexp(self.log_pos, self.log_neg))

    def sign(self) -> int:
        if self.log_pos == self.log_neg:
            return 0
        return 1 if self.log_pos > self.log_neg else -1

    def log_abs_value(self) -> float:
        hi, lo = max(self.log_pos, self.log_neg), min(self.log_pos, self.log_neg)
        if hi == -math.inf or hi == lo:
            return -math.inf
        return hi + math.log(-math.expm1(lo - hi))

    def value(self) -> float:
        s = self.sign()
        if s == 0:
            return 0.0
        return s * math.exp(self.log_abs_value())


def signed_sum(log_abs, signs) -> float:
    acc = SignedLogSum()
    acc.extend(log_abs, signs)
    return acc.value()


def naive_sum(log_abs, signs) -> float:
    """Left-to-right floating sum of the same terms; used for cross-checks."""
    total = 0.0
    for la, s in zip(np.asarray(log_abs, dtype=float), np.asarray(signs)):
        total += float(s) * math.exp(la)
    return total
