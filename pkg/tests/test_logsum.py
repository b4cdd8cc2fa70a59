from __future__ import annotations

import doctest
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from paretoest import exact_moments as em
from paretoest import logsum
from paretoest.logsum import SignedLogSum, naive_sum, signed_sum


def test_doctest():
    assert doctest.testmod(logsum).failed == 0


class TestSignedLogSum:
    def test_empty_is_zero(self):
        acc = SignedLogSum()
        assert acc.value() == 0.0 and acc.sign() == 0

    def test_exact_cancellation(self):
        acc = SignedLogSum()
        acc.add(math.log(5.0))
        acc.add(math.log(5.0), -1)
        assert acc.value() == 0.0

    def test_add_value(self):
        acc = SignedLogSum()
        for v in (1.5, -0.25, 0.0, 3.0):
            acc.add_value(v)
        assert acc.value() == pytest.approx(4.25)
        assert acc.count == 4

    def test_beyond_double_range(self):
        acc = SignedLogSum()
        acc.add(2000.0)
        acc.add(2000.0 + math.log(0.5), -1)
        assert acc.log_abs_value() == pytest.approx(2000.0 + math.log(0.5))
        assert acc.sign() == 1

    def test_log_scale(self):
        acc = SignedLogSum()
        acc.extend([0.0, 0.0], [1, -1])
        assert acc.log_scale == pytest.approx(math.log(2.0))

    @given(st.lists(st.floats(-1e3, 1e3).filter(lambda v: abs(v) > 1e-300), min_size=1, max_size=40))
    def test_matches_fsum(self, vals):
        acc = SignedLogSum()
        for v in vals:
            acc.add_value(v)
        ref = math.fsum(vals)
        scale = math.fsum(abs(v) for v in vals)
        assert abs(acc.value() - ref) <= 1e-13 * scale


@pytest.mark.parametrize("name", ["e_mle_pdf", "e_mle_cdf", "second_mle_pdf", "second_mle_cdf",
                                  "second_umvue_pdf", "second_umvue_cdf"])
@pytest.mark.parametrize("n", [3, 5, 10, 20])
def test_log_sum_agrees_with_naive_for_small_n(name, n):
    for x in (1.0, 1.3, 2.0):
        logs, signs = em.series_terms(name, n, 1.2, 1.0, x)
        a, b = signed_sum(logs, signs), naive_sum(logs, signs)
        scale = float(np.sum(np.exp(logs)))
        assert abs(a - b) <= 1e-13 * scale
