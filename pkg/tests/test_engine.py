import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from logladder import (
    DyadicExponent,
    LogValue,
    antilog_dyadic,
    build_ladder,
    convert_base,
    log_dyadic,
    log_product_check,
)
from logladder._backend import kernels
from logladder.errors import (
    BadBaseError,
    DepthMismatchError,
    LevelOutOfRangeError,
    NonPositiveInputError,
)


class TestDyadicExponent:
    def test_canonical_reduction(self):
        assert DyadicExponent(4, 3) == DyadicExponent(1, 1)
        assert DyadicExponent(0, 17) == DyadicExponent(0, 0)
        assert DyadicExponent(6, 4) == DyadicExponent(3, 3)

    @given(st.integers(min_value=-(1 << 40), max_value=1 << 40),
           st.integers(min_value=0, max_value=40))
    def test_canonical_form_and_exact_value(self, k, n):
        d = DyadicExponent(k, n)
        if d.numerator == 0:
            assert d.level == 0
        else:
            assert d.numerator % 2 == 1 or d.level == 0
        assert d.value() == k / (1 << n)

    def test_level_cap(self):
        with pytest.raises(LevelOutOfRangeError):
            DyadicExponent(1, 49)


class TestLogDyadic:
    def test_exact_powers(self, ladder10_40):
        lv = log_dyadic(1000.0, ladder10_40)
        assert lv.characteristic == 3
        assert lv.mantissa_exponent == DyadicExponent(0, 0)
        assert lv.value() == 3.0
        assert log_dyadic(1.0, ladder10_40).value() == 0.0
        assert log_dyadic(0.01, ladder10_40).value() == -2.0

    def test_log2_within_grid_bound(self, ladder10_20, ladder10_40):
        v20 = log_dyadic(2.0, ladder10_20).value()
        assert abs(v20 - 0.30102999566) <= 2.0 ** -20
        v40 = log_dyadic(2.0, ladder10_40).value()
        assert abs(v40 - math.log10(2.0)) <= 2.0 ** -40

    def test_3157_to_five_digits(self, ladder10_40):
        v = log_dyadic(3157.0, ladder10_40).value()
        assert f"{v:.5g}" == "3.4993"

    def test_mantissa_always_in_unit_interval(self, ladder10_40):
        rng = random.Random(5)
        for _ in range(200):
            y = 10.0 ** rng.uniform(-8.0, 8.0)
            lv = log_dyadic(y, ladder10_40)
            assert 0.0 <= lv.mantissa_exponent.value() < 1.0
            assert lv.error_bound == 2.0 ** -40

    def test_greedy_residual_invariant(self, ladder10_40):
        rungs = ladder10_40.rungs
        rng = random.Random(6)
        for _ in range(200):
            y = 10.0 ** rng.uniform(-8.0, 8.0)
            _, _, residual = kernels.log_split(y, 10.0, rungs)
            assert 1.0 <= residual < rungs[-1]

    def test_undershoot_never_overshoot(self, ladder10_40):
        rng = random.Random(7)
        for _ in range(200):
            y = 10.0 ** rng.uniform(-6.0, 6.0)
            v = log_dyadic(y, ladder10_40).value()
            true = math.log10(y)
            assert -1e-15 <= true - v < 2.0 ** -40 + 1e-15

    def test_rejects_nonpositive(self, ladder10_40):
        for bad in (0.0, -3.0, float("inf"), float("nan")):
            with pytest.raises(NonPositiveInputError):
                log_dyadic(bad, ladder10_40)


class TestAntilogDyadic:
    def test_half_is_root_ten(self, ladder10_40):
        assert antilog_dyadic(0.5, ladder10_40) == ladder10_40.rungs[1]
        assert antilog_dyadic(0.5, ladder10_40) == pytest.approx(
            3.16227766, abs=5e-9)

    def test_zero_is_one(self, ladder10_40):
        assert antilog_dyadic(0.0, ladder10_40) == 1.0

    def test_log10_of_two_to_seven_digits(self, ladder10_40):
        got = antilog_dyadic(0.30102999566, ladder10_40)
        assert f"{got:.7g}" == "2"
        assert got == pytest.approx(2.0, rel=1e-7)

    def test_logvalue_roundtrip(self, ladder10_40):
        rng = random.Random(8)
        bound = 3.0 * math.log(10.0) * 2.0 ** -40
        for _ in range(300):
            y = 10.0 ** rng.uniform(-8.0, 8.0)
            back = antilog_dyadic(log_dyadic(y, ladder10_40), ladder10_40)
            assert abs(back / y - 1.0) <= bound

    def test_grid_roundtrip_in_log_domain(self, ladder10_40):
        rng = random.Random(9)
        for _ in range(300):
            x = rng.uniform(-8.0, 8.0)
            k = round(x * (1 << 40))
            x_grid = k / float(1 << 40)
            back = log_dyadic(antilog_dyadic(x_grid, ladder10_40),
                              ladder10_40).value()
            assert abs(back - x_grid) <= 3.0 * 2.0 ** -40

    def test_negative_characteristic(self, ladder10_40):
        assert antilog_dyadic(-2.0, ladder10_40) == pytest.approx(0.01, rel=1e-12)
        assert antilog_dyadic(-0.5, ladder10_40) == pytest.approx(
            1.0 / math.sqrt(10.0), rel=1e-10)

    def test_off_grid_rounds_ties_even(self, ladder10_20):
        # exactly between grid points 1/2^20 and 2/2^20: even numerator wins
        x = 1.5 / (1 << 20)
        got = antilog_dyadic(x, ladder10_20)
        want = antilog_dyadic(DyadicExponent(2, 20).value(), ladder10_20)
        assert got == want

    def test_depth_mismatch_rejected(self, ladder10_20, ladder10_40):
        fine = log_dyadic(2.0, ladder10_40)
        assert fine.mantissa_exponent.level > 20
        with pytest.raises(DepthMismatchError):
            antilog_dyadic(fine, ladder10_20)

    def test_base_mismatch_rejected(self, ladder10_40, ladder3_40):
        lv = log_dyadic(2.0, ladder10_40)
        with pytest.raises(BadBaseError):
            antilog_dyadic(lv, ladder3_40)

    def test_coarser_logvalue_accepted(self, ladder10_20, ladder10_40):
        coarse = log_dyadic(2.0, ladder10_20)
        fine_path = antilog_dyadic(coarse, ladder10_40)
        same_path = antilog_dyadic(coarse, ladder10_20)
        assert fine_path == same_path


class TestConvertBase:
    def test_same_base_is_identity(self, ladder10_40):
        lv = log_dyadic(7.25, ladder10_40)
        assert convert_base(lv, 10.0, ladder10_40) == lv.value()

    def test_eight_to_base_two(self, ladder10_40):
        lv = log_dyadic(8.0, ladder10_40)
        log2 = log_dyadic(2.0, ladder10_40)
        bound = (lv.error_bound
                 + lv.value() * log2.error_bound / log2.value()) / log2.value()
        assert abs(convert_base(lv, 2.0, ladder10_40) - 3.0) <= 2.0 * bound

    def test_five_to_base_three(self, ladder10_40):
        got = convert_base(log_dyadic(5.0, ladder10_40), 3.0, ladder10_40)
        assert got == pytest.approx(math.log(5.0) / math.log(3.0), abs=1e-10)
        assert f"{got:.6g}" == "1.46497"

    def test_there_and_back(self, ladder10_40, ladder3_40):
        rng = random.Random(10)
        for _ in range(100):
            y = 10.0 ** rng.uniform(-3.0, 3.0)
            x10 = log_dyadic(y, ladder10_40)
            x3 = log_dyadic(y, ladder3_40)
            back = convert_base(x3, 10.0, ladder3_40)
            log3_10 = log_dyadic(10.0, ladder3_40)
            bound = (x3.error_bound + abs(x3.value()) * log3_10.error_bound
                     / log3_10.value()) / log3_10.value()
            assert abs(back - x10.value()) <= 4.0 * bound + x10.error_bound

    def test_rejects_bad_target(self, ladder10_40):
        lv = log_dyadic(2.0, ladder10_40)
        with pytest.raises(BadBaseError):
            convert_base(lv, 1.0, ladder10_40)
        with pytest.raises(BadBaseError):
            convert_base(lv, 0.5, ladder10_40)


class TestProductLaw:
    def test_powers_of_ten(self, ladder10_40):
        assert log_product_check(1000.0, 100.0, ladder10_40) == (5.0, 5.0)

    def test_multiplying_by_one(self, ladder10_40):
        lhs, rhs = log_product_check(7.3, 1.0, ladder10_40)
        assert lhs == pytest.approx(rhs, abs=2.0 * 2.0 ** -40)

    def test_two_times_three(self, ladder10_40):
        lhs, rhs = log_product_check(2.0, 3.0, ladder10_40)
        assert abs(lhs - rhs) <= 2.0 * 2.0 ** -40 + 2.0 ** -40
        assert lhs == pytest.approx(math.log10(6.0), abs=2.0 ** -39)

    def test_reciprocal_antisymmetry(self, ladder10_40):
        rng = random.Random(11)
        for _ in range(300):
            y = 10.0 ** rng.uniform(-6.0, 6.0)
            total = (log_dyadic(1.0 / y, ladder10_40).value()
                     + log_dyadic(y, ladder10_40).value())
            assert abs(total) <= 2.0 * 2.0 ** -40


class TestLogValueType:
    def test_value_splits_into_characteristic_and_mantissa(self, ladder10_40):
        lv = log_dyadic(0.5, ladder10_40)
        assert lv.characteristic == -1
        assert 0.0 <= lv.mantissa_exponent.value() < 1.0
        assert lv.value() == lv.characteristic + lv.mantissa_exponent.value()

    def test_rejects_mantissa_outside_unit_interval(self):
        with pytest.raises(LevelOutOfRangeError):
            LogValue(base=10.0, characteristic=0,
                     mantissa_exponent=DyadicExponent(3, 1),
                     error_bound=0.25)
