import pytest
from math import gcd

from quadclass.discriminant import (
    Case,
    chi,
    chi4,
    chi8,
    from_discriminant,
    from_generator,
    quad_char,
)
from quadclass.errors import (
    ExcludedDiscriminantError,
    InvalidGeneratorError,
    NotFundamentalError,
)

from helpers import chi_kronecker, fundamentals_with_n_up_to, is_fundamental


class TestFromDiscriminant:
    def test_case_classification(self):
        for D, n, m, case in [
            (-7, 7, -7, Case.ODD),
            (-15, 15, -15, Case.ODD),
            (-43, 43, -43, Case.ODD),
            (-20, 20, -5, Case.D1),
            (-8, 8, -2, Case.D3),
            (-24, 24, -6, Case.D2),
            (-40, 40, -10, Case.D3),
            (-56, 56, -14, Case.D2),
            (-84, 84, -21, Case.D1),
        ]:
            disc = from_discriminant(D)
            assert (disc.D, disc.N, disc.m, disc.case) == (D, n, m, case)

    def test_excluded(self):
        with pytest.raises(ExcludedDiscriminantError):
            from_discriminant(-3)
        with pytest.raises(ExcludedDiscriminantError):
            from_discriminant(-4)

    def test_not_fundamental(self):
        for D in (-12, -9, -45, -75, -32, -27, -18, -1, -2, 0, 5, -100):
            with pytest.raises(NotFundamentalError):
                from_discriminant(D)

    def test_matches_independent_filter(self):
        for D in range(-1, -2001, -1):
            try:
                from_discriminant(D)
                ok = True
            except (NotFundamentalError, ExcludedDiscriminantError):
                ok = False
            assert ok == is_fundamental(D), D


class TestFromGenerator:
    def test_examples(self):
        assert from_generator(-7).D == -7
        assert from_generator(-5).D == -20
        assert from_generator(-2).D == -8
        assert from_generator(-6).D == -24
        assert from_generator(-10).D == -40
        assert from_generator(-14).D == -56

    def test_excluded_generators(self):
        with pytest.raises(ExcludedDiscriminantError):
            from_generator(-1)  # D = -4
        with pytest.raises(ExcludedDiscriminantError):
            from_generator(-3)  # D = -3

    def test_invalid_generators(self):
        for m in (0, 5, -4, -12, -9, -75):
            with pytest.raises(InvalidGeneratorError):
                from_generator(m)

    def test_agrees_with_from_discriminant(self):
        for m in range(-2, -300, -1):
            try:
                disc = from_generator(m)
            except (InvalidGeneratorError, ExcludedDiscriminantError):
                continue
            assert from_discriminant(disc.D) == disc


class TestChi4Chi8:
    def test_tables(self):
        assert [chi4(x) for x in (1, 3, 5, 7)] == [1, -1, 1, -1]
        assert [chi8(x) for x in (1, 3, 5, 7)] == [1, -1, -1, 1]
        assert chi4(-3) == chi4(1) == 1
        assert chi8(9) == 1 and chi8(-1) == 1

    def test_period(self):
        for x in range(-20, 21):
            if x % 2:
                assert chi4(x) == chi4(x + 4)
                assert chi8(x) == chi8(x + 8)

    def test_even_argument_rejected(self):
        with pytest.raises(ValueError):
            chi4(2)
        with pytest.raises(ValueError):
            chi8(0)


class TestCharacter:
    def test_known_values(self):
        d40 = from_discriminant(-40)
        d56 = from_discriminant(-56)
        d43 = from_discriminant(-43)
        assert chi(d40, 3) == -1
        assert chi(d56, 11) == -1
        assert chi(d43, 2) == -1  # N = 43 = 3 (mod 8)
        assert chi(from_discriminant(-7), 2) == 1  # N = 7 (mod 8)

    def test_row_for_minus_40(self):
        d = from_discriminant(-40)
        row = tuple(chi(d, x) for x in range(1, 40) if gcd(x, 40) == 1)
        assert row == (1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1, -1, -1, 1, -1)

    def test_zero_iff_common_factor(self):
        for disc in fundamentals_with_n_up_to(100):
            for x in range(0, disc.N + 1):
                assert (chi(disc, x) == 0) == (gcd(x, disc.N) > 1)

    def test_matches_kronecker_symbol(self):
        for disc in fundamentals_with_n_up_to(400):
            for x in range(1, disc.N + 1):
                assert chi(disc, x) == chi_kronecker(disc.D, x), (disc.D, x)

    def test_matches_kronecker_symbol_larger_sampled(self):
        for disc in fundamentals_with_n_up_to(3000)[::19]:
            for x in range(1, disc.N, 13):
                assert chi(disc, x) == chi_kronecker(disc.D, x), (disc.D, x)

    def test_table_matches_pointwise_eval(self):
        for disc in fundamentals_with_n_up_to(300):
            char = quad_char(disc)
            vals = char.values()
            assert len(vals) == disc.N + 1
            assert vals[0] == 0 and vals[disc.N] == 0
            for x in range(disc.N + 1):
                assert vals[x] == char.eval(x)

    def test_chi_at_minus_one(self):
        for disc in fundamentals_with_n_up_to(500):
            assert chi(disc, -1) == -1
            assert chi(disc, disc.N - 1) == -1

    def test_periodicity(self):
        for disc in fundamentals_with_n_up_to(200)[::5]:
            for x in range(-disc.N, disc.N):
                assert chi(disc, x) == chi(disc, x + disc.N)

    def test_quad_char_is_cached(self):
        d = from_discriminant(-15)
        assert quad_char(d) is quad_char(from_discriminant(-15))
