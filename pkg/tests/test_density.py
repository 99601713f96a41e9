import math
from decimal import Decimal
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rootdensity.arith import euler_phi, is_fundamental_discriminant, kronecker
from rootdensity.density import (
    ARTIN_CONSTANT,
    DensityValue,
    InvalidBaseError,
    Progression,
    coeff_A,
    delta_closed,
    delta_closed_v2,
    gamma_factor,
    make_base,
    s_of_b,
    w,
)

from conftest import admissible_bases, residues


class TestMakeBase:
    def test_base_two(self):
        b = make_base(2)
        assert (b.h, b.g1, b.g2, b.delta) == (1, 2, 1, 8)

    def test_base_eight(self):
        b = make_base(8)
        assert (b.h, b.g1, b.g2, b.delta) == (3, 2, 2, 8)

    def test_negative_base(self):
        b = make_base(-4)  # not a square: negative
        assert (b.h, b.g1, b.g2, b.delta) == (1, -1, 2, -4)

    def test_minus_eight_exponent(self):
        # -8 = (-2)**3, so h = 3; -32 = (-2)**5
        assert make_base(-8).h == 3
        assert make_base(-32).h == 5
        assert make_base(-16).h == 1  # no integer y with y**2 or y**4 = -16

    @pytest.mark.parametrize("g", [-1, 0, 1, 4, 9, 49, 10**6])
    def test_rejections(self, g):
        with pytest.raises(InvalidBaseError):
            make_base(g)

    def test_h_odd_and_delta_fundamental(self):
        for g in admissible_bases(-10**4, 10**4):
            b = make_base(g)
            assert b.h % 2 == 1
            assert b.g1 * b.g2**2 == g
            assert b.delta == (b.g1 if b.g1 % 4 == 1 else 4 * b.g1)
            assert is_fundamental_discriminant(b.delta)

    def test_h_maximality_brute_force(self):
        # h really is the largest e with g an exact e-th power
        for g in admissible_bases(-300, 300):
            h = make_base(g).h
            found = 1
            for e in range(2, 12):
                r = round(abs(g) ** (1 / e))
                for y in (r - 1, r, r + 1):
                    if y >= 0 and y**e == abs(g) and (g > 0 or e % 2 == 1):
                        found = max(found, e)
            assert h == found


class TestProgression:
    def test_validation(self):
        Progression(1, 1)
        Progression(3, 28)
        with pytest.raises(ValueError):
            Progression(2, 28)
        with pytest.raises(ValueError):
            Progression(0, 5)
        with pytest.raises(ValueError):
            Progression(6, 5)


class TestGammaFactor:
    def test_examples(self):
        b2 = make_base(2)
        assert gamma_factor(28, b2) == (2, 1)
        assert gamma_factor(8, b2) == (1, 8)
        assert gamma_factor(1, b2) == (8, 1)  # even discriminant, f = 1

    def test_odd_b_properties(self):
        for g in admissible_bases(-50, 50):
            base = make_base(g)
            for f in range(1, 60):
                b, gamma = gamma_factor(f, base)
                assert b * math.gcd(f, abs(base.delta)) == base.delta
                if b % 2:
                    assert is_fundamental_discriminant(gamma)
                    assert f % abs(gamma) == 0
                else:
                    assert gamma == 1


class TestW:
    def test_primes_away_from_f_and_h(self):
        for p in (2, 3, 5, 7, 11):
            assert w(p, 9 if p != 3 else 5, 1) == p * (p - 1)

    def test_w2_with_odd_h(self):
        for f in (1, 3, 5, 9, 15):
            for h in (1, 3, 9):
                assert w(2, f, h) == 2

    def test_prime_cases(self):
        assert w(3, 3, 1) == 3        # p | f, p not | h
        assert w(3, 5, 3) == 2        # p | h, p not | f
        assert w(3, 3, 3) == 1        # p | f and p | h
        assert w(6, 1, 1) == 12       # multiplicativity: w(2) w(3) = 2 * 6

    def test_multiplicative_on_coprime_pairs(self):
        # exhaustive over coprime k1, k2 <= 100
        for f, h in ((1, 1), (12, 1), (5, 3), (28, 7)):
            for k1 in range(1, 101):
                wk1 = w(k1, f, h)
                for k2 in range(1, 101):
                    if math.gcd(k1, k2) != 1:
                        continue
                    assert w(k1 * k2, f, h) == wk1 * w(k2, f, h)

    def test_rejects_even_h(self):
        with pytest.raises(ValueError):
            w(3, 1, 2)


def _coeff_A_defining_product(a: int, f: int, h: int, prime_bound: int) -> float:
    """The three-factor Euler product, truncated over p <= prime_bound.

    Independent numeric oracle for coeff_A (which returns the exact
    coefficient of the full Artin product).
    """
    if math.gcd(math.gcd(a - 1, f), h) > 1:
        return 0.0
    value = 1.0
    for p in sympy.primerange(2, prime_bound):
        if f % p == 0:
            if (a - 1) % p == 0:
                value *= 1 - 1 / p
        elif h % p == 0:
            value *= 1 - 1 / (p - 1)
        else:
            value *= 1 - 1 / (p * (p - 1))
    return value


class TestCoeffA:
    def test_trivial_class(self):
        assert coeff_A(Progression(1, 1), 1) == 1

    def test_examples(self):
        assert coeff_A(Progression(3, 4), 1) == 1
        assert coeff_A(Progression(3, 28), 1) == Fraction(42, 41)

    def test_zero_on_shared_gcd(self):
        # gcd(a-1, f, h) = 3
        assert coeff_A(Progression(1, 3), 3) == 0
        assert coeff_A(Progression(4, 9), 3) == 0

    @pytest.mark.parametrize(
        "a,f,h",
        [(1, 1, 1), (3, 4, 1), (3, 28, 1), (1, 8, 3), (2, 5, 7), (7, 12, 3)],
    )
    def test_numeric_against_defining_product(self, a, f, h):
        exact = float(coeff_A(Progression(a, f), h) * ARTIN_CONSTANT)
        approx = _coeff_A_defining_product(a, f, h, 10**5)
        assert exact == pytest.approx(approx, abs=1e-4)


class TestSOfB:
    def test_even_b_vanishes(self):
        base = make_base(2)
        assert s_of_b(Progression(3, 28), base) == 0

    def test_b_equal_one(self):
        base = make_base(2)
        for a in residues(8):
            assert s_of_b(Progression(a, 8), base) == coeff_A(Progression(a, 8), 1)

    def test_proof_identity_small_grid(self):
        # phi(f) * delta = coeff_A + (gamma | a) * (-S(b)), exactly
        for g in (-3, 2, 5, 8, 12):
            base = make_base(g)
            for f in range(1, 25):
                for a in residues(f):
                    prog = Progression(a, f)
                    _, gamma = gamma_factor(f, base)
                    lhs = euler_phi(f) * delta_closed(prog, g).coefficient
                    rhs = coeff_A(prog, base.h) + kronecker(gamma, a) * (-s_of_b(prog, base))
                    assert lhs == rhs


class TestDeltaClosed:
    def test_full_artin_density(self):
        assert delta_closed(Progression(1, 1), 2).coefficient == 1

    def test_corrected_class(self):
        assert delta_closed(Progression(3, 28), 2).coefficient == Fraction(7, 82)

    def test_exact_zero(self):
        assert delta_closed(Progression(4, 5), 5).coefficient == 0

    def test_quadratic_correction(self):
        assert delta_closed(Progression(1, 1), 5).coefficient == Fraction(20, 19)

    def test_v2_equality_on_examples(self):
        for a, f, g in [(1, 1, 5), (3, 28, 2), (3, 4, 27), (1, 1, 2), (7, 8, 2)]:
            prog = Progression(a, f)
            assert delta_closed(prog, g).coefficient == delta_closed_v2(prog, g).coefficient

    def test_v2_cubic_zero(self):
        assert delta_closed_v2(Progression(3, 4), 27).coefficient == 0

    def test_partition_small_grid(self):
        for g in (-5, 2, 3, 6, 8):
            d11 = delta_closed(Progression(1, 1), g).coefficient
            for f in range(1, 25):
                total = sum(
                    (delta_closed(Progression(a, f), g).coefficient for a in residues(f)),
                    Fraction(0),
                )
                assert total == d11

    @given(
        st.sampled_from(admissible_bases(-30, 30)),
        st.integers(min_value=1, max_value=30),
        st.integers(min_value=0, max_value=10**6),
    )
    @settings(max_examples=300, deadline=None)
    def test_routes_agree_and_nonnegative(self, g, f, seed):
        classes = residues(f)
        a = classes[seed % len(classes)]
        prog = Progression(a, f)
        c1 = delta_closed(prog, g).coefficient
        c2 = delta_closed_v2(prog, g).coefficient
        assert c1 == c2
        assert c1 >= 0
        assert float(DensityValue(c1)) < 1


class TestDensityValue:
    def test_numeric_truncates(self):
        dv = DensityValue(Fraction(1))
        assert str(dv.numeric(12)) == "0.373955813619"
        assert str(dv.numeric(30)) == "0.373955813619202288054728054346"
        assert str(dv.numeric(4)) == "0.3739"

    def test_zero(self):
        assert DensityValue(Fraction(0)).numeric() == Decimal(0)

    def test_digit_bounds(self):
        dv = DensityValue(Fraction(1, 2))
        with pytest.raises(ValueError):
            dv.numeric(0)
        with pytest.raises(ValueError):
            dv.numeric(31)

    def test_range_invariant(self):
        for g in (2, 3, 5, -6, 21):
            for f in (1, 4, 9, 20):
                for a in residues(f):
                    dv = delta_closed(Progression(a, f), g)
                    assert 0 <= dv.numeric(20) < 1
