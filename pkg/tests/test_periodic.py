"""Periodic functions, Fourier coefficients, and the zeta-linked expansion."""

from fractions import Fraction
from math import factorial

import mpmath as mp
import pytest

from gbzeta import periodic
from gbzeta.bigfloat import to_mpf
from gbzeta.periodic import (
    dirichlet_average,
    fourier_a0,
    fourier_coeffs,
    fourier_partial_sum,
    periodic_eval,
    zeta_expansion,
    zeta_expansion_exact_oracle,
)

F = Fraction
P = 256


def test_periodic_eval_level_one():
    with mp.workprec(P):
        assert abs(periodic_eval(1, 1, mp.mpf("0.25"), P) + mp.mpf("0.25")) <= mp.mpf(2) ** -240
        # periodicity
        assert abs(periodic_eval(1, 1, mp.mpf("7.25"), P) + mp.mpf("0.25")) <= mp.mpf(2) ** -230


def test_periodic_eval_right_limit_at_integers():
    with mp.workprec(P):
        v = periodic_eval(2, 1, mp.mpf(0), P)
        assert abs(v - to_mpf(F(-2, 3), P)) <= mp.mpf(2) ** -240
        # same value one period later
        assert periodic_eval(2, 1, mp.mpf(3), P) == v


def test_fourier_level_one_even():
    fc = fourier_coeffs(1, 2, 1, P)
    with mp.workprec(P):
        assert abs(fc.a[0] - 2 / (2 * mp.pi) ** 2) <= mp.mpf(2) ** (20 - P)
        assert fc.b[0] == 0
    assert fc.a0 == 0


def test_fourier_degree_one_any_level():
    for m in (1, 2, 5):
        fc = fourier_coeffs(m, 1, 3, P)
        mf = factorial(m)
        assert fc.a0 == 2 * F(mf * (m - 1), 2 * (m + 1))
        with mp.workprec(P):
            for k in (1, 2, 3):
                assert fc.a[k - 1] == 0
                ref = -2 * mf / (2 * mp.pi * k)
                assert abs(fc.b[k - 1] - ref) <= abs(ref) * mp.mpf(2) ** (20 - P)


def test_fourier_m2_n2():
    fc = fourier_coeffs(2, 2, 1, P)
    with mp.workprec(P):
        assert abs(fc.a[0] - 2 * 2 / (2 * mp.pi) ** 2) <= mp.mpf(2) ** (20 - P)
        ref_b = -(mp.mpf(2) / (2 * mp.pi)) * F(1, 3).numerator / F(1, 3).denominator / 1
        ref_b = -(2 / (2 * mp.pi)) / 3
        assert abs(fc.b[0] - ref_b) <= abs(ref_b) * mp.mpf(2) ** (20 - P)


def test_fourier_m1_reduction_grid():
    with mp.workprec(P):
        twopi = 2 * mp.pi
        tol = mp.mpf(2) ** (20 - P)
        for n in range(2, 8):
            fc = fourier_coeffs(1, n, 40, P)
            for k in range(1, 41):
                if n % 2 == 0:
                    r = n // 2
                    ref = (-1) ** (r - 1) * 2 / (twopi * k) ** (2 * r)
                    assert abs(fc.a[k - 1] - ref) <= abs(ref) * tol
                    assert fc.b[k - 1] == 0
                else:
                    r = (n - 1) // 2
                    ref = (-1) ** (r - 1) * 2 / (twopi * k) ** (2 * r + 1)
                    assert fc.a[k - 1] == 0
                    assert abs(fc.b[k - 1] - ref) <= abs(ref) * tol


def test_coefficient_decay():
    # |a_k| <= C_a/k^2 and |b_k| <= C_b/k with constants built from the jumps
    from gbzeta.bernoulli import family

    for m, n in ((2, 3), (5, 2), (3, 6)):
        fam = family(m)
        fc = fourier_coeffs(m, n, 50, P)
        with mp.workprec(P):
            twopi = 2 * mp.pi
            c_a = sum(
                2 * abs(to_mpf(F(fam.jump(n - 2 * j - 1), factorial(n - 2 * j - 1)), P))
                / twopi ** (2 * j + 2)
                for j in range(n // 2) if n - 2 * j - 1 >= 1
            )
            c_b = sum(
                2 * abs(to_mpf(F(fam.jump(n - 2 * j), factorial(n - 2 * j)), P))
                / twopi ** (2 * j + 1)
                for j in range(n // 2 + 1) if n - 2 * j >= 1
            )
            slack = 1 + mp.mpf(2) ** (16 - P)
            for k in range(1, 51):
                assert abs(fc.a[k - 1]) <= c_a / k**2 * slack
                assert abs(fc.b[k - 1]) <= c_b / k * slack


def test_a0_is_twice_the_mean():
    from gbzeta.bernoulli import gb_polynomial

    for m, n in ((2, 1), (3, 4), (5, 2)):
        mean = F(gb_polynomial(m, n).definite_integral(0, 1), factorial(n))
        assert fourier_a0(m, n) == 2 * mean


def test_partial_sum_at_zero_level_one():
    with mp.workprec(P):
        ps = fourier_partial_sum(1, 2, mp.mpf(0), 10**4, P)
        # tail bound sum_{k>K} 2/(2 pi k)^2 < 1/(2 pi^2 K)
        assert abs(ps - to_mpf(F(1, 12), P)) <= mp.mpf("2e-5")
        # odd case: the series value at 0 is the midpoint of the jump, i.e. 0
        ps1 = fourier_partial_sum(1, 1, mp.mpf(0), 37, P)
        assert ps1 == 0


def test_partial_sum_interior_point():
    with mp.workprec(P):
        ps = fourier_partial_sum(2, 2, mp.mpf("0.5"), 10**4, P)
        direct = periodic_eval(2, 2, mp.mpf("0.5"), P)
        assert abs(ps - direct) <= mp.mpf("1e-4")


@pytest.mark.parametrize("m,n", [(1, 2), (2, 2), (5, 4)])
def test_dirichlet_average_at_integers(m, n):
    with mp.workprec(P):
        ps = fourier_partial_sum(m, n, mp.mpf(0), 10**4, P)
        assert abs(ps - to_mpf(dirichlet_average(m, n), P)) <= mp.mpf("1e-3")


def test_derivative_relation_off_integers():
    with mp.workprec(P):
        x = mp.mpf("0.37")
        for m, n in ((2, 2), (5, 3)):
            errs = []
            for h in (mp.mpf("1e-3"), mp.mpf("1e-4")):
                fd = (periodic_eval(m, n + 1, x + h, P) - periodic_eval(m, n + 1, x - h, P)) / (2 * h)
                errs.append(abs(fd - periodic_eval(m, n, x, P)))
            # O(h^2) Richardson behaviour: 100x drop expected, allow 50x
            assert errs[1] <= errs[0] / 50


def test_zeta_expansion_examples():
    for m in (2, 3, 5):
        ze = zeta_expansion(m, 2, P)
        mf = factorial(m)
        assert ze.c_exact[1] == F(mf * (m - 1), 2 * (m + 1))
        # c0 = p_2(0) - m! * 2 zeta(2)/(2 pi)^2 = B_2/2 - m!/12
        from gbzeta.bernoulli import gb_numbers

        assert ze.c_exact[0] == F(gb_numbers(m, 2)[2], 2) - F(mf, 12)


def test_zeta_expansion_level_one_vanishes():
    for n in (1, 2, 5, 9):
        ze = zeta_expansion(1, n, P)
        assert all(c == 0 for c in ze.c_exact)
        assert all(c == 0 for c in ze.c)


def test_zeta_expansion_cross_check_grid():
    for m in range(1, 6):
        for n in range(1, 11):
            ze = zeta_expansion(m, n, P)
            oracle = zeta_expansion_exact_oracle(m, n)
            assert ze.c_exact == oracle
            with mp.workprec(P):
                for c, o in zip(ze.c, oracle):
                    assert abs(c - to_mpf(o, P)) <= (abs(c) + 1) * mp.mpf(2) ** (20 - P)


def test_zeta_expansion_evaluates_periodic_function():
    # both sides independently computable at an interior point
    m, n = 3, 5
    ze = zeta_expansion(m, n, P)
    with mp.workprec(P):
        x = mp.mpf("0.3")
        poly_part = mp.mpf(0)
        for j, c in enumerate(ze.c):
            poly_part += c * x**j
        total = poly_part + factorial(m) * periodic_eval(1, n, x, P)
        direct = periodic_eval(m, n, x, P)
        assert abs(total - direct) <= abs(direct) * mp.mpf(2) ** (20 - P)


def test_argument_validation():
    with pytest.raises(ValueError):
        fourier_coeffs(2, 0, 5, P)
    with pytest.raises(ValueError):
        periodic_eval(2, -1, mp.mpf(0), P)
    with pytest.raises(ValueError):
        zeta_expansion(2, 0, P)
