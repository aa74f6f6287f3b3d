"""Euler-Maclaurin rules, product integrals, Parseval, sup norms."""

from fractions import Fraction
from math import factorial

import mpmath as mp
import pytest

from gbzeta import quadrature
from gbzeta.bernoulli import classical_bernoulli
from gbzeta.bigfloat import to_mpf
from gbzeta.polyrat import Poly
from gbzeta.quadrature import (
    FunctionStack,
    em_composite,
    em_unit,
    exp_stack,
    gauss_legendre_01,
    l2_norm_sq,
    parseval_residual,
    parseval_rhs,
    poly_stack,
    product_integral,
    product_integral_oracle,
    sup_norm,
)

F = Fraction
P = 256


def test_gauss_rule_is_exact_for_high_degree():
    nodes = gauss_legendre_01(32, P)
    with mp.workprec(P):
        assert abs(sum(w for _, w in nodes) - 1) <= mp.mpf(2) ** (8 - P)
        # 32-point Gauss integrates degree 63 exactly
        for k in (5, 20, 63):
            got = sum(w * u**k for u, w in nodes)
            assert abs(got - mp.mpf(1) / (k + 1)) <= mp.mpf(2) ** (16 - P)


def test_em_unit_constant():
    rep = em_unit(poly_stack(Poly([1]), P), 2, 1, P)
    with mp.workprec(P):
        assert rep.remainder == 0
        assert abs(rep.main_sum - 1) <= mp.mpf(2) ** (8 - P)
        assert abs(rep.total - 1) <= mp.mpf(2) ** (8 - P)


def test_em_unit_linear():
    rep = em_unit(poly_stack(Poly([0, 1]), P), 2, 1, P)
    with mp.workprec(P):
        assert abs(rep.main_sum - to_mpf(F(2, 3), P)) <= mp.mpf(2) ** (8 - P)
        assert abs(rep.remainder - to_mpf(F(-1, 6), P)) <= mp.mpf(2) ** (8 - P)
        assert abs(rep.total - to_mpf(F(1, 2), P)) <= mp.mpf(2) ** (8 - P)


def test_em_unit_poly_below_order():
    p = Poly([F(1, 3), -2, 0, F(5, 7)])
    rep = em_unit(poly_stack(p, P), 3, 5, P)
    with mp.workprec(P):
        assert rep.remainder == 0
        assert abs(rep.total - to_mpf(p.definite_integral(0, 1), P)) <= mp.mpf(2) ** (10 - P)


@pytest.mark.parametrize("m", (1, 2, 5))
def test_em_unit_exactness_grid(m):
    p = Poly([F(1, 3), -2, 0, F(5, 7), 0, 1, F(-1, 2)])
    rep = em_unit(poly_stack(p, P), m, 7, P)
    with mp.workprec(P):
        assert rep.remainder == 0
        assert abs(rep.total - to_mpf(p.definite_integral(0, 1), P)) <= mp.mpf(2) ** (16 - P)
        assert abs(rep.remainder) <= rep.remainder_bound


def test_em_composite_exp():
    fs = exp_stack(P)
    rep = em_composite(fs, 0, 1, 4, 3, 3, P)
    with mp.workprec(P):
        assert abs(rep.total - (mp.e - 1)) <= abs(mp.e - 1) * mp.mpf(2) ** (30 - P)
        assert abs(rep.remainder) <= rep.remainder_bound


def test_em_composite_cubic_exact():
    p = Poly([1, F(-3, 2), 0, F(7, 3)])
    for m in (1, 4):
        rep = em_composite(poly_stack(p, P), 0, 2, 3, m, 4, P)
        with mp.workprec(P):
            assert rep.remainder == 0
            assert abs(rep.total - to_mpf(p.definite_integral(0, 2), P)) <= mp.mpf(2) ** (16 - P)


def test_em_composite_order_two():
    fs = exp_stack(P)
    with mp.workprec(P):
        target = mp.e - 1
        errs = []
        for nsub in (4, 8, 16, 32):
            rep = em_composite(fs, 0, 1, nsub, 2, 2, P)
            errs.append(abs(rep.main_sum - target))
        for lo, hi in zip(errs[1:], errs[:-1]):
            ratio = hi / lo
            assert 2**1.8 <= ratio <= 2**2.2


@pytest.mark.parametrize("m", (1, 2, 5))
@pytest.mark.parametrize("r", (1, 2, 4))
def test_em_composite_self_consistency(m, r):
    fs = exp_stack(P)
    with mp.workprec(P):
        target = mp.e - 1
        for nsub in (4, 16):
            rep = em_composite(fs, 0, 1, nsub, m, r, P)
            assert abs(rep.total - target) <= abs(target) * mp.mpf(2) ** (40 - P)


def test_product_integral_examples():
    assert product_integral(1, 1, 1) == F(1, 12)
    assert product_integral(1, 1, 2) == 0
    assert product_integral(2, 2, 2) == product_integral_oracle(2, 2, 2)


def test_product_integral_oracle_grid():
    for m in range(1, 5):
        for r in range(1, 9):
            for n in range(1, 9):
                assert product_integral(m, r, n) == product_integral_oracle(m, r, n)


def test_product_integral_classical_reduction():
    B = classical_bernoulli(16)
    for s in range(1, 9):
        for r in range(1, 9):
            ref = F((-1) ** (s + 1) * factorial(s) * factorial(r), factorial(s + r)) * B[s + r]
            assert product_integral(1, s, r) == ref


def test_l2_norm_examples():
    assert l2_norm_sq(1, 1) == F(1, 12)
    assert l2_norm_sq(1, 2) == F(1, 180)
    assert l2_norm_sq(5, 3) == product_integral_oracle(5, 3, 3)


def test_l2_norm_grid():
    for m in range(1, 5):
        for n in range(1, 9):
            assert l2_norm_sq(m, n) == product_integral(m, n, n)


def test_parseval_residual_decreases():
    with mp.workprec(P):
        r_small = parseval_residual(2, 1, 2000, P)
        r_big = parseval_residual(2, 1, 10**5, P)
        assert r_big < r_small


@pytest.mark.parametrize("m,n", [(1, 2), (2, 1), (2, 2), (5, 3)])
def test_parseval_residual_small(m, n):
    with mp.workprec(P):
        rhs = to_mpf(parseval_rhs(m, n), P)
        assert parseval_residual(m, n, 10**5, P) <= mp.mpf("1e-4") * rhs


def test_parseval_consistency_with_l2():
    # l2 = (n!)^2 [a0^2/4 + (1/2) sum (a_k^2+b_k^2)] up to the K-truncation
    from gbzeta.periodic import fourier_a0

    for m, n in ((2, 1), (2, 2)):
        with mp.workprec(P):
            K = 20000
            partial = quadrature.parseval_partial_sum(m, n, K, P)
            a0 = to_mpf(fourier_a0(m, n), P)
            lhs = factorial(n) ** 2 * (a0**2 / 4 + 2 * partial)
            # A,B are the half coefficients: (1/2) sum a^2+b^2 = 2 sum A^2+B^2
            ref = to_mpf(l2_norm_sq(m, n), P)
            assert abs(lhs - ref) <= abs(ref) * mp.mpf("1e-3")


def test_sup_norm_examples():
    with mp.workprec(P):
        tol = mp.mpf(2) ** (8 - P)
        assert abs(sup_norm(1, 2, P) - to_mpf(F(1, 6), P)) <= tol
        v = sup_norm(5, 2, P)
        assert abs(v - to_mpf(F(1700, 21), P)) <= tol * v
        assert abs(sup_norm(1, 1, P) - mp.mpf("0.5")) <= tol
        assert abs(sup_norm(3, 0, P) - 6) <= tol * 6


def test_sup_norm_dominates_samples():
    with mp.workprec(P):
        for m, r in ((2, 3), (4, 5), (1, 4)):
            mu = sup_norm(m, r, P)
            from gbzeta.bernoulli import gb_polynomial

            p = gb_polynomial(m, r)
            for i in range(101):
                assert abs(p.eval_mpf(mp.mpf(i) / 100, P)) <= mu * (1 + mp.mpf(2) ** -40)


def test_function_stack_spot_check_rejects_bad_derivative():
    def f(x):
        return mp.mpf(x) ** 3

    def bad_derivs(k):
        return lambda x: mp.mpf(x)  # wrong on purpose

    with pytest.raises(ValueError):
        FunctionStack(f=f, derivs=bad_derivs, r_max=2, check=True, prec=P)


def test_function_stack_spot_check_accepts_good_derivative():
    def f(x):
        return mp.mpf(x) ** 3

    derivs = {1: lambda x: 3 * mp.mpf(x) ** 2, 2: lambda x: 6 * mp.mpf(x)}
    fs = FunctionStack(f=f, derivs=lambda k: derivs[k], r_max=2, check=True, prec=P)
    assert fs.deriv(0) is f
    with pytest.raises(ValueError):
        fs.deriv(3)


def test_em_rejects_excessive_order():
    def f(x):
        return mp.mpf(x)

    fs = FunctionStack(f=f, derivs=lambda k: (lambda x: mp.mpf(1)), r_max=1, check=False)
    with pytest.raises(ValueError):
        em_unit(fs, 2, 2, P)
    with pytest.raises(ValueError):
        em_composite(fs, 0, 1, 2, 2, 2, P)
