"""Generalized Bernoulli numbers/polynomials: tables, identities, caching."""

import threading
from fractions import Fraction
from math import comb, factorial

import pytest

from gbzeta import bernoulli
from gbzeta.bernoulli import (
    GBFamily,
    classical_bernoulli,
    combine_gb_basis,
    expand_in_gb_basis,
    gb_numbers,
    gb_polynomial,
    ode_residual,
    recurrence_residual,
)
from gbzeta.polyrat import Poly

F = Fraction


def test_number_tables():
    assert gb_numbers(1, 4) == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    assert gb_numbers(2, 3) == [2, F(-2, 3), F(1, 9), F(1, 45)]
    assert gb_numbers(5, 3) == [120, -20, F(20, 21), F(5, 21)]


def test_number_generic_start():
    for m in range(1, 8):
        B = gb_numbers(m, 1)
        assert B[0] == factorial(m)
        assert B[1] == F(-factorial(m), m + 1)


def test_polynomial_examples():
    assert gb_polynomial(1, 2) == Poly([F(1, 6), -1, 1])
    assert gb_polynomial(2, 1) == Poly([F(-2, 3), 2])
    assert gb_polynomial(5, 2) == Poly([F(20, 21), -40, 120])


@pytest.mark.parametrize("m", range(1, 7))
def test_first_four_closed_forms(m):
    mf = factorial(m)
    assert gb_polynomial(m, 0) == Poly([mf])
    assert gb_polynomial(m, 1) == Poly([F(-mf, m + 1), mf])
    assert gb_polynomial(m, 2) == Poly(
        [F(2 * mf, (m + 1) ** 2 * (m + 2)), F(-2 * mf, m + 1), mf]
    )
    assert gb_polynomial(m, 3) == Poly(
        [
            F(6 * (m - 1) * mf, (m + 1) ** 3 * (m + 2) * (m + 3)),
            F(6 * mf, (m + 1) ** 2 * (m + 2)),
            F(-3 * mf, m + 1),
            mf,
        ]
    )


def test_classical_reduction_against_recurrence():
    # the m = 1 stream must satisfy the independent classical recurrence
    B = classical_bernoulli(20)
    for n in range(2, 21):
        assert sum(comb(n, k) * B[k] for k in range(n)) == 0
    assert all(B[n] == 0 for n in range(3, 20, 2))


def test_inversion_formula_direct():
    # x^n = sum_k C(n,k) k!/(m+k)! B_{n-k}(x), checked as polynomials
    for m in (1, 2, 5):
        for n in (0, 1, 2, 5):
            acc = Poly.zero()
            for k in range(n + 1):
                c = comb(n, k) * F(factorial(k), factorial(m + k))
                acc = acc + gb_polynomial(m, n - k).scale(c)
            assert acc == Poly.monomial(n)


def test_expand_basis_element():
    for m in (1, 3, 6):
        assert expand_in_gb_basis(gb_polynomial(m, 3), m) == [0, 0, 0, 1]


def test_expand_x_squared_level_one():
    # solved by hand from the 3x3 triangular system
    assert expand_in_gb_basis(Poly.monomial(2), 1) == [F(1, 3), 1, 1]


def test_expand_zero():
    assert expand_in_gb_basis(Poly.zero(), 4) == []


@pytest.mark.parametrize("m", (1, 2, 4))
def test_expand_round_trip(m):
    p = Poly([F(3, 7), F(-1, 2), 0, 5, F(2, 9)])
    assert combine_gb_basis(expand_in_gb_basis(p, m), m) == p


@pytest.mark.parametrize("m,n", [(1, 2), (2, 3), (5, 6), (3, 9)])
def test_recurrence_residual_zero(m, n):
    assert recurrence_residual(m, n).is_zero()


@pytest.mark.parametrize("m,n", [(1, 1), (2, 4), (4, 7), (6, 3)])
def test_ode_residual_zero(m, n):
    assert ode_residual(m, n).is_zero()


def test_appell_property_grid():
    for m in range(1, 7):
        for n in range(1, 21):
            assert gb_polynomial(m, n).derivative() == gb_polynomial(m, n - 1).scale(n)


def test_integral_formula():
    for m in (1, 2, 5):
        for n in (1, 4, 7):
            p = gb_polynomial(m, n)
            q = gb_polynomial(m, n + 1)
            for x0, x1 in ((F(0), F(1)), (F(-2, 3), F(7, 5))):
                assert p.definite_integral(x0, x1) == (q(x1) - q(x0)) / (n + 1)


def test_boundary_cache_coherence():
    fam = bernoulli.family(4)
    for k in range(12):
        assert fam.boundary(k) == gb_polynomial(4, k)(1)
        assert fam.jump(k) == gb_polynomial(4, k)(1) - gb_polynomial(4, k)(0)


def test_argument_validation():
    with pytest.raises(ValueError):
        gb_numbers(0, 5)
    with pytest.raises(ValueError):
        gb_numbers(2, -1)
    with pytest.raises(ValueError):
        gb_polynomial(3, -2)
    with pytest.raises(ValueError):
        recurrence_residual(2, 0)


def test_concurrent_growth():
    fam = GBFamily(3)
    errs = []

    def grow(n):
        try:
            fam.numbers(n)
        except Exception as exc:  # pragma: no cover
            errs.append(exc)

    threads = [threading.Thread(target=grow, args=(60 + 5 * i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errs
    assert fam.numbers(60) == bernoulli.family(3).numbers(60)
