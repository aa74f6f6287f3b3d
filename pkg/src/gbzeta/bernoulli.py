"""Generalized Bernoulli numbers and polynomials of level m, exactly.

For a fixed level m >= 1 the family starts from B_0 = m! and is generated by
the triangular system obtained from the inversion formula

    x^n = sum_{k=0}^{n} C(n,k) k!/(m+k)! B_{n-k}(x)

at x = 0, which gives for n >= 1

    B_n = -m! sum_{k=1}^{n} C(n,k) k!/(m+k)! B_{n-k}.

Level m = 1 reproduces the classical Bernoulli numbers and polynomials.
Boundary values B_n(1) come from the summation formula at x = 1.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .polyrat import Poly


class GBFamily:
    """Grow-on-demand cache of one level's numbers and boundary values.

    Extension is serialized by a lock; the cached lists are append-only and
    their elements are immutable, so concurrent readers are safe.
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("level m must be a positive integer")
        self.m = m
        self._numbers = [Fraction(factorial(m))]
        self._boundary = [Fraction(factorial(m))]
        self._lock = threading.Lock()

    def _extend(self, nmax: int) -> None:
        with self._lock:
            m, B = self.m, self._numbers
            mf = factorial(m)
            for n in range(len(B), nmax + 1):
                s = Fraction(0)
                for k in range(1, n + 1):
                    s += comb(n, k) * Fraction(factorial(k), factorial(m + k)) * B[n - k]
                B.append(-mf * s)
                self._boundary.append(
                    sum((comb(n, j) * B[j] for j in range(n + 1)), Fraction(0))
                )

    def numbers(self, nmax: int) -> list[Fraction]:
        """[B_0, ..., B_nmax] for this level."""
        if nmax < 0:
            raise ValueError("nmax must be nonnegative")
        if nmax >= len(self._numbers):
            self._extend(nmax)
        return self._numbers[: nmax + 1]

    def number(self, n: int) -> Fraction:
        return self.numbers(n)[n]

    def boundary(self, n: int) -> Fraction:
        """B_n(1) = sum_j C(n,j) B_j."""
        if n >= len(self._boundary):
            self._extend(n)
        return self._boundary[n]

    def jump(self, n: int) -> Fraction:
        """B_n(1) - B_n, the boundary jump entering every Fourier coefficient."""
        return self.boundary(n) - self.number(n)

    def polynomial(self, n: int) -> Poly:
        """B_n(x) = sum_k C(n,k) B_k x^{n-k}; degree n, leading coefficient m!."""
        B = self.numbers(n)
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            coeffs[n - k] += comb(n, k) * B[k]
        return Poly(coeffs)


_families: dict[int, GBFamily] = {}
_families_lock = threading.Lock()


def family(m: int) -> GBFamily:
    """Memoized per-level family cache."""
    try:
        return _families[m]
    except KeyError:
        with _families_lock:
            return _families.setdefault(m, GBFamily(m))


def gb_numbers(m: int, nmax: int) -> list[Fraction]:
    """Exact generalized Bernoulli numbers B_0 .. B_nmax of level m."""
    return family(m).numbers(nmax)


def gb_boundary_values(m: int, nmax: int) -> list[Fraction]:
    """Exact boundary values B_0(1) .. B_nmax(1) of level m."""
    fam = family(m)
    fam.numbers(nmax)
    return [fam.boundary(n) for n in range(nmax + 1)]


def gb_polynomial(m: int, n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return family(m).polynomial(n)


def classical_bernoulli(nmax: int) -> list[Fraction]:
    """Classical Bernoulli numbers (the m = 1 family, B_1 = -1/2)."""
    return gb_numbers(1, nmax)


def expand_in_gb_basis(p: Poly, m: int) -> list[Fraction]:
    """Coefficients c_0..c_n with p(x) = sum_k c_k B_k(x) at level m.

    Rewrites each monomial through the inversion formula; the basis property
    makes the expansion unique.
    """
    if m < 1:
        raise ValueError("level m must be a positive integer")
    if p.is_zero():
        return []
    n = p.degree
    out = [Fraction(0)] * (n + 1)
    for d, coeff in enumerate(p.coeffs):
        if coeff == 0:
            continue
        # x^d = sum_{k=0}^{d} C(d,k) k!/(m+k)! B_{d-k}(x)
        for k in range(d + 1):
            out[d - k] += coeff * comb(d, k) * Fraction(factorial(k), factorial(m + k))
    return out


def combine_gb_basis(coeffs: list[Fraction], m: int) -> Poly:
    """sum_k coeffs[k] * B_k(x); inverse of expand_in_gb_basis."""
    acc = Poly.zero()
    for k, c in enumerate(coeffs):
        if c:
            acc = acc + gb_polynomial(m, k).scale(c)
    return acc


def recurrence_residual(m: int, n: int) -> Poly:
    """Residual of the three-term recurrence; the zero polynomial when it holds.

    B_n(x) = (x - 1/(m+1)) B_{n-1}(x)
             - (1/(n (m-1)!)) sum_{k=0}^{n-2} C(n,k) B_{n-k} B_k(x),
    the sum being empty for n = 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    fam = family(m)
    B = fam.numbers(n)
    rhs = Poly([Fraction(-1, m + 1), Fraction(1)]) * fam.polynomial(n - 1)
    acc = Poly.zero()
    for k in range(0, n - 1):
        acc = acc + fam.polynomial(k).scale(comb(n, k) * B[n - k])
    rhs = rhs - acc.scale(Fraction(1, n * factorial(m - 1)))
    return fam.polynomial(n) - rhs


def ode_residual(m: int, n: int) -> Poly:
    """Residual of the level-m differential equation for y = B_n(x).

    sum_{k=2}^{n} (B_k/k!) y^(k) + (m-1)! (1/(m+1) - x) y' + n (m-1)! y,
    with every derivative exact; the zero polynomial when the ODE holds.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    fam = family(m)
    B = fam.numbers(n)
    y = fam.polynomial(n)
    derivs = [y]
    for _ in range(n):
        derivs.append(derivs[-1].derivative())
    acc = Poly.zero()
    for k in range(2, n + 1):
        acc = acc + derivs[k].scale(Fraction(B[k], factorial(k)))
    fm1 = factorial(m - 1)
    acc = acc + (Poly([Fraction(1, m + 1), Fraction(-1)]) * derivs[1]).scale(fm1)
    acc = acc + y.scale(n * fm1)
    return acc
