"""Euler-Maclaurin quadrature of level m and the related exact integrals.

The unit-interval rule expresses int_0^1 f through boundary derivative terms
weighted by B_k and B_k(1) plus an integral remainder against B_r; the
composite rule tiles [a,b] with it. Remainder integrals are smooth on each
cell, so a fixed 32-node Gauss-Legendre rule per cell (with nodes generated
at working precision) integrates them to full accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

import mpmath as mp

from . import bernoulli
from .bigfloat import DEFAULT_PRECISION, to_mpf, truncated_power_sum
from .polyrat import Poly

GAUSS_NODES = 32

_gauss_cache: dict = {}


def gauss_legendre_01(n: int = GAUSS_NODES, prec: int = DEFAULT_PRECISION):
    """Nodes and weights on [0,1], generated by Newton iteration at `prec`."""
    key = (n, prec)
    if key in _gauss_cache:
        return _gauss_cache[key]
    with mp.workprec(prec + 32):
        pairs = []
        tol = mp.mpf(2) ** (-(prec + 16))
        for k in range(1, n + 1):
            x = mp.cos(mp.pi * (4 * k - 1) / (4 * n + 2))
            for _ in range(100):
                p0, p1 = mp.mpf(1), x
                for j in range(2, n + 1):
                    p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < tol:
                    break
            p0, p1 = mp.mpf(1), x
            for j in range(2, n + 1):
                p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            pairs.append(((x + 1) / 2, w / 2))
        pairs.sort(key=lambda t: t[0])
    with mp.workprec(prec):
        pairs = [(+u, +w) for u, w in pairs]
    _gauss_cache[key] = pairs
    return pairs


class FunctionStack:
    """A function with its derivatives up to order r_max and optional tails.

    derivs(k) must return an evaluator for f^(k), 1 <= k <= r_max; order 0 is
    f itself. The optional callables take (…, prec) and return mpf values:

      exact_tail_integral(p, prec)   -> int_p^inf f
      exact_integral(a, b, prec)     -> int_a^b f
      abs_deriv_tail(k, p, prec)     -> upper bound for int_p^inf |f^(k)|

    A finite-difference spot check of the first few derivatives runs at
    construction (relative tolerance 1e-6 at three sample points).
    """

    def __init__(
        self,
        f: Callable,
        derivs: Callable[[int], Callable],
        r_max: int,
        exact_tail_integral: Optional[Callable] = None,
        exact_integral: Optional[Callable] = None,
        abs_deriv_tail: Optional[Callable] = None,
        limit_at_infinity=None,
        derivatives_vanish: bool = False,
        integral_converges: Optional[bool] = None,
        check: bool = True,
        check_points=(0.3, 0.55, 0.8),
        prec: int = DEFAULT_PRECISION,
    ):
        self.f = f
        self._derivs = derivs
        self.r_max = r_max
        self.exact_tail_integral = exact_tail_integral
        self.exact_integral = exact_integral
        self.abs_deriv_tail = abs_deriv_tail
        self.limit_at_infinity = limit_at_infinity
        self.derivatives_vanish = derivatives_vanish
        self.integral_converges = integral_converges
        if check:
            self._spot_check(check_points, prec)

    def deriv(self, k: int) -> Callable:
        if k == 0:
            return self.f
        if k > self.r_max:
            raise ValueError(f"derivative order {k} exceeds r_max={self.r_max}")
        return self._derivs(k)

    def _spot_check(self, points, prec: int) -> None:
        # central difference of f^(k-1) against f^(k); h chosen so both the
        # truncation O(h^2) and rounding O(2^-prec / h) sit far below 1e-6
        prec = max(prec, 128)
        with mp.workprec(prec):
            h = mp.mpf(2) ** (-min(36, prec // 3))
            for k in range(1, min(self.r_max, 3) + 1):
                lo, hi = self.deriv(k - 1), self.deriv(k)
                for x in points:
                    x = mp.mpf(x)
                    fd = (lo(x + h) - lo(x - h)) / (2 * h)
                    ex = hi(x)
                    scale = max(abs(ex), mp.mpf(1))
                    if abs(fd - ex) > 1e-6 * scale:
                        raise ValueError(
                            f"derivative {k} inconsistent with finite differences at x={x}"
                        )


def poly_stack(p: Poly, prec: int = DEFAULT_PRECISION) -> FunctionStack:
    """FunctionStack for a polynomial; derivatives and integrals are exact."""
    derivs = [p]
    while derivs[-1]:
        derivs.append(derivs[-1].derivative())

    def dk(k):
        q = derivs[k] if k < len(derivs) else Poly.zero()
        return lambda x, q=q: q.eval_mpf(x, prec)

    def integral(a, b, prec=prec):
        if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
            return to_mpf(p.definite_integral(a, b), prec)
        F = p.antiderivative()
        with mp.workprec(prec):
            return +(F.eval_mpf(b, prec) - F.eval_mpf(a, prec))

    return FunctionStack(
        f=dk(0),
        derivs=dk,
        r_max=10**9,
        exact_integral=integral,
        check=False,
    )


def exp_stack(prec: int = DEFAULT_PRECISION) -> FunctionStack:
    """f = exp, every derivative is exp, exact integrals from the antiderivative."""

    def ev(x):
        with mp.workprec(prec):
            return +mp.e ** mp.mpf(x)

    return FunctionStack(
        f=ev,
        derivs=lambda k: ev,
        r_max=10**9,
        exact_integral=lambda a, b, prec=prec: _exp_integral(a, b, prec),
        check=False,
    )


def _exp_integral(a, b, prec):
    with mp.workprec(prec):
        return +(mp.e ** mp.mpf(b) - mp.e ** mp.mpf(a))


@dataclass
class QuadratureReport:
    main_sum: object
    remainder: object
    remainder_bound: object
    total: object

    def as_dict(self, digits: int = 30) -> dict:
        from .bigfloat import decimal_str

        return {
            "main_sum": decimal_str(self.main_sum, digits),
            "remainder": decimal_str(self.remainder, digits),
            "remainder_bound": decimal_str(self.remainder_bound, digits),
            "total": decimal_str(self.total, digits),
        }


def _cell_gauss(g: Callable, poly_vals, nodes):
    # int_0^1 g(u) B(u) du with B pre-evaluated at the nodes
    acc = mp.mpf(0)
    for (u, w), bv in zip(nodes, poly_vals):
        acc += w * g(u) * bv
    return acc


def _bound_inflation(x):
    # Gauss values enter certified bounds only after this safety margin
    return x * (1 + mp.mpf(2) ** -20) + mp.mpf(2) ** -60 * abs(x)


def em_unit(fs: FunctionStack, m: int, r: int, prec: int = DEFAULT_PRECISION) -> QuadratureReport:
    """Unit-interval rule: total = main boundary terms + integral remainder.

    main_sum = (1/m!) sum_{k=1}^r ((-1)^k/k!)(f^(k-1)(0) B_k - f^(k-1)(1) B_k(1))
    remainder = (1/m!)((-1)^r/r!) int_0^1 f^(r)(t) B_r(t) dt
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if r > fs.r_max:
        raise ValueError(f"r={r} exceeds the stack's r_max={fs.r_max}")
    fam = bernoulli.family(m)
    mf = factorial(m)
    with mp.workprec(prec):
        main = mp.mpf(0)
        for k in range(1, r + 1):
            fk = fs.deriv(k - 1)
            ak = (fk(mp.mpf(0)) * to_mpf(fam.number(k), prec)
                  - fk(mp.mpf(1)) * to_mpf(fam.boundary(k), prec))
            main += (-1) ** k / mp.factorial(k) * ak
        main /= mf
        nodes = gauss_legendre_01(GAUSS_NODES, prec)
        br = fam.polynomial(r)
        bvals = [br.eval_mpf(u, prec) for u, _ in nodes]
        fr = fs.deriv(r)
        integ = _cell_gauss(fr, bvals, nodes)
        rem = (-1) ** r / (mf * mp.factorial(r)) * integ
        mu = sup_norm(m, r, prec)
        absint = _cell_gauss(lambda u: abs(fr(u)), [mp.mpf(1)] * len(nodes), nodes)
        bound = _bound_inflation(mu / (mf * mp.factorial(r)) * absint) + mp.mpf(2) ** (
            8 - prec
        )
        return QuadratureReport(+main, +rem, +bound, +(main + rem))


def em_composite(
    fs: FunctionStack, a, b, n_sub: int, m: int, r: int, prec: int = DEFAULT_PRECISION
) -> QuadratureReport:
    """Composite rule on [a,b] with n_sub equal cells of width h = (b-a)/n_sub."""
    if n_sub < 1:
        raise ValueError("n_sub must be at least 1")
    if r < 1 or r > fs.r_max:
        raise ValueError("invalid derivative order r")
    fam = bernoulli.family(m)
    mf = factorial(m)
    with mp.workprec(prec):
        a = mp.mpf(a)
        b = mp.mpf(b)
        if not a < b:
            raise ValueError("need a < b")
        h = (b - a) / n_sub
        xs = [a + j * h for j in range(n_sub + 1)]
        Bk = [to_mpf(fam.number(k), prec) for k in range(r + 1)]
        Bk1 = [to_mpf(fam.boundary(k), prec) for k in range(r + 1)]
        main = mp.mpf(0)
        for j in range(n_sub):
            cell = mp.mpf(0)
            for k in range(1, r + 1):
                fk = fs.deriv(k - 1)
                cell += ((-1) ** (k + 1) / (mf * mp.factorial(k)) * h**k
                         * (fk(xs[j + 1]) * Bk1[k] - fk(xs[j]) * Bk[k]))
            main += cell
        nodes = gauss_legendre_01(GAUSS_NODES, prec)
        br = fam.polynomial(r)
        bvals = [br.eval_mpf(u, prec) for u, _ in nodes]
        fr = fs.deriv(r)
        integ = mp.mpf(0)
        absint = mp.mpf(0)
        for j in range(n_sub):
            acc = mp.mpf(0)
            aacc = mp.mpf(0)
            for (u, w), bv in zip(nodes, bvals):
                v = fr(xs[j] + h * u)
                acc += w * v * bv
                aacc += w * abs(v)
            integ += h * acc
            absint += h * aacc
        rem = (-h) ** r / (mf * mp.factorial(r)) * integ
        mu = sup_norm(m, r, prec)
        bound = _bound_inflation(
            h**r * mu / (mf * mp.factorial(r)) * absint
        ) + mp.mpf(2) ** (8 - prec)
        return QuadratureReport(+main, +rem, +bound, +(main + rem))


def product_integral(m: int, r: int, n: int) -> Fraction:
    """int_0^1 B_r(t) B_n(t) dt at level m, by the closed Euler-Maclaurin form."""
    if r < 1 or n < 1:
        raise ValueError("need r, n >= 1")
    fam = bernoulli.family(m)
    fam.numbers(r + n + 1)
    mf = factorial(m)
    bracket = Fraction(fam.number(r + n + 1) - fam.boundary(r + n + 1), r + n + 1)
    inner = Fraction(0)
    for k in range(1, r + 1):
        inner += Fraction((-1) ** k, k) * comb(r + n, k - 1) * (
            fam.number(r + n - k + 1) * fam.number(k)
            - fam.boundary(r + n - k + 1) * fam.boundary(k)
        )
    bracket += Fraction(inner, mf)
    return Fraction((-1) ** (r + 1) * factorial(r) * factorial(n) * mf, factorial(r + n)) * bracket


def product_integral_oracle(m: int, r: int, n: int) -> Fraction:
    """Same integral by exact polynomial multiplication and integration."""
    p = bernoulli.gb_polynomial(m, r) * bernoulli.gb_polynomial(m, n)
    return p.definite_integral(0, 1)


def l2_norm_sq(m: int, n: int) -> Fraction:
    """Squared L2[0,1] norm of B_n at level m, closed form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    fam = bernoulli.family(m)
    fam.numbers(2 * n + 1)
    nf2 = factorial(n) ** 2
    out = Fraction(nf2 * factorial(m) * (-1) ** n, factorial(2 * n + 1)) * fam.jump(2 * n + 1)
    s = Fraction(0)
    for k in range(1, n + 1):
        s += Fraction((-1) ** k, factorial(2 * n + 1 - k) * factorial(k)) * (
            fam.number(2 * n + 1 - k) * fam.number(k)
            - fam.boundary(2 * n + 1 - k) * fam.boundary(k)
        )
    return out + nf2 * (-1) ** (n + 1) * s


def parseval_rhs(m: int, n: int) -> Fraction:
    """Exact value of sum_{k>=1} (A_k^2 + B_k^2) for the jump sums of p_n.

    Parseval applied to p_n: (|B_n|_{L2}^2 - a0^2 (n!)^-2 /4 ... ) rearranged;
    equals l2_norm_sq/(2 (n!)^2) minus the squared mean term.
    """
    fam = bernoulli.family(m)
    j = fam.jump(n + 1)
    return (l2_norm_sq(m, n) / factorial(n) ** 2 - Fraction(j * j, factorial(n + 1) ** 2)) / 2


def _parseval_jump_terms(m: int, n: int):
    # A_k = sum over (power p, coeff c): c * (2 pi k)^-p ; likewise B_k
    fam = bernoulli.family(m)
    fam.numbers(n + 1)
    J = [Fraction(0)] + [Fraction(fam.jump(i), factorial(i)) for i in range(1, n + 1)]
    a_terms = []
    for j in range(0, n // 2):
        idx = n - 2 * j - 1
        if idx >= 1 and J[idx]:
            a_terms.append((2 * j + 2, Fraction((-1) ** j) * J[idx]))
    b_terms = []
    for j in range(0, n // 2 + 1):
        idx = n - 2 * j
        if idx >= 1 and J[idx]:
            b_terms.append((2 * j + 1, Fraction((-1) ** (j + 1)) * J[idx]))
    return a_terms, b_terms


def parseval_partial_sum(m: int, n: int, K: int, prec: int = DEFAULT_PRECISION):
    """sum_{k=1}^{K} (A_k^2 + B_k^2), expanded over powers of 1/(2 pi k).

    Squaring turns the jump sums into a polynomial in 1/k^2 with exact
    rational coefficients; each power then needs one truncated power sum,
    which is summed deterministically in scaled integer arithmetic.
    """
    a_terms, b_terms = _parseval_jump_terms(m, n)
    powers: dict[int, Fraction] = {}
    for terms in (a_terms, b_terms):
        for p1, c1 in terms:
            for p2, c2 in terms:
                powers[p1 + p2] = powers.get(p1 + p2, Fraction(0)) + c1 * c2
    with mp.workprec(prec):
        inv2pi = 1 / (2 * mp.pi)
        total = mp.mpf(0)
        for t in sorted(powers):
            total += to_mpf(powers[t], prec) * inv2pi**t * truncated_power_sum(t, K, prec)
        return +total


def parseval_residual(m: int, n: int, K: int, prec: int = DEFAULT_PRECISION):
    """|exact Parseval value - K-term partial sum|; decays like O(1/K)."""
    if n < 1 or K < 1:
        raise ValueError("need n >= 1 and K >= 1")
    with mp.workprec(prec):
        return +abs(to_mpf(parseval_rhs(m, n), prec) - parseval_partial_sum(m, n, K, prec))


# ---------------------------------------------------------------------------
# exact sup norm via critical points

def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _rem(a: list, b: list) -> list:
    # remainder of polynomial division, coefficient lists over Fraction
    a = a[:]
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lead
        off = len(a) - 1 - db
        for i in range(len(b)):
            a[off + i] -= q * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _sturm_chain(p: Poly) -> list[list]:
    c0 = list(p.coeffs)
    c1 = list(p.derivative().coeffs)
    chain = [c0, c1]
    while len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-x for x in r])
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = []
    for cs in chain:
        acc = Fraction(0)
        for c in reversed(cs):
            acc = acc * x + c
        s = _sign(acc)
        if s:
            signs.append(s)
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _squarefree(p: Poly) -> Poly:
    # p / gcd(p, p'), enough for root isolation
    a, b = list(p.coeffs), list(p.derivative().coeffs)
    while b:
        a, b = b, _rem(a, b)
    if len(a) <= 1:
        return p
    g = Poly(a)
    # exact division by the gcd
    num = list(p.coeffs)
    q = [Fraction(0)] * (len(num) - len(a) + 1)
    while len(num) >= len(a) and num:
        c = num[-1] / a[-1]
        off = len(num) - len(a)
        q[off] = c
        for i in range(len(a)):
            num[off + i] -= c * a[i]
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return Poly(q)


def critical_points(p: Poly, prec: int = DEFAULT_PRECISION) -> list[Fraction]:
    """Rational approximations (within 2^-(prec//2)) of the roots of p in (0,1]."""
    if p.degree < 1:
        return []
    sf = _squarefree(p)
    chain = _sturm_chain(sf)
    var = lambda x: _variations(chain, x)
    width = Fraction(1, 2 ** (prec // 2 + 4))
    roots: list[Fraction] = []
    work = [(Fraction(0), Fraction(1))]
    while work:
        a, b = work.pop()
        count = var(a) - var(b)
        if count == 0:
            continue
        mid = (a + b) / 2
        if count == 1:
            # Sturm bisection keeps the single root inside (a, b]
            while b - a > width:
                mid = (a + b) / 2
                if var(a) - var(mid) == 1:
                    b = mid
                else:
                    a = mid
            roots.append((a + b) / 2)
            continue
        if sf(mid) == 0:
            roots.append(mid)
        work.append((a, mid))
        work.append((mid, b))
    return roots


def sup_norm(m: int, r: int, prec: int = DEFAULT_PRECISION):
    """mu_r = max |B_r(x)| on [0,1], from exact critical points plus endpoints."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    fam = bernoulli.family(m)
    p = fam.polynomial(r)
    candidates = [Fraction(0), Fraction(1)]
    if r >= 2:
        candidates += critical_points(fam.polynomial(r - 1), prec)
    with mp.workprec(prec + 16):
        best = mp.mpf(0)
        for c in candidates:
            v = abs(p.eval_mpf(c, prec + 16))
            if v > best:
                best = v
    with mp.workprec(prec):
        return +best
