"""Sparse polynomials from separated set pairs, and their size near 1.

A pair of ``t``-separated sets ``A != B`` in ``[n]`` (``t = ceil(n**(1/3))``)
gives ``sum_j (1_A(j) - 1_B(j)) x**j``. After dividing out the lowest power
of ``x`` and fixing the sign, it reads ``1 - sigma * x**d + tail`` with
``d < t`` and every tail exponent ``>= t``; ``SparsePoly`` stores that form.
All logarithms in this package are natural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .arithmetic import _elements
from .words import icbrt_ceil, is_separated

REFINE_RTOL = 1e-12
DEFAULT_GRID = 10_000


@dataclass(frozen=True)
class SparsePoly:
    n: int
    sigma: int
    d: Optional[int]
    tail: tuple  # ((exponent, coefficient), ...)

    @property
    def threshold(self) -> int:
        return icbrt_ceil(self.n)

    def terms(self) -> list:
        out = [(0, 1.0)]
        if self.sigma:
            out.append((self.d, -1.0))
        out.extend((j, float(a)) for j, a in self.tail)
        return out

    def in_class(self) -> bool:
        """Membership in the class of normalised sparse polynomials for ``n``."""
        t = self.threshold
        if self.sigma == 1:
            if self.d is None or not 1 <= self.d < t:
                return False
        elif self.sigma != 0 or self.d is not None:
            return False
        exps = [j for j, _ in self.tail]
        if len(set(exps)) != len(exps):
            return False
        return all(t <= j <= self.n and abs(a) <= 1 for j, a in self.tail)

    def abs_values(self, xs) -> list:
        exps, coefs = zip(*self.terms())
        return kernels.sparse_abs_eval(exps, coefs, list(xs))

    def __call__(self, x: float) -> float:
        return math.fsum(c * x ** e for e, c in self.terms())


@dataclass(frozen=True)
class DensePoly:
    """``coefficients[j]`` multiplies ``x**j``.

    ``factors``, when given, says the polynomial equals the product of
    ``x**e - 1`` over those exponents; evaluation then uses the product,
    which stays accurate where the expanded form cancels catastrophically.
    """

    coefficients: tuple
    factors: Optional[tuple] = None

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def abs_values(self, xs) -> list:
        xs = list(xs)
        if self.factors is not None and all(x > 0 for x in xs):
            return [abs(self._product(x)) for x in xs]
        return kernels.horner_abs_eval(self.coefficients, xs)

    def _product(self, x: float) -> float:
        lg = math.log1p(x - 1.0)
        out = 1.0
        for e in self.factors:
            out *= math.expm1(e * lg)
        return out

    def __call__(self, x: float) -> float:
        if self.factors is not None and x > 0:
            return self._product(x)
        value = 0.0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def root_multiplicity_at_one(self) -> int:
        """How many times ``(x - 1)`` divides the polynomial (exact arithmetic)."""
        coefs = list(self.coefficients)
        if not any(coefs):
            raise ValueError("zero polynomial")
        k = 0
        while len(coefs) > 1:
            quotient = [0] * (len(coefs) - 1)
            acc = 0
            for j in range(len(coefs) - 1, 0, -1):
                acc = acc + coefs[j]
                quotient[j - 1] = acc
            if acc + coefs[0] != 0:
                break
            coefs = quotient
            k += 1
        return k


def from_set_pair(A, B, n: int) -> SparsePoly:
    """Normalised difference polynomial of two ``ceil(n**(1/3))``-separated sets."""
    a, b = set(_elements(A)), set(_elements(B))
    if a == b:
        raise ValueError("sets are equal")
    t = icbrt_ceil(n)
    if any(v < 1 or v > n for v in a | b):
        raise ValueError(f"elements must lie in [1, {n}]")
    if not (is_separated(a, t) and is_separated(b, t)):
        raise ValueError(f"sets must be {t}-separated")
    eps = {}
    for v in a ^ b:
        eps[v] = 1 if v in a else -1
    r = min(eps)
    sign = eps[r]
    shifted = sorted((j - r, sign * e) for j, e in eps.items() if j != r)
    low = [(j, c) for j, c in shifted if j < t]
    tail = tuple((j, c) for j, c in shifted if j >= t)
    if len(low) > 1 or (low and low[0][1] != -1):
        raise ValueError("difference polynomial is not in normal form")
    if low:
        return SparsePoly(n, 1, low[0][0], tail)
    return SparsePoly(n, 0, None, tail)


def grid_points(lo: float, hi: float, grid: int) -> list:
    span = hi - lo
    xs = [lo + span * (j / (grid - 1)) for j in range(grid)]
    xs[-1] = hi
    return xs


def eval_max_on_interval(poly, lo: float, hi: float, grid: int = DEFAULT_GRID) -> float:
    """Lower bound on ``max |poly(x)|`` over ``[lo, hi]``.

    Scans ``grid`` equispaced points, then runs a ternary search inside the
    two cells around the best one until the bracket shrinks below
    ``REFINE_RTOL`` relative width. The result is always a value actually
    attained at an evaluated point.
    """
    if lo > hi:
        raise ValueError("empty interval")
    if grid < 2:
        raise ValueError("grid needs at least two points")
    if lo == hi:
        return poly.abs_values([lo])[0]
    xs = grid_points(lo, hi, grid)
    vals = poly.abs_values(xs)
    b = max(range(grid), key=vals.__getitem__)
    best = vals[b]
    left, right = xs[max(b - 1, 0)], xs[min(b + 1, grid - 1)]
    tol = REFINE_RTOL * max(abs(lo), abs(hi), hi - lo)
    while right - left > tol:
        m1 = left + (right - left) / 3
        m2 = right - (right - left) / 3
        v1, v2 = poly.abs_values([m1, m2])
        best = max(best, v1, v2)
        if v1 < v2:
            left = m1
        else:
            right = m2
    return best


def order_family(k: int) -> DensePoly:
    """``prod_{i<k} (x**(2**i) - 1)``: degree ``2**k - 1``, coefficients ``+-1``."""
    if not 1 <= k <= 15:
        raise ValueError("k must be in [1, 15]")
    size = 1 << k
    coefs = tuple(-1 if (k - bin(j).count("1")) % 2 else 1 for j in range(size))
    return DensePoly(coefs, tuple(1 << i for i in range(k)))


def check_order_bound(k: int, grid: int = DEFAULT_GRID):
    """Compare ``max |f|`` on ``[1 - k/(9n), 1]`` with ``(n + 1) (e/9)**k``.

    ``f = order_family(k)`` and ``n = 2**k - 1``; ``(x - 1)**k`` divides ``f``.
    Returns ``(lhs, rhs, ok)``.
    """
    f = order_family(k)
    n = f.degree
    lhs = eval_max_on_interval(f, 1.0 - k / (9.0 * n), 1.0, grid)
    rhs = (n + 1) * (math.e / 9.0) ** k
    return lhs, rhs, lhs <= rhs
