"""Primes, residue-class counts of integer sets, and power-sum moments."""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import kernels


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing integers drawn from ``[1, n]``."""

    elements: tuple
    n: int

    def __post_init__(self):
        elems = tuple(int(a) for a in self.elements)
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise ValueError("elements must be strictly increasing")
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise ValueError(f"elements must lie in [1, {self.n}]")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def parse(cls, text: str, n: int) -> "IndexSet":
        """Parse comma-separated integers, e.g. ``"1,4,9"``."""
        text = text.strip()
        elems = [int(tok) for tok in text.split(",")] if text else []
        return cls(tuple(sorted(elems)), n)

    def format(self) -> str:
        return ",".join(str(a) for a in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_separated(self, d: int) -> bool:
        e = self.elements
        return all(b - a >= d for a, b in zip(e, e[1:]))


def _elements(A) -> list:
    if isinstance(A, IndexSet):
        return list(A.elements)
    return list(A)


@dataclass(frozen=True)
class ResidueProfile:
    p: int
    counts: tuple

    def __getitem__(self, i):
        return self.counts[i]


@dataclass(frozen=True)
class MomentWitness:
    exponent: int
    moment_a: int
    moment_b: int


@lru_cache(maxsize=8)
def _sieve(k: int) -> tuple:
    if k < 2:
        return ()
    flags = bytearray([1]) * (k + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(k) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, k + 1, p)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(k: int) -> list:
    """All primes ``<= k`` in increasing order (sieve of Eratosthenes)."""
    return list(_sieve(max(k, 0)))


def iter_primes(lo: int, hi: int):
    """Primes in ``[lo, hi]`` in increasing order.

    The sieve limit doubles on demand, so a loose ``hi`` costs nothing when
    the caller stops early.
    """
    limit = max(1024, 2 * lo)
    done = lo - 1
    while done < hi:
        limit = min(limit, hi)
        ps = _sieve(limit)
        for p in ps[bisect_left(ps, done + 1):]:
            yield p
        done = limit
        limit *= 2


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    return all(q % f for f in range(3, math.isqrt(q) + 1, 2))


def residue_profile(A, p: int) -> ResidueProfile:
    if p < 1:
        raise ValueError(f"modulus must be positive, got {p}")
    return ResidueProfile(p, tuple(kernels.residue_counts(_elements(A), p)))


def find_separating_prime(A, B, p_min: int, p_max: int) -> Optional[tuple]:
    """Smallest prime ``p`` in ``[p_min, p_max]`` whose residue profiles of
    ``A`` and ``B`` differ, with the smallest differing residue ``i``.

    Returns ``(p, i)`` or ``None``.
    """
    a, b = _elements(A), _elements(B)
    if sorted(a) == sorted(b):
        raise ValueError("sets are equal; no prime can separate them")
    for p in iter_primes(max(p_min, 2), p_max):
        i = kernels.first_residue_difference(a, b, p)
        if i >= 0:
            return p, i
    return None


def find_count_prime(c1: int, c2: int, q_max: int) -> Optional[int]:
    """Smallest prime ``q <= q_max`` with ``c1 != c2 (mod q)``."""
    if c1 == c2:
        raise ValueError("counts are equal")
    if c1 < 0 or c2 < 0:
        raise ValueError("counts must be non-negative")
    diff = c1 - c2
    for q in iter_primes(2, q_max):
        if diff % q:
            return q
    return None


def moment(A, m: int) -> int:
    """Exact power sum of ``A``; ``0**0`` counts as 1."""
    if m < 0:
        raise ValueError("exponent must be non-negative")
    return sum(a ** m for a in _elements(A))


def find_moment_witness(A, B, m_max: int) -> Optional[MomentWitness]:
    """Least exponent ``m <= m_max`` at which the power sums of A and B differ."""
    a, b = _elements(A), _elements(B)
    if sorted(a) == sorted(b):
        raise ValueError("sets are equal; every moment agrees")
    # shared elements contribute equally to both sums
    common = set(a) & set(b)
    only_a = [v for v in a if v not in common]
    only_b = [v for v in b if v not in common]
    pa = [1] * len(only_a)
    pb = [1] * len(only_b)
    for m in range(m_max + 1):
        if m:
            pa = [p * v for p, v in zip(pa, only_a)]
            pb = [p * v for p, v in zip(pb, only_b)]
        if sum(pa) != sum(pb):
            return MomentWitness(m, moment(a, m), moment(b, m))
    return None


def moment_to_prime(A, B, m: int, p_min: int, p_max: int) -> Optional[tuple]:
    """Turn a differing moment into a separating prime and residue.

    Picks the smallest prime ``p`` in range not dividing the moment
    difference; since ``sum a**m = sum_i |A_i| * i**m (mod p)``, some residue
    class sizes then differ mod ``p``. Returns ``(p, i)`` with the smallest
    such ``i``, or ``None`` when every prime in range divides the difference.
    """
    a, b = _elements(A), _elements(B)
    diff = moment(a, m) - moment(b, m)
    if diff == 0:
        raise ValueError(f"moments of order {m} are equal")
    for p in iter_primes(max(p_min, 2), p_max):
        if diff % p == 0:
            continue
        ca = kernels.residue_counts(a, p)
        cb = kernels.residue_counts(b, p)
        for i in range(p):
            if (ca[i] - cb[i]) % p:
                return p, i
        raise AssertionError(f"residue-moment identity failed at p={p}")
    return None


def ln_power_cap(n: int, exponent: float, power: int, scale: float = 10.0,
                 floor: int = 64) -> int:
    """``max(floor, ceil(scale * n**exponent * ln(n)**power))``."""
    if n < 2:
        return floor
    return max(floor, math.ceil(scale * n ** exponent * math.log(n) ** power))
