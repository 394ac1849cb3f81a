"""Exact answers at desk scale and adversarial inputs.

``exact_min_dfa`` finds the true minimum number of states needed to separate
two strings by exhaustive search. ``adversarial_pair`` and
``adversarial_strings`` produce inputs on which residue counting with small
primes is blind.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .arithmetic import IndexSet, primes_up_to, residue_profile
from .automata import Dfa
from .words import BinaryString, as_bits

DEFAULT_S_MAX = 5
F_OF_N_CAP = 10


@dataclass(frozen=True)
class ExactResult:
    size: int
    witness: Dfa


@dataclass(frozen=True)
class AdversarialPair:
    A: IndexSet
    B: IndexSet
    d: int
    k: int


def exact_min_dfa(x, y, s_max: int = DEFAULT_S_MAX) -> Optional[ExactResult]:
    """Smallest DFA (at most ``s_max`` states) accepting ``x`` and rejecting ``y``.

    For each size ``s`` the kernel walks both strings from state 0, choosing
    each transition the first time it is needed. A new state always gets the
    next free index, which removes relabelled duplicates. Branches are tried
    in ascending order, so the witness is the lexicographically first one.
    """
    x, y = as_bits(x), as_bits(y)
    if len(x) != len(y):
        raise ValueError("strings must have equal length")
    if x == y:
        raise ValueError("strings are identical")
    for s in range(1, s_max + 1):
        flat = kernels.separating_dfa_search(x.bits, y.bits, s)
        if flat is None:
            continue
        table = tuple((flat[2 * j], flat[2 * j + 1]) for j in range(s))
        probe = Dfa(table, 0, frozenset())
        witness = Dfa(table, 0, frozenset([probe.final_state(x)]))
        return ExactResult(s, witness)
    return None


def all_strings(n: int):
    return [BinaryString(bytes(bits)) for bits in itertools.product((0, 1), repeat=n)]


def exact_table(n: int, s_max: int = DEFAULT_S_MAX) -> dict:
    """``{(x, y): size}`` over unordered distinct pairs of length ``n``.

    The size is symmetric in its arguments, so each pair is searched once
    with ``x < y`` lexicographically.
    """
    if n > F_OF_N_CAP:
        raise ValueError(f"exhaustive tables are capped at n <= {F_OF_N_CAP}")
    words = all_strings(n)
    out = {}
    for x, y in itertools.combinations(words, 2):
        res = exact_min_dfa(x, y, s_max)
        if res is None:
            raise ValueError(f"s_max={s_max} too small for pair ({x}, {y})")
        out[(str(x), str(y))] = res.size
    return out


def f_of_n(n: int, s_max: int = DEFAULT_S_MAX) -> int:
    """Worst case over all distinct length-``n`` pairs of the minimal size."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > F_OF_N_CAP:
        raise ValueError(f"f(n) is only computed for n <= {F_OF_N_CAP}")
    return max(exact_table(n, s_max).values())


def _intervals(n: int, d: int) -> list:
    """Blocks ``[2jd + 1, (2j + 1)d]`` clipped to ``[1, n]``."""
    out = []
    j = 0
    while 2 * j * d + 1 <= n:
        out.append((2 * j * d + 1, min((2 * j + 1) * d, n)))
        j += 1
    return out


def _profile_key(elements, primes) -> tuple:
    return tuple(residue_profile(elements, p).counts for p in primes)


def adversarial_pair(n: int, d: int, k: int, budget: int, seed: int,
                     max_size: int = 4) -> Optional[AdversarialPair]:
    """Collision search for two ``d``-separated sets with equal residue
    profiles modulo every prime ``<= k``.

    Candidates have at most one element per block ``[2jd+1, (2j+1)d]``, so any
    two elements are more than ``d`` apart. Each sample takes between 1 and
    ``max_size`` blocks; small members collide quickly. Returns ``None``
    once ``budget`` samples are spent.
    """
    if min(n, d, k) < 1:
        raise ValueError("n, d and k must be positive")
    rng = random.Random(seed)
    blocks = _intervals(n, d)
    primes = primes_up_to(k)
    seen = {}
    for _ in range(budget):
        size = rng.randint(1, min(max_size, len(blocks)))
        chosen = sorted(rng.sample(range(len(blocks)), size))
        elems = tuple(rng.randint(*blocks[j]) for j in chosen)
        key = _profile_key(elems, primes)
        other = seen.get(key)
        if other is not None and other != elems:
            return AdversarialPair(IndexSet(other, n), IndexSet(elems, n), d, k)
        seen.setdefault(key, elems)
    return None


def check_pair(pair: AdversarialPair) -> bool:
    """Direct re-check of every ``AdversarialPair`` invariant."""
    A, B = pair.A, pair.B
    if A.elements == B.elements:
        return False
    if not (A.is_separated(pair.d) and B.is_separated(pair.d)):
        return False
    return all(residue_profile(A, p) == residue_profile(B, p) for p in primes_up_to(pair.k))


def adversarial_strings(pair: AdversarialPair, n_out: int):
    """Embed the pair as sparse strings: 1s at ``A + n_out // 4`` (resp. B)."""
    top = max(pair.A.elements + pair.B.elements, default=0)
    if n_out < 4 * top or n_out < 4:
        raise ValueError(f"n_out={n_out} leaves too little padding for max element {top}")
    shift = n_out // 4

    def embed(S):
        bits = bytearray(n_out)
        for a in S.elements:
            bits[a + shift - 1] = 1
        return BinaryString(bytes(bits))

    return embed(pair.A), embed(pair.B)


def check_profile_equality(x, y, p_max: int, w_len_max: int) -> bool:
    """True iff for every prime ``p <= p_max``, residue ``i`` and pattern ``w``
    of length ``1..min(w_len_max, p)``, ``x`` and ``y`` have the same number of
    occurrences of ``w`` at positions ``= i (mod p)``.

    Patterns absent from both strings trivially agree, so only windows that
    actually occur are tallied.
    """
    x, y = as_bits(x), as_bits(y)
    if len(x) != len(y):
        raise ValueError("strings must have equal length")
    n = len(x)
    for p in primes_up_to(p_max):
        for l in range(1, min(w_len_max, p) + 1):
            if l > n:
                break
            if _window_tally(x.bits, l, p) != _window_tally(y.bits, l, p):
                return False
    return True


def _window_tally(bits: bytes, l: int, p: int) -> dict:
    tally = {}
    mask = (1 << l) - 1
    code = 0
    for j, b in enumerate(bits, start=1):
        code = ((code << 1) | b) & mask
        if j >= l:
            key = (code, (j - l + 1) % p)
            tally[key] = tally.get(key, 0) + 1
    return tally
