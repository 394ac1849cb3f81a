"""Seeded generators for test inputs and experiment workloads.

Every function takes an explicit ``random.Random`` so a single seed fixes a
whole run.
"""

import random

from .words import BinaryString

RNG_NAME = "python-random-mt19937"


def random_string(n: int, rng: random.Random) -> BinaryString:
    return BinaryString(bytes(rng.getrandbits(1) for _ in range(n)))


def uniform_pair(n: int, rng: random.Random):
    """Two independent uniform strings, redrawn until distinct."""
    while True:
        x, y = random_string(n, rng), random_string(n, rng)
        if x != y:
            return x, y


def flip_pair(n: int, rng: random.Random):
    """A uniform string and a copy with one uniformly chosen bit flipped."""
    x = random_string(n, rng)
    j = rng.randrange(n)
    bits = bytearray(x.bits)
    bits[j] ^= 1
    return x, BinaryString(bytes(bits))


def swap_pair(n: int, rng: random.Random):
    """A uniform string and a copy with two unequal bits exchanged.

    Both strings have the same number of 1s, so plain symbol counting cannot
    tell them apart. Needs ``n >= 2``; redraws until the string is not
    constant.
    """
    if n < 2:
        raise ValueError("swap pairs need n >= 2")
    while True:
        x = random_string(n, rng)
        ones = [j for j, b in enumerate(x.bits) if b]
        if 0 < len(ones) < n:
            break
    zeros = [j for j, b in enumerate(x.bits) if not b]
    i, j = rng.choice(ones), rng.choice(zeros)
    bits = bytearray(x.bits)
    bits[i], bits[j] = 0, 1
    return x, BinaryString(bytes(bits))


PAIR_KINDS = {"uniform": uniform_pair, "flip": flip_pair, "swap": swap_pair}


def random_separated_set(n: int, d: int, rng: random.Random, gap_spread: int = 0) -> list:
    """Random ``d``-separated subset of ``[1, n]``.

    Consecutive gaps are ``d + U[0, gap_spread]`` (``gap_spread`` defaults
    to ``d``); the first element is uniform in ``[1, gap]``.
    """
    spread = gap_spread or d
    out = []
    a = rng.randint(1, d + spread)
    while a <= n:
        out.append(a)
        a += d + rng.randint(0, spread)
    return out


def separated_pair(n: int, d: int, rng: random.Random):
    """Two distinct ``d``-separated subsets of ``[1, n]``."""
    while True:
        A = random_separated_set(n, d, rng)
        B = random_separated_set(n, d, rng)
        if A != B:
            return A, B
