"""Binary strings, occurrence sets, periods and window selection.

Positions are 1-based throughout: ``x.at(1)`` is the first symbol and
``positions`` reports start indices in ``[1, n - l + 1]``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .errors import InternalContradiction, PreconditionError


@dataclass(frozen=True)
class BinaryString:
    """Immutable 0/1 string. ``bits`` holds the byte values 0 and 1."""

    bits: bytes

    def __post_init__(self):
        if not isinstance(self.bits, bytes):
            object.__setattr__(self, "bits", bytes(self.bits))
        if self.bits.translate(None, b"\x00\x01"):
            raise ValueError("bits must be 0 or 1")

    @classmethod
    def parse(cls, text: str) -> "BinaryString":
        """Parse ASCII ``0``/``1`` text; surrounding whitespace is ignored."""
        stripped = text.strip()
        offset = len(text) - len(text.lstrip())
        for j, ch in enumerate(stripped):
            if ch not in "01":
                raise ValueError(f"invalid character {ch!r} at index {offset + j}")
        return cls(bytes(ord(ch) - 48 for ch in stripped))

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join("01"[b] for b in self.bits)

    def __repr__(self):
        return f"BinaryString('{self}')"

    def at(self, j: int) -> int:
        """Symbol at 1-based position ``j``."""
        if not 1 <= j <= len(self.bits):
            raise IndexError(j)
        return self.bits[j - 1]

    def segment(self, i: int, j: int) -> "BinaryString":
        """Symbols ``x_i .. x_j`` inclusive (1-based)."""
        return BinaryString(self.bits[i - 1:j])

    def __add__(self, other):
        return BinaryString(self.bits + as_bits(other).bits)


def as_bits(value) -> BinaryString:
    """Coerce a ``BinaryString``, a ``'0'/'1'`` str, or a bit sequence."""
    if isinstance(value, BinaryString):
        return value
    if isinstance(value, str):
        return BinaryString.parse(value)
    return BinaryString(bytes(value))


def is_separated(elements: Iterable[int], d: int) -> bool:
    """True when consecutive sorted elements differ by at least ``d``."""
    elems = sorted(elements)
    return all(b - a >= d for a, b in zip(elems, elems[1:]))


@dataclass(frozen=True)
class PositionSet:
    positions: tuple
    pattern_length: int
    n: int

    def __post_init__(self):
        ps = self.positions
        hi = self.n - self.pattern_length + 1
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("positions must be strictly increasing")
        if ps and (ps[0] < 1 or ps[-1] > hi):
            raise ValueError("position out of range")

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __contains__(self, j):
        idx = bisect_left(self.positions, j)
        return idx < len(self.positions) and self.positions[idx] == j

    def is_separated(self, d: int) -> bool:
        return is_separated(self.positions, d)


def positions(x, w) -> PositionSet:
    """Start positions of every occurrence of ``w`` in ``x``, overlaps kept.

    A pattern longer than ``x`` simply has no occurrences.
    """
    x, w = as_bits(x), as_bits(w)
    if len(w) == 0:
        raise ValueError("pattern must be non-empty")
    found = kernels.find_occurrences(x.bits, w.bits)
    return PositionSet(tuple(found), len(w), len(x))


def minimal_period(w) -> int:
    w = as_bits(w)
    if len(w) == 0:
        raise ValueError("period of an empty string is undefined")
    return len(w) - kernels.border_array(w.bits)[-1]


def first_difference(x, y) -> Optional[int]:
    x, y = as_bits(x), as_bits(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")
    for k, (a, b) in enumerate(zip(x.bits, y.bits), start=1):
        if a != b:
            return k
    return None


def icbrt_ceil(n: int) -> int:
    """Smallest integer ``t`` with ``t**3 >= n``."""
    if n <= 0:
        return 0
    t = max(1, round(n ** (1.0 / 3.0)))
    while t ** 3 < n:
        t += 1
    while t > 1 and (t - 1) ** 3 >= n:
        t -= 1
    return t


@dataclass(frozen=True)
class WindowChoice:
    w: BinaryString
    k: int
    t: int
    in_x: bool
    pos_x: PositionSet
    pos_y: PositionSet


def select_window(x, y, t: int) -> WindowChoice:
    """Pick an aperiodic length-``2t`` window ending at the first difference.

    The common stretch ``w' = x[k-2t+1 .. k-1]`` is extended by ``x_k`` when
    that leaves no period ``<= t``, otherwise by ``y_k``.
    """
    x, y = as_bits(x), as_bits(y)
    k = first_difference(x, y)
    if k is None:
        raise ValueError("strings are identical")
    if t < 1 or k < 2 * t:
        raise PreconditionError(f"first difference k={k} is below 2t={2 * t}")
    common = x.segment(k - 2 * t + 1, k - 1)
    for last in (x.at(k), y.at(k)):
        w = common + bytes([last])
        if minimal_period(w) > t:
            break
    else:
        raise InternalContradiction(
            f"neither extension of {common} has minimal period > {t}")
    pos_x = positions(x, w)
    pos_y = positions(y, w)
    choice = WindowChoice(w, k, t, last == x.at(k), pos_x, pos_y)
    start = k - 2 * t + 1
    if pos_x.positions == pos_y.positions or (start in pos_x) == (start in pos_y):
        raise InternalContradiction(f"window {w} does not tell the strings apart")
    return choice
