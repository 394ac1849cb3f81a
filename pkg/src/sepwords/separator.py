"""Build and check a small DFA accepting ``x`` and rejecting ``y``.

Three modes are available:

``paper``
    Strings that differ early get a prefix acceptor. Otherwise an aperiodic
    window ``w`` of length ``2t`` (``t = ceil(n**(1/3))``) ending at the first
    difference is chosen, a prime ``p >= |w|`` and residue ``i`` with
    differing class sizes of ``pos_w(x)`` and ``pos_w(y)`` are found, a small
    prime ``q`` tells those sizes apart, and the ``2pq``-state counting
    machine is built.
``baseline``
    The same counting machine with ``w = "1"`` and ``p`` searched from 2.
``optimize``
    Tries shorter windows and composite moduli and keeps the smallest
    machine, never doing worse than ``paper``.

The returned DFA always accepts the first argument; this is re-checked
before returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .arithmetic import find_count_prime, find_separating_prime, is_prime, ln_power_cap
from .automata import CountingMachineSpec, Dfa, build_counting_machine, build_prefix_acceptor
from .errors import InternalContradiction
from .words import BinaryString, as_bits, first_difference, icbrt_ceil, positions, select_window

MODES = ("paper", "baseline", "optimize")


@dataclass(frozen=True)
class SeparationCertificate:
    """Why a DFA separates two strings.

    ``variant`` is ``"prefix"`` (only ``prefix`` is set) or ``"counting"``
    (``spec``, ``window_k`` and the two occurrence counts are set).
    """

    mode: str
    variant: str
    states: int
    prefix: Optional[BinaryString] = None
    spec: Optional[CountingMachineSpec] = None
    window_k: Optional[int] = None
    accepted_count: Optional[int] = None
    rejected_count: Optional[int] = None
    verified: bool = False

    @property
    def modulus_prime(self) -> Optional[bool]:
        return None if self.spec is None else is_prime(self.spec.m)

    def to_text(self) -> str:
        rows = [("mode", self.mode), ("variant", self.variant)]
        if self.variant == "prefix":
            rows.append(("prefix", str(self.prefix)))
        else:
            s = self.spec
            rows += [("w", str(s.w)), ("m", s.m), ("i", s.i), ("q", s.q), ("a", s.a),
                     ("modulus_prime", str(self.modulus_prime).lower()),
                     ("window_k", self.window_k),
                     ("accepted_count", self.accepted_count),
                     ("rejected_count", self.rejected_count)]
        rows += [("states", self.states), ("verified", str(self.verified).lower())]
        return "".join(f"{k}: {v}\n" for k, v in rows)

    @classmethod
    def from_text(cls, text: str) -> "SeparationCertificate":
        kv = {}
        for line in text.splitlines():
            if line.strip():
                key, _, value = line.partition(":")
                kv[key.strip()] = value.strip()
        common = dict(mode=kv["mode"], variant=kv["variant"], states=int(kv["states"]),
                      verified=kv["verified"] == "true")
        if kv["variant"] == "prefix":
            return cls(prefix=BinaryString.parse(kv["prefix"]), **common)
        spec = CountingMachineSpec(int(kv["m"]), int(kv["i"]), int(kv["q"]), int(kv["a"]),
                                   BinaryString.parse(kv["w"]))
        return cls(spec=spec, window_k=int(kv["window_k"]),
                   accepted_count=int(kv["accepted_count"]),
                   rejected_count=int(kv["rejected_count"]), **common)


def paper_p_cap(n: int) -> int:
    return ln_power_cap(n, 1.0 / 3.0, 6)


def baseline_p_cap(n: int) -> int:
    return max(64, math.floor(10 * math.sqrt(n * math.log(max(n, 2)))))


def q_cap(n: int) -> int:
    return max(64, math.ceil(10 * math.log(n + 2)))


def state_bound(n: int, K: float = 10.0) -> int:
    """Reporting curve ``ceil(K * n**(1/3) * ln(n)**7)``; never asserted."""
    if n < 2:
        raise ValueError("state_bound needs n >= 2")
    return math.ceil(K * n ** (1.0 / 3.0) * math.log(n) ** 7)


def verify(dfa: Dfa, x, y) -> bool:
    return dfa.accepts(x) and not dfa.accepts(y)


def occurrence_counts(spec: CountingMachineSpec, x) -> int:
    """Occurrences of ``spec.w`` in ``x`` starting at ``j = spec.i (mod spec.m)``."""
    return sum(1 for j in positions(x, spec.w) if j % spec.m == spec.i)


def _checked(dfa, cert, x, y):
    if not verify(dfa, x, y):
        raise InternalContradiction(f"constructed DFA does not separate ({cert.mode})")
    return dfa, SeparationCertificate(**{**cert.__dict__, "verified": True})


def _prefix_result(x, k, mode):
    prefix = x.segment(1, k)
    dfa = build_prefix_acceptor(prefix)
    return dfa, SeparationCertificate(mode, "prefix", dfa.state_count, prefix=prefix)


def _counting_result(x, y, w, A, B, k, mode, p_min, p_max, q_max):
    found = find_separating_prime(A, B, p_min, p_max)
    if found is None:
        raise InternalContradiction(
            f"no prime in [{p_min}, {p_max}] separates the occurrence sets of {w}")
    p, i = found
    ca = kernels.residue_counts(A, p)[i]
    cb = kernels.residue_counts(B, p)[i]
    q = find_count_prime(ca, cb, q_max)
    if q is None:
        raise InternalContradiction(f"no prime <= {q_max} separates counts {ca} and {cb}")
    spec = CountingMachineSpec(p, i, q, ca % q, w)
    dfa = build_counting_machine(spec)
    cert = SeparationCertificate(mode, "counting", dfa.state_count, spec=spec,
                                 window_k=k, accepted_count=ca, rejected_count=cb)
    return dfa, cert


def _paper(x, y, k, p_max, q_max):
    n = len(x)
    t = icbrt_ceil(n)
    if k < 2 * t:
        return _prefix_result(x, k, "paper")
    choice = select_window(x, y, t)
    A, B = list(choice.pos_x), list(choice.pos_y)
    return _counting_result(x, y, choice.w, A, B, k, "paper",
                            len(choice.w), p_max or paper_p_cap(n), q_max)


def _baseline(x, y, k, p_max, q_max):
    w = BinaryString(b"\x01")
    A, B = list(positions(x, w)), list(positions(y, w))
    return _counting_result(x, y, w, A, B, k, "baseline", 2,
                            p_max or baseline_p_cap(len(x)), q_max)


def _best_for_pattern(A, B, l, best_states, q_max):
    """Cheapest ``(states, m, i, q, ca, cb)`` over moduli ``m >= l`` that beats
    ``best_states``, or ``None``."""
    best = None
    m = l
    while 4 * m < best_states:
        ca = kernels.residue_counts(A, m)
        cb = kernels.residue_counts(B, m)
        for i in range(m):
            if ca[i] != cb[i]:
                q = find_count_prime(ca[i], cb[i], q_max)
                if q is not None and 2 * m * q < best_states:
                    best_states = 2 * m * q
                    best = (best_states, m, i, q, ca[i], cb[i])
                    if q == 2:
                        break
        m += 1
    return best


def _optimize(x, y, k, p_max, q_max):
    dfa, cert = _paper(x, y, k, p_max, q_max)
    best = (cert.states, dfa, cert)
    if k + 2 < best[0]:
        pdfa, pcert = _prefix_result(x, k, "optimize")
        best = (pcert.states, pdfa, pcert)
    n = len(x)
    for l in range(1, min(k, 2 * icbrt_ceil(n)) + 1):
        if 4 * l >= best[0]:
            break
        for source in (x, y):
            w = source.segment(k - l + 1, k)
            A, B = list(positions(x, w)), list(positions(y, w))
            found = _best_for_pattern(A, B, l, best[0], q_max)
            if found is None:
                continue
            states, m, i, q, ca, cb = found
            spec = CountingMachineSpec(m, i, q, ca % q, w)
            cdfa = build_counting_machine(spec)
            ccert = SeparationCertificate("optimize", "counting", states, spec=spec,
                                          window_k=k, accepted_count=ca, rejected_count=cb)
            best = (states, cdfa, ccert)
    _, dfa, cert = best
    if cert.mode != "optimize":
        cert = SeparationCertificate(**{**cert.__dict__, "mode": "optimize"})
    return dfa, cert


def separate(x, y, mode: str = "paper", p_max: Optional[int] = None,
             q_max: Optional[int] = None):
    """Return ``(dfa, certificate)`` with ``dfa`` accepting ``x``, rejecting ``y``.

    ``p_max``/``q_max`` override the default search caps. Raises
    ``ValueError`` for equal or mismatched inputs and
    ``InternalContradiction`` if a guaranteed search comes back empty.
    """
    x, y = as_bits(x), as_bits(y)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if len(x) == 0:
        raise ValueError("strings must be non-empty")
    k = first_difference(x, y)
    if k is None:
        raise ValueError("strings are identical")
    q_max = q_max or q_cap(len(x))
    build = {"paper": _paper, "baseline": _baseline, "optimize": _optimize}[mode]
    dfa, cert = build(x, y, k, p_max, q_max)
    return _checked(dfa, cert, x, y)
