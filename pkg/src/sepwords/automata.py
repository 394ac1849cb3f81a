"""Deterministic finite automata over {0, 1}.

States are stored 0-based in memory. The text format and DOT export use the
1-based numbering ``1..N``.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass, field

from . import kernels
from .arithmetic import is_prime
from .words import BinaryString, as_bits


@dataclass(frozen=True)
class Dfa:
    """Total DFA. ``table[s] = (target on 0, target on 1)``."""

    table: tuple
    start: int
    accept: frozenset
    _flat: array = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple((int(a), int(b)) for a, b in self.table)
        n = len(table)
        if n < 1:
            raise ValueError("a DFA needs at least one state")
        for row in table:
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range")
        if not 0 <= self.start < n:
            raise ValueError(f"start state {self.start} out of range")
        accept = frozenset(int(s) for s in self.accept)
        if any(not 0 <= s < n for s in accept):
            raise ValueError("accept state out of range")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "accept", accept)
        object.__setattr__(self, "_flat", array("i", [t for row in table for t in row]))

    @property
    def state_count(self) -> int:
        return len(self.table)

    def final_state(self, x) -> int:
        return kernels.run_dfa(self._flat, self.start, as_bits(x).bits)

    def accepts(self, x) -> bool:
        return self.final_state(x) in self.accept

    def reachable(self) -> list:
        """States reachable from the start, in breadth-first order."""
        seen = {self.start}
        order = [self.start]
        queue = deque(order)
        while queue:
            s = queue.popleft()
            for t in self.table[s]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
                    queue.append(t)
        return order

    def to_text(self) -> str:
        lines = [f"states {self.state_count}", f"start {self.start + 1}"]
        lines.append(" ".join(["accept"] + [str(s + 1) for s in sorted(self.accept)]))
        for s, (t0, t1) in enumerate(self.table):
            lines.append(f"{s + 1} {t0 + 1} {t1 + 1}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Dfa":
        lines = [ln.strip() for ln in text.strip().splitlines()]

        def header(line, key):
            parts = line.split()
            if not parts or parts[0] != key:
                raise ValueError(f"expected '{key}' line, got {line!r}")
            return [int(v) for v in parts[1:]]

        if len(lines) < 3:
            raise ValueError("truncated DFA text")
        (n,) = header(lines[0], "states")
        (start,) = header(lines[1], "start")
        accept = header(lines[2], "accept")
        rows = lines[3:]
        if len(rows) != n:
            raise ValueError(f"expected {n} transition lines, got {len(rows)}")
        table = [None] * n
        for row in rows:
            s, t0, t1 = (int(v) for v in row.split())
            if not 1 <= s <= n or table[s - 1] is not None:
                raise ValueError(f"bad or repeated state line {row!r}")
            table[s - 1] = (t0 - 1, t1 - 1)
        return cls(tuple(table), start - 1, frozenset(a - 1 for a in accept))

    def to_dot(self, name: str = "dfa") -> str:
        out = [f"digraph {name} {{", "    rankdir=LR;", '    __start [shape=point, label=""];']
        for s in range(self.state_count):
            shape = "doublecircle" if s in self.accept else "circle"
            out.append(f'    q{s + 1} [shape={shape}, label="{s + 1}"];')
        out.append(f"    __start -> q{self.start + 1};")
        for s, (t0, t1) in enumerate(self.table):
            if t0 == t1:
                out.append(f'    q{s + 1} -> q{t0 + 1} [label="0,1"];')
            else:
                out.append(f'    q{s + 1} -> q{t0 + 1} [label="0"];')
                out.append(f'    q{s + 1} -> q{t1 + 1} [label="1"];')
        out.append("}")
        return "\n".join(out) + "\n"


def run(d: Dfa, x) -> bool:
    return d.accepts(x)


@dataclass(frozen=True)
class CountingMachineSpec:
    """Parameters of the occurrence-counting machine.

    It accepts ``x`` iff the number of occurrences of ``w`` starting at a
    position ``j = i (mod m)`` is congruent to ``a`` modulo the prime ``q``.
    """

    m: int
    i: int
    q: int
    a: int
    w: BinaryString

    def __post_init__(self):
        object.__setattr__(self, "w", as_bits(self.w))
        if self.m < 1:
            raise ValueError("modulus m must be positive")
        if not 0 <= self.i < self.m:
            raise ValueError(f"residue i={self.i} not in [0, {self.m})")
        if not is_prime(self.q):
            raise ValueError(f"q={self.q} is not prime")
        if not 0 <= self.a < self.q:
            raise ValueError(f"target a={self.a} not in [0, {self.q})")
        if not 1 <= len(self.w) <= self.m:
            raise ValueError(f"pattern length {len(self.w)} must be in [1, m={self.m}]")

    @property
    def states(self) -> int:
        return 2 * self.m * self.q


def build_counting_machine(spec: CountingMachineSpec) -> Dfa:
    """Build the ``2mq``-state counting machine.

    States are triples ``(j, flag, s)``: ``j`` is the index of the next symbol
    mod ``m``, ``flag`` marks an occurrence candidate that began at a position
    ``= i (mod m)``, and ``s`` is the running count mod ``q``. Unreachable
    states are kept so the size matches ``2mq`` exactly.
    """
    m, i, q, a = spec.m, spec.i, spec.q, spec.a
    w = spec.w.bits
    l = len(w)

    def idx(j, flag, s):
        return (2 * j + flag) * q + s

    table = [None] * (2 * m * q)
    for j in range(m):
        nj = (j + 1) % m
        at_start = j == i
        offset = (j - i) % m + 1  # 1-based index into w of the symbol read here
        for s in range(q):
            hit = (s + 1) % q
            for flag in (0, 1):
                row = [idx(nj, 0, s), idx(nj, 0, s)]
                if l == 1:
                    # no tracking needed: compare the one symbol in place
                    if at_start:
                        row[w[0]] = idx(nj, 0, hit)
                elif flag == 0:
                    if at_start:
                        row[w[0]] = idx(nj, 1, s)
                elif offset < l:
                    row[w[offset - 1]] = idx(nj, 1, s)
                elif offset == l:
                    row[w[l - 1]] = idx(nj, 0, hit)
                table[idx(j, flag, s)] = tuple(row)
    accept = frozenset(idx(j, f, a) for j in range(m) for f in (0, 1))
    return Dfa(tuple(table), idx(1 % m, 0, 0), accept)


def build_prefix_acceptor(prefix) -> Dfa:
    """DFA accepting exactly the strings that begin with ``prefix``.

    Uses ``len(prefix) + 2`` states: the match chain, an absorbing accept
    state and a dead state.
    """
    prefix = as_bits(prefix)
    length = len(prefix)
    if length == 0:
        raise ValueError("prefix must be non-empty")
    sink, dead = length, length + 1
    table = []
    for c, b in enumerate(prefix.bits):
        row = [dead, dead]
        row[b] = c + 1
        table.append(tuple(row))
    table.append((sink, sink))
    table.append((dead, dead))
    return Dfa(tuple(table), 0, frozenset([sink]))


def minimize(d: Dfa) -> Dfa:
    """Minimal equivalent DFA via Moore partition refinement.

    Unreachable states are dropped first; surviving classes are renumbered
    in breadth-first order from the start state.
    """
    states = d.reachable()
    cls = {s: int(s in d.accept) for s in states}
    count = len(set(cls.values()))
    while True:
        sigs = {}
        new = {}
        for s in states:
            t0, t1 = d.table[s]
            key = (cls[s], cls[t0], cls[t1])
            new[s] = sigs.setdefault(key, len(sigs))
        cls = new
        if len(sigs) == count:
            break
        count = len(sigs)
    rep = {}
    for s in states:
        rep.setdefault(cls[s], s)
    order = {}
    queue = deque([cls[d.start]])
    order[cls[d.start]] = 0
    while queue:
        c = queue.popleft()
        for t in d.table[rep[c]]:
            if cls[t] not in order:
                order[cls[t]] = len(order)
                queue.append(cls[t])
    table = [None] * len(order)
    accept = set()
    for c, k in order.items():
        s = rep[c]
        table[k] = tuple(order[cls[t]] for t in d.table[s])
        if s in d.accept:
            accept.add(k)
    return Dfa(tuple(table), 0, frozenset(accept))


def distinguishing_string(d1: Dfa, d2: Dfa):
    """Shortest string on which the two DFAs disagree, or ``None``."""
    start = (d1.start, d2.start)
    parent = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        s1, s2 = pair
        if (s1 in d1.accept) != (s2 in d2.accept):
            bits = []
            while parent[pair] is not None:
                pair, b = parent[pair]
                bits.append(b)
            return BinaryString(bytes(reversed(bits)))
        for b in (0, 1):
            nxt = (d1.table[s1][b], d2.table[s2][b])
            if nxt not in parent:
                parent[nxt] = (pair, b)
                queue.append(nxt)
    return None


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return distinguishing_string(d1, d2) is None
