"""Pure-Python versions of the hot kernels.

Every function here has a twin with the same name and signature in
``_ckernels.pyx``. Bit strings are ``bytes`` holding the values 0 and 1,
DFA tables are flat sequences where ``flat[2 * s + b]`` is the successor of
state ``s`` (0-based) on symbol ``b``.
"""

import math

BACKEND = "python"


def border_array(pat):
    """Return the KMP failure function of ``pat``.

    ``result[i]`` is the length of the longest proper border of ``pat[:i + 1]``.
    """
    n = len(pat)
    border = [0] * n
    k = 0
    for i in range(1, n):
        c = pat[i]
        while k and pat[k] != c:
            k = border[k - 1]
        if pat[k] == c:
            k += 1
        border[i] = k
    return border


def find_occurrences(text, pat):
    """1-based start positions of every (possibly overlapping) match."""
    l = len(pat)
    if l == 0 or l > len(text):
        return []
    border = border_array(pat)
    out = []
    k = 0
    for j, c in enumerate(text):
        while k and pat[k] != c:
            k = border[k - 1]
        if pat[k] == c:
            k += 1
        if k == l:
            out.append(j - l + 2)
            k = border[k - 1]
    return out


def run_dfa(flat, start, bits):
    state = start
    for b in bits:
        state = flat[2 * state + b]
    return state


def residue_counts(elements, p):
    counts = [0] * p
    for a in elements:
        counts[a % p] += 1
    return counts


def first_residue_difference(a_elems, b_elems, p):
    """Smallest residue ``i`` mod ``p`` whose class sizes differ, else -1."""
    ca = residue_counts(a_elems, p)
    cb = residue_counts(b_elems, p)
    for i in range(p):
        if ca[i] != cb[i]:
            return i
    return -1


def separating_dfa_search(x, y, s):
    """Search for an ``s``-state DFA whose runs on ``x`` and ``y`` end apart.

    Transitions are assigned lazily while simulating ``x`` and then ``y``
    from state 0. A fresh target is always the next unused index, so every
    partial table is in first-visit canonical form. Returns the flat table
    (unassigned entries pointing at state 0) or ``None``.
    """
    seq = bytes(x) + bytes(y)
    half = len(x)
    total = len(seq)
    table = [-1] * (2 * s)
    final_x = [0]

    def step(pos, state, used):
        if pos == half:
            final_x[0] = state
            state = 0
        if pos == total:
            return state != final_x[0]
        slot = 2 * state + seq[pos]
        nxt = table[slot]
        if nxt >= 0:
            return step(pos + 1, nxt, used)
        for c in range(min(used + 1, s)):
            table[slot] = c
            if step(pos + 1, c, used + 1 if c == used else used):
                return True
        table[slot] = -1
        return False

    if not step(0, 0, 1):
        return None
    return [t if t >= 0 else 0 for t in table]


def sparse_abs_eval(exponents, coefficients, xs):
    """``|sum c * x**e|`` at each point, summed with ``math.fsum``."""
    terms = list(zip(exponents, coefficients))
    return [abs(math.fsum(c * x ** e for e, c in terms)) for x in xs]


_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, al * bl - (((p - ah * bh) - al * bh) - ah * bl)


def horner_abs_eval(coefficients, xs):
    """Compensated Horner scheme; ``coefficients[j]`` multiplies ``x**j``."""
    out = []
    n = len(coefficients)
    for x in xs:
        if n == 0:
            out.append(0.0)
            continue
        s = float(coefficients[-1])
        c = 0.0
        for j in range(n - 2, -1, -1):
            p, pi = _two_prod(s, x)
            s, sigma = _two_sum(p, float(coefficients[j]))
            c = c * x + (pi + sigma)
        out.append(abs(s + c))
    return out
