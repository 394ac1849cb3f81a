import math
from array import array
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BACKENDS, naive_period, naive_positions
from sepwords.kernels import _pykernels

bitstrings = st.text(alphabet="01", min_size=1, max_size=40)


def as_bytes(s):
    return bytes(int(c) for c in s)


@given(x=bitstrings, w=st.text(alphabet="01", min_size=1, max_size=6))
@settings(max_examples=300)
def test_find_occurrences_matches_scan(x, w):
    for mod in BACKENDS:
        assert mod.find_occurrences(as_bytes(x), as_bytes(w)) == naive_positions(x, w)


@given(w=bitstrings)
def test_border_array_gives_period(w):
    for mod in BACKENDS:
        border = mod.border_array(as_bytes(w))
        assert len(w) - border[-1] == naive_period(w)


def test_pattern_longer_than_text(backend):
    assert backend.find_occurrences(b"\x01", b"\x01\x01") == []


@given(st.lists(st.integers(0, 3), min_size=8, max_size=8), bitstrings)
def test_run_dfa_backends_agree(targets, x):
    flat = array("i", targets)
    results = {mod.run_dfa(flat, 0, as_bytes(x)) for mod in BACKENDS}
    assert len(results) == 1


@given(st.lists(st.integers(1, 500), max_size=40), st.lists(st.integers(1, 500), max_size=40),
       st.integers(1, 40))
def test_residue_kernels(a, b, p):
    expected = [sum(1 for v in a if v % p == i) for i in range(p)]
    diff = next((i for i in range(p) if expected[i] != sum(1 for v in b if v % p == i)), -1)
    for mod in BACKENDS:
        assert mod.residue_counts(a, p) == expected
        assert mod.first_residue_difference(a, b, p) == diff


@pytest.mark.parametrize("x,y,s,found", [
    ("0", "1", 1, False), ("0", "1", 2, True), ("01", "10", 2, True),
    ("0000", "0000", 3, False)])
def test_separating_search_small(backend, x, y, s, found):
    res = backend.separating_dfa_search(as_bytes(x), as_bytes(y), s)
    assert (res is not None) == found
    if found:
        flat = array("i", res)
        assert _pykernels.run_dfa(flat, 0, as_bytes(x)) != _pykernels.run_dfa(flat, 0, as_bytes(y))


@given(st.lists(st.tuples(st.integers(0, 60), st.floats(-1, 1)), min_size=1, max_size=12),
       st.floats(0.5, 1.0))
def test_sparse_eval_close_to_exact(terms, x):
    exps, coefs = zip(*terms)
    exact = abs(sum(Fraction(c) * Fraction(x) ** e for e, c in terms))
    scale = sum(abs(c) * x ** e for e, c in terms)
    for mod in BACKENDS:
        got = mod.sparse_abs_eval(exps, coefs, [x])[0]
        assert abs(got - float(exact)) <= 1e-13 * max(scale, 1.0)


@given(st.lists(st.integers(-1, 1), min_size=1, max_size=64), st.floats(0.5, 1.0))
def test_compensated_horner_near_exact(coefs, x):
    exact = abs(sum(c * Fraction(x) ** j for j, c in enumerate(coefs)))
    for mod in BACKENDS:
        got = mod.horner_abs_eval(coefs, [x])[0]
        # compensated Horner: error ~ eps*|p| + eps**2 * cond
        assert abs(got - float(exact)) <= 4e-16 * float(exact) + 1e-28 * len(coefs) ** 2


def test_compensated_horner_beats_plain_on_cancellation():
    # (x - 1)**8 expanded, evaluated near its root
    coefs = [math.comb(8, j) * (-1) ** (8 - j) for j in range(9)]
    x = 1.0 + 2 ** -10
    exact = float((Fraction(x) - 1) ** 8)
    for mod in BACKENDS:
        got = mod.horner_abs_eval(coefs, [x])[0]
        assert got == pytest.approx(exact, rel=1e-12)
