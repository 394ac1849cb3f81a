import math
import random

import mpmath
import pytest

from conftest import words
from sepwords.arithmetic import residue_profile
from sepwords.automata import build_prefix_acceptor
from sepwords.errors import InternalContradiction
from sepwords.sampling import PAIR_KINDS
from sepwords.separator import (MODES, SeparationCertificate, occurrence_counts, paper_p_cap,
                                q_cap, separate, state_bound, verify)
from sepwords.words import positions


def test_early_difference_uses_prefix_acceptor():
    dfa, cert = separate("0", "1")
    assert cert.variant == "prefix" and str(cert.prefix) == "0"
    assert dfa.state_count == 3 == cert.states
    assert dfa.accepts("0") and not dfa.accepts("1")


def test_paper_worked_example():
    dfa, cert = separate("00010000", "00011000", "paper")
    s = cert.spec
    assert (str(s.w), s.m, s.i, s.q, s.a) == ("0010", 5, 2, 2, 1)
    assert cert.window_k == 5
    assert (cert.accepted_count, cert.rejected_count) == (1, 0)
    assert dfa.state_count == 20 == cert.states
    assert cert.verified and cert.modulus_prime


def test_baseline_example():
    dfa, cert = separate("10", "01", "baseline")
    s = cert.spec
    assert str(s.w) == "1" and s.m == 2
    # residue 0 is the smallest class whose sizes differ (0 vs 1)
    assert (s.i, s.q, s.a) == (0, 2, 0)
    assert dfa.state_count == 8


@pytest.mark.parametrize("mode", MODES)
def test_orientation_both_ways(mode):
    rng = random.Random(3)
    for _ in range(200):
        x, y = PAIR_KINDS["swap"](rng.randint(2, 300), rng)
        assert verify(separate(x, y, mode)[0], x, y)
        assert verify(separate(y, x, mode)[0], y, x)


def test_exhaustive_small_all_modes():
    for n in range(1, 7):
        ws = words(n)
        for x in ws:
            for y in ws:
                if x == y:
                    continue
                sizes = {}
                for mode in MODES:
                    dfa, cert = separate(x, y, mode)
                    assert verify(dfa, x, y)
                    sizes[mode] = cert.states
                assert sizes["optimize"] <= sizes["paper"]


def rederive(cert, x, y):
    s = cert.spec
    A = list(positions(x, s.w))
    B = list(positions(y, s.w))
    return residue_profile(A, s.m)[s.i], residue_profile(B, s.m)[s.i]


def test_certificate_honesty_and_bounds():
    rng = random.Random(8)
    for kind in ("flip", "swap", "uniform"):
        for _ in range(150):
            n = rng.choice([16, 64, 200, 1000])
            x, y = PAIR_KINDS[kind](n, rng)
            paper_states = None
            for mode in MODES:
                dfa, cert = separate(x, y, mode)
                assert cert.mode == mode and cert.verified
                assert dfa.state_count == cert.states
                if mode == "paper":
                    paper_states = cert.states
                if cert.variant == "prefix":
                    assert x.bits.startswith(cert.prefix.bits)
                    assert not y.bits.startswith(cert.prefix.bits)
                    continue
                s = cert.spec
                assert rederive(cert, x, y) == (cert.accepted_count, cert.rejected_count)
                assert occurrence_counts(s, x) == cert.accepted_count
                assert cert.accepted_count % s.q == s.a != cert.rejected_count % s.q
                assert cert.states == 2 * s.m * s.q
                if mode == "paper":
                    assert len(s.w) <= s.m <= paper_p_cap(n)
                    assert s.q <= q_cap(n)
            assert cert.states <= paper_states  # optimize runs last


def test_certificate_text_round_trip():
    for x, y, mode in [("00010000", "00011000", "paper"), ("0", "1", "paper"),
                       ("0110101", "0110011", "optimize")]:
        _, cert = separate(x, y, mode)
        text = cert.to_text()
        assert "verified: true" in text
        assert SeparationCertificate.from_text(text) == cert


def test_invalid_inputs():
    with pytest.raises(ValueError):
        separate("01", "01")
    with pytest.raises(ValueError):
        separate("01", "011")
    with pytest.raises(ValueError):
        separate("01", "10", mode="fast")


def test_exhausted_cap_is_a_contradiction():
    # the only primes >= 4 and <= 4: none, so the guaranteed search is empty
    with pytest.raises(InternalContradiction):
        separate("00010000", "00011000", "paper", p_max=4)


def test_verify():
    d = build_prefix_acceptor("0")
    assert verify(d, "0", "1")
    assert not verify(d, "1", "0")


def test_state_bound():
    exact = 10 * mpmath.cbrt(2) * mpmath.log(2) ** 7  # 0.96854891556...
    assert 0 < exact < 1
    assert state_bound(2) == 1
    assert state_bound(10 ** 6) == math.ceil(10 * 100.0 * math.log(10 ** 6) ** 7)
    values = [state_bound(n) for n in range(2, 3000)]
    assert values == sorted(values)
    with pytest.raises(ValueError):
        state_bound(1)


def test_deterministic():
    x, y = PAIR_KINDS["swap"](500, random.Random(4))
    first = [separate(x, y, m)[0].to_text() for m in MODES]
    assert first == [separate(x, y, m)[0].to_text() for m in MODES]
