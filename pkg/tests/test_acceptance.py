"""Acceptance suite: one test per criterion, summarized at the end of the run."""

import io
import itertools
import math
import random
import statistics

import pytest

from conftest import naive_positions, words
from sepwords.arithmetic import (find_moment_witness, find_separating_prime, moment,
                                 moment_to_prime, primes_up_to, residue_profile)
from sepwords.automata import CountingMachineSpec, build_counting_machine
from sepwords.cli import GROWTH_HEADER, fitted_exponent, main
from sepwords.littlewood import (check_order_bound, eval_max_on_interval, from_set_pair,
                                 grid_points)
from sepwords.oracle import adversarial_pair, check_pair, exact_table
from sepwords.sampling import random_string, separated_pair, uniform_pair
from sepwords.separator import baseline_p_cap, paper_p_cap, q_cap, separate
from sepwords.words import BinaryString, icbrt_ceil

SEED = 20240601


def note(request, text):
    request.node.user_properties.append(("note", text))
    print(text)


@pytest.mark.criterion(1, "exhaustive separation, n <= 10, paper mode")
def test_exhaustive_separation(request):
    checked = 0
    failures = []
    for n in range(1, 11):
        ws = [BinaryString(bytes(int(c) for c in w)) for w in words(n)]
        for x, y in itertools.permutations(ws, 2):
            dfa, cert = separate(x, y, "paper")
            if not (cert.verified and dfa.accepts(x) and not dfa.accepts(y)):
                failures.append((str(x), str(y)))
            checked += 1
    note(request, f"{checked} ordered pairs, {len(failures)} failures")
    assert not failures, failures[:5]


@pytest.mark.criterion(2, "random separation within caps")
def test_random_separation(request):
    rng = random.Random(SEED)
    counting = 0
    for n in (16, 64, 256, 1024, 4096, 65536):
        p_cap, qc = paper_p_cap(n), q_cap(n)
        for _ in range(1000):
            x, y = uniform_pair(n, rng)
            # explicit caps: exceeding either raises instead of returning
            dfa, cert = separate(x, y, "paper", p_max=p_cap, q_max=qc)
            assert cert.verified and dfa.accepts(x) and not dfa.accepts(y)
            if cert.spec is not None:
                counting += 1
                assert cert.spec.m <= p_cap and cert.spec.q <= qc
    note(request, f"6000 pairs verified, {counting} needed a counting machine")


@pytest.mark.criterion(3, "counting machine matches direct counting")
def test_counting_machine_equivalence(request):
    def direct(spec, x):
        hits = [j for j in naive_positions(x, str(spec.w)) if j % spec.m == spec.i]
        return len(hits) % spec.q == spec.a

    rng = random.Random(SEED)
    mismatches = 0
    for _ in range(10_000):
        m = rng.randint(1, 8)
        q = rng.choice([2, 3, 5])
        w = str(random_string(rng.randint(1, m), rng))
        spec = CountingMachineSpec(m, rng.randrange(m), q, rng.randrange(q), w)
        x = str(random_string(rng.randint(0, 64), rng))
        mismatches += build_counting_machine(spec).accepts(x) != direct(spec, x)
    fixed = [(1, 0, 2, 0, "1"), (3, 2, 3, 1, "101"), (5, 0, 2, 1, "0010"),
             (4, 3, 5, 0, "11"), (8, 5, 3, 2, "0110")]
    exhaustive = 0
    for args in fixed:
        spec = CountingMachineSpec(*args)
        d = build_counting_machine(spec)
        for n in range(13):
            for x in words(n):
                mismatches += d.accepts(x) != direct(spec, x)
                exhaustive += 1
    note(request, f"10000 random + {exhaustive} exhaustive checks, {mismatches} mismatches")
    assert mismatches == 0


@pytest.mark.criterion(4, "exact oracle never beaten by the pipeline, f(1..6)")
def test_oracle_dominance(request):
    f = []
    for n in range(1, 7):
        table = exact_table(n)
        for (x, y), size in table.items():
            assert size <= separate(x, y, "paper")[1].states
            assert size <= separate(y, x, "paper")[1].states
        f.append(max(table.values()))
    monotone = all(a <= b for a, b in zip(f, f[1:]))
    note(request, f"f(1..6) = {f}, nondecreasing: {monotone}")
    assert f[0] == 2


@pytest.mark.criterion(5, "moment witness, prime and residue profile agree")
def test_moment_residue_consistency(request):
    rng = random.Random(SEED)
    n = 1000
    t = icbrt_ceil(n)
    exponents, primes = [], []
    for _ in range(100):
        A, B = separated_pair(n, t, rng)
        w = find_moment_witness(A, B, 2000)
        assert w is not None and w.exponent <= 2000
        found = moment_to_prime(A, B, w.exponent, 2, 10 ** 6)
        assert found is not None
        p, i = found
        assert residue_profile(A, p)[i] != residue_profile(B, p)[i]
        exponents.append(w.exponent)
        primes.append(p)
    small = primes_up_to(97)
    for _ in range(1000):
        A = rng.sample(range(1, 2000), rng.randint(0, 40))
        p = rng.choice(small)
        m = rng.randint(0, 50)
        counts = residue_profile(A, p).counts
        assert moment(A, m) % p == sum(c * pow(i, m, p) for i, c in enumerate(counts)) % p
    note(request, f"max exponent {max(exponents)}, max prime {max(primes)}; identity 1000/1000")


@pytest.mark.criterion(6, "adversarial pair blind to primes <= 11")
def test_adversarial_generator(request):
    pair = adversarial_pair(10 ** 4, 21, 11, 10 ** 6, seed=SEED)
    assert pair is not None
    assert check_pair(pair)
    assert pair.A.is_separated(21) and pair.B.is_separated(21)
    for p in primes_up_to(11):
        assert residue_profile(pair.A, p) == residue_profile(pair.B, p)
    assert find_separating_prime(pair.A, pair.B, 2, 11) is None
    note(request, f"A={pair.A.format()} B={pair.B.format()}")


@pytest.mark.criterion(7, "order bound for k = 1..15")
def test_order_bound(request):
    lhs1, rhs1, _ = check_order_bound(1)
    assert math.isclose(lhs1, 1 / 9, rel_tol=1e-9)
    assert math.isclose(rhs1, 2 * math.e / 9, rel_tol=1e-9)
    ratios = []
    for k in range(1, 16):
        lhs, rhs, ok = check_order_bound(k)
        assert ok, (k, lhs, rhs)
        ratios.append(lhs / rhs)
    note(request, f"max lhs/rhs {max(ratios):.3g}")


@pytest.mark.criterion(8, "baseline prime <= 10 sqrt(n ln n)")
def test_baseline_bound(request):
    rng = random.Random(SEED)
    worst = 0.0
    for n in (256, 4096):
        scale = math.sqrt(n * math.log(n))
        assert baseline_p_cap(n) <= 10 * scale
        for _ in range(100):
            x, y = uniform_pair(n, rng)
            _, cert = separate(x, y, "baseline")
            assert cert.spec.m <= 10 * scale
            worst = max(worst, cert.spec.m / scale)
    note(request, f"max p/sqrt(n ln n) = {worst:.4f}")


@pytest.mark.criterion(9, "growth dashboard, n = 2^6..2^16")
def test_growth_dashboard(request):
    lengths = ",".join(str(2 ** e) for e in range(6, 17))
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        assert main(["growth", "--lengths", lengths, "--pairs", "10", "--seed", str(SEED)],
                    out=buf) == 0
        outputs.append(buf.getvalue())
    assert outputs[0] == outputs[1]
    lines = outputs[0].splitlines()
    assert lines[0] == ",".join(GROWTH_HEADER)
    rows = [r.split(",") for r in lines[1:]]
    assert len(rows) == 11 * 10
    assert all(r[-1] == "true" for r in rows)
    slope = fitted_exponent([[int(r[0]), None, None, int(r[3])] for r in rows])
    note(request, f"fitted exponent {slope:.3f}")


@pytest.mark.criterion(10, "sparse polynomial maxima positive and grid-monotone")
def test_littlewood_sanity(request):
    rng = random.Random(SEED)
    n = 10 ** 4
    t = icbrt_ceil(n)
    lo, hi = 1 - n ** (-2 / 3), 1.0
    grids = (501, 1001, 2001)
    # each grid is a subset of the next
    coarse, fine = grid_points(lo, hi, grids[0]), grid_points(lo, hi, grids[1])
    assert set(coarse) <= set(fine)
    values = []
    for _ in range(50):
        f = from_set_pair(*separated_pair(n, t, rng), n)
        maxima = [eval_max_on_interval(f, lo, hi, g) for g in grids]
        assert maxima[0] > 0
        # every value is attained, so refinement may only lose rounding noise
        for a, b in zip(maxima, maxima[1:]):
            assert b >= a * (1 - 1e-12)
        values.append(maxima[-1])
    note(request, f"min {min(values):.4g}, median {statistics.median(values):.4g}, "
                  f"max {max(values):.4g}")
