"""Time each kernel under the pure-Python and compiled backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n 65536]

Prints one row per kernel with the best-of-``repeat`` time for each backend
and the speedup. Inputs are drawn from a fixed seed.
"""

import argparse
import random
import sys
import timeit
from array import array

from sepwords.kernels import _pykernels, compiled
from sepwords.automata import CountingMachineSpec, build_counting_machine
from sepwords.littlewood import order_family


def workloads(n, rng):
    text = bytes(rng.getrandbits(1) for _ in range(n))
    pat = text[n // 2:n // 2 + 12]
    periodic = b"\x00\x01" * (n // 2)
    A = sorted(rng.sample(range(1, 10 * n), n // 8))
    B = sorted(set(A) ^ {A[-1]})
    dfa = build_counting_machine(CountingMachineSpec(13, 5, 7, 3, "0110"))
    flat = array("i", [t for row in dfa.table for t in row])
    xs = [1 - j / 2000 for j in range(1, 201)]
    sparse_exps = list(range(0, 40 * n, 40))[:2000]
    sparse_coefs = [rng.choice((-1.0, 1.0)) for _ in sparse_exps]
    dense = [float(c) for c in order_family(12).coefficients]
    hard_x = b"\x00\x01\x01\x00\x01\x00\x00\x01\x01\x00"
    hard_y = b"\x00\x01\x01\x00\x01\x00\x00\x01\x00\x01"
    return {
        "border_array": lambda k: k.border_array(periodic),
        "find_occurrences": lambda k: k.find_occurrences(text, pat),
        "run_dfa": lambda k: k.run_dfa(flat, dfa.start, text),
        "residue_counts": lambda k: k.residue_counts(A, 9973),
        "first_residue_difference": lambda k: k.first_residue_difference(A, B, 9973),
        "separating_dfa_search": lambda k: k.separating_dfa_search(hard_x, hard_y, 4),
        "sparse_abs_eval": lambda k: k.sparse_abs_eval(sparse_exps, sparse_coefs, xs),
        "horner_abs_eval": lambda k: k.horner_abs_eval(dense, xs),
    }


def best_time(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--n", type=int, default=65536)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    fast = compiled()
    if fast is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`",
              file=sys.stderr)
        return 1
    jobs = workloads(args.n, random.Random(args.seed))
    print(f"{'kernel':<26}{'python (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for name, job in jobs.items():
        if job(_pykernels) != job(fast):
            raise SystemExit(f"{name}: backends disagree")
        slow_t = best_time(lambda: job(_pykernels), args.repeat)
        fast_t = best_time(lambda: job(fast), args.repeat)
        print(f"{name:<26}{slow_t:>14.3e}{fast_t:>14.3e}{slow_t / fast_t:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
