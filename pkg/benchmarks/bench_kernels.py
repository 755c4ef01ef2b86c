"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Part 1 times each kernel on random integer vectors of a few sizes.  Part 2
times an end-to-end workload (Bonferroni p-function checks over all lists of
four exact p-functions on a 4-outcome trial) in a subprocess per backend,
selected with PFUNC_PURE_PYTHON.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from pfunc import _pykernels

try:
    from pfunc import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = r"""
import itertools, time
from pfunc import TestOrder, bonferroni, induce_statistic_from_order, is_p_function, validate_trial
from pfunc.kernels import BACKEND
t = validate_trial({"a": "1/8", "b": "1/8", "c": "1/4", "d": "1/2"})
ids = t.ids
orders = []
for k in range(1, 5):
    for ranks in itertools.product(range(k), repeat=4):
        if len(set(ranks)) == k:
            orders.append(TestOrder([{x for x, r in zip(ids, ranks) if r == j} for j in range(k)]))
pool = [induce_statistic_from_order(t, o) for o in orders]
combos = list(itertools.islice(itertools.combinations_with_replacement(pool, 4), 300000))
start = time.perf_counter()
for c in combos:
    is_p_function(t, bonferroni(t, c))
print(BACKEND, len(combos), time.perf_counter() - start)
"""


def kernel_cases(n, rng):
    vals = [rng.randint(0, 4 * n) for _ in range(n)]
    masses = [rng.randint(1, 100) for _ in range(n)]
    mden = sum(masses)
    return {
        "level_groups": (vals,),
        "cumulative_masses": (vals, masses),
        "is_canonic": (vals, 4 * n, masses, mden),
        "classify": (vals, 4 * n, masses, mden),
        "tail_mass": (vals, masses, 2 * n),
        "scaled_min": ([vals, masses, vals[::-1]], 3),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=2000)
    args = parser.parse_args()
    rng = random.Random(0)

    print(f"{'kernel':<18}{'n':>6}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for n in (4, 64, 4096):
        cases = kernel_cases(n, rng)
        reps = max(1, args.repeat // max(1, n // 16))
        for name, call_args in cases.items():
            py = timeit.timeit(lambda: getattr(_pykernels, name)(*call_args), number=reps) / reps * 1e6
            if _ckernels is None:
                print(f"{name:<18}{n:>6}{py:>12.2f}{'n/a':>12}")
                continue
            cy = timeit.timeit(lambda: getattr(_ckernels, name)(*call_args), number=reps) / reps * 1e6
            print(f"{name:<18}{n:>6}{py:>12.2f}{cy:>12.2f}{py / cy:>8.1f}x")

    print("\nend to end: is_p_function(bonferroni(...)) over 300000 lists")
    for flag in ("1", "0"):
        env = dict(os.environ, PFUNC_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        backend, count, seconds = out[0], int(out[1]), float(out[2])
        print(f"  {backend:<8}{seconds:8.2f} s  ({seconds / count * 1e6:.2f} us per check)")


if __name__ == "__main__":
    main()
