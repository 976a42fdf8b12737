"""Compare the compiled and pure-Python kernels on the workloads that dominate
the test suite: word convolution, permutation words and integer elimination.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from frl import _pykernels
from frl.groupring import GroupRingElement
from frl.words import ball, random_word

try:
    from frl import _ckernels
except ImportError:
    _ckernels = None


def _workloads(rng):
    xs = [(random_word(rng, 4).letters, rng.randint(-5, 5) or 1) for _ in range(60)]
    ys = [(random_word(rng, 4).letters, rng.randint(-5, 5) or 1) for _ in range(60)]
    degree = 8
    images = [tuple(rng.sample(range(1, degree + 1), degree)) for _ in range(2)]
    words = [random_word(rng, 12).letters for _ in range(500)]

    # 1 - g acting on ball(3) by right multiplication
    u = GroupRingElement([(ball(0)[0], 1), (ball(1)[1], -1)])
    domain = ball(3)
    rows: dict = {}
    entries = []
    for j, d in enumerate(domain):
        for g, c in u.terms:
            entries.append((rows.setdefault(g * d, len(rows)), j, c))
    matrix = [[0] * len(domain) for _ in rows]
    for i, j, c in entries:
        matrix[i][j] += c
    return {
        "convolve_words 60x60": lambda k: k.convolve_words(xs, ys),
        "perm_word 500x len12": lambda k: [
            k.perm_word(images, [k.perm_inv(p) for p in images], w, degree) for w in words],
        "gauss_jordan (1-a) on ball(3)": lambda k: k.gauss_jordan(matrix, len(domain)),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python backend only")
    work = _workloads(random.Random(0))
    print(f"{'workload':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, fn in work.items():
        times = [min(timeit.repeat(lambda: fn(mod), number=3, repeat=args.repeat)) / 3
                 for _, mod in backends]
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
