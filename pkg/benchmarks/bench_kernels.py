"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times each kernel on fixed random inputs, then an end-to-end sweep (the
oracle check on a seeded corpus) in two subprocesses, one per backend.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from symtor._kernels import _py

try:
    from symtor._kernels import _ext
except ImportError:
    _ext = None


def random_complexes(count: int, vertices: int, seed: int = 1) -> list[list[int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        faces = {0}
        for _ in range(rng.randint(2, 8)):
            top = rng.randrange(1 << vertices)
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        out.append(sorted(faces))
    return out


def random_matrices(count: int, size: int, seed: int = 2) -> list[list[list[int]]]:
    rng = random.Random(seed)
    return [[[rng.choice((-1, 0, 0, 1)) for _ in range(size)] for _ in range(size)] for _ in range(count)]


def lower_inputs(count: int, n: int, seed: int = 3):
    rng = random.Random(seed)
    return [
        (
            [rng.randint(0, 5) for _ in range(n)],
            [[rng.randint(0, 4) for _ in range(n)] for _ in range(rng.randint(3, 30))],
        )
        for _ in range(count)
    ]


END_TO_END = """
import random, time
from symtor.core import new_sym_ideal
from symtor.equivariant import candidate_partitions, equivariant_tor
from symtor.oracle import orbit_ideal, orbit_profile
rng = random.Random(5)
start = time.perf_counter()
for k in range(40):
    n = 2 + k % 4
    gens = [sorted((rng.randint(0, 4) for _ in range(n)), reverse=True) for _ in range(rng.randint(1, 3))]
    ideal = new_sym_ideal(n, gens)
    tor = equivariant_tor(ideal)
    plain = orbit_ideal(ideal)
    for mu in candidate_partitions(ideal):
        orbit_profile(ideal, mu, plain=plain)
print(time.perf_counter() - start)
"""


def end_to_end(pure: bool) -> float:
    env = dict(os.environ, SYMTOR_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _ext is None:
        print("compiled extension not built; only the pure-Python numbers are meaningful")

    complexes = random_complexes(300, 7)
    matrices = random_matrices(40, 24)
    lowers = lower_inputs(2000, 6)

    cases = {
        "reduced_homology char 0": lambda m: [m.reduced_homology(c, 0) for c in complexes],
        "reduced_homology char 2": lambda m: [m.reduced_homology(c, 2) for c in complexes],
        "rank_integer 24x24": lambda m: [m.rank_integer(a) for a in matrices],
        "rank_mod_p 24x24": lambda m: [m.rank_mod_p(a, 10007) for a in matrices],
        "lower_complex_masks n=6": lambda m: [m.lower_complex_masks(a, g) for a, g in lowers],
    }

    print(f"{'kernel':28} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
    for name, fn in cases.items():
        t_py = min(timeit.repeat(lambda: fn(_py), number=1, repeat=args.repeat))
        if _ext is None:
            print(f"{name:28} {t_py:11.4f} {'-':>13} {'-':>8}")
            continue
        assert fn(_py) == fn(_ext), name
        t_ext = min(timeit.repeat(lambda: fn(_ext), number=1, repeat=args.repeat))
        print(f"{name:28} {t_py:11.4f} {t_ext:13.4f} {t_py / t_ext:7.1f}x")

    t_py = end_to_end(pure=True)
    t_ext = end_to_end(pure=False)
    print(f"{'end-to-end oracle sweep':28} {t_py:11.4f} {t_ext:13.4f} {t_py / t_ext:7.1f}x")


if __name__ == "__main__":
    main()
