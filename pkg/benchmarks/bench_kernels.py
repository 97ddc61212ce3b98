"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from phonovec import kernels
from phonovec.analysis import pca


def cases(rng):
    rows_45 = rng.choice(np.array([-1, 0, 1], dtype=np.int8), size=(45, 39))
    rows_45[:, 0] = 1  # no zero rows
    rows_300 = rng.choice(np.array([-1, 0, 1], dtype=np.int8), size=(300, 39))
    rows_300[:, 0] = 1
    cov = np.cov(rows_300.astype(float), rowvar=False)
    return [
        ("cosine 45x39", lambda b: kernels.cosine_matrix(rows_45, b)),
        ("cosine 300x39", lambda b: kernels.cosine_matrix(rows_300, b)),
        ("hamming 300x39", lambda b: kernels.hamming_matrix(rows_300, b)),
        ("jacobi 39x39", lambda b: kernels.jacobi_eigh(cov, backend=b)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, fn in cases(rng):
        times = {}
        for b in backends:
            fn(b)
            times[b] = min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat))
        line = f"{name:<16}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            line += f"   {times['python'] / times['cython']:>6.0f}x"
        print(line)
    # end-to-end PCA on the 45-sound shape with each backend active
    x = rng.choice(np.array([-1, 0, 1]), size=(45, 39)).astype(float)
    before = kernels.get_backend()
    for b in backends:
        kernels.set_backend(b)
        t = min(timeit.repeat(lambda: pca(x, 2), number=1, repeat=args.repeat))
        print(f"{'pca 45x39 k=2':<16}{b:>12}{t * 1e3:>10.2f}ms")
    kernels.set_backend(before)


if __name__ == "__main__":
    main()
