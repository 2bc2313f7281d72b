"""Time the compiled kernels against the numpy fallback on training-sized inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import sys
import timeit

import numpy as np

from snnpriv import _pykernels, kernels
from snnpriv.mia import rbf_kernel


def cases(rng):
    spikes = (rng.random((1600, 32, 12, 12)) < 0.2).astype(np.float32)
    cols = _pykernels.im2col(spikes, 5, 5, 1, 0)
    fmap = rng.normal(size=(64, 32, 24, 24)).astype(np.float32)
    _, idx = _pykernels.maxpool_forward(fmap, 2, 2)
    gpool = rng.normal(size=(64, 32, 12, 12)).astype(np.float32)
    cur = rng.normal(0.3, 0.6, size=(25, 64 * 1000)).astype(np.float32)
    spk, mem, rng_mask = _pykernels.lif_forward(cur, 25, 0.95, 1.0, False, None)
    gmem = rng.normal(size=mem.shape).astype(np.float32)
    x = rng.normal(size=(400, 10))
    y = np.where(rng.random(400) < 0.5, 1.0, -1.0)
    x[y > 0] += 0.3
    K = rbf_kernel(x, x, 0.1)
    return {
        "im2col (1600x32x12x12, k5)": lambda m: m.im2col(spikes, 5, 5, 1, 0),
        "col2im (same)": lambda m: m.col2im(cols, spikes.shape, 5, 5, 1, 0),
        "maxpool fwd (64x32x24x24)": lambda m: m.maxpool_forward(fmap, 2, 2),
        "maxpool bwd": lambda m: m.maxpool_backward(gpool, idx, fmap.shape, 2, 2),
        "lif fwd (T25 x 64 x 1000)": lambda m: m.lif_forward(cur, 25, 0.95, 1.0, False, None),
        "lif bwd": lambda m: m.lif_backward(None, gmem, spk, mem, rng_mask, False, 0.95, 1.0,
                                            False, 0, 25.0, 2.0, 1.0, 1.0),
        "smo (n=400)": lambda m: m.smo_solve(K, y, 1.0, 1e-3, 80_000),
    }


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    impls = kernels.implementations()
    if "cython" not in impls:
        print("compiled kernels are not built; only the fallback can be timed", file=sys.stderr)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<30}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in cases(rng).items():
        times = {}
        for key, mod in impls.items():
            times[key] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)) * 1e3
        py, cy = times["python"], times.get("cython")
        cy_txt = f"{cy:12.2f}{py / cy:9.1f}x" if cy else f"{'-':>12}{'-':>10}"
        print(f"{name:<30}{py:12.2f}{cy_txt}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
