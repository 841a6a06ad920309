"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 20]

Shapes match the desk-scale encoder (32x32 frames, 3->8->16 channels) and a
render batch of 64 frames with 12 rectangles each.
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from fecsim import _pykernels, kernels


def cases(rng: np.random.Generator):
    x1 = rng.standard_normal((64, 32, 32, 3)).astype(np.float32)
    w1 = rng.standard_normal((3, 3, 3, 8)).astype(np.float32)
    b1 = np.zeros(8, np.float32)
    x2 = rng.standard_normal((64, 16, 16, 8)).astype(np.float32)
    w2 = rng.standard_normal((3, 3, 8, 16)).astype(np.float32)
    b2 = np.zeros(16, np.float32)
    dy1 = _pykernels.conv2d_forward(x1, w1, b1, 2)
    dy2 = _pykernels.conv2d_forward(x2, w2, b2, 2)
    frames = np.zeros((64, 32, 32, 3), np.float32)
    # per frame: 12 rectangles (r0, c0, r1, c1) painted in order
    corner = rng.integers(0, 24, size=(64, 12, 2))
    rects = np.concatenate([corner, corner + rng.integers(2, 9, size=(64, 12, 2))], axis=2).astype(np.int32)
    colors = rng.uniform(size=(64, 12, 3)).astype(np.float32)
    return {
        "conv fwd 3->8": lambda m: m.conv2d_forward(x1, w1, b1, 2),
        "conv fwd 8->16": lambda m: m.conv2d_forward(x2, w2, b2, 2),
        "conv bwd 3->8": lambda m: m.conv2d_backward(x1, w1, dy1, 2),
        "conv bwd 8->16": lambda m: m.conv2d_backward(x2, w2, dy2, 2),
        "fill_rects 64x12": lambda m: m.fill_rects(frames, rects, colors),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    if kernels._ckernels is None:
        print("compiled kernels unavailable; build with `pip install --no-build-isolation -e .`")
        return 1
    backends = {"python": _pykernels, "cython": kernels._ckernels}
    print(f"{'kernel':<18}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in cases(np.random.default_rng(0)).items():
        ms = {}
        for label, mod in backends.items():
            fn(mod)
            ms[label] = 1e3 * min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        print(f"{name:<18}{ms['python']:>12.3f}{ms['cython']:>12.3f}{ms['python'] / ms['cython']:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
