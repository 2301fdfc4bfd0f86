#!/usr/bin/env python3
"""Time the exact-rank path on the largest matrices the suites touch."""

import random
import time

from verlinde.family import context, sample_line, verlinde_pencil, zero_count
from verlinde.linalg import ExactMatrix
from verlinde.pencils import splitting_type


def bench(label, fn):
    t0 = time.time()
    value = fn()
    print(f"{label:42s} {time.time() - t0:6.2f}s   -> {value}")


def main():
    rng = random.Random(0)
    dense = ExactMatrix.from_rows(
        [[rng.randint(-50, 50) for _ in range(112)] for _ in range(220)], cols=112)
    bench("dense 220x112 rank", dense.rank)

    for (n, d, k) in [(3, 3, 7), (3, 4, 8), (3, 4, 9)]:
        ctx = context(n, d, k)
        line = sample_line(ctx, "random", seed=1)
        bench(f"({n},{d},{k}) w={ctx.w} zero_count", lambda: zero_count(ctx, line))
        bench(f"({n},{d},{k}) w={ctx.w} splitting_type",
              lambda: len(splitting_type(verlinde_pencil(ctx, line))))


if __name__ == "__main__":
    main()
