"""Benchmark the compiled kernel against the pure-Python fallback.

Times the hot operations (dense multiplication, division, modular
exponentiation, gcd) and one composite workload (residue-symbol style
powmod chains), on the same inputs for both backends.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from qcff._kernels import CompiledFieldKernel, PureFieldKernel
from qcff.algebra import field_create


def _rand_poly(rng: random.Random, q: int, degree: int) -> list[int]:
    coeffs = [rng.randrange(q) for _ in range(degree)]
    coeffs.append(rng.randrange(1, q))
    return coeffs


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(repeat: int) -> None:
    ctx = field_create(3, 2, [1, 0, 1])  # F_9
    kernels = {"pure": PureFieldKernel(ctx.p, ctx.e, ctx.q, ctx.w, ctx.exp,
                                       ctx.log, ctx._neg, ctx._add_table)}
    if CompiledFieldKernel is not None:
        kernels["cython"] = CompiledFieldKernel(ctx.p, ctx.e, ctx.q, ctx.w,
                                                ctx.exp, ctx.log, ctx._neg,
                                                ctx._add_table)
    else:
        print("compiled kernel not built; timing the pure backend only")

    rng = random.Random(7)
    f64 = _rand_poly(rng, ctx.q, 64)
    g64 = _rand_poly(rng, ctx.q, 64)
    f128 = _rand_poly(rng, ctx.q, 128)
    g32 = _rand_poly(rng, ctx.q, 32)
    m8 = _rand_poly(rng, ctx.q, 8)
    base = _rand_poly(rng, ctx.q, 7)
    exponent = (ctx.q ** 8 - 1) // ctx.w

    workloads = {
        "pmul deg 64 x 64 (x200)":
            lambda k: [k.pmul(f64, g64) for _ in range(200)],
        "pdivrem deg 128 / 32 (x200)":
            lambda k: [k.pdivrem(f128, g32) for _ in range(200)],
        "pgcd deg 64, 64 (x100)":
            lambda k: [k.pgcd(f64, g64) for _ in range(100)],
        "ppowmod symbol-style (x100)":
            lambda k: [k.ppowmod(base, exponent, m8) for _ in range(100)],
    }

    timings: dict[str, dict[str, float]] = {}
    for wname, load in workloads.items():
        timings[wname] = {kname: _time(lambda k=kern: load(k), repeat)
                          for kname, kern in kernels.items()}

    width = max(len(w) for w in workloads)
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'cython':>10}  {'speedup':>8}")
    for wname, per in timings.items():
        pure_t = per["pure"]
        if "cython" in per:
            cy_t = per["cython"]
            print(f"{wname.ljust(width)}  {pure_t * 1e3:>8.2f}ms  "
                  f"{cy_t * 1e3:>8.2f}ms  {pure_t / cy_t:>7.1f}x")
        else:
            print(f"{wname.ljust(width)}  {pure_t * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="repetitions per workload; best time wins")
    args = parser.parse_args()
    bench(args.repeat)


if __name__ == "__main__":
    main()
