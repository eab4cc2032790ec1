#!/usr/bin/env python3
"""Time the exact rational backend against the float backend.

The float lane exists only for this comparison; every acceptance check
runs on rationals.  Kernels timed: wedge chains, ambient star, interior
products, full metric recovery.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from g2spin7.exterior import contract, hodge, wedge
from g2spin7.floatcheck import verify_float
from g2spin7.frames import rand_form, rand_vector
from g2spin7.g2 import phi0


def bench(label, fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    dt = time.perf_counter() - t0
    print(f"{label:34s} {reps:5d} reps  {1000 * dt:8.1f} ms")
    return dt


def main() -> int:
    rng = random.Random(7)
    g = phi0()
    phi_q = g.phi
    phi_f = phi_q.to_float()
    pairs_q = [(rand_vector(rng, 7), rand_form(rng, 7, 3)) for _ in range(50)]
    pairs_f = [(v.to_float(), a.to_float()) for v, a in pairs_q]

    print("kernel timings (rational vs float)")
    dq = bench("wedge (i_u phi)^2 ^ phi, rational", lambda: [
        wedge(wedge(contract(v, phi_q), contract(v, phi_q)), phi_q)
        for v, _ in pairs_q
    ], 20)
    df = bench("wedge (i_u phi)^2 ^ phi, float", lambda: [
        wedge(wedge(contract(v, phi_f), contract(v, phi_f)), phi_f)
        for v, _ in pairs_f
    ], 20)
    print(f"  speedup x{dq / df:.2f}")

    dq = bench("hodge of random 3-forms, rational", lambda: [
        hodge(a) for _, a in pairs_q
    ], 200)
    df = bench("hodge of random 3-forms, float", lambda: [
        hodge(a) for _, a in pairs_f
    ], 200)
    print(f"  speedup x{dq / df:.2f}")

    print("\nfloat verification lane (advisory, tolerance 1e-9):")
    for r in verify_float(samples=100, seed=7):
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark}  {r.name}  ({r.elapsed_ms:.1f} ms)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
