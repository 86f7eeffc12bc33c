"""Compare the compiled and pure-Python inner loops.

    python3 benchmarks/bench_kernels.py [--repeat N] [--end-to-end]

Kernel timings call ``_reference`` and ``_speedups`` directly on the same
tables; ``--end-to-end`` also times the full verification suite under each
backend in a fresh interpreter.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from hhpairing import _reference
from hhpairing.graded_ring import tensor
from hhpairing.spaces import curve, product, projective_space

try:
    from hhpairing import _speedups
except ImportError:
    _speedups = None


def _cases():
    rng = random.Random(0)
    rings = {
        "P4": projective_space(4).ring,
        "C1xC1": product(curve(1), curve(1)).ring,
        "(C1xC1)xP2": tensor(product(curve(1), curve(1)).ring, projective_space(2).ring),
    }
    for label, ring in rings.items():
        a = [rng.randint(-10**6, 10**6) for _ in range(ring.dim)]
        b = [rng.randint(-10**6, 10**6) for _ in range(ring.dim)]
        yield f"monomial_product {label}", "monomial_product", (a, b, ring._idx, ring._num, ring.dim)
        yield f"weighted_gram {label}", "weighted_gram", (ring._idx, ring._num, a, ring.dim)
    e, c3 = rings["C1xC1"], curve(3).ring
    yield "tensor_tables C1xC1 (x) C3", "tensor_tables", (
        e._idx, e._num, e.dim, bytes(e.parity), c3._idx, c3._num, c3.dim, bytes(c3.parity),
    )


def bench_kernels(repeat: int) -> None:
    print(f"{'kernel':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, fn, args in _cases():
        py = min(timeit.repeat(lambda: getattr(_reference, fn)(*args), number=20, repeat=repeat)) / 20
        if _speedups is None:
            print(f"{label:34} {py * 1e3:10.3f} {'n/a':>10}")
            continue
        cy = min(timeit.repeat(lambda: getattr(_speedups, fn)(*args), number=20, repeat=repeat)) / 20
        print(f"{label:34} {py * 1e3:10.3f} {cy * 1e3:10.3f} {py / cy:7.1f}x")


def bench_suite() -> None:
    code = "import time, hhpairing.verify as v, hhpairing.backend as b; t=time.perf_counter(); v.run_suite(); print(b.BACKEND, time.perf_counter()-t)"
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("HHPAIRING_PURE_PYTHON", None)
        if pure:
            env["HHPAIRING_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
        backend, seconds = out.split()
        print(f"full suite ({backend}): {float(seconds):.2f} s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--end-to-end", action="store_true")
    args = parser.parse_args()
    bench_kernels(args.repeat)
    if args.end_to_end:
        bench_suite()


if __name__ == "__main__":
    main()
