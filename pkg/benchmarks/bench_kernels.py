"""Compare the compiled polynomial kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--no-end-to-end]

Micro benchmarks call both kernel modules directly on the same inputs; the
end-to-end figures run a workload in a subprocess once per backend, with
REQHO_PURE_PYTHON selecting the fallback.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from reqho.exactalg import _pykernels as py

try:
    from reqho.exactalg import _ckernels as cy
except ImportError:
    cy = None

E2E = {
    "verify Figure 1 identities": (
        "from reqho.ladder import identity_catalog, trinity_for, verify_catalog\n"
        "from reqho.scheme import Scheme\n"
        "verify_catalog(identity_catalog(trinity_for(Scheme.alpha([2, 5, 6, 7]))), 40)"
    ),
    "two-level system, all kernels": (
        "from reqho.ladder import trinity_for\n"
        "from reqho.scheme import Scheme\n"
        "from reqho.spectral import kernel_classify\n"
        "tr = trinity_for(Scheme.alpha([2, 3]))\n"
        "[kernel_classify(op, tr) for _, op in tr.basic_ops()]"
    ),
}


def rand_poly(rng, deg, bits):
    return [rng.randint(-(1 << bits), 1 << bits) for _ in range(deg)] + [rng.randint(1, 1 << bits)]


def cases(rng):
    out = []
    for deg, bits in ((8, 20), (30, 30), (30, 200), (80, 40)):
        a, b = rand_poly(rng, deg, bits), rand_poly(rng, deg, bits)
        ab = py.mul(a, b)
        tag = f"deg {deg}, {bits}-bit"
        out.append((f"mul       {tag}", "mul", (a, b)))
        out.append((f"divexact  {tag}", "divexact", (ab, b)))
        out.append((f"pdivrem   {tag}", "pdivrem", (ab, py.add(b, [1]))))
    return out


def bench(fn, args, repeat):
    t = timeit.Timer(lambda: fn(*args))
    n, _ = t.autorange()
    return min(t.repeat(repeat, n)) / n


def end_to_end(code, pure):
    env = dict(os.environ, REQHO_PURE_PYTHON="1" if pure else "0")
    prog = "import time\nt=time.perf_counter()\n" + code + "\nprint(time.perf_counter()-t)"
    res = subprocess.run([sys.executable, "-c", prog], env=env, capture_output=True, text=True, check=True)
    return float(res.stdout.split()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels not built; only the fallback is available")
        return 1
    rng = random.Random(7)
    print(f"{'kernel':34s} {'python':>11s} {'compiled':>11s} {'speedup':>8s}")
    for label, name, a in cases(rng):
        assert getattr(py, name)(*a) == getattr(cy, name)(*a), label
        tp = bench(getattr(py, name), a, args.repeat)
        tc = bench(getattr(cy, name), a, args.repeat)
        print(f"{label:34s} {tp * 1e6:9.1f}us {tc * 1e6:9.1f}us {tp / tc:7.1f}x")
    if not args.no_end_to_end:
        print()
        for label, code in E2E.items():
            tp, tc = end_to_end(code, True), end_to_end(code, False)
            print(f"{label:34s} {tp:10.2f}s {tc:10.2f}s {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
