"""Benchmark the hot kernels: compiled extension vs pure-Python reference.

Times the three entry points that dominate real workloads — the closed-form
helix evaluator, the jet-route point evaluator, and the unit-jet projection —
on each available backend and prints per-call medians plus the speedup.

Usage:
    python3 benchmarks/bench_kernels.py [--number 20000] [--repeats 5]
"""

import argparse
import importlib
import math
import statistics
import time


def _helix_jets(amp, tilt, a, s):
    """Closed-form tangent jets of T = (amp·cosh(a·s), amp·sinh(a·s), tilt)."""
    c, sh = math.cosh(a * s), math.sinh(a * s)
    jets = []
    for order in range(4):
        k = a ** order
        if order % 2 == 0:
            jets.append((amp * k * c, amp * k * sh, tilt if order == 0 else 0.0))
        else:
            jets.append((amp * k * sh, amp * k * c, 0.0))
    return tuple(jets)


def _load_backends():
    backends = {}
    backends["pure"] = importlib.import_module("hhcurves._kernels.pure")
    try:
        backends["compiled"] = importlib.import_module("hhcurves._kernels._speed")
    except ImportError:
        pass
    return backends


def _time_per_call(fn, number, repeats):
    """Median seconds per call over `repeats` timed batches of `number` calls."""
    fn()  # warm up
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(number):
            fn()
        samples.append((time.perf_counter() - t0) / number)
    return statistics.median(samples)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--number", type=int, default=20000, help="calls per timed batch"
    )
    parser.add_argument(
        "--repeats", type=int, default=5, help="timed batches per case (median wins)"
    )
    args = parser.parse_args(argv)

    backends = _load_backends()
    if "compiled" not in backends:
        print("note: compiled extension not built; timing the pure backend only")

    # representative inputs: a mid-curvature spacelike helix away from s = 0
    amp, tilt = math.cosh(0.5), math.sinh(0.5)
    slope = tilt + math.sqrt(5.0 * tilt * tilt + 4.0)
    jets = _helix_jets(amp, tilt, slope, 0.7)
    cases = {
        "helix_eval": lambda mod: (
            lambda: mod.helix_eval(0, amp, tilt, slope, 0.0, 0.3, 0.7, 1e-9)
        ),
        "point_eval": lambda mod: (lambda: mod.point_eval(jets, 1e-9)),
        "project_unit_jets": lambda mod: (
            lambda: mod.project_unit_jets(jets, 1e-6)
        ),
    }

    results = {}
    for case_name, make in cases.items():
        for backend_name, mod in backends.items():
            per_call = _time_per_call(make(mod), args.number, args.repeats)
            results[(case_name, backend_name)] = per_call

    width = max(len(name) for name in cases)
    header = "%-*s  %12s  %12s  %8s" % (
        width, "kernel", "pure [us]", "compiled [us]", "speedup"
    )
    print(header)
    print("-" * len(header))
    for case_name in cases:
        pure_t = results[(case_name, "pure")]
        if ("compiled" in backends):
            comp_t = results[(case_name, "compiled")]
            print("%-*s  %12.3f  %12.3f  %7.1fx" % (
                width, case_name, pure_t * 1e6, comp_t * 1e6, pure_t / comp_t
            ))
        else:
            print("%-*s  %12.3f  %12s  %8s" % (
                width, case_name, pure_t * 1e6, "-", "-"
            ))


if __name__ == "__main__":
    main()
