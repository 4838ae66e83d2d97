"""Time the enumeration kernels on both backends.

The default mode runs this script twice as a subprocess -- once with the
compiled kernels and once with ``HHSYM_DISABLE_JIT=1`` -- and prints a
side-by-side table.  ``--mode current`` times the backend of the calling
environment and emits JSON, which is what the subprocesses use.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def workloads():
    from hhsym import kernels

    spec_ks = np.array([2, 1], dtype=np.int64)
    spec_ells = np.array([1, 2], dtype=np.int64)
    return (
        ("partition-enumeration n=50", lambda: kernels.count_partitions(50)),
        ("part-count sum n=45 k=2", lambda: kernels.part_count_sum(45, 2)),
        ("cohomology sweep n=35 mod 2", lambda: kernels.hochschild_sum(35, 2, 2)),
        (
            "indicator tuples n=28 r=2",
            lambda: kernels.theta_tuple_sum(28, spec_ks, spec_ells),
        ),
        ("signed graphs r=6", lambda: kernels.signed_component_sum(6)),
    )


def run_current():
    from hhsym.accel import JIT_ENABLED

    results = []
    for name, work in workloads():
        work()  # warm up: compilation (if any) and caches
        start = time.perf_counter()
        value = work()
        elapsed = time.perf_counter() - start
        results.append({"name": name, "seconds": elapsed, "value": int(value)})
    print(
        json.dumps(
            {"backend": "compiled" if JIT_ENABLED else "interpreted", "results": results}
        )
    )


def run_comparison():
    reports = {}
    for disable_flag in ("0", "1"):
        env = dict(os.environ, HHSYM_DISABLE_JIT=disable_flag)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--mode", "current"],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        report = json.loads(proc.stdout)
        reports[report["backend"]] = report["results"]

    compiled = {entry["name"]: entry for entry in reports["compiled"]}
    interpreted = {entry["name"]: entry for entry in reports["interpreted"]}
    width = max(len(name) for name in compiled)
    print("%-*s  %12s  %14s  %8s" % (width, "workload", "compiled [s]", "interpreted [s]", "speedup"))
    for name, fast in compiled.items():
        slow = interpreted[name]
        if fast["value"] != slow["value"]:
            raise SystemExit(
                "backends disagree on %s: %d vs %d"
                % (name, fast["value"], slow["value"])
            )
        ratio = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(
            "%-*s  %12.4f  %14.4f  %7.1fx"
            % (width, name, fast["seconds"], slow["seconds"], ratio)
        )


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--mode",
        choices=("auto", "current"),
        default="auto",
        help="auto compares both backends; current times this environment",
    )
    args = parser.parse_args(argv)
    if args.mode == "current":
        run_current()
    else:
        run_comparison()


if __name__ == "__main__":
    main()
