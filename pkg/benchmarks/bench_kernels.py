#!/usr/bin/env python3
"""Time the numba kernels against the pure-Python fallback.

The AFFILCOMM_NO_NUMBA flag is read at import time, so each measurement
runs in a child interpreter. Usage:

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys

WORKER = """
import json, time
import numpy as np
import affilcomm as ac
from affilcomm import _kernels
from affilcomm.graph import WeightedGraph

rng = np.random.default_rng(7)
g = WeightedGraph(60)
while g.m == 0:
    for _ in range(180):
        i, j = rng.integers(0, 60, 2)
        if i != j:
            g.add_edge(int(i), int(j))

# warm up (jit compilation, cache loads)
ac.anneal(g, ac.OptimizerConfig(seed=0, restarts=1,
          anneal=ac.AnnealParams(min_temp=0.2)))

t0 = time.perf_counter()
res = ac.anneal(g, ac.OptimizerConfig(seed=1, restarts=1))
anneal_s = time.perf_counter() - t0

gb = WeightedGraph(9)
rng2 = np.random.default_rng(8)
while gb.m == 0:
    for _ in range(14):
        i, j = rng2.integers(0, 9, 2)
        if i != j:
            gb.add_edge(int(i), int(j))
ac.brute_force(gb)  # warm up
t0 = time.perf_counter()
resb = ac.brute_force(gb)
brute_s = time.perf_counter() - t0

print(json.dumps({
    "numba": _kernels.USING_NUMBA,
    "anneal_s": anneal_s,
    "anneal_q": res.score.q,
    "brute_s": brute_s,
    "brute_q": resb.score.q,
}))
"""


def run(no_numba: bool) -> dict:
    env = dict(os.environ)
    env["AFFILCOMM_NO_NUMBA"] = "1" if no_numba else "0"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER], capture_output=True, text=True, env=env
    )
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        raise SystemExit(1)
    return json.loads(proc.stdout)


def main() -> None:
    fast = run(no_numba=False)
    slow = run(no_numba=True)
    assert fast["anneal_q"] == slow["anneal_q"], "kernel paths disagree"
    assert fast["brute_q"] == slow["brute_q"], "kernel paths disagree"
    print(f"{'kernel':<28}{'numba':>12}{'fallback':>12}{'speedup':>10}")
    for name, key in (("anneal (n=60, 1 restart)", "anneal_s"),
                      ("brute force (n=9)", "brute_s")):
        f, s = fast[key], slow[key]
        print(f"{name:<28}{f:>11.3f}s{s:>11.3f}s{s / f:>9.1f}x")
    print("results identical on both paths")


if __name__ == "__main__":
    main()
