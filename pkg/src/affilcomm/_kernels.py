"""Hot numeric kernels: annealing sweeps and exhaustive partition search.

Compiled with numba when available. Set AFFILCOMM_NO_NUMBA=1 to force the
pure-Python/NumPy fallback; both paths run the identical function body, so
results are bit-identical either way (the fallback is just slower).
"""

from __future__ import annotations

import math
import os

import numpy as np

USING_NUMBA = os.environ.get("AFFILCOMM_NO_NUMBA", "").strip().lower() not in (
    "1",
    "true",
    "yes",
)

if USING_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USING_NUMBA = False

if not USING_NUMBA:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def anneal_stage(
    indptr,
    indices,
    weights,
    deg,
    m,
    temperature,
    uniforms,
    assign,
    comm_deg,
    comm_size,
    active,
    pos,
    free,
    n_active,
    free_top,
    cur_q,
    best_q,
    best_assign,
):
    """Run one temperature stage of single-vertex move proposals.

    Each step consumes three uniforms: vertex choice, target choice
    (an existing community or one extra slot meaning "new singleton"),
    and the Metropolis acceptance draw. State arrays are updated in
    place; returns (cur_q, best_q, n_active, free_top).
    """
    n = assign.shape[0]
    mf = float(m)
    steps = uniforms.shape[0] // 3
    for s in range(steps):
        u_v = uniforms[3 * s]
        u_t = uniforms[3 * s + 1]
        u_acc = uniforms[3 * s + 2]
        v = int(u_v * n)
        if v >= n:
            v = n - 1
        t_idx = int(u_t * (n_active + 1))
        if t_idx > n_active:
            t_idx = n_active
        a = assign[v]
        if t_idx == n_active:
            b = -1  # new singleton
            if comm_size[a] == 1:
                continue  # already alone; moving is a no-op
        else:
            b = active[t_idx]
            if b == a:
                continue
        w_va = 0
        w_vb = 0
        for e in range(indptr[v], indptr[v + 1]):
            cu = assign[indices[e]]
            if cu == a:
                w_va += weights[e]
            elif cu == b:
                w_vb += weights[e]
        kv = deg[v]
        d_a = comm_deg[a]
        d_b = comm_deg[b] if b >= 0 else 0
        delta = (w_vb - w_va) / mf + kv * (d_a - kv - d_b) / (2.0 * mf * mf)
        if delta < 0.0 and u_acc >= math.exp(delta / temperature):
            continue
        if b < 0:
            free_top -= 1
            b = free[free_top]
            comm_deg[b] = 0
            comm_size[b] = 0
            active[n_active] = b
            pos[b] = n_active
            n_active += 1
        assign[v] = b
        comm_deg[a] -= kv
        comm_size[a] -= 1
        comm_deg[b] += kv
        comm_size[b] += 1
        if comm_size[a] == 0:
            last = active[n_active - 1]
            active[pos[a]] = last
            pos[last] = pos[a]
            n_active -= 1
            free[free_top] = a
            free_top += 1
        cur_q += delta
        if cur_q > best_q:
            best_q = cur_q
            for i in range(n):
                best_assign[i] = assign[i]
    return cur_q, best_q, n_active, free_top


@njit(cache=True)
def brute_force_search(adj, deg, m):
    """Enumerate every set partition via restricted-growth strings.

    Lexicographic enumeration; ties on Q keep the first partition
    encountered. Returns (best_labels, best_q).
    """
    n = adj.shape[0]
    mf = float(m)
    rgs = np.zeros(n, dtype=np.int64)
    best = np.zeros(n, dtype=np.int64)
    lk = np.zeros(n, dtype=np.int64)
    dk = np.zeros(n, dtype=np.int64)
    best_q = -1.0e300
    while True:
        c = 0
        for i in range(n):
            if rgs[i] + 1 > c:
                c = rgs[i] + 1
        for k in range(c):
            lk[k] = 0
            dk[k] = 0
        for i in range(n):
            dk[rgs[i]] += deg[i]
            for j in range(i + 1, n):
                if rgs[i] == rgs[j]:
                    lk[rgs[i]] += adj[i, j]
        q = 0.0
        for k in range(c):
            q += lk[k] / mf - (dk[k] * dk[k]) / (4.0 * mf * mf)
        if q > best_q:
            best_q = q
            for i in range(n):
                best[i] = rgs[i]
        # lexicographic successor: rightmost position that can grow
        i = n - 1
        advanced = False
        while i > 0:
            mp = 0
            for t in range(i):
                if rgs[t] > mp:
                    mp = rgs[t]
            if rgs[i] <= mp:
                rgs[i] += 1
                for t in range(i + 1, n):
                    rgs[t] = 0
                advanced = True
                break
            i -= 1
        if not advanced:
            break
    return best, best_q
