"""Hot inner loops: restricted-growth enumeration and Dobinski-type series.

Both kernels are compiled with numba when available (see ``_jit``) and fall
back to the identical pure Python/numpy source otherwise.
"""
from __future__ import annotations

import math

import numpy as np

from ._jit import njit

# state layout for the resumable enumerator
_POS = 0
_STARTED = 1
_DONE = 2


@njit
def rgs_fill(clique, k, labels, prefix_blocks, state, out):
    """Write the next restricted-growth strings into ``out``; return the row count.

    ``clique[v]`` is the clique index of vertex ``v`` (vertices of one clique
    must be contiguous). ``k > 0`` keeps only strings with exactly ``k``
    blocks, ``k == 0`` keeps all. A string is admissible when no label repeats
    inside a clique. ``labels``, ``prefix_blocks`` and ``state`` carry the
    backtracking position between calls, so the caller can drain the
    enumeration in chunks. Rows come out in lexicographic order.
    """
    n = clique.shape[0]
    cap = out.shape[0]
    if state[_DONE] == 1 or n == 0:
        state[_DONE] = 1
        return 0
    if state[_STARTED] == 0:
        state[_STARTED] = 1
        state[_POS] = 0
        prefix_blocks[0] = 0
        for v in range(n):
            labels[v] = -1
    pos = state[_POS]
    count = 0
    while pos >= 0 and count < cap:
        used = prefix_blocks[pos]
        val = labels[pos] + 1
        found = False
        while val <= used:
            ok = True
            if val < used:
                u = pos - 1
                while u >= 0 and clique[u] == clique[pos]:
                    if labels[u] == val:
                        ok = False
                        break
                    u -= 1
            if ok and k > 0:
                blocks = used + 1 if val == used else used
                if blocks > k or blocks + (n - 1 - pos) < k:
                    ok = False
            if ok:
                found = True
                break
            val += 1
        if not found:
            labels[pos] = -1
            pos -= 1
            continue
        labels[pos] = val
        if pos == n - 1:
            for v in range(n):
                out[count, v] = labels[v]
            count += 1
        else:
            nxt = used + 1 if val == used else used
            prefix_blocks[pos + 1] = nxt
            pos += 1
            labels[pos] = -1
    state[_POS] = pos
    if pos < 0:
        state[_DONE] = 1
    return count


def iter_rgs_chunks(clique, k=0, chunk=4096):
    """Yield int8 arrays of restricted-growth strings, ``chunk`` rows at a time."""
    clique = np.ascontiguousarray(clique, dtype=np.int64)
    n = clique.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    prefix_blocks = np.zeros(n + 1, dtype=np.int64)
    state = np.zeros(3, dtype=np.int64)
    while state[_DONE] == 0:
        out = np.empty((chunk, n), dtype=np.int8)
        got = rgs_fill(clique, int(k), labels, prefix_blocks, state, out)
        if got:
            yield out[:got]


@njit
def series_sum(shift, s, n, t, tolerance, threshold, max_terms):
    """Truncated ``sum_k t**k/k! * prod_j (k + j*shift)_s`` for j in 0..n-1.

    Stops at the first index above ``threshold`` whose term falls below
    ``tolerance`` times the partial sum. Returns ``(sum, terms_used)``.
    """
    total = 0.0
    weight = 1.0  # t**k / k!
    k = 0
    while k < max_terms:
        poly = 1.0
        for j in range(n):
            base = k + j * shift
            for q in range(s):
                poly *= base - q
        term = poly * weight
        total += term
        if k > threshold and term < tolerance * total:
            return total, k + 1
        k += 1
        weight *= t / k
    return total, k


def dobinski_series(shift, s, n, t, tolerance, threshold, max_terms=100_000):
    total, used = series_sum(int(shift), int(s), int(n), float(t), float(tolerance),
                             int(threshold), int(max_terms))
    if used >= max_terms:
        raise ArithmeticError(f"series did not settle within {max_terms} terms")
    return math.exp(-t) * total
