"""Exact generalized Stirling and Bell numbers.

Three independent routes compute S_{m,m}(n, k):

* :func:`stirling_mm` - the clique-colouring recurrence,
* :func:`stirling_mm_blasiak` - the Blasiak et al. recurrence,
* :func:`gen_stirling_row` - coefficient extraction from the generalized
  Dobinski series by conversion to the falling-factorial basis.

All counts are Python ints. Out-of-range ``(n, k)`` yields 0.
"""
from __future__ import annotations

import math
import threading
from functools import lru_cache
from typing import Dict, List, Sequence

from .kernels import dobinski_series

__all__ = [
    "falling_factorial",
    "binomial",
    "stirling_mm",
    "stirling_mm_blasiak",
    "stirling_mm_row",
    "bell_mm",
    "lah",
    "product_polynomial",
    "to_falling_basis",
    "gen_stirling_row",
    "dobinski_bell",
    "gen_dobinski",
    "count_colourings_mixed",
    "mixed_row",
]


def falling_factorial(x: int, n: int) -> int:
    """x(x-1)...(x-n+1); 1 for n == 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result = 1
    for q in range(n):
        result *= x - q
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0:
        return 0
    return math.comb(n, k)


class _RowCache:
    """Per-family table of triangle rows, extended on demand under a lock."""

    def __init__(self, first_row, next_row):
        self._first_row = first_row
        self._next_row = next_row
        self._rows: Dict[int, List[Dict[int, int]]] = {}
        self._lock = threading.Lock()

    def row(self, m: int, n: int) -> Dict[int, int]:
        with self._lock:
            rows = self._rows.setdefault(m, [])
            if not rows:
                rows.append(self._first_row(m))
            while len(rows) < n:
                rows.append(self._next_row(m, rows[-1], len(rows) + 1))
            return rows[n - 1]

    def clear(self) -> None:
        with self._lock:
            self._rows.clear()


def _first_row(m: int) -> Dict[int, int]:
    return {m: 1}


def _colouring_step(m: int, prev: Dict[int, int], n: int) -> Dict[int, int]:
    # C_m(n,k) = sum_i C(m,i) (k-i)_{m-i} C_m(n-1,k-i)
    row = {}
    for k in range(m, n * m + 1):
        total = 0
        for i in range(m + 1):
            below = prev.get(k - i, 0)
            if below:
                total += binomial(m, i) * falling_factorial(k - i, m - i) * below
        if total:
            row[k] = total
    return row


def _blasiak_step(r: int, prev: Dict[int, int], n: int) -> Dict[int, int]:
    # S(n+1,k) = sum_p C(k+p-r, p) (r)_p S(n, k+p-r)
    row = {}
    for k in range(r, n * r + 1):
        total = 0
        for p in range(r + 1):
            below = prev.get(k + p - r, 0)
            if below:
                total += binomial(k + p - r, p) * falling_factorial(r, p) * below
        if total:
            row[k] = total
    return row


_COLOURING_ROWS = _RowCache(_first_row, _colouring_step)
_BLASIAK_ROWS = _RowCache(_first_row, _blasiak_step)


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")


def stirling_mm_row(m: int, n: int) -> Dict[int, int]:
    """Row ``{k: C_m(n, k)}`` of non-zero entries, k = m..n*m."""
    _check_positive(m=m, n=n)
    return dict(_COLOURING_ROWS.row(m, n))


def stirling_mm(m: int, n: int, k: int) -> int:
    """Number of k-colourings of n disjoint copies of K_m, i.e. S_{m,m}(n, k)."""
    _check_positive(m=m, n=n)
    if k < m or k > n * m:
        return 0
    return _COLOURING_ROWS.row(m, n).get(k, 0)


def stirling_mm_blasiak(m: int, n: int, k: int) -> int:
    """S_{m,m}(n, k) via the Blasiak et al. recurrence; same contract as stirling_mm."""
    _check_positive(m=m, n=n)
    if k < m or k > n * m:
        return 0
    return _BLASIAK_ROWS.row(m, n).get(k, 0)


def bell_mm(m: int, n: int) -> int:
    """All colourings of n disjoint copies of K_m: B_{m,m}(n)."""
    return sum(stirling_mm_row(m, n).values())


def lah(n: int, k: int) -> int:
    """Unsigned Lah number n!/k! * C(n-1, k-1)."""
    if n < 1 or k < 1 or k > n:
        return 0
    return math.factorial(n) // math.factorial(k) * binomial(n - 1, k - 1)


# -- coefficient extraction -------------------------------------------------

def _trim(coeffs: List[int]) -> List[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _times_linear(coeffs: List[int], c: int) -> List[int]:
    """Multiply a polynomial in x by (x + c)."""
    out = [0] * (len(coeffs) + 1)
    for d, a in enumerate(coeffs):
        out[d + 1] += a
        out[d] += c * a
    return out


def product_polynomial(r: int, s: int, n: int) -> List[int]:
    """Monomial coefficients of prod_{j=1..n} (x + (j-1)(r-s))_s, lowest degree first."""
    coeffs = [1]
    for j in range(1, n + 1):
        shift = (j - 1) * (r - s)
        for q in range(s):
            coeffs = _times_linear(coeffs, shift - q)
    return _trim(coeffs)


def to_falling_basis(coeffs: Sequence[int]) -> List[int]:
    """Rewrite sum_d c_d x^d as sum_q a_q (x)_q and return ``[a_0, a_1, ...]``.

    Repeated synthetic division by x, x-1, x-2, ...: the remainder of the
    q-th division is a_q.
    """
    quotient = _trim(list(coeffs))
    result = []
    root = 0
    while quotient:
        # Horner division by (x - root), highest degree first
        carry = 0
        nxt = [0] * (len(quotient) - 1)
        for d in range(len(quotient) - 1, -1, -1):
            carry = quotient[d] + carry * root
            if d:
                nxt[d - 1] = carry
        result.append(carry)
        quotient = nxt
        root += 1
    return result


def gen_stirling_row(r: int, s: int, n: int) -> Dict[int, int]:
    """``{k: S_{r,s}(n, k)}`` for k = s..n*s, read off the generalized Dobinski series."""
    _check_positive(r=r, s=s, n=n)
    if r < s:
        raise ValueError(f"need r >= s, got r={r}, s={s}")
    poly = product_polynomial(r, s, n)
    assert len(poly) - 1 == n * s
    basis = to_falling_basis(poly)
    basis += [0] * (n * s + 1 - len(basis))
    if any(basis[q] for q in range(s)):
        raise ArithmeticError("non-zero coefficient below degree s")
    row = {q: basis[q] for q in range(s, n * s + 1)}
    negative = [q for q, a in row.items() if a < 0]
    if negative:
        raise ArithmeticError(f"negative coefficient at k={negative[0]}")
    return row


def dobinski_bell(n: int, tolerance: float = 1e-12) -> float:
    """Bell number approximated by the truncated series (1/e) sum k^n / k!."""
    _check_positive(n=n)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    return dobinski_series(0, 1, n, 1.0, tolerance, n)


def gen_dobinski(r: int, s: int, n: int, t: float = 1.0, tolerance: float = 1e-12) -> float:
    """Truncated e^-t sum_k t^k/k! prod_j (k+(j-1)(r-s))_s, i.e. B_{r,s}(n, t)."""
    _check_positive(r=r, s=s, n=n)
    if r < s:
        raise ValueError(f"need r >= s, got r={r}, s={s}")
    if t <= 0 or tolerance <= 0:
        raise ValueError("t and tolerance must be positive")
    return dobinski_series(r - s, s, n, t, tolerance, n * s)


# -- mixed clique sizes -------------------------------------------------------

@lru_cache(maxsize=4096)
def _mixed_row(sizes: tuple) -> tuple:
    row = {sizes[0]: 1}
    for m in sizes[1:]:
        top = max(row) + m
        nxt = {}
        for k in range(m, top + 1):
            total = 0
            for i in range(m + 1):
                below = row.get(k - i, 0)
                if below:
                    total += binomial(m, i) * falling_factorial(k - i, m - i) * below
            if total:
                nxt[k] = total
        row = nxt
    return tuple(sorted(row.items()))


def mixed_row(sizes: Sequence[int]) -> Dict[int, int]:
    """``{k: count}`` of k-colourings of the disjoint union of cliques ``sizes``."""
    sizes = tuple(int(x) for x in sizes)
    if not sizes:
        raise ValueError("sizes must be non-empty")
    if min(sizes) < 1:
        raise ValueError("clique sizes must be positive")
    return dict(_mixed_row(sizes))


def count_colourings_mixed(sizes: Sequence[int], k: int) -> int:
    return mixed_row(sizes).get(k, 0)
