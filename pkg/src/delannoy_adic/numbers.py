"""Exact path counts on the Delannoy and Nicomachus lattices.

All values are Python integers, so nothing overflows or rounds.  The
Delannoy numbers satisfy

    D(n, 0) = D(0, n) = 1,
    D(n, k) = D(n, k-1) + D(n-1, k-1) + D(n-1, k),

and count monotone lattice paths with steps (1,0), (0,1) and (1,1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .errors import DomainError

__all__ = [
    "GridTable",
    "binom",
    "delannoy",
    "delannoy_table",
    "delannoy_closed_forms",
    "gf_truncation",
    "nicomachus_count",
    "nicomachus_table",
]


@dataclass(frozen=True)
class GridTable:
    """A table of exact counts indexed by ``(n, k)``.

    Rows may be ragged: ``gf_truncation`` only fills the triangle
    ``n + k <= N``.
    """

    entries: Tuple[Tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return max((len(r) for r in self.entries), default=0)

    def __getitem__(self, index: Tuple[int, int]) -> int:
        n, k = index
        return self.entries[n][k]

    def __contains__(self, index) -> bool:
        n, k = index
        return 0 <= n < len(self.entries) and 0 <= k < len(self.entries[n])

    def items(self):
        for n, row in enumerate(self.entries):
            for k, value in enumerate(row):
                yield (n, k), value

    def as_lists(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


def _check_nonneg(**kwargs) -> None:
    for name, value in kwargs.items():
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when ``k`` is outside ``[0, n]``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def delannoy_table(nmax: int, kmax: int | None = None) -> GridTable:
    """Dense table of ``D(n, k)`` for ``0 <= n <= nmax``, ``0 <= k <= kmax``."""
    if kmax is None:
        kmax = nmax
    _check_nonneg(nmax=nmax, kmax=kmax)
    rows: List[Tuple[int, ...]] = []
    prev = [1] * (kmax + 1)
    rows.append(tuple(prev))
    for _ in range(1, nmax + 1):
        cur = [1] * (kmax + 1)
        for k in range(1, kmax + 1):
            cur[k] = cur[k - 1] + prev[k - 1] + prev[k]
        rows.append(tuple(cur))
        prev = cur
    return GridTable(tuple(rows))


@lru_cache(maxsize=8192)
def delannoy(n: int, k: int) -> int:
    """``D(n, k)`` by the three-term recurrence (rolling rows, O(nk))."""
    _check_nonneg(n=n, k=k)
    if n < k:
        n, k = k, n
    row = [1] * (k + 1)
    for _ in range(n):
        diag = row[0]
        for j in range(1, k + 1):
            above = row[j]
            row[j] = row[j] + row[j - 1] + diag
            diag = above
    return row[k]


def delannoy_closed_forms(n: int, k: int) -> List[int]:
    """The six binomial sums for ``D(n, k)``; requires ``n >= k``.

    Each sum is evaluated independently of the recurrence, so all six
    agreeing with ``delannoy(n, k)`` is a genuine cross-check.
    """
    _check_nonneg(n=n, k=k)
    if n < k:
        raise DomainError(f"closed forms need n >= k, got n={n}, k={k}")
    ds = range(k + 1)
    return [
        sum(binom(k, d) * binom(n + k - d, k) for d in ds),
        sum(2**d * binom(n, d) * binom(k, d) for d in ds),
        sum(binom(k, d) * binom(n + d, k) for d in ds),
        sum(binom(k, k - d) * binom(n + d, k) for d in ds),
        sum(binom(n + k - d, k - d) * binom(n, d) for d in ds),
        sum(binom(n + d, d) * binom(n, k - d) for d in ds),
    ]


# bivariate polynomials as {(i, j): coefficient} truncated at total degree N
_Series = Dict[Tuple[int, int], int]


def _series_mul(a: _Series, b: _Series, order: int) -> _Series:
    out: _Series = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            if i1 + i2 + j1 + j2 > order:
                continue
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def gf_truncation(order: int) -> GridTable:
    """Coefficients of ``1 / (1 - (x + y + xy))`` up to total degree ``order``.

    Expands the geometric series ``sum_m u**m`` with ``u = x + y + xy``;
    since ``u**m`` has no terms below degree ``m`` the sum stops at
    ``m = order``.  Row ``n`` of the result has ``order - n + 1`` entries.
    """
    _check_nonneg(order=order)
    u: _Series = {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    total: _Series = {(0, 0): 1}
    power: _Series = {(0, 0): 1}
    for _ in range(order):
        power = _series_mul(power, u, order)
        for key, c in power.items():
            total[key] = total.get(key, 0) + c
    rows = tuple(
        tuple(total.get((n, k), 0) for k in range(order - n + 1))
        for n in range(order + 1)
    )
    return GridTable(rows)


def nicomachus_table(nmax: int, kmax: int | None = None) -> GridTable:
    """Path counts in the Nicomachus graph (doubled/tripled axis edges).

    Only one diagonal edge leaves the origin; that is the choice for which
    the count at (1, 1) is 6.
    """
    if kmax is None:
        kmax = nmax
    _check_nonneg(nmax=nmax, kmax=kmax)
    t = [[0] * (kmax + 1) for _ in range(nmax + 1)]
    for n in range(nmax + 1):
        for k in range(kmax + 1):
            if n == 0 and k == 0:
                t[n][k] = 1
            elif k == 0:
                t[n][k] = 2 * t[n - 1][0]
            elif n == 0:
                t[n][k] = 3 * t[0][k - 1]
            else:
                t[n][k] = t[n - 1][k] + t[n][k - 1] + t[n - 1][k - 1]
    return GridTable(tuple(tuple(r) for r in t))


def nicomachus_count(n: int, k: int) -> int:
    """Number of root-to-(n, k) paths in the Nicomachus graph."""
    _check_nonneg(n=n, k=k)
    return nicomachus_table(n, k)[n, k]
