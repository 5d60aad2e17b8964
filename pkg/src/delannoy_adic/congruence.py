"""Congruences of binomial and Delannoy numbers modulo a prime.

These are the combinatorial facts behind total ergodicity: Lucas' digit
formula, three binomial congruences for ``p**r - 1``, the sign rule

    D(n, p**r - 1) = (-1)**(n mod p**r)   (mod p),

and blocking sets, the rows and columns ``p**r - 1`` that every path must
cross and on which ``D`` is never divisible by ``p``.

Residues are plain ints in ``[0, p)``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .diagram import FinitePath, Vertex
from .errors import DomainError, ResourceLimit

DEFAULT_LIMIT = 10**5


@lru_cache(maxsize=1024)
def is_prime(p: int) -> bool:
    """Deterministic trial division; inputs here are small."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"modulus must be prime, got {p}")


def primes_up_to(n: int) -> List[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def base_digits(n: int, p: int) -> List[int]:
    """Base-``p`` digits of ``n``, least significant first (``[]`` for 0)."""
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def binom_mod_lucas(n: int, k: int, p: int) -> int:
    """``C(n, k) mod p`` as the product of digitwise binomials."""
    _require_prime(p)
    if k < 0 or n < 0 or k > n:
        return 0
    acc = 1
    while n or k:
        n, a = divmod(n, p)
        k, b = divmod(k, p)
        if b > a:
            return 0
        acc = acc * math.comb(a, b) % p
    return acc


def delannoy_mod_table(nmax: int, kmax: int, p: int) -> List[bytearray]:
    """Rows of ``D(n, k) mod p`` for ``n <= nmax``, ``k <= kmax``.

    Computed with the recurrence in mod-p arithmetic, independent of the
    big-integer table.  Requires ``p < 256`` (rows are bytearrays).
    """
    _require_prime(p)
    if p >= 256:
        raise DomainError("delannoy_mod_table stores residues in bytes; need p < 256")
    rows = [bytearray([1]) * (kmax + 1)]
    for _ in range(nmax):
        prev = rows[-1]
        cur = bytearray([1]) * (kmax + 1)
        left = 1
        for k in range(1, kmax + 1):
            left = (left + prev[k - 1] + prev[k]) % p
            cur[k] = left
        rows.append(cur)
    return rows


def delannoy_mod(n: int, k: int, p: int) -> int:
    """``D(n, k) mod p`` via a rolling row of residues."""
    _require_prime(p)
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if n < k:
        n, k = k, n
    row = [1] * (k + 1)
    for _ in range(n):
        diag = row[0]
        for j in range(1, k + 1):
            above = row[j]
            row[j] = (row[j] + row[j - 1] + diag) % p
            diag = above
    return row[k] % p


def sign_mod(e: int, p: int) -> int:
    """``(-1)**e`` reduced into ``[0, p)``."""
    return 1 if e % 2 == 0 else (p - 1) % p


def delannoy_sign(n: int, p: int, r: int) -> int:
    """Predicted ``D(n, p**r - 1) mod p``, namely ``(-1)**(n mod p**r)``."""
    _require_prime(p)
    if n < 0 or r < 0:
        raise DomainError("n and r must be nonnegative")
    return sign_mod(n % p**r, p)


@dataclass
class Report:
    """Outcome of a verification sweep."""

    lemma: str
    p: int
    r: int
    range: dict
    checked: int = 0
    first_counterexample: Optional[dict] = None

    @property
    def status(self) -> str:
        return "pass" if self.first_counterexample is None else "fail"

    @property
    def ok(self) -> bool:
        return self.first_counterexample is None

    def to_json(self) -> dict:
        d = asdict(self)
        d["status"] = self.status
        return d


def _check_size(p: int, r: int, limit: int) -> int:
    _require_prime(p)
    if r < 0:
        raise DomainError("r must be nonnegative")
    q = p**r
    if q > limit:
        raise ResourceLimit(f"p**r = {q} exceeds limit {limit}")
    return q


def check_lemma_alternating(p: int, r: int, limit: int = DEFAULT_LIMIT) -> Report:
    """``C(p**r - 1, j) = (-1)**j (mod p)`` for ``0 <= j < p**r``."""
    q = _check_size(p, r, limit)
    rep = Report("alternating", p, r, {"j": [0, q - 1]})
    for j in range(q):
        got = binom_mod_lucas(q - 1, j, p)
        rep.checked += 1
        if got != sign_mod(j, p):
            rep.first_counterexample = {"j": j, "residue": got}
            break
    return rep


def check_lemma_periodic(
    p: int, r: int, i_max: int, limit: int = DEFAULT_LIMIT
) -> Report:
    """``C(j + i p**r, p**r - 1) = C(j, p**r - 1) (mod p)``."""
    q = _check_size(p, r, limit)
    if i_max < 0:
        raise DomainError("i_max must be nonnegative")
    rep = Report("periodic", p, r, {"j": [0, q - 1], "i": [0, i_max]})
    for j in range(q):
        base = binom_mod_lucas(j, q - 1, p)
        for i in range(i_max + 1):
            got = binom_mod_lucas(j + i * q, q - 1, p)
            rep.checked += 1
            if got != base:
                rep.first_counterexample = {"j": j, "i": i, "residue": got}
                return rep
    return rep


def check_lemma_vanish(p: int, r: int, limit: int = DEFAULT_LIMIT) -> Report:
    """``C(p**r - 1 + j, p**r - 1) = 0 (mod p)`` for ``1 <= j < p**r``."""
    q = _check_size(p, r, limit)
    rep = Report("vanish", p, r, {"j": [1, q - 1]})
    for j in range(1, q):
        got = binom_mod_lucas(q - 1 + j, q - 1, p)
        rep.checked += 1
        if got != 0:
            rep.first_counterexample = {"j": j, "residue": got}
            break
    return rep


def check_delannoy_sign(
    p: int, r: int, nmax: int, limit: int = DEFAULT_LIMIT
) -> Report:
    """Compare ``D(n, p**r - 1) mod p`` with the sign rule for ``n <= nmax``."""
    q = _check_size(p, r, limit)
    if nmax < 0:
        raise DomainError("nmax must be nonnegative")
    rep = Report("delannoy_sign", p, r, {"n": [0, nmax]})
    k = q - 1
    row = [1] * (k + 1)  # row n of D mod p, columns 0..k
    for n in range(nmax + 1):
        if n:
            left = 1
            new = [1] * (k + 1)
            for j in range(1, k + 1):
                left = (left + row[j - 1] + row[j]) % p
                new[j] = left
            row = new
        expected = delannoy_sign(n, p, r)
        rep.checked += 1
        if row[k] != expected:
            rep.first_counterexample = {"n": n, "residue": row[k], "expected": expected}
            break
    return rep


@dataclass(frozen=True)
class BlockingSet:
    """Vertices ``(n, p**r - 1)`` and ``(p**r - 1, k)`` for ``1 <= r <= max_r``."""

    p: int
    max_r: int
    lines: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _require_prime(self.p)
        if self.max_r < 0:
            raise DomainError("max_r must be nonnegative")
        lines = frozenset(self.p**r - 1 for r in range(1, self.max_r + 1))
        object.__setattr__(self, "lines", lines)

    def __contains__(self, v) -> bool:
        n, k = v
        return n in self.lines or k in self.lines

    def expected_min_hits(self, n: int, k: int) -> int:
        """Lines a path to ``(n, k)`` must cross: ``#{r : p**r - 1 <= max(n, k)}``."""
        top = max(n, k)
        return sum(1 for c in self.lines if c <= top)


def blocking_hits(
    x: FinitePath,
    b: BlockingSet,
    mod_table: Optional[Sequence[Sequence[int]]] = None,
) -> List[Tuple[Vertex, int]]:
    """Prefix vertices of ``x`` in ``b`` paired with ``D(n, k) mod p``.

    ``mod_table`` (from :func:`delannoy_mod_table`) speeds up long paths.
    """
    out = []
    for v in x.vertices:
        if v in b:
            if mod_table is not None:
                res = mod_table[v.n][v.k]
            else:
                res = delannoy_mod(v.n, v.k, b.p)
            out.append((v, res))
    return out
