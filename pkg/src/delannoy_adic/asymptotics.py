"""Floating-point asymptotics of Delannoy numbers, checked against exact values.

Everything is evaluated as a logarithm first; ``(3 + 2 sqrt 2)**n`` leaves
double range near ``n = 400``.  Exact integers enter through ``math.log``,
which accepts integers of any size.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .errors import DomainError
from .numbers import delannoy

SILVER = 3 + 2 * math.sqrt(2)
# printed to limited precision; the leading one is 0.5727...
DIAGONAL_COEFFS = (0.57, -0.067, 0.006)


def log_pemantle_wilson(n: int, k: int) -> float:
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    r = math.hypot(n, k)
    return (
        -n * math.log((r - k) / n)
        - k * math.log((r - n) / k)
        + 0.5 * math.log((n * k / (2 * math.pi)) / ((n + k - r) ** 2 * r))
    )


def pemantle_wilson(n: int, k: int) -> float:
    """Leading-order approximation of ``D(n, k)`` for ``n, k >= 1``."""
    return math.exp(log_pemantle_wilson(n, k))


def log_diagonal_asymptotic(n: int) -> float:
    if n < 1:
        raise DomainError("n must be positive")
    c0, c1, c2 = DIAGONAL_COEFFS
    series = c0 * n**-0.5 + c1 * n**-1.5 + c2 * n**-2.5
    return n * math.log(SILVER) + math.log(series)


def diagonal_asymptotic(n: int) -> float:
    """``(3 + 2 sqrt 2)**n (0.57 n^-1/2 - 0.067 n^-3/2 + 0.006 n^-5/2)``."""
    return math.exp(log_diagonal_asymptotic(n))


def relative_error(log_approx: float, exact: int) -> float:
    """``approx / exact - 1`` computed from logarithms."""
    return math.expm1(log_approx - math.log(exact))


class ThetaValues(NamedTuple):
    A: float
    G: float
    B: float


def theta_functions(theta: float) -> ThetaValues:
    """Growth rate ``A``, its log excess ``G`` over ``2 * 3**theta``, and ``B``.

    For ``k = theta n``, ``D(n, k)`` grows like ``A(theta)**n``; ``G <= 0``
    says this never beats the Nicomachus count ``2**n 3**k``.
    """
    if not theta > 0:
        raise DomainError(f"theta must be positive, got {theta}")
    root = math.sqrt(1 + theta * theta)
    log_a = math.log(root + theta) + theta * math.log((root + 1) / theta)
    g = log_a - math.log(2) - theta * math.log(3)
    b = math.sqrt(theta) / math.sqrt((1 + theta - root) ** 2 * root)
    return ThetaValues(math.exp(log_a), g, b)


def entropy_lambda(epsilon: float) -> Tuple[float, float]:
    """Binary entropy ``H(eps)`` (natural log) and ``lambda = exp(H)``."""
    if not 0 < epsilon < 1:
        raise DomainError(f"epsilon must lie in (0, 1), got {epsilon}")
    h = -epsilon * math.log(epsilon) - (1 - epsilon) * math.log(1 - epsilon)
    return h, math.exp(h)


def nicomachus_decay(n: int, k: int) -> float:
    """``D(n, k) / (2**n 3**k)``, correctly rounded from the exact fraction."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    return float(Fraction(delannoy(n, k), 2**n * 3**k))


def decay_level_max(level: int) -> float:
    """Largest decay ratio among vertices at graph distance ``level``.

    Graph distance from the origin in the Delannoy graph is ``max(n, k)``,
    since a diagonal edge is a single step.
    """
    if level < 0:
        raise DomainError("level must be nonnegative")
    cands = [(level, k) for k in range(level + 1)] + [(n, level) for n in range(level)]
    return max(nicomachus_decay(n, k) for n, k in cands)


def decay_antidiagonal_max(total: int) -> float:
    """Largest decay ratio with ``n + k = total``.

    Not monotone in ``total``: the maximiser hops along ``k ~ 3n/4``.
    """
    if total < 0:
        raise DomainError("total must be nonnegative")
    return max(nicomachus_decay(n, total - n) for n in range(total + 1))


def compare_table(points) -> List[dict]:
    """Exact value, Pemantle-Wilson value and relative error at each ``(n, k)``."""
    rows = []
    for n, k in points:
        exact = delannoy(n, k)
        log_pw = log_pemantle_wilson(n, k)
        rows.append(
            {
                "n": n,
                "k": k,
                "exact": exact,
                "approx": math.exp(log_pw) if log_pw < 700 else math.inf,
                "rel_error": relative_error(log_pw, exact),
            }
        )
    return rows
