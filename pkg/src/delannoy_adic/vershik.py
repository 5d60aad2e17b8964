"""The adic (Vershik) map on finite paths, its inverse, orbits and coding."""
from __future__ import annotations

from typing import List

from .diagram import FinitePath, Move, max_path, min_path
from .errors import MaximalPath, MinimalPath, TruncationExhausted


def successor(x: FinitePath) -> FinitePath:
    """Next path to the same vertex in the tail order.

    The first non-maximal edge from the root is bumped to the next edge into
    its target vertex and everything before it is reset to the minimal path.
    """
    n = k = 0
    for j, m in enumerate(x.moves):
        if m is Move.H:
            n += 1
        elif m is Move.V:
            k += 1
            if n >= 1:
                head = min_path(n - 1, k - 1).moves + (Move.D,)
                return FinitePath(head + x.moves[j + 1 :])
        else:
            n += 1
            k += 1
            head = min_path(n - 1, k).moves + (Move.H,)
            return FinitePath(head + x.moves[j + 1 :])
    raise MaximalPath(f"path {str(x)!r} uses only maximal edges")


def predecessor(x: FinitePath) -> FinitePath:
    """Inverse of :func:`successor`."""
    n = k = 0
    for j, m in enumerate(x.moves):
        if m is Move.V:
            k += 1
        elif m is Move.H:
            n += 1
            if k >= 1:
                head = max_path(n - 1, k - 1).moves + (Move.D,)
                return FinitePath(head + x.moves[j + 1 :])
        else:
            n += 1
            k += 1
            head = max_path(n, k - 1).moves + (Move.V,)
            return FinitePath(head + x.moves[j + 1 :])
    raise MinimalPath(f"path {str(x)!r} uses only minimal edges")


def orbit_enumerate(n: int, k: int) -> List[FinitePath]:
    """All paths to ``(n, k)`` in increasing order, from min to max path."""
    x = min_path(n, k)
    out = [x]
    while True:
        try:
            x = successor(x)
        except MaximalPath:
            return out
        out.append(x)


def coding_sequence(x: FinitePath, iterations: int) -> List[Move]:
    """First moves of ``x, Tx, T^2 x, ...``; ``iterations`` symbols.

    Raises :class:`TruncationExhausted` (carrying the symbols produced so
    far) when a further iterate is needed but the truncation is maximal.
    """
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")
    out: List[Move] = []
    for i in range(iterations):
        if i > 0:
            try:
                x = successor(x)
            except MaximalPath:
                raise TruncationExhausted(out, iterations) from None
        if not x.moves:
            raise TruncationExhausted(out, iterations)
        out.append(x.moves[0])
    return out
