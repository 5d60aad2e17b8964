"""The Delannoy graph as a Bratteli diagram: vertices, moves, finite paths.

Paths are stored as words over the moves ``h`` (1,0), ``v`` (0,1) and
``d`` (1,1).  The Bratteli form inserts a center vertex inside every unit
square so that a diagonal move spans two levels; that form is never built
explicitly.  It only matters for ordering, where a diagonal edge entering
a regular vertex sits between the vertical edge (first) and the horizontal
edge (last).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Tuple

from .errors import DomainError
from .numbers import delannoy


class Move(str, enum.Enum):
    H = "h"
    V = "v"
    D = "d"

    @property
    def step(self) -> Tuple[int, int]:
        return _STEPS[self]

    @property
    def rank(self) -> int:
        """Position among the edges entering a regular interior vertex."""
        return _RANKS[self]


_STEPS = {Move.H: (1, 0), Move.V: (0, 1), Move.D: (1, 1)}
_RANKS = {Move.V: 0, Move.D: 1, Move.H: 2}


class VertexKind(str, enum.Enum):
    REGULAR = "regular"
    CENTER = "center"


@dataclass(frozen=True, order=True)
class Vertex:
    """A lattice vertex; a center with base ``(n, k)`` is ``(n+1/2, k+1/2)``."""

    n: int
    k: int
    kind: VertexKind = VertexKind.REGULAR

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise DomainError(f"vertex coordinates must be nonnegative: {self}")

    @property
    def level(self) -> int:
        """Bratteli level: ``n + k`` for regular, ``n + k + 1`` for centers."""
        if self.kind is VertexKind.CENTER:
            return self.n + self.k + 1
        return self.n + self.k

    def __iter__(self):
        return iter((self.n, self.k))

    def __repr__(self):
        if self.kind is VertexKind.CENTER:
            return f"Center({self.n}+1/2, {self.k}+1/2)"
        return f"({self.n}, {self.k})"


ORIGIN = Vertex(0, 0)


def as_vertex(v) -> Vertex:
    if isinstance(v, Vertex):
        return v
    n, k = v
    return Vertex(n, k)


@dataclass(frozen=True)
class FinitePath:
    """A path from the root, given by its moves."""

    moves: Tuple[Move, ...] = ()

    def __post_init__(self):
        if not isinstance(self.moves, tuple) or not all(
            isinstance(m, Move) for m in self.moves
        ):
            object.__setattr__(self, "moves", tuple(Move(m) for m in self.moves))

    @classmethod
    def parse(cls, word: str) -> "FinitePath":
        """Read a word over ``{h, d, v}``, e.g. ``"hhdv"``."""
        try:
            return cls(tuple(Move(c) for c in word.strip().lower()))
        except ValueError:
            raise DomainError(f"path words use only h, d, v: {word!r}") from None

    def __str__(self) -> str:
        return "".join(m.value for m in self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self) -> Iterator[Move]:
        return iter(self.moves)

    def __add__(self, other: "FinitePath") -> "FinitePath":
        return FinitePath(self.moves + tuple(other))

    @cached_property
    def vertices(self) -> Tuple[Vertex, ...]:
        """``v_0 = (0, 0)`` followed by the vertex after each move."""
        n = k = 0
        out = [ORIGIN]
        for m in self.moves:
            dn, dk = _STEPS[m]
            n += dn
            k += dk
            out.append(Vertex(n, k))
        return tuple(out)

    @property
    def terminal(self) -> Vertex:
        n = sum(1 for m in self.moves if m is not Move.V)
        k = sum(1 for m in self.moves if m is not Move.H)
        return Vertex(n, k)

    def counts(self) -> Tuple[int, int, int]:
        """``(#H, #V, #D)``."""
        return (
            self.moves.count(Move.H),
            self.moves.count(Move.V),
            self.moves.count(Move.D),
        )

    @property
    def level(self) -> int:
        """Number of Bratteli levels spanned; a diagonal move spans two."""
        h, v, d = self.counts()
        return h + v + 2 * d


def dim_between(u, v) -> int:
    """Number of paths from ``u`` to ``v`` (zero unless ``v >= u``)."""
    u, v = as_vertex(u), as_vertex(v)
    dn, dk = v.n - u.n, v.k - u.k
    if dn < 0 or dk < 0:
        return 0
    return delannoy(dn, dk)


def min_path(n: int, k: int) -> FinitePath:
    """The path using only minimal edges: ``h**n v**k``."""
    Vertex(n, k)
    return FinitePath((Move.H,) * n + (Move.V,) * k)


def max_path(n: int, k: int) -> FinitePath:
    """The path using only maximal edges: ``v**k h**n``."""
    Vertex(n, k)
    return FinitePath((Move.V,) * k + (Move.H,) * n)


def compare_paths(x: FinitePath, y: FinitePath) -> int:
    """Tail order of two paths ending at the same vertex: -1, 0 or 1.

    Both paths are walked back from the common terminal vertex.  While the
    last moves agree the paths sit at the same vertex on the same level, so
    the first disagreement met this way is the last level where the edges
    differ, and its ranks ``v < d < h`` decide.
    """
    if x.terminal != y.terminal:
        raise DomainError(
            f"paths end at different vertices: {x.terminal} vs {y.terminal}"
        )
    i, j = len(x.moves) - 1, len(y.moves) - 1
    while i >= 0 and j >= 0:
        a, b = x.moves[i], y.moves[j]
        if a is not b:
            return -1 if _RANKS[a] < _RANKS[b] else 1
        i -= 1
        j -= 1
    return 0


def enumerate_paths(n: int, k: int) -> List[FinitePath]:
    """All paths to ``(n, k)`` by depth-first search (independent oracle)."""
    out: List[FinitePath] = []
    stack: List[Move] = []

    def walk(a: int, b: int) -> None:
        if a == n and b == k:
            out.append(FinitePath(tuple(stack)))
            return
        for m in (Move.H, Move.V, Move.D):
            dn, dk = _STEPS[m]
            if a + dn <= n and b + dk <= k:
                stack.append(m)
                walk(a + dn, b + dk)
                stack.pop()

    walk(0, 0)
    return out


def dfs_path_counts(nmax: int, kmax: int) -> List[List[int]]:
    """Arrival counts of an explicit DFS over all monotone paths in the box.

    Every path prefix is visited once, so the number of arrivals at
    ``(a, b)`` is the number of distinct paths from the origin to it.  This
    walks the paths themselves and shares no code with the recurrence.
    """
    counts = [[0] * (kmax + 1) for _ in range(nmax + 1)]
    stack = [(0, 0)]
    while stack:
        a, b = stack.pop()
        counts[a][b] += 1
        if a < nmax:
            stack.append((a + 1, b))
        if b < kmax:
            stack.append((a, b + 1))
        if a < nmax and b < kmax:
            stack.append((a + 1, b + 1))
    return counts


def words(length: int) -> Iterable[FinitePath]:
    """Every move word of the given length (``3**length`` of them)."""
    for w in itertools.product(Move, repeat=length):
        yield FinitePath(w)
