"""Dimension group of the Delannoy Bratteli diagram.

Level ``L`` of the diagram has ``2L + 1`` vertices.  They are ordered from
the ``(L, 0)`` end to the ``(0, L)`` end, alternating regular vertices and
centers::

    (L, 0), c(L-1, 0), (L-1, 1), c(L-2, 1), ..., (0, L)

where ``c(n, k)`` is the center of the square with lower-left corner
``(n, k)``.  ``adjacency_matrix(L)`` maps level ``L`` to level ``L + 1`` acting
on column vectors.  (It is the transpose of the usual row display.)

A level vector ``v`` becomes a pair of integer polynomials: the regular
entries ``v[0], v[2], ...`` are the coefficients of ``s`` and the center
entries ``v[1], v[3], ...`` those of ``r``.  With this convention one step
down the diagram is the row-vector action of

    B = [[0, x], [1, 1 + x]],   (r, s) -> (s, x r + (1 + x) s).

The order unit (the root) is ``(0, 1)`` at level 0 and ``(1, 1 + x)`` at
level 1; its images are the Delannoy polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .diagram import Vertex, VertexKind
from .errors import DomainError, IterationCapExceeded, NotDivisible

CANONICAL_CAP = 10_000
ZERO_DEGREE = -1


class IntPoly:
    """Integer polynomial, coefficients low degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, or ``ZERO_DEGREE`` (-1) for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self) -> "IntPoly":
        """Multiply by ``x``."""
        return IntPoly((0,) + self.coeffs) if self.coeffs else self

    def div_x(self) -> "IntPoly":
        """Exact division by ``x``."""
        if self[0] != 0:
            raise NotDivisible(f"{self} is not divisible by x")
        return IntPoly(self.coeffs[1:])

    def nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


_ONE = IntPoly((1,))
_ONE_PLUS_X = IntPoly((1, 1))


@dataclass(frozen=True)
class PolyPair:
    r: IntPoly
    s: IntPoly

    @classmethod
    def of(cls, r: Sequence[int], s: Sequence[int]) -> "PolyPair":
        return cls(IntPoly(r), IntPoly(s))

    def is_zero(self) -> bool:
        return not self.r and not self.s

    @property
    def nominal_level(self) -> int:
        """Smallest level whose vectors can map onto this pair."""
        return max(self.s.degree, self.r.degree + 1, 0)

    def __add__(self, other: "PolyPair") -> "PolyPair":
        return PolyPair(self.r + other.r, self.s + other.s)

    def to_json(self) -> dict:
        return {"r": list(self.r.coeffs), "s": list(self.s.coeffs)}

    def __str__(self) -> str:
        return f"({self.r}, {self.s})"


@dataclass(frozen=True)
class LevelVector:
    level: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        if len(self.entries) != 2 * self.level + 1:
            raise DomainError(
                f"level {self.level} vectors have {2 * self.level + 1} entries, "
                f"got {len(self.entries)}"
            )


def level_vertices(level: int) -> List[Vertex]:
    """The vertices of a level in vector order."""
    out = []
    for i in range(level + 1):
        out.append(Vertex(level - i, i))
        if i < level:
            out.append(Vertex(level - 1 - i, i, VertexKind.CENTER))
    return out


def _displayed_adjacency(level: int) -> List[List[int]]:
    """Row form (one row per vertex of ``level``), grown block by block."""
    rows = [[1, 1, 1]]
    for lv in range(1, level + 1):
        width = 2 * lv + 3
        rows = [row + [0, 0] for row in rows]
        tail = [0] * width
        tail[width - 3] = 1
        rows.append(tail)
        rows.append([0] * (width - 3) + [1, 1, 1])
    return rows


def adjacency_matrix(level: int) -> List[List[int]]:
    """The map from level ``level`` to ``level + 1`` acting on column vectors.

    Shape ``(2 level + 3) x (2 level + 1)``.
    """
    if level < 0:
        raise DomainError("level must be nonnegative")
    rows = _displayed_adjacency(level)
    return [list(col) for col in zip(*rows)]


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, v) if a) for row in m]


def push_forward(v: LevelVector, levels: int = 1) -> LevelVector:
    """Image of ``v`` ``levels`` steps further down the diagram."""
    out = v
    for _ in range(levels):
        out = LevelVector(out.level + 1, mat_vec(adjacency_matrix(out.level), out.entries))
    return out


def level_dimensions(level: int) -> LevelVector:
    """Number of root paths to every vertex of ``level``."""
    if level < 0:
        raise DomainError("level must be nonnegative")
    return push_forward(LevelVector(0, (1,)), level)


def vector_to_polypair(v: LevelVector) -> PolyPair:
    """Regular entries give ``s``, center entries give ``r``."""
    return PolyPair(IntPoly(v.entries[1::2]), IntPoly(v.entries[0::2]))


def polypair_to_vector(p: PolyPair, level: int) -> LevelVector:
    """The level vector with the given image (needs ``nominal_level <= level``)."""
    if p.nominal_level > level:
        raise DomainError(f"{p} does not fit at level {level}")
    entries = []
    for i in range(level + 1):
        entries.append(p.s[i])
        if i < level:
            entries.append(p.r[i])
    return LevelVector(level, entries)


def apply_B(p: PolyPair) -> PolyPair:
    """``(r, s) -> (s, x r + (1 + x) s)``."""
    return PolyPair(p.s, p.r.shift() + _ONE_PLUS_X * p.s)


def apply_B_inverse(p: PolyPair) -> PolyPair:
    """``(r, s) -> ((s - (1 + x) r) / x, r)``; needs ``r(0) == s(0)``."""
    if p.r[0] != p.s[0]:
        raise NotDivisible(f"r(0) != s(0) for {p}")
    return PolyPair((p.s - _ONE_PLUS_X * p.r).div_x(), p.r)


def canonical_form(p: PolyPair, cap: int = CANONICAL_CAP) -> PolyPair:
    """Pull ``p`` back by ``B`` until ``r(0) != s(0)``.

    Every image of ``B`` has ``r(0) == s(0)``, so the result is the unique
    member of the class outside the image of ``B``.
    """
    if p.is_zero():
        raise DomainError("the zero pair has no canonical form")
    for _ in range(cap):
        if p.r[0] != p.s[0]:
            return p
        p = apply_B_inverse(p)
    raise IterationCapExceeded(f"no canonical form within {cap} steps")


def class_equal(p1: PolyPair, p2: PolyPair) -> bool:
    if p1.is_zero() or p2.is_zero():
        return p1.is_zero() and p2.is_zero()
    return canonical_form(p1) == canonical_form(p2)


def class_add(p1: PolyPair, p2: PolyPair) -> PolyPair:
    """Push the lower pair down to the level of the other, then add."""
    if p1.is_zero():
        return p2
    if p2.is_zero():
        return p1
    l1, l2 = p1.nominal_level, p2.nominal_level
    for _ in range(l2 - l1):
        p1 = apply_B(p1)
    for _ in range(l1 - l2):
        p2 = apply_B(p2)
    return p1 + p2


def order_unit() -> PolyPair:
    """The class of the root, as its level-1 image ``(1, 1 + x)``."""
    return PolyPair(_ONE, _ONE_PLUS_X)


def delannoy_polynomial(n: int) -> IntPoly:
    """``P_0 = 1``, ``P_1 = x + 1``, ``P_{n+1} = (x + 1) P_n + x P_{n-1}``."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    prev, cur = _ONE, _ONE_PLUS_X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _ONE_PLUS_X * cur + prev.shift()
    return cur


def class_positivity(p: PolyPair, bound: int = 64) -> str:
    """``"positive"`` if some ``B**j`` image, ``j <= bound``, is nonnegative.

    Otherwise ``"unknown"``: this is only a semi-decision.
    """
    if p.is_zero():
        return "positive"
    q = canonical_form(p)
    for _ in range(bound + 1):
        if q.r.nonnegative() and q.s.nonnegative():
            return "positive"
        q = apply_B(q)
    return "unknown"
