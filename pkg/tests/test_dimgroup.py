import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delannoy_adic.diagram import VertexKind, dim_between
from delannoy_adic.dimgroup import (
    CANONICAL_CAP,
    IntPoly,
    LevelVector,
    PolyPair,
    adjacency_matrix,
    apply_B,
    apply_B_inverse,
    canonical_form,
    class_add,
    class_equal,
    class_positivity,
    delannoy_polynomial,
    level_dimensions,
    level_vertices,
    order_unit,
    polypair_to_vector,
    push_forward,
    vector_to_polypair,
)
from delannoy_adic.errors import DomainError, NotDivisible
from delannoy_adic.numbers import delannoy

pair = PolyPair.of
UNIT = pair([1], [1, 1])
UNIT_B = pair([1, 1], [1, 3, 1])

coeffs = st.lists(st.integers(-9, 9), max_size=7)


def test_intpoly_basics():
    p = IntPoly([1, 3, 1, 0, 0])
    assert p.coeffs == (1, 3, 1) and p.degree == 2
    assert IntPoly().degree == -1 and not IntPoly([0, 0])
    assert IntPoly([1, 1]) * IntPoly([1, 1]) == IntPoly([1, 2, 1])
    assert IntPoly([0, 2, 4]).div_x() == IntPoly([2, 4])
    with pytest.raises(NotDivisible):
        IntPoly([1, 2]).div_x()
    assert str(IntPoly([1, -3, 0, 2])) == "2x^3 - 3x + 1"


def test_adjacency_small_levels():
    assert adjacency_matrix(0) == [[1], [1], [1]]
    displayed_a1 = [[1, 1, 1, 0, 0], [0, 0, 1, 0, 0], [0, 0, 1, 1, 1]]
    assert adjacency_matrix(1) == [list(c) for c in zip(*displayed_a1)]
    displayed_a2 = [
        [1, 1, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 1],
    ]
    assert adjacency_matrix(2) == [list(c) for c in zip(*displayed_a2)]


def _edges_from_graph(level):
    """Adjacency built from the lattice edges, independent of the block recursion."""
    src = level_vertices(level)
    dst = {(v.n, v.k, v.kind): i for i, v in enumerate(level_vertices(level + 1))}
    m = [[0] * len(src) for _ in dst]
    for j, v in enumerate(src):
        if v.kind is VertexKind.CENTER:
            targets = [(v.n + 1, v.k + 1, VertexKind.REGULAR)]
        else:
            targets = [
                (v.n + 1, v.k, VertexKind.REGULAR),
                (v.n, v.k + 1, VertexKind.REGULAR),
                (v.n, v.k, VertexKind.CENTER),
            ]
        for t in targets:
            m[dst[t]][j] += 1
    return m


@pytest.mark.parametrize("level", range(9))
def test_adjacency_matches_lattice_edges(level):
    assert adjacency_matrix(level) == _edges_from_graph(level)


def test_level_dimension_examples():
    assert level_dimensions(0).entries == (1,)
    assert level_dimensions(1).entries == (1, 1, 1)
    assert level_dimensions(2).entries == (1, 1, 3, 1, 1)
    v = level_dimensions(3).entries
    assert v[0::2] == (1, 5, 5, 1) and v[1::2] == (1, 3, 1)


@pytest.mark.parametrize("level", range(13))
def test_level_dimensions_are_delannoy(level):
    for vert, d in zip(level_vertices(level), level_dimensions(level).entries):
        assert d == delannoy(vert.n, vert.k)
        if vert.kind is VertexKind.REGULAR:
            assert d == dim_between((0, 0), (vert.n, vert.k))


def test_vector_to_polypair_examples():
    assert vector_to_polypair(LevelVector(0, [1])) == pair([], [1])
    assert vector_to_polypair(level_dimensions(1)) == UNIT
    assert vector_to_polypair(level_dimensions(2)) == UNIT_B
    with pytest.raises(DomainError):
        LevelVector(2, [1, 2, 3])


@pytest.mark.parametrize("level", range(1, 5))
def test_slot_convention_intertwines_adjacency_with_B(level):
    rng = random.Random(level)
    for _ in range(50):
        v = LevelVector(level, [rng.randint(-9, 9) for _ in range(2 * level + 1)])
        assert vector_to_polypair(push_forward(v)) == apply_B(vector_to_polypair(v))


def test_opposite_slot_convention_fails_to_intertwine():
    def swapped(v):
        return PolyPair(IntPoly(v.entries[0::2]), IntPoly(v.entries[1::2]))

    v = level_dimensions(1)
    assert swapped(push_forward(v)) != apply_B(swapped(v))


def test_many_to_one_example():
    assert vector_to_polypair(LevelVector(1, [-1, 1, 0])) == vector_to_polypair(
        LevelVector(2, [-1, 1, 0, 0, 0])
    )


def test_polypair_vector_roundtrip():
    v = LevelVector(3, [4, -1, 0, 2, 7, 0, 1])
    assert polypair_to_vector(vector_to_polypair(v), 3) == v
    with pytest.raises(DomainError):
        polypair_to_vector(UNIT_B, 1)


def test_apply_B_examples():
    assert apply_B(UNIT) == UNIT_B
    assert apply_B(pair([], [])) == pair([], [])
    assert apply_B(UNIT_B) == pair([1, 3, 1], [1, 5, 5, 1])


def test_apply_B_inverse_examples():
    assert apply_B_inverse(UNIT_B) == UNIT
    assert apply_B_inverse(UNIT) == pair([], [1])
    with pytest.raises(NotDivisible):
        apply_B_inverse(pair([1], [0, 1]))


@given(coeffs, coeffs)
def test_inverse_undoes_B(r, s):
    p = pair(r, s)
    assert apply_B_inverse(apply_B(p)) == p


def test_inverse_identity_on_random_pairs():
    rng = random.Random(2024)
    for _ in range(200):
        r = [rng.randint(-9, 9) for _ in range(rng.randint(0, 7))]
        s = [rng.randint(-9, 9) for _ in range(rng.randint(0, 7))]
        assert apply_B_inverse(apply_B(pair(r, s))) == pair(r, s)


def test_canonical_examples():
    assert canonical_form(UNIT_B) == pair([], [1])
    assert canonical_form(pair([], [1])) == pair([], [1])
    assert canonical_form(pair([1], [0, 1])) == pair([1], [0, 1])
    with pytest.raises(DomainError):
        canonical_form(pair([], []))


def test_canonical_of_long_unit_chain():
    p = UNIT
    for _ in range(25):
        p = apply_B(p)
    c = canonical_form(p)
    assert c.r[0] != c.s[0]
    assert c == pair([], [1])


@given(coeffs, coeffs, st.integers(0, 6))
def test_canonical_is_class_invariant(r, s, shifts):
    p = pair(r, s)
    if p.is_zero():
        return
    q = p
    for _ in range(shifts):
        q = apply_B(q)
    c = canonical_form(q)
    assert c.r[0] != c.s[0]
    assert c == canonical_form(p)


def test_canonical_cap_is_finite():
    assert CANONICAL_CAP == 10_000


def test_class_equal_examples():
    assert class_equal(UNIT, UNIT_B)
    assert class_equal(pair([], [1]), UNIT)
    assert not class_equal(pair([1], [0, 1]), pair([], [1]))
    assert class_equal(pair([], []), pair([], []))
    assert not class_equal(pair([], []), UNIT)


def test_class_equal_is_equivalence_relation():
    rng = random.Random(7)
    base = []
    for _ in range(50):
        p = pair(
            [rng.randint(-5, 5) for _ in range(rng.randint(0, 4))],
            [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))],
        )
        if not p.is_zero():
            base.append(p)
    sample = base + [apply_B(apply_B(p)) for p in base[:20]]
    for a in sample:
        assert class_equal(a, a)
        for b in sample:
            assert class_equal(a, b) == class_equal(b, a)
    for a in base[:10]:
        shifted = apply_B(a)
        for c in sample:
            if class_equal(shifted, c):
                assert class_equal(a, c)


def test_class_add():
    zero = pair([], [])
    assert class_add(UNIT, zero) == UNIT
    doubled = class_add(UNIT, UNIT)
    assert doubled == pair([2], [2, 2])
    assert canonical_form(doubled) == pair([], [2])
    a, b = pair([1], [0, 1]), UNIT_B
    assert class_equal(class_add(a, b), class_add(b, a))
    # (1, x) lifts once to (x, 2x + x^2) before adding
    assert class_add(a, b) == pair([1, 2], [1, 5, 2])


def test_class_add_matches_vector_addition():
    v = LevelVector(1, [2, -1, 3])
    w = LevelVector(3, [1, 0, -2, 5, 1, 1, 0])
    lifted = push_forward(v, 2)
    total = LevelVector(3, [a + b for a, b in zip(lifted.entries, w.entries)])
    assert class_add(vector_to_polypair(v), vector_to_polypair(w)) == vector_to_polypair(total)


@pytest.mark.parametrize(
    "n,expected", [(0, [1]), (1, [1, 1]), (2, [1, 3, 1]), (3, [1, 5, 5, 1])]
)
def test_delannoy_polynomial_examples(n, expected):
    assert delannoy_polynomial(n) == IntPoly(expected)


def test_B_powers_walk_delannoy_polynomials():
    p = pair(delannoy_polynomial(0).coeffs, delannoy_polynomial(1).coeffs)
    for n in range(21):
        assert p == PolyPair(delannoy_polynomial(n), delannoy_polynomial(n + 1))
        p = apply_B(p)


def test_delannoy_polynomial_coefficients():
    for n in range(31):
        poly = delannoy_polynomial(n)
        assert [poly[j] for j in range(n + 1)] == [delannoy(j, n - j) for j in range(n + 1)]


def test_order_unit():
    assert order_unit() == UNIT
    assert vector_to_polypair(level_dimensions(1)) == order_unit()


def test_positivity_semidecision():
    assert class_positivity(UNIT) == "positive"
    assert class_positivity(pair([-1], [1])) == "positive"
    assert class_positivity(pair([], [-1]), bound=20) == "unknown"
