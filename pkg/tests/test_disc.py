import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithfrieze.disc import (
    Bridging,
    DiscArc,
    DiscTriangulation,
    Peripheral,
    all_arcs,
    arcs_cross,
    cut_triangle,
    enumerate_triangulations,
    from_json,
    glue_triangle,
    is_triangulation,
    peripheral_unit_position,
    quiddity_of,
    realizing_triangulations,
    reflect,
    rotate,
    shape_key,
    special_points,
    star_triangulation,
    to_json,
    unit_entry_positions,
)
from arithfrieze.errors import DomainError, InvalidTriangulationError, PreconditionError, ResourceLimitError
from arithfrieze.frieze import check_arithmetic, validate_to_depth
from arithfrieze.strip import phi, quiddity_of_strip
from conftest import all_triangulations, build_disc
from reference_data import EXAMPLE_QUIDDITY, SECOND_QUIDDITY

tri_up_to_6 = st.sampled_from(all_triangulations(6))
tri_up_to_5 = st.sampled_from(all_triangulations(5))


# -- arcs and crossings ------------------------------------------------------------


def test_arc_count_is_n_squared():
    assert [len(all_arcs(n)) for n in range(1, 7)] == [1, 4, 9, 16, 25, 36]


def test_crossing_table_n4():
    assert not arcs_cross(4, Bridging(1), Bridging(3))
    assert arcs_cross(4, Bridging(3), Peripheral(2, 4))
    assert not arcs_cross(4, Bridging(2), Peripheral(2, 4))
    assert arcs_cross(4, Peripheral(1, 1), Bridging(3))
    assert not arcs_cross(4, Peripheral(1, 1), Bridging(1))
    assert arcs_cross(4, Peripheral(1, 3), Peripheral(2, 4))
    assert not arcs_cross(4, Peripheral(1, 3), Peripheral(3, 1))
    assert arcs_cross(4, Peripheral(1, 1), Peripheral(2, 2))


def test_crossing_oracle_bridging_vs_peripheral():
    # a bridging arc at m crosses P(i,j) exactly when m lies strictly inside the clockwise span
    for n in range(2, 7):
        for a in all_arcs(n):
            if a.is_bridging:
                continue
            span = {(a.start + d - 1) % n + 1 for d in range(1, (a.end - a.start) % n or n)}
            for m in range(1, n + 1):
                assert arcs_cross(n, a, Bridging(m)) == (m in span)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_crossing_is_symmetric_and_irreflexive(n):
    arcs = all_arcs(n)
    for a in arcs:
        assert not arcs_cross(n, a, a)
        for b in arcs:
            assert arcs_cross(n, a, b) == arcs_cross(n, b, a)


@pytest.mark.parametrize("n,arc", [(1, Peripheral(1, 1)), (4, Peripheral(1, 2)), (4, DiscArc(1, 5)), (4, Bridging(0))])
def test_invalid_arcs_rejected(n, arc):
    with pytest.raises(DomainError):
        arcs_cross(n, arc, Bridging(1))


# -- triangulations ----------------------------------------------------------------


def test_is_triangulation_examples(example_disc):
    assert is_triangulation(5, star_triangulation(5).arcs)
    assert is_triangulation(5, example_disc.arcs)
    assert not is_triangulation(5, list(star_triangulation(5).arcs)[1:])
    assert not is_triangulation(4, [Bridging(1), Bridging(2), Bridging(3), Peripheral(2, 4)])
    assert not is_triangulation(4, [Peripheral(1, 2)])


def test_constructor_rejects_non_triangulations():
    with pytest.raises(InvalidTriangulationError):
        DiscTriangulation(3, frozenset({Bridging(1)}))


def test_enumeration_counts():
    # central binomial-type counts C(2n-1, n-1)
    assert [len(enumerate_triangulations(n)) for n in range(1, 7)] == [1, 3, 10, 35, 126, 462]


def test_enumeration_small_cases():
    (only,) = enumerate_triangulations(1)
    assert only == star_triangulation(1)
    two = enumerate_triangulations(2)
    assert star_triangulation(2) in two
    assert any(quiddity_of(t) == quiddity_of(build_disc(2, (("bridging", 1), ("peripheral", 1, 1)))) for t in two)
    assert {quiddity_of(t).entries for t in two} == {(2, 2), (4, 1), (1, 4)}


def test_enumeration_bound():
    with pytest.raises(ResourceLimitError):
        enumerate_triangulations(8)
    with pytest.raises(ResourceLimitError):
        enumerate_triangulations(4, bound=3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumerated_families_are_triangulations(n):
    ts = enumerate_triangulations(n)
    assert len(set(ts)) == len(ts)
    for t in ts:
        assert is_triangulation(n, t.arcs)
        assert len(t.arcs) == n and t.bridging


@given(tri_up_to_6)
def test_quiddity_sum_counts_bridging_arcs(t):
    # oracle: triangle-vertex incidences counted on the lifted strip
    q = quiddity_of(t)
    assert sum(q.entries) == 3 * t.n - len(t.bridging)
    assert quiddity_of_strip(phi(t)).entries == q.entries
    assert min(q.entries) >= 1 and q.neighbour_rule_holds()


def test_quiddity_examples(example_disc, second_disc):
    assert quiddity_of(example_disc).entries == EXAMPLE_QUIDDITY
    assert quiddity_of(star_triangulation(4)).entries == (2, 2, 2, 2)
    assert quiddity_of(second_disc) == quiddity_of(second_disc).__class__(SECOND_QUIDDITY)


def test_special_points(example_disc):
    assert special_points(example_disc) == [1, 3]
    assert special_points(star_triangulation(4)) == []


@given(tri_up_to_6)
def test_non_star_triangulations_have_special_points(t):
    if t.peripheral:
        assert special_points(t)
    else:
        assert t == star_triangulation(t.n)


def test_cut_triangle_examples(example_disc, loop_disc):
    cut = cut_triangle(example_disc, 1)
    # oracle: lower the neighbours of a_1 cyclically and drop it
    assert quiddity_of(cut).entries == (3, 1, 2, 5)
    assert cut_triangle(loop_disc, 2) == star_triangulation(1)
    with pytest.raises(PreconditionError):
        cut_triangle(example_disc, 2)
    with pytest.raises(PreconditionError):
        cut_triangle(star_triangulation(1), 1)


def test_glue_triangle_examples():
    assert quiddity_of(glue_triangle(star_triangulation(1), 1)).entries == (4, 1)
    assert quiddity_of(glue_triangle(star_triangulation(3), 2)).entries == (2, 3, 1, 3)


@given(tri_up_to_6, st.data())
def test_glue_then_cut_is_identity(t, data):
    i = data.draw(st.integers(1, t.n))
    g = glue_triangle(t, i)
    assert is_triangulation(t.n + 1, g.arcs)
    assert cut_triangle(g, i + 1) == t


@given(tri_up_to_6, st.data())
def test_cut_quiddity_formula(t, data):
    sp = special_points(t)
    if t.n < 2 or not sp:
        return
    x = data.draw(st.sampled_from(sp))
    c = cut_triangle(t, x)
    assert is_triangulation(t.n - 1, c.arcs)
    q = list(quiddity_of(t).entries)
    if t.n == 2:
        expected = [2]
    else:
        q[(x - 2) % t.n] -= 1
        q[x % t.n] -= 1
        expected = q[: x - 1] + q[x:]
    assert list(quiddity_of(c).entries) == expected


def test_every_triangulation_reduces_to_star_on_its_bridging_arcs():
    for t in all_triangulations(6):
        cur = t
        while special_points(cur):
            x = special_points(cur)[-1]
            smaller = cut_triangle(cur, x)
            if x >= 2:
                assert glue_triangle(smaller, x - 1) == cur
            cur = smaller
        assert cur == star_triangulation(len(t.bridging))


@given(tri_up_to_6, st.integers(0, 6))
def test_rotation_and_reflection_act_on_quiddity(t, s):
    q = quiddity_of(t).entries
    rq = quiddity_of(rotate(t, s)).entries
    k = s % t.n
    assert rq == q[-k:] + q[:-k] if k else rq == q
    assert quiddity_of(reflect(t)).entries == q[::-1]
    assert is_triangulation(t.n, reflect(t).arcs)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_quiddity_determines_triangulation(n):
    qs = [quiddity_of(t).entries for t in enumerate_triangulations(n)]
    assert len(set(qs)) == len(qs)


def test_shapes_group_rotations():
    keys = {shape_key(t) for t in enumerate_triangulations(4)}
    assert shape_key(rotate(star_triangulation(4), 1)) in keys
    assert len(keys) < 35


@given(tri_up_to_6)
def test_triangulation_friezes_are_valid_and_arithmetic(t):
    q = quiddity_of(t)
    assert validate_to_depth(q, 15).valid
    assert check_arithmetic(q, t.n, 4).passed


def test_unit_entries_star_and_example(example_disc):
    assert unit_entry_positions(star_triangulation(4), 6) == set()
    units = unit_entry_positions(example_disc, 6)
    assert units == {peripheral_unit_position(5, a) for a in example_disc.peripheral}
    assert len(units) == 4
    # frozen from the recurrence: (1,1), (3,3), (3,4), (1,4)
    assert sorted(units) == [(1, 1), (1, 4), (3, 3), (3, 4)]


@given(tri_up_to_5)
def test_unit_entries_biject_with_peripheral_arcs(t):
    predicted = [peripheral_unit_position(t.n, a) for a in t.peripheral]
    assert len(set(predicted)) == len(predicted)
    assert unit_entry_positions(t, t.n + 1) == set(predicted)


def test_realizing_triangulations():
    assert realizing_triangulations(EXAMPLE_QUIDDITY)
    assert realizing_triangulations((3,)) == []
    assert realizing_triangulations((1, 5, 4, 1, 3)) == []


def test_json_round_trip(example_disc):
    obj = to_json(example_disc)
    assert obj["arcs"][0] == {"bridging": 5}
    assert {"peripheral": [5, 5]} in obj["arcs"]
    assert from_json(obj) == example_disc


@pytest.mark.parametrize(
    "obj,exc",
    [
        ({"n": 5}, DomainError),
        ({"n": 2, "arcs": [{"loop": 1}]}, DomainError),
        ({"n": 2, "arcs": [{"bridging": 1}]}, InvalidTriangulationError),
        ({"n": 3, "arcs": [{"peripheral": [1, 2]}, {"bridging": 1}, {"bridging": 3}]}, InvalidTriangulationError),
        ({"n": 2, "arcs": [{"bridging": 1}, {"bridging": 1}]}, InvalidTriangulationError),
    ],
)
def test_json_errors(obj, exc):
    with pytest.raises(exc):
        from_json(obj)


def test_random_cut_glue_round_trips():
    rng = random.Random(3)
    pool = all_triangulations(5)
    for _ in range(200):
        t = rng.choice(pool)
        i = rng.randint(1, t.n)
        assert cut_triangle(glue_triangle(t, i), i + 1) == t
