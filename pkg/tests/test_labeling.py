import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithfrieze.errors import DomainError, ResourceLimitError
from arithfrieze.frieze import FriezeView, entry
from arithfrieze.labeling import (
    common_differences,
    diagonal_via_labels,
    entry_via_labels,
    labels_from,
    puncture_labels,
)
from arithfrieze.strip import lower, phi, quiddity_of_strip, special_vertices, star_strip, upper, vertex_at
from conftest import all_triangulations
from reference_data import (
    ARITHMETIC5_QUIDDITY,
    EXAMPLE_LABELS_LEFT,
    EXAMPLE_LABELS_RIGHT,
    EXAMPLE_PROGRESSIONS,
    EXAMPLE_UPPER_LABEL,
)

tri_up_to_5 = st.sampled_from(all_triangulations(5))


def test_example_labels(example_strip):
    lm = labels_from(example_strip, lower(5, 2))
    assert tuple(lm.rightward(9)) == EXAMPLE_LABELS_RIGHT
    assert tuple(lm.leftward(8)) == EXAMPLE_LABELS_LEFT
    assert lm.upper_label == EXAMPLE_UPPER_LABEL
    assert lm.label(upper(7)) == EXAMPLE_UPPER_LABEL
    assert lm.consistent
    assert lm.labels[lower(5, 2)] == 0


def test_star_labels_are_distances():
    s = star_strip(3)
    lm = labels_from(s, lower(3, 1), (-6, 6))
    assert [lm.at(p) for p in range(-6, 7)] == [abs(p) for p in range(-6, 7)]
    assert lm.upper_label == 1


def test_loop_strip_labels(loop_disc):
    s = phi(loop_disc)
    lm = labels_from(s, lower(2, 2), (-8, 8))
    for k in range(-4, 4):
        assert lm.label(lower(2, 1, k)) == abs(2 * k - 1)
        assert lm.label(lower(2, 2, k)) == abs(4 * k)


@given(tri_up_to_5, st.integers(0, 9), st.integers(0, 2**32))
def test_processing_order_does_not_matter(t, p, seed):
    s = phi(t)
    v = vertex_at(p - 4, t.n)
    base = labels_from(s, v)
    shuffled = labels_from(s, v, rng=random.Random(seed))
    assert base.values == shuffled.values
    assert base.upper_label == shuffled.upper_label
    assert base.consistent and shuffled.consistent


@given(tri_up_to_5, st.integers(1, 5))
def test_labels_give_entries(t, i):
    s = phi(t)
    i = (i - 1) % t.n + 1
    depth = 2 * t.n
    q = quiddity_of_strip(s)
    assert diagonal_via_labels(s, i, depth) == [entry(q, i, j) for j in range(i - 2, i + depth + 1)]


def test_entry_via_labels_matches_frieze(example_strip):
    view = FriezeView(ARITHMETIC5_QUIDDITY)
    for i in range(1, 6):
        for j in range(i - 2, i + 8):
            assert entry_via_labels(example_strip, i, j) == view.entry(i, j)
    with pytest.raises(DomainError):
        entry_via_labels(example_strip, 3, 0)


@given(tri_up_to_5)
def test_every_triangle_satisfies_the_sum_rule(t):
    s = phi(t)
    for p in range(t.n):
        assert labels_from(s, vertex_at(p, t.n)).consistent


def test_special_start_is_sum_of_neighbour_starts():
    for t in all_triangulations(5):
        s = phi(t)
        n = t.n
        for x in special_vertices(s):
            q = x - 1
            window = (q - 2 * n, q + 3 * n)
            here, left, right = (labels_from(s, vertex_at(q + d, n), window) for d in (0, -1, 1))
            for p in list(range(window[0], q - 1)) + list(range(q + 2, window[1] + 1)):
                assert here.at(p) == left.at(p) + right.at(p)


def test_example_puncture_labels(example_strip, loop_disc):
    assert puncture_labels(example_strip) == (3, 2, 5, 3, 1)
    assert puncture_labels(phi(loop_disc)) == (1, 2)
    assert puncture_labels(star_strip(4)) == (1, 1, 1, 1)


@given(tri_up_to_5, st.integers(-3, 3))
def test_puncture_labels_do_not_depend_on_the_block(t, k):
    s = phi(t)
    assert puncture_labels(s, k) == puncture_labels(s, 0)


@given(tri_up_to_5)
def test_common_differences_match_observed(t):
    s = phi(t)
    n = t.n
    d = common_differences(s)
    q = quiddity_of_strip(s)
    for i in range(1, n + 1):
        for j in range(i - 1, i + 2 * n):
            k = (j - i + 2) % n + 1
            assert entry(q, i, j + n) - entry(q, i, j) == d[i - 1][k - 1]


def test_example_progressions(example_strip):
    d = common_differences(example_strip)
    for i, j0, values, diff in EXAMPLE_PROGRESSIONS:
        k = (j0 - i + 2) % 5 + 1
        assert d[i - 1][k - 1] == diff
        assert [entry(ARITHMETIC5_QUIDDITY, i, j0 + 5 * m) for m in range(len(values))] == list(values)


def test_window_errors(example_strip):
    with pytest.raises(DomainError):
        labels_from(example_strip, lower(5, 1), (4, 2))
    lm = labels_from(example_strip, lower(5, 1), (0, 3))
    with pytest.raises(DomainError):
        lm.at(10)
    with pytest.raises(ResourceLimitError):
        labels_from(example_strip, lower(5, 1), (0, 40), margin=0)
