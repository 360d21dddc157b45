from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptasm.fixtures import CYCLE10_ORDER40, CYCLE10_ORDER60, EXAMPLE_ORDER6, ORDER16_PT, TWO_T_BLOCKS_ORDER12
from ptasm.forms import FINITE_TYPES, INFINITE_TYPES, PTType, parameter_tuples, pt_matrix, standard_matrix
from ptasm.graph import (
    build_graph,
    classify,
    classify_matrix,
    graph_matrix,
    reverse_graph,
    signed_walk_counts,
    to_dot,
    weak_components,
)
from ptasm.matrix import (
    IntMatrix,
    Permutation,
    TBlockSpec,
    conjugate,
    cycle_companion,
    direct_sum,
    find_conjugation,
    mat_pow,
    pt_status,
)

from conftest import signed01_matrices


def _family(max_n: int):
    for tag in FINITE_TYPES + INFINITE_TYPES:
        for n in range(2, max_n + 1):
            for params in parameter_tuples(tag, n):
                a = standard_matrix(tag, params)
                # some placements cancel or double a permutation entry
                if pt_status(a) == "pt":
                    yield tag, params, a


FAMILY7 = list(_family(7))


@given(signed01_matrices())
def test_graph_round_trip(a):
    g = build_graph(a)
    assert graph_matrix(g) == a
    assert graph_matrix(reverse_graph(g)) == a.transpose()


@given(signed01_matrices(max_n=5), st.integers(1, 6))
def test_walk_identity(a, k):
    g = build_graph(a)
    power = mat_pow(a, k)
    for u in range(a.n):
        for v in range(a.n):
            plus, minus = signed_walk_counts(g, u, v, k)
            assert power[u, v] == plus - minus


def test_weak_components():
    a = direct_sum(cycle_companion(2), cycle_companion(3), IntMatrix.identity(1))
    assert weak_components(build_graph(a)) == [[0, 1], [2, 3, 4], [5]]


def test_dot_marks_colours():
    text = to_dot(build_graph(EXAMPLE_ORDER6))
    assert "style=dashed" in text and "style=solid" in text
    assert text.count("->") == 9


def test_reference_matrices_classify():
    c = classify_matrix(EXAMPLE_ORDER6)
    assert c.type_tag is PTType.TYPE2D and c.params == (4, 1, 2, 4)
    assert classify_matrix(CYCLE10_ORDER40).params == (10, 5, 9, 1)
    assert classify_matrix(CYCLE10_ORDER60).params == (10, 5, 8, 2)
    assert classify_matrix(ORDER16_PT).params == (9, 1, 2, 9)
    c = classify_matrix(TWO_T_BLOCKS_ORDER12)
    assert c.type_tag is PTType.NOT_PT and "3 red arcs" in c.reason


def test_permutation_and_not_pt():
    assert classify_matrix(IntMatrix.identity(4)).type_tag is PTType.PERMUTATION
    assert classify_matrix(IntMatrix([[1, 1], [0, 1]])).type_tag is PTType.NOT_PT


def test_type4_example():
    a = pt_matrix((2, 2, 2, 2), TBlockSpec(1, 5, 3, 7))
    assert classify_matrix(a).type_tag is PTType.TYPE4


@pytest.mark.parametrize("tag,params,a", FAMILY7, ids=lambda v: str(v) if not isinstance(v, IntMatrix) else "")
def test_classification_reconstructs(tag, params, a):
    c = classify_matrix(a)
    assert c.type_tag is tag
    rebuilt = standard_matrix(c.type_tag, c.params)
    target = a.transpose() if c.transposed else a
    assert find_conjugation(rebuilt, target) is not None


def test_classification_is_conjugation_invariant():
    rng = random.Random(3)
    for tag, params, a in FAMILY7[::5]:
        p = list(range(a.n))
        rng.shuffle(p)
        b = conjugate(a, Permutation(tuple(p)))
        ca, cb = classify_matrix(a), classify_matrix(b)
        assert (ca.type_tag, ca.params, ca.transposed) == (cb.type_tag, cb.params, cb.transposed)
        assert classify_matrix(a.transpose()).type_tag is tag


def test_non_elementary_reports_inner_type():
    a = direct_sum(standard_matrix(PTType.TYPE2D, (4, 1, 2, 4)), cycle_companion(3))
    c = classify_matrix(a)
    assert c.type_tag is PTType.NON_ELEMENTARY
    assert c.elementary.type_tag is PTType.TYPE2D
    assert c.elementary.params == (4, 1, 2, 4)
    assert c.satellites == (3,)


def test_classify_rejects_shared_row():
    g = build_graph(IntMatrix([[-1, -1, 1], [1, 1, 0], [1, 0, 0]]))
    assert classify(g).type_tag is PTType.NOT_PT
