from __future__ import annotations

import pytest
from hypothesis import given

from ptasm.asm import (
    BetweennessConstraint,
    SearchCapacityError,
    asm_permutable_2c_graph,
    asm_permutable_2c_matrix,
    asm_permutable_theorem,
    betweenness_constraints,
    find_asm_ordering,
)
from ptasm.enumerate import enumerate_finite_order
from ptasm.fixtures import EXAMPLE_ORDER6, ORDER16_ASM, ORDER16_PT, TWO_T_BLOCKS_ORDER12
from ptasm.forms import PTType, parameter_tuples, standard_matrix
from ptasm.graph import Classification, classify_matrix
from ptasm.matrix import IntMatrix, Permutation, conjugate, is_asm
from ptasm.order import finite_order
from ptasm.theorems import type2c_order

from conftest import signed01_matrices


def _as_sets(constraints):
    return {(c.middle, frozenset((c.left, c.right))) for c in constraints}


def test_type1_constraints():
    c = classify_matrix(standard_matrix(PTType.TYPE1, (5, 1)))
    got = betweenness_constraints(c)
    assert len(got) == 4
    # j between n-j and n; n-j between j and d; j between d+1 and j+1; d+1 between j and n
    assert _as_sets(got) == {
        (1, frozenset((9, 10))),
        (9, frozenset((1, 5))),
        (1, frozenset((6, 2))),
        (6, frozenset((1, 10))),
    }


@pytest.mark.parametrize("params", [(5, 2, 4, 3), (7, 3, 6, 3), (9, 1, 2, 9)])
def test_type2d_constraints(params):
    p, q, i1, i2 = params
    n = p + q
    c = Classification(PTType.TYPE2D, params)
    assert _as_sets(betweenness_constraints(c)) == {
        (p, frozenset((i1 - 1, n))),
        (n, frozenset((i2 - 1, p))),
        (i1, frozenset((1, i2))),
        # column n holds +1 in rows i1 and p+1, with -1 in row i2
        (i2, frozenset((i1, p + 1))),
    }


@pytest.mark.parametrize("params", [(4, 2, 6, 3), (3, 1, 2, 2), (5, 2, 2, 4)])
def test_type3c_constraints(params):
    p, q, m, i = params
    n = p + q + m
    c = Classification(PTType.TYPE3C, params)
    assert _as_sets(betweenness_constraints(c)) == {
        (n, frozenset((p, p + q))),
        (p + q, frozenset((i - 1, n))),
        (i, frozenset((1, p + 1))),
        (1, frozenset((i, p + q + 1))),
    }


def test_constraints_need_a_finite_type():
    with pytest.raises(ValueError):
        betweenness_constraints(Classification(PTType.TYPE4, (1, 1, 1, 1)))


def test_degenerate_flag_and_holds():
    assert BetweennessConstraint(2, 2, 3).degenerate
    order = Permutation.from_one_based((3, 1, 2))
    assert BetweennessConstraint(1, 3, 2).holds(order)
    assert not BetweennessConstraint(3, 1, 2).holds(order)


def test_already_asm_gives_identity():
    assert find_asm_ordering(EXAMPLE_ORDER6) == Permutation.identity(5)
    assert find_asm_ordering(TWO_T_BLOCKS_ORDER12) == Permutation.identity(6)


def test_order16_witness():
    sigma = find_asm_ordering(ORDER16_PT)
    assert sigma is not None
    witness = conjugate(ORDER16_PT, sigma)
    assert is_asm(witness)
    assert witness == ORDER16_ASM
    assert finite_order(witness).order == 16


def test_type2c_exception_has_no_ordering():
    assert find_asm_ordering(standard_matrix(PTType.TYPE2C, (2, 3, 1, 1))) is None


def test_capacity_error():
    with pytest.raises(SearchCapacityError):
        find_asm_ordering(IntMatrix.identity(11))


def test_non_unit_line_sums_fail_fast():
    assert find_asm_ordering(IntMatrix([[1, 1], [0, 0]])) is None
    assert find_asm_ordering(IntMatrix([[2, 0], [0, 1]])) is None


@given(signed01_matrices(max_n=6))
def test_witness_validity_and_reversal_symmetry(a):
    sigma = find_asm_ordering(a)
    if sigma is not None:
        b = conjugate(a, sigma)
        assert is_asm(b)
        before, after = finite_order(a), finite_order(b)
        assert before.order == after.order
    assert (sigma is None) == (find_asm_ordering(a.transpose()) is None)


@pytest.mark.parametrize(
    "tag,params,expected",
    [
        (PTType.TYPE1, (10, 5, 9, 1), True),
        (PTType.TYPE2D, (9, 1, 9, 2), False),
        (PTType.TYPE2D, (9, 1, 2, 9), True),
        (PTType.TYPE2D, (3, 4, 2, 3), False),
        (PTType.TYPE3C, (2, 1, 1, 2), False),
        (PTType.TYPE3C, (4, 1, 1, 4), False),
        (PTType.TYPE3C, (4, 2, 6, 3), True),
        (PTType.TYPE2C, (2, 3, 1, 1), False),
        (PTType.TYPE2C, (3, 3, 1, 2), True),
    ],
)
def test_theorem_values(tag, params, expected):
    assert asm_permutable_theorem(Classification(tag, params)) is expected


def test_theorem_uses_inner_type():
    c = classify_matrix(IntMatrix([[1, 0, 0, 0, 0, 0]] + list(_pad(EXAMPLE_ORDER6))))
    assert c.type_tag is PTType.NON_ELEMENTARY
    assert asm_permutable_theorem(c)


def _pad(a: IntMatrix):
    for row in a.rows:
        yield (0,) + row


def test_theorem_rejects_infinite_types():
    with pytest.raises(ValueError):
        asm_permutable_theorem(Classification(PTType.TYPE2A, (2, 2, 1, 1)))


@pytest.mark.parametrize("n", range(4, 10))
def test_theorem_matches_search_on_records(n):
    for rec in enumerate_finite_order(n):
        c = classify_matrix(rec.standard_matrix)
        sigma = find_asm_ordering(rec.standard_matrix)
        assert asm_permutable_theorem(c) == (sigma is not None), rec
        if sigma is not None:
            # the constraints are phrased in the labels of the classified standard form
            std = standard_matrix(c.type_tag, c.params)
            tau = find_asm_ordering(std)
            assert all(bc.holds(tau) for bc in betweenness_constraints(c))


@pytest.mark.parametrize("n", range(4, 10))
def test_type2c_rules_against_search(n):
    for params in parameter_tuples(PTType.TYPE2C, n):
        found = find_asm_ordering(standard_matrix(PTType.TYPE2C, params)) is not None
        assert asm_permutable_2c_graph(*params) == found, params
        if type2c_order(*params) is not None:
            assert asm_permutable_2c_matrix(*params) == found, params
