from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualpair.errors import ConstructionError, ContractViolation
from dualpair.rings import (
    f2_x2,
    f2_xy_local,
    ideals,
    is_cogenerator_ring,
    is_hereditary,
    is_qf,
    is_self_injective,
    is_semisimple,
    is_squarefree,
    left_ideals,
    maximal_ideals,
    named_ring,
    predicate_table,
    right_ideals,
    simple_modules,
    table_ring,
    ut2_f2,
    zmod,
    zmod_table,
)


def brute_right_ideals(R) -> set:
    """Every subset closed under addition and right multiplication that contains zero."""
    E = list(R.elements)
    out = set()
    for bits in itertools.product((0, 1), repeat=len(E)):
        S = {e for e, b in zip(E, bits) if b}
        if R.zero not in S:
            continue
        if all(R.add(a, b) in S for a in S for b in S) and all(R.mul(a, r) in S for a in S for r in E):
            out.add(frozenset(S))
    return out


def test_zmod4_ideals():
    assert [I.labels() for I in ideals(zmod(4))] == [["0"], ["0", "2"], ["0", "1", "2", "3"]]


def test_zmod6_ideals():
    got = {tuple(I.labels()) for I in ideals(zmod(6))}
    assert got == {("0",), ("0", "3"), ("0", "2", "4"), ("0", "1", "2", "3", "4", "5")}


def test_zmod6_simple_modules():
    assert sorted(S.cardinality for S in simple_modules(zmod(6))) == [2, 3]


def test_zmod1_rejected():
    with pytest.raises(ContractViolation):
        zmod(1)


def test_table_ring_reports_failed_axiom():
    # multiplication is not distributive over this addition
    add = [[0, 1], [1, 0]]
    mul = [[0, 1], [1, 1]]
    with pytest.raises(ConstructionError) as exc:
        table_ring(["a", "b"], add, mul, zero=0, one=1)
    assert exc.value.witness is not None


def test_table_ring_needs_distinct_zero_and_one():
    with pytest.raises(ConstructionError):
        table_ring(["a"], [[0]], [[0]], zero=0, one=0)


def test_table_ring_out_of_range_entry():
    with pytest.raises(ConstructionError):
        table_ring(["a", "b"], [[0, 1], [1, 2]], [[0, 0], [0, 1]], zero=0, one=1)


@pytest.mark.parametrize("factory", [ut2_f2, f2_xy_local, f2_x2, lambda: zmod_table(6), lambda: zmod(8)])
def test_ideals_match_brute_force(factory):
    R = factory()
    assert {frozenset(I.elements) for I in right_ideals(R)} == brute_right_ideals(R)


def test_ut2_has_seven_right_ideals_and_is_not_self_injective():
    R = ut2_f2()
    assert len(right_ideals(R)) == 7
    assert len(left_ideals(R)) == 7
    v = is_self_injective(R)
    assert not v
    assert v.witness["ideal"] and v.witness["map"]
    assert not is_qf(R)
    assert is_hereditary(R)
    assert not is_semisimple(R)


def test_local_rings_of_order_four_and_eight():
    assert is_qf(f2_x2())
    assert not is_qf(f2_xy_local())
    # every simple embeds, but the ring still fails Baer's criterion
    assert is_cogenerator_ring(f2_xy_local())
    assert not is_self_injective(f2_xy_local())


@pytest.mark.parametrize("n", range(2, 13))
def test_zmod_predicates(n):
    R = zmod(n)
    q = is_qf(R, check_left=True)
    assert q
    assert q.details == {"self_injective": True, "cogenerator": True}
    assert bool(is_semisimple(R)) == is_squarefree(n)
    assert bool(is_hereditary(R)) == is_squarefree(n)
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    assert len(maximal_ideals(R)) == len(primes)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 9, 12])
def test_table_backend_agrees_with_zmod(n):
    A, B = zmod(n), zmod_table(n)
    assert predicate_table(A)["qf"] == predicate_table(B)["qf"]
    assert bool(is_semisimple(A)) == bool(is_semisimple(B))
    assert {frozenset(I.elements) for I in ideals(A)} == {frozenset(I.elements) for I in ideals(B)}
    assert sorted(S.cardinality for S in simple_modules(A)) == sorted(S.cardinality for S in simple_modules(B))


def test_named_ring_resolution():
    assert named_ring("4").size == 4
    assert named_ring("zmod9").size == 9
    assert named_ring("table-zmod3").size == 3
    assert named_ring("ut2") is named_ring("UT2")
    with pytest.raises(ContractViolation):
        named_ring("nope")


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30))
def test_semisimple_iff_squarefree(n):
    assert bool(is_semisimple(zmod(n))) == is_squarefree(n)


def test_predicate_table_has_baer_witness_when_not_self_injective():
    row = predicate_table(ut2_f2())
    assert row["self_injective"] is False
    assert "baer_witness" in row
    assert row["noetherian"]["value"] is True
