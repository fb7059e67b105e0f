from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from dualpair.errors import ContractViolation
from dualpair.exactlin import (
    ZnMatrix,
    howell_form,
    in_span,
    intersect_rows,
    invariant_factors,
    kernel,
    solve,
    span_size,
)


def brute_span(n: int, rows, ncols: int) -> set:
    """All ``x A`` for ``x`` ranging over ``(Z/n)^rows``."""
    out = set()
    for coeffs in itertools.product(range(n), repeat=len(rows)):
        v = [0] * ncols
        for c, r in zip(coeffs, rows):
            v = [(a + c * b) % n for a, b in zip(v, r)]
        out.add(tuple(v))
    if not rows:
        out.add(tuple([0] * ncols))
    return out


@st.composite
def small_matrices(draw, max_rows=3, max_cols=3):
    n = draw(st.integers(2, 12))
    m = draw(st.integers(0, max_rows))
    k = draw(st.integers(1, max_cols))
    rows = [[draw(st.integers(0, n - 1)) for _ in range(k)] for _ in range(m)]
    return ZnMatrix.from_rows(n, rows, k)


def test_howell_known_form():
    H = howell_form(ZnMatrix.from_rows(4, [[2, 2], [0, 2]]))
    assert H.tolist() == [[2, 0], [0, 2]]


def test_howell_of_zero_has_no_rows():
    assert howell_form(ZnMatrix.from_rows(4, [[0]])).nrows == 0


def test_kernel_of_two_mod_four():
    assert kernel(ZnMatrix.from_rows(4, [[2]])).tolist() == [[2]]


def test_solve_examples():
    A = ZnMatrix.from_rows(4, [[2]])
    x, K = solve(A, [2])
    assert (x[0] * 2) % 4 == 2
    assert K.tolist() == [[2]]
    assert solve(A, [1]) is None
    x, _ = solve(ZnMatrix.from_rows(6, [[1]]), [5])
    assert list(x) == [5]


def test_invariant_factors_example():
    assert invariant_factors(ZnMatrix.from_rows(6, [[2, 0], [0, 3]])) == [6]


def test_unreduced_entries_rejected():
    with pytest.raises(ContractViolation):
        ZnMatrix(4, ((5,),), 1)


def test_modulus_bounds():
    with pytest.raises(ContractViolation):
        ZnMatrix.from_rows(1, [[0]])


def test_solve_length_mismatch():
    with pytest.raises(ContractViolation):
        solve(ZnMatrix.from_rows(4, [[1, 0]]), [1])


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_howell_preserves_span_and_is_idempotent(A):
    H = howell_form(A)
    assert H.row_span() == brute_span(A.modulus, A.rows, A.ncols)
    assert howell_form(H) == H
    assert span_size(A.modulus, H.rows) == len(brute_span(A.modulus, A.rows, A.ncols))


@settings(max_examples=100, deadline=None)
@given(small_matrices(), small_matrices())
def test_howell_is_canonical(A, B):
    # same span implies same form; forms are compared at a common shape
    B = ZnMatrix.from_rows(A.modulus, [[x % A.modulus for x in r[: A.ncols]] + [0] * (A.ncols - len(r))
                                       for r in B.rows], A.ncols)
    same = brute_span(A.modulus, A.rows, A.ncols) == brute_span(B.modulus, B.rows, B.ncols)
    assert same == (howell_form(A) == howell_form(B))


@settings(max_examples=100, deadline=None)
@given(small_matrices(max_rows=3, max_cols=2))
def test_kernel_is_exact(A):
    assume(A.nrows > 0)
    n = A.modulus
    K = kernel(A)
    brute = {x for x in itertools.product(range(n), repeat=A.nrows)
             if all(sum(c * r[j] for c, r in zip(x, A.rows)) % n == 0 for j in range(A.ncols))}
    assert K.row_span() == brute


@settings(max_examples=150, deadline=None)
@given(small_matrices(), st.data())
def test_solve_is_sound_and_complete(A, data):
    n = A.modulus
    b = [data.draw(st.integers(0, n - 1)) for _ in range(A.ncols)]
    res = solve(A, b)
    reachable = tuple(b) in brute_span(n, A.rows, A.ncols)
    assert (res is not None) == reachable
    if res is not None:
        x, _ = res
        got = [sum(c * r[j] for c, r in zip(x, A.rows)) % n for j in range(A.ncols)]
        assert got == b


@settings(max_examples=100, deadline=None)
@given(small_matrices(), small_matrices())
def test_intersection_matches_sets(A, B):
    n, k = A.modulus, A.ncols
    B = ZnMatrix.from_rows(n, [[x % n for x in r[:k]] + [0] * (k - len(r)) for r in B.rows], k)
    I = intersect_rows(n, howell_form(A).rows, howell_form(B).rows, k)
    assert brute_span(n, list(I), k) == brute_span(n, A.rows, k) & brute_span(n, B.rows, k)


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_invariant_factors_form_chain_with_right_product(A):
    n = A.modulus
    inv = invariant_factors(A)
    assert all(d > 1 and n % d == 0 for d in inv)
    assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
    quotient = n ** A.ncols // len(brute_span(n, A.rows, A.ncols))
    assert math.prod(inv) == quotient


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_invariant_factors_agree_with_sympy(A):
    n, k = A.modulus, A.ncols
    lifted = [list(r) for r in A.rows] + [[n if i == j else 0 for j in range(k)] for i in range(k)]
    snf = smith_normal_form(Matrix(lifted), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    expected = sorted(math.gcd(d, n) for d in diag if math.gcd(d, n) != 1)
    assert invariant_factors(A) == expected


def test_in_span_uses_howell_rows():
    H = howell_form(ZnMatrix.from_rows(8, [[2, 4]]))
    assert in_span(8, H.rows, (6, 4))
    assert not in_span(8, H.rows, (1, 2))
