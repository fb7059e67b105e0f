from __future__ import annotations

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualpair import alphacond as ac
from dualpair.errors import HypothesisError, UnsupportedError
from dualpair.modules import (
    all_submodules,
    cyclic,
    divisor_chains,
    free_module,
    is_projective,
    module_from_chain,
    submodule_span,
    tensor,
    zero_module,
)
from dualpair.pairings import canonical_pairing, dual_submodule, make_pairing, restrict_W
from dualpair.rings import ut2_f2, zmod

R4, R6 = zmod(4), zmod(6)


def mult(R, n=None):
    n = n or R.n
    return make_pairing(cyclic(R, n, "right"), cyclic(R, n, "left"), [[1]], "mult")


def brute_alpha_kernel(P, M) -> list:
    """Nonzero tensor elements whose α-image vanishes on every ``v``."""
    A = ac.alpha_map(P, M)
    T = A.tensor.module
    return [t for t in T.elements() if not T.is_zero_element(t)
            and all(M.is_zero_element(A.value_at(t, v)) for v in P.V.elements())]


@st.composite
def zmod_pairings(draw, ns=(4, 6, 8, 9)):
    n = draw(st.sampled_from(ns))
    R = zmod(n)
    chains = divisor_chains(n, 2, max_card=12)
    V = module_from_chain(R, draw(st.sampled_from(chains)), "right")
    W = module_from_chain(R, draw(st.sampled_from(chains)), "left")
    B = [[n // math.gcd(d, e) * draw(st.integers(0, n)) % n for e in W.canonical] for d in V.canonical]
    return make_pairing(V, W, B)


# α-map and α-condition


def test_alpha_map_on_mult_pairing():
    A = ac.alpha_map(mult(R4), cyclic(R4, 2))
    assert A.tensor.module.cardinality == 2
    assert [A.value_at((1,), v) for v in [(0,), (1,), (2,), (3,)]] == [(0,), (1,), (0,), (1,)]
    assert A.map.is_injective()


def test_alpha_map_on_zero_module():
    A = ac.alpha_map(mult(R4), zero_module(R4, "right"))
    assert A.tensor.module.cardinality == 1
    assert A.map.is_injective()


def test_alpha_fails_for_z2_over_z4():
    P = canonical_pairing(cyclic(R4, 2, "left"))
    v = ac.alpha_injective_for(P, cyclic(R4, 2))
    assert not v
    assert v.witness["element"] == [1]
    assert brute_alpha_kernel(P, cyclic(R4, 2)) == [(1,)]
    sa = ac.satisfies_alpha(P)
    assert not sa and sa.certainty == "exact"
    assert sa.witness["test_module"]["canonical"] == [2]


def test_alpha_holds_for_mult_pairing():
    P = mult(R4)
    assert ac.alpha_injective_for(P, cyclic(R4, 2))
    assert ac.alpha_injective_for(P, cyclic(R4, 4))
    v = ac.satisfies_alpha(P)
    assert v and v.certainty == "exact"


def test_alpha_over_semisimple_ring_is_embedding():
    # over a field α fails exactly when W does not embed in V*, e.g. V = 0
    R = zmod(2)
    for a, b in itertools.product([(), (2,), (2, 2)], repeat=2):
        V, W = module_from_chain(R, a), module_from_chain(R, b, "left")
        for B in itertools.product(range(2), repeat=len(a) * len(b)):
            rows = [list(B[i * len(b):(i + 1) * len(b)]) for i in range(len(a))]
            P = make_pairing(V, W, rows)
            assert bool(ac.satisfies_alpha(P)) == bool(P.chi_injective())


@settings(max_examples=40, deadline=None)
@given(zmod_pairings())
def test_alpha_verdict_matches_brute_force(P):
    R = P.ring
    expected = all(not brute_alpha_kernel(P, cyclic(R, d)) for d in range(2, R.n + 1) if R.n % d == 0)
    assert bool(ac.satisfies_alpha(P)) == expected


@settings(max_examples=40, deadline=None)
@given(zmod_pairings())
def test_alpha_implies_w_embeds_in_dual(P):
    if ac.satisfies_alpha(P):
        assert P.chi_injective()


def test_alpha_over_table_ring_is_bounded():
    R = ut2_f2()
    P = canonical_pairing(free_module(R, 1, "left"))
    v = ac.satisfies_alpha(P)
    assert v and v.certainty == "bounded"


# local projectivity


def test_local_projectivity_examples():
    v = ac.is_locally_projective(cyclic(R4, 2, "left"))
    assert not v
    assert v.details == {"route_alpha": False, "route_dual_basis": False}
    assert ac.is_locally_projective(cyclic(R4, 4, "left"))
    assert ac.is_locally_projective(cyclic(R6, 2, "left"))


@pytest.mark.parametrize("n", [4, 6, 8, 9])
def test_local_projectivity_equals_projectivity(n):
    for ch in divisor_chains(n, 2):
        W = module_from_chain(zmod(n), ch, "left")
        assert bool(ac.is_locally_projective(W)) == bool(is_projective(W))


def test_local_dual_basis_reconstructs():
    W = module_from_chain(R6, [3, 6], "left")
    xs = [(1, 2)]
    basis = ac.local_dual_basis(W, xs)
    assert basis is not None


# membership criterion


def test_q2_examples():
    P = mult(R4)
    M = cyclic(R4, 4)
    N = submodule_span(M, [(2,)])
    T = tensor(M, P.W)
    assert ac.q2_membership(P, M, N, T.pure((1,), (2,)))
    assert not ac.q2_membership(P, M, N, T.pure((1,), (1,)))
    assert ac.q2_membership(P, M, N, (0,))


def test_q2_requires_alpha():
    P = canonical_pairing(cyclic(R4, 2, "left"))
    M = cyclic(R4, 2)
    with pytest.raises(HypothesisError):
        ac.q2_membership(P, M, M.zero_submodule(), (0,))


# tensor pairings


def test_tensor_of_mult_pairings():
    L, info = ac.tensor_pairing_checked(mult(R4), mult(R4))
    assert L.V.cardinality == 4 and L.W.cardinality == 4
    assert L.pair(L.V.gen(0), L.W.gen(0)) == 1
    assert info == {"alpha_P": True, "alpha_P2": True, "alpha_product": True}


def test_tensor_with_zero_pairing():
    Z = make_pairing(zero_module(R4, "right"), zero_module(R4, "left"), [])
    L = ac.tensor_pairing(mult(R4), Z)
    assert L.V.cardinality == 1 and L.W.cardinality == 1


def test_tensor_with_restricted_pure_summand():
    Pr, _ = restrict_W(mult(R6), [(3,)])
    assert ac.satisfies_alpha(Pr)
    _, info = ac.tensor_pairing_checked(mult(R6), Pr)
    assert info["alpha_product"]


def test_tensor_pairing_unsupported_on_tables():
    P = canonical_pairing(free_module(ut2_f2(), 1, "left"))
    with pytest.raises(UnsupportedError):
        ac.tensor_pairing(P, P)


# β, δ and the Ke formula


@pytest.mark.parametrize("d,x", [(2, 1), (2, 2), (4, 1), (4, 2), (4, 3)])
def test_beta_map_injective(d, x):
    f, v = ac.beta_map(cyclic(R4, d), x)
    assert v
    if x == 1:
        assert f.is_surjective()


def test_uno_delta_examples():
    F = free_module(R6, 1, "right")
    Fl = free_module(R6, 1, "left")
    d, v, info = ac.uno_delta(F.full(), Fl.full())
    assert v and d.is_surjective()
    d, v, info = ac.uno_delta(submodule_span(F, [(3,)]), Fl.full())
    assert v and info["E_pure"]


def test_ke_formula_nondegenerate_case():
    W = cyclic(R6, 6, "left")
    X = dual_submodule(W, [(1,)])
    v = ac.ke_formula(W, W, X, X)
    assert v
    assert v.details == {"W_flat": True, "Ke_X_pure": True}


# subpairing statements


def test_rp_rp_pure_summand():
    P = mult(R6)
    out = ac.rp_rp_suite(P, P.V.zero_submodule(), submodule_span(P.W, [(3,)]))
    assert out["1a-equivalence"]["pure"] and out["1a-equivalence"]["alpha_restricted"]
    assert all(v["holds"] for v in out.values())


def test_rp_rp_non_pure_submodule():
    P = mult(R4)
    out = ac.rp_rp_suite(P, P.V.zero_submodule(), submodule_span(P.W, [(2,)]))
    assert not out["1a-equivalence"]["pure"]
    assert not out["1a-equivalence"]["alpha_restricted"]
    assert all(v["holds"] for v in out.values())


def test_rp_rp_full_submodule():
    P = mult(R4)
    out = ac.rp_rp_suite(P, P.V.zero_submodule(), P.W.full())
    assert out["1a-equivalence"]["pure"]
    assert out["1a-equivalence"]["alpha_restricted"] == bool(ac.satisfies_alpha(P))


@pytest.mark.parametrize("n,chain", [(4, [2, 4]), (6, [3, 6])])
def test_rp_rp_chain_over_corpus(n, chain):
    for P in (mult(zmod(n)), canonical_pairing(module_from_chain(zmod(n), chain, "left"))):
        for Vp in all_submodules(P.V):
            out = ac.rp_rp_chain(P, Vp)
            assert out["chain"] and out["equivalence"]


# semisimple and QF equivalences


def test_pw_dicht_examples():
    out = ac.pw_dicht_suite(mult(zmod(2)))
    assert out["PW"]["holds"] and all(out["PW"]["statements"].values())
    assert out["dicht"]["holds"]
    P = make_pairing(cyclic(R4, 4), cyclic(R4, 2, "left"), [[2]])
    out = ac.pw_dicht_suite(P)
    assert out["PW"]["holds"]
    assert not any(out["PW"]["statements"].values())
    P = make_pairing(cyclic(R4, 4), zero_module(R4, "left"), [[]])
    out = ac.pw_dicht_suite(P)
    assert out["PW"]["holds"] and all(out["PW"]["statements"].values())


def test_hered_check_on_semisimple_ring():
    assert ac.hered_check(module_from_chain(R6, [6], "right"))


# reduction oracle


def test_cyclic_reduction_oracle_agrees_on_small_draws():
    rng = random.Random(3)
    P = mult(R4)
    for K in all_submodules(P.W):
        res = ac.cyclic_reduction_oracle(P, K, seed=rng.randrange(1000), max_card=16)
        assert res["agree"]
        assert res["family_size"] > 0


def test_bruteforce_family_covers_every_isomorphism_type():
    fam = ac.bruteforce_family(R4, max_card=16)
    types = {M.canonical for M in fam}
    expected = {ch for ch in divisor_chains(4, 4, max_card=16) if ch}
    assert expected <= types
