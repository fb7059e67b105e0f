from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualpair.errors import ConstructionError, ContractViolation
from dualpair.modules import (
    LinearMap,
    all_submodules,
    cyclic,
    divisor_chains,
    dual,
    dual_values,
    free_module,
    module_from_chain,
    submodule_span,
)
from dualpair.pairings import (
    an,
    canonical_pairing,
    canonical_right_pairing,
    dual_map,
    dual_submodule,
    image_of,
    induced_pairing,
    ke,
    make_pairing,
    restrict_W,
    subpairing,
    zero_pairing,
)
from dualpair.rings import ut2_f2, zmod

R4 = zmod(4)


def values(S) -> set:
    return {v[0] for v in S.elements()}


def functionals(N, S) -> set:
    D = dual(N)
    return {dual_values(D, c) for c in S.elements()}


@pytest.fixture
def mult():
    return make_pairing(cyclic(R4, 4, "right"), cyclic(R4, 4, "left"), [[1]], "mult")


@pytest.fixture
def degenerate():
    return make_pairing(cyclic(R4, 4, "right"), cyclic(R4, 4, "left"), [[2]], "degenerate")


def brute_perp_of_W(P, F) -> set:
    return {v for v in P.V.elements() if all(P.pair(v, w) == 0 for w in F)}


def brute_perp_of_V(P, X) -> set:
    return {w for w in P.W.elements() if all(P.pair(v, w) == 0 for v in X)}


@st.composite
def zmod_pairings(draw):
    n = draw(st.sampled_from([4, 6, 8, 9, 12]))
    R = zmod(n)
    chains = divisor_chains(n, 2, max_card=16)
    V = module_from_chain(R, draw(st.sampled_from(chains)), "right")
    W = module_from_chain(R, draw(st.sampled_from(chains)), "left")
    # entries must be killed by gcd of the two orders, so scale by n / gcd
    B = []
    for d in V.canonical:
        row = []
        for e in W.canonical:
            step = n // math.gcd(d, e)
            row.append(step * draw(st.integers(0, n)) % n)
        B.append(row)
    return make_pairing(V, W, B)


# construction


def test_callable_beta_validated():
    V, W = cyclic(R4, 4, "right"), cyclic(R4, 4, "left")
    P = make_pairing(V, W, lambda v, w: (v[0] * w[0]) % 4)
    assert P.B == ((1,),)
    with pytest.raises(ConstructionError) as exc:
        make_pairing(V, W, lambda v, w: (v[0] + w[0]) % 4)
    assert exc.value.witness


def test_beta_shape_checked():
    with pytest.raises(ContractViolation, match="beta"):
        make_pairing(cyclic(R4, 4), cyclic(R4, 4, "left"), [[1, 0]])


def test_ill_defined_beta_rejected():
    with pytest.raises((ConstructionError, ContractViolation)):
        make_pairing(cyclic(R4, 2), cyclic(R4, 4, "left"), [[1]])


# orthogonals


def test_perp_of_W_examples(mult):
    assert values(mult.perp_of_W_subset([(2,)])) == {0, 2}
    assert values(mult.perp_of_W_subset([])) == {0, 1, 2, 3}
    assert values(mult.perp_of_W_subset(mult.W.full())) == {0}


def test_perp_of_V_examples(mult, degenerate):
    assert values(mult.perp_of_V_subset([(0,), (2,)])) == {0, 2}
    assert values(mult.perp_of_V_subset([(0,)])) == {0, 1, 2, 3}
    assert values(degenerate.perp_of_V_subset(degenerate.V.full())) == {0, 2}


def test_an_and_ke_examples():
    N = cyclic(R4, 4, "right")
    assert functionals(N, an(N, [(2,)])) == {(0,), (2,)}
    assert functionals(N, an(N, [])) == {(0,), (1,), (2,), (3,)}
    assert functionals(N, an(N, N.full())) == {(0,)}
    assert values(ke(N, [(2,)])) == {0, 2}
    assert values(ke(N, [(0,)])) == {0, 1, 2, 3}
    assert values(ke(N, dual(N).module.full())) == {0}
    assert values(ke(N, dual_submodule(N, [(2,)]))) == {0, 2}


def test_closure_and_biperp_examples(mult, degenerate):
    X = submodule_span(mult.V, [(2,)])
    assert values(mult.closure(X)) == {0, 2}
    assert values(mult.biperp(X)) == {0, 2}
    assert values(mult.biperp(mult.V.zero_submodule())) == {0}
    assert values(degenerate.closure(degenerate.V.zero_submodule())) == {0, 2}
    assert values(degenerate.biperp(degenerate.V.zero_submodule())) == {0, 2}
    assert degenerate.closure(degenerate.V.full()) == degenerate.V.full()


def test_density_examples(mult, degenerate):
    X = submodule_span(mult.V, [(2,)])
    assert not mult.is_dense(X, mult.V.full())
    assert mult.is_dense(X, X)
    assert degenerate.is_dense(degenerate.V.zero_submodule(), submodule_span(degenerate.V, [(2,)]))
    with pytest.raises(ContractViolation):
        mult.is_dense(mult.V.full(), X)


def test_hausdorff_examples(mult, degenerate):
    assert mult.is_hausdorff()
    assert not degenerate.is_hausdorff()
    assert not zero_pairing(mult.V, mult.W).is_hausdorff()


def test_completion_examples(mult, degenerate):
    c = mult.completion()
    assert c.is_isomorphism
    c = degenerate.completion()
    assert c.module.cardinality == 2
    assert c.injective and not c.surjective and not c.dense
    P = make_pairing(cyclic(R4, 2, "right"), cyclic(R4, 4, "left"), [[2]])
    c = P.completion()
    assert c.module.cardinality == 2
    assert not c.is_isomorphism


# properties checked against enumeration


@settings(max_examples=60, deadline=None)
@given(zmod_pairings(), st.data())
def test_orthogonals_match_enumeration(P, data):
    subs = all_submodules(P.V)
    X = data.draw(st.sampled_from(subs))
    Xel = X.elements()
    assert set(P.perp_of_V_subset(X).elements()) == brute_perp_of_V(P, Xel)
    F = data.draw(st.sampled_from(all_submodules(P.W)))
    assert set(P.perp_of_W_subset(F).elements()) == brute_perp_of_W(P, F.elements())


@settings(max_examples=60, deadline=None)
@given(zmod_pairings(), st.data())
def test_galois_connection_laws(P, data):
    X = data.draw(st.sampled_from(all_submodules(P.V)))
    bp = P.biperp(X)
    assert X <= bp
    assert P.perp_of_V_subset(bp) == P.perp_of_V_subset(X)
    assert P.closure(X) == P.closure(P.closure(X))


@settings(max_examples=40, deadline=None)
@given(zmod_pairings(), st.data())
def test_closure_families_agree(P, data):
    X = data.draw(st.sampled_from(all_submodules(P.V)))
    definitional = set.intersection(*[set((X + N).elements()) for N in P.neighbourhoods("lattice")])
    assert set(P.closure(X).elements()) == definitional
    assert P.closure(X, family="chain") == P.closure(X, family="lattice")


@settings(max_examples=40, deadline=None)
@given(zmod_pairings())
def test_dense_pairing_iff_kappa_surjective(P):
    surj = len({P.kappa_values(v) for v in P.V.elements()}) == dual(P.W).module.cardinality
    assert bool(P.is_dense_pairing()) == surj


# subpairings, restrictions, induced pairings


def test_subpairing_examples(mult):
    Q, mor, meta = subpairing(mult, [(2,)], [(2,)])
    assert Q.V.cardinality == 2 and Q.W.cardinality == 2
    assert meta["W_prime_pure"] is False
    Q, _, _ = subpairing(mult, [], mult.W.full())
    assert Q.V.cardinality == 4 and Q.W.cardinality == 4
    with pytest.raises(ContractViolation):
        subpairing(mult, [(2,)], mult.W.full())


def test_restrict_and_induce(mult):
    Pr, pres = restrict_W(mult, [(2,)])
    assert pres.module.cardinality == 2
    assert not Pr.is_hausdorff()
    xi = LinearMap.from_images(cyclic(R4, 2, "right"), mult.V, [(2,)])
    Pi = induced_pairing(mult, xi)
    assert Pi.pair((1,), (1,)) == 2


def test_canonical_pairings_are_hausdorff_over_qf():
    for n in (4, 6, 9):
        for ch in divisor_chains(n, 2, max_card=16):
            W = module_from_chain(zmod(n), ch, "left")
            P = canonical_pairing(W)
            assert P.chi_injective()
            assert P.is_dense_pairing()
            assert canonical_right_pairing(module_from_chain(zmod(n), ch)).is_hausdorff()


def test_canonical_pairing_over_table_ring():
    W = free_module(ut2_f2(), 1, "left")
    P = canonical_pairing(W)
    assert P.V.cardinality == 8
    for v, w in itertools.product(P.V.elements(), W.elements()):
        assert P.pair(v, w) == P.ring.mul(w[0], P.kappa_values(v)[0])


# dual maps


def test_dual_map_of_doubling():
    Z4 = cyclic(R4, 4, "left")
    theta = LinearMap.from_images(Z4, Z4, [(2,)])
    D = dual_map(theta)
    K = submodule_span(Z4, [(2,)])
    AnK = an(Z4, K)
    assert image_of(D.map, AnK).is_zero()
    assert an(Z4, theta.preimage(K)).is_zero()


def test_dual_map_of_identity():
    W = module_from_chain(zmod(6), [6], "left")
    D = dual_map(LinearMap.from_images(W, W, [W.gen(0)]))
    for x in D.map.domain.elements():
        assert D.map(x) == x


def test_dual_map_of_projection():
    R = zmod(6)
    theta = LinearMap.from_images(cyclic(R, 6, "left"), cyclic(R, 3, "left"), [(1,)])
    D = dual_map(theta)
    assert D.map.is_injective()
    # preimage of An(K') under the dual map equals An(theta(K')) for every K'
    for Kp in all_submodules(theta.domain):
        lhs = D.map.preimage(an(theta.domain, Kp))
        assert lhs == an(theta.codomain, image_of(theta, Kp))
