import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sigmalat.errors import BadAction, CapExceeded, NotNormal
from sigmalat.perm import (alternating, center, centralizer, commutator_subgroup, conjugacy_classes, cyclic,
                           cyclic_extension, dihedral, direct_product, element_order, from_cycles, generate,
                           is_abelian, normalizer, perm_inv, perm_mul, quaternion8, quotient, semidirect_product, sl2,
                           symmetric, to_cycles, wreath_regular)

from conftest import group, names
from oracles import closure, inv, mul, order_of


def test_product_convention_matches_oracle():
    p = from_cycles(3, [(0, 1)])
    q = from_cycles(3, [(1, 2)])
    assert perm_mul(p, q) == mul(p, q)
    # 0 -> 1 under p, then 1 -> 2 under q
    assert perm_mul(p, q)[0] == 2
    assert perm_inv(perm_mul(p, q)) == inv(mul(p, q))


@pytest.mark.parametrize("g, k", [((0, 1, 2), 1), (from_cycles(3, [(0, 1, 2)]), 3),
                                  (from_cycles(5, [(0, 1), (2, 3, 4)]), 6)])
def test_element_order(g, k):
    assert element_order(g) == k == order_of(g)


@pytest.mark.parametrize("make, order", [
    (lambda: sl2(3), 24), (lambda: sl2(5), 120), (lambda: cyclic_extension(7, 3, 2), 21),
    (lambda: wreath_regular(cyclic(3), cyclic(2)), 18), (lambda: dihedral(8), 8), (quaternion8, 8),
    (lambda: symmetric(5), 120), (lambda: alternating(5), 60),
])
def test_constructor_orders(make, order):
    G = make()
    assert G.order == order
    assert len(closure(G.generators, G.degree)) == order


def test_semidirect_c7_c3_nonabelian():
    G = cyclic_extension(7, 3, 2)
    assert not is_abelian(G)


def test_semidirect_rejects_bad_action():
    with pytest.raises(BadAction):
        cyclic_extension(7, 3, 3)  # 3 has order 6 mod 7
    C4 = cyclic(4)
    with pytest.raises(BadAction):
        # x -> x^2 is not an automorphism of C4
        semidirect_product(C4, cyclic(2), [[perm_mul(C4.generators[0], C4.generators[0])]])


def test_caps():
    with pytest.raises(CapExceeded):
        generate(6, symmetric(6).generators, element_cap=100)
    with pytest.raises(CapExceeded):
        wreath_regular(cyclic(5), cyclic(4), size_cap=1000)


def test_elements_sorted_identity_first():
    G = symmetric(4)
    assert list(G.elements) == sorted(G.elements)
    assert G.elements[0] == tuple(range(4))


def test_tables_match_oracle():
    G = sl2(3)
    els = G.elements
    for i in range(0, G.order, 5):
        for j in range(0, G.order, 7):
            assert els[G.table[i, j]] == mul(els[i], els[j])
        assert els[G.inverse[i]] == inv(els[i])
        assert G.element_orders[i] == order_of(els[i])


def test_center_examples():
    assert center(quaternion8()).order == 2
    assert center(symmetric(3)).is_trivial()
    S3 = symmetric(3)
    t = S3.subgroup([from_cycles(3, [(0, 1)])])
    assert normalizer(S3, t) == t


@pytest.mark.parametrize("name", ["S4", "Q8", "SL(2,3)", "C5:C4", "D12"])
def test_center_centralizer_oracle(name):
    G = group(name)
    els = G.elements
    Z = {x for x in els if all(mul(x, y) == mul(y, x) for y in els)}
    assert set(center(G).elements) == Z
    S = G.subgroup([els[-1]])
    C = {x for x in els if all(mul(x, s) == mul(s, x) for s in S.elements)}
    assert set(centralizer(G, S).elements) == C


def test_conjugacy_classes_examples():
    assert sorted(map(len, conjugacy_classes(symmetric(3)))) == [1, 2, 3]
    assert sorted(map(len, conjugacy_classes(quaternion8()))) == [1, 1, 2, 2, 2]
    assert all(len(c) == 1 for c in conjugacy_classes(cyclic(6)))


@pytest.mark.parametrize("name", names(120))
def test_class_equation(name):
    G = group(name)
    classes = conjugacy_classes(G)
    assert sum(map(len, classes)) == G.order
    assert all(G.order % len(c) == 0 for c in classes)
    assert [min(c) for c in classes] == sorted(min(c) for c in classes)


def test_quotient_examples():
    S3 = symmetric(3)
    A3 = commutator_subgroup(S3)
    Q, phi = quotient(S3, A3)
    assert Q.order == 2 and phi.is_homomorphism()
    Q8 = quaternion8()
    Q, phi = quotient(Q8, center(Q8))
    assert Q.order == 4 and set(Q.element_orders[1:]) == {2}
    Q, _ = quotient(S3, S3.whole())
    assert Q.order == 1
    with pytest.raises(NotNormal):
        quotient(S3, S3.subgroup([from_cycles(3, [(0, 1)])]))


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "A4xC2", "D24", "C3wrC2"])
def test_quotient_orders_and_kernel(name):
    from sigmalat.lattice import normal_subgroups
    G = group(name)
    for N in normal_subgroups(G):
        Q, phi = quotient(G, N)
        assert Q.order * N.order == G.order
        assert phi.is_homomorphism()
        assert phi.kernel == N


def test_direct_product_center():
    A, B = quaternion8(), symmetric(3)
    P = direct_product(A, B)
    assert P.order == 48
    assert center(P).order == center(A).order * center(B).order


def test_cycles_roundtrip():
    g = from_cycles(6, [(0, 3), (1, 4, 5)])
    assert to_cycles(g) == "(1 4)(2 5 6)"
    assert to_cycles(tuple(range(3))) == "()"
    with pytest.raises(ValueError):
        from_cycles(3, [(0, 1), (1, 2)])


perms5 = st.permutations(list(range(5))).map(tuple)


@settings(max_examples=40, deadline=None)
@given(st.lists(perms5, min_size=0, max_size=3))
def test_generate_matches_oracle_and_is_idempotent(gens):
    G = generate(5, gens)
    assert set(G.elements) == closure(gens, 5)
    H = generate(5, G.elements)
    assert H.elements == G.elements
    assert G.hash == H.hash


@settings(max_examples=30, deadline=None)
@given(st.lists(perms5, min_size=1, max_size=2))
def test_group_axioms(gens):
    G = generate(5, gens)
    t = G.table
    n = G.order
    assert (t[0] == np.arange(n)).all() and (t[:, 0] == np.arange(n)).all()
    assert (t[np.arange(n), G.inverse] == 0).all()
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, 20))
    assert (t[t[a, b], c] == t[a, t[b, c]]).all()
