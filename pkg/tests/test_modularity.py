import math

import pytest

from sigmalat.errors import NotNormalized
from sigmalat.lattice import core, get_lattice, maximal_subgroups, normal_closure, normal_subgroups, sylow
from sigmalat.modularity import (Strategy, detect_p_group_shape, find_pentagon, induces_power_automorphisms,
                                 is_dedekind, is_iwasawa, is_m_group, is_modular_in, is_quasinormal,
                                 is_sigma_quasinormal, is_sigma_subquasinormal, is_submodular, modular_elements,
                                 submodular_chain)
from sigmalat.perm import (alternating, perm_inv, semidirect_product, cached_quotient, center, cyclic_extension, dihedral, from_cycles, quaternion8,
                           symmetric)
from sigmalat.sigma import SigmaPartition, is_sigma_subnormal

from conftest import GRID, group, names, sigma
from oracles import as_set, from_group

S1 = SigmaPartition.sigma1()


def reflection(D8):
    # a non-central involution of the square group
    return D8.subgroup([from_cycles(4, [(1, 3)])])


class TestModular:
    def test_examples(self):
        D8 = dihedral(8)
        s = reflection(D8)
        res = is_modular_in(s, D8, Strategy.DIRECT)
        assert not res and res.witness is not None
        assert not is_modular_in(s, D8, Strategy.REDUCED)
        Q8 = quaternion8()
        assert all(is_modular_in(A, Q8) for A in get_lattice(Q8))
        A5 = alternating(5)
        a = A5.subgroup([from_cycles(5, [(0, 1), (2, 3)])])
        assert not is_modular_in(a, A5)

    @pytest.mark.parametrize("name", [n for n in names(27)])
    def test_direct_matches_brute(self, name):
        G = group(name)
        brute = from_group(G)
        for A in get_lattice(G):
            assert bool(is_modular_in(A, G, Strategy.DIRECT)) == brute.is_modular(as_set(A), brute.G)

    @pytest.mark.parametrize("name", names(100))
    def test_direct_matches_reduced(self, name):
        G = group(name)
        for A in get_lattice(G):
            assert bool(is_modular_in(A, G, Strategy.DIRECT)) == bool(is_modular_in(A, G, Strategy.REDUCED))

    @pytest.mark.parametrize("name", ["S4", "D8", "SL(2,3)", "C5:C4", "A4xC2"])
    def test_interval_modularity_is_quotient_modularity(self, name):
        G = group(name)
        lat = get_lattice(G)
        t = lat.index(G.whole())
        for N in normal_subgroups(G):
            Q, phi = cached_quotient(G, N)
            mask = modular_elements(lat, t, lat.index(N))
            for i in lat.interval_idx(lat.index(N), t):
                assert bool(mask >> i & 1) == bool(is_modular_in(phi.image(lat[i]), Q, Strategy.DIRECT))


class TestQuasinormal:
    def test_examples(self):
        S3 = symmetric(3)
        assert not is_quasinormal(S3.subgroup([from_cycles(3, [(0, 1)])]), S3)
        assert is_quasinormal(S3.subgroup([from_cycles(3, [(0, 1, 2)])]), S3)
        Q8 = quaternion8()
        assert all(is_quasinormal(A, Q8) for A in get_lattice(Q8))

    @pytest.mark.parametrize("name", names(100))
    def test_full_matches_cyclic_and_modular_subnormal(self, name):
        G = group(name)
        for A in get_lattice(G):
            q = is_quasinormal(A, G, Strategy.FULL)
            assert q == is_quasinormal(A, G, Strategy.CYCLIC)
            assert q == (bool(is_modular_in(A, G)) and is_sigma_subnormal(S1, A, G))
            assert q == is_sigma_quasinormal(S1, A, G)

    @pytest.mark.parametrize("name", [n for n in names(24)])
    def test_brute(self, name):
        G = group(name)
        brute = from_group(G)
        for A in get_lattice(G):
            assert is_quasinormal(A, G) == brute.is_quasinormal(as_set(A), brute.G)


class TestChains:
    def test_submodular_example(self):
        D8 = dihedral(8)
        s = reflection(D8)
        assert is_submodular(s, D8)
        chain = submodular_chain(s, D8)
        assert chain[0] == s and chain[-1] == D8.whole() and len(chain) == 3
        assert chain[1].order == 4

    @pytest.mark.parametrize("name", names(60))
    @pytest.mark.parametrize("spec", GRID)
    def test_chain_implications(self, name, spec):
        G = group(name)
        s = sigma(spec)
        for A in get_lattice(G):
            if is_sigma_quasinormal(s, A, G):
                assert is_sigma_subquasinormal(s, A, G)
            if is_sigma_subquasinormal(s, A, G):
                assert is_submodular(A, G) and is_sigma_subnormal(s, A, G)
            if is_modular_in(A, G):
                assert is_submodular(A, G)

    @pytest.mark.parametrize("name", names(60))
    @pytest.mark.parametrize("spec", GRID)
    def test_maximal_sigma_quasinormal(self, name, spec):
        G = group(name)
        s = sigma(spec)
        for M in maximal_subgroups(G):
            C = core(M, G)
            q = cached_quotient(G, C)[0].order
            simple_primary = M == C and s.is_primary_number(q) and not any(
                M < N < G.whole() for N in normal_subgroups(G))
            pq = (s.is_primary_number(q) and len([p for p in range(2, q + 1) if q % p == 0 and all(
                p % r for r in range(2, p))]) == 2 and math.prod(
                p for p in range(2, q + 1) if q % p == 0 and all(p % r for r in range(2, p))) == q
                and not _abelian_quotient(G, C))
            assert is_sigma_quasinormal(s, M, G) == (simple_primary or pq)


def _abelian_quotient(G, N):
    from sigmalat.perm import is_abelian
    return is_abelian(cached_quotient(G, N)[0])


class TestGroupClasses:
    def test_examples(self):
        Q8 = quaternion8()
        assert is_dedekind(Q8) and is_iwasawa(Q8) and is_m_group(Q8)
        S3 = symmetric(3)
        assert not is_dedekind(S3) and is_m_group(S3)
        assert not is_m_group(dihedral(8))

    @pytest.mark.parametrize("name", names(48))
    def test_m_group_iff_no_pentagon(self, name):
        G = group(name)
        assert is_m_group(G) == (find_pentagon(G) is None)

    @pytest.mark.parametrize("name", names(100))
    def test_iwasawa_is_modular_and_nilpotent(self, name):
        from sigmalat.sigma import is_sigma_nilpotent
        G = group(name)
        assert is_iwasawa(G) == (is_m_group(G) and is_sigma_nilpotent(S1, G))


class TestPowerAutomorphisms:
    def test_examples(self):
        G = cyclic_extension(7, 3, 2)
        C7 = sylow(G, 7)[0]
        assert induces_power_automorphisms(G.whole().indices, C7)
        A4 = alternating(4)
        V4 = sylow(A4, 2)[0]
        assert not induces_power_automorphisms(A4.whole().indices, V4)
        Q8 = quaternion8()
        assert induces_power_automorphisms(Q8.whole().indices, center(Q8))
        S3 = symmetric(3)
        with pytest.raises(NotNormalized):
            induces_power_automorphisms(S3.whole().indices, S3.subgroup([from_cycles(3, [(0, 1)])]))

    def test_p_group_shapes(self):
        shape = detect_p_group_shape(cyclic_extension(7, 3, 2))
        assert (shape.p, shape.q, shape.base.order) == (7, 3, 7)
        shape = detect_p_group_shape(symmetric(3))
        assert (shape.p, shape.q) == (3, 2)
        assert detect_p_group_shape(quaternion8()) is None
        assert detect_p_group_shape(group("C6")) is None
        # the involution inverts only one factor, so no power automorphism
        assert detect_p_group_shape(group("C3xS3")) is None
        E = group("C3^2")
        inversion = [perm_inv(g) for g in E.generators]
        shape = detect_p_group_shape(semidirect_product(E, group("C2"), [inversion]))
        assert (shape.p, shape.q, shape.base.order) == (3, 2, 9)

    @pytest.mark.parametrize("name", names(100))
    def test_modular_non_quasinormal_prime_power(self, name):
        """G/M_G splits as a non-abelian P-group M^G/M_G times a coprime K/M_G."""
        G = group(name)
        for M in get_lattice(G):
            n = M.order
            if n == 1 or len({p for p in range(2, n + 1) if n % p == 0 and all(p % r for r in range(2, p))}) != 1:
                continue
            if not is_modular_in(M, G) or is_quasinormal(M, G):
                continue
            C, P = core(M, G), normal_closure(M, G)
            Q, phi = cached_quotient(G, C)
            assert detect_p_group_shape(phi.image(P)) is not None
            p_ord = P.order // C.order
            assert any(C <= K and (K & P) == C and (K.order // C.order) * p_ord == Q.order
                       and math.gcd(K.order // C.order, p_ord) == 1 for K in normal_subgroups(G))
