"""Modular and quasinormal subgroups, and the lattice-defined group classes.

Modularity is decided on an interval ``[bottom, top]`` of the subgroup
lattice of the parent group.  With ``bottom = 1`` that is the lattice of
the subgroup ``top``; with ``bottom = N`` normal it is the lattice of the
quotient ``top/N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .arith import prime_factors
from .errors import NotContained, NotNormalized
from .lattice import Lattice, _bits, get_lattice, product_set
from .perm import Subgroup, as_subgroup, is_abelian, is_normal_in
from .sigma import _reach_chain, as_sigma, is_sigma_subnormal_idx


class Strategy(str, Enum):
    DIRECT = "direct"
    REDUCED = "reduced"
    FULL = "full"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class ModularityResult:
    modular: bool
    # (X, Z) or (Y, Z) lattice pair for DIRECT, the element index for REDUCED
    witness: tuple | None = None
    identity: int | None = None

    def __bool__(self):
        return self.modular


class _Interval:
    """Local join/meet tables for the lattice interval [b, t]."""

    def __init__(self, lat: Lattice, b: int, t: int):
        self.idx = np.array(lat.interval_idx(b, t), dtype=np.int64)
        n = len(self.idx)
        local = np.full(len(lat), -1, dtype=np.int64)
        local[self.idx] = np.arange(n)
        self.local = local
        sub = np.ix_(self.idx, self.idx)
        self.J = local[lat.join_table[sub]]
        self.M = local[lat.meet_table[sub]]
        self.L = lat.leq_matrix[sub]

    def violation(self, m: int):
        """First Kurosh violation for local element ``m`` as (identity, a, z)."""
        J, M, L = self.J, self.M, self.L
        # (i) <X, M∩Z> = <X,M> ∩ Z for X ≤ Z
        lhs = J[:, M[m]]
        rhs = M[J[:, m], :]
        bad = L & (lhs != rhs)
        if bad.any():
            x, z = map(int, np.argwhere(bad)[0])
            return 1, x, z
        # (ii) <M, Y∩Z> = <M,Y> ∩ Z for M ≤ Z
        lhs = J[m][M]
        rhs = M[J[m], :]
        bad = L[m][None, :] & (lhs != rhs)
        if bad.any():
            y, z = map(int, np.argwhere(bad)[0])
            return 2, y, z
        return None


def _interval(lat: Lattice, b: int, t: int) -> _Interval:
    key = ("interval", b, t)
    hit = lat.cache.get(key)
    if hit is None:
        hit = _Interval(lat, b, t)
        lat.cache[key] = hit
    return hit


def modular_direct_idx(lat: Lattice, m: int, t: int, b: int = 0) -> ModularityResult:
    """Both Kurosh identities for ``m`` in the interval [b, t]."""
    if not (lat.leq(b, m) and lat.leq(m, t)):
        raise NotContained("subgroup is not in the interval")
    memo = lat.cache.setdefault(("moddirect", b, t), {})
    if m not in memo:
        iv = _interval(lat, b, t)
        v = iv.violation(int(iv.local[m]))
        if v is None:
            memo[m] = ModularityResult(True)
        else:
            ident, a, z = v
            memo[m] = ModularityResult(False, (int(iv.idx[a]), int(iv.idx[z])), ident)
    return memo[m]


def modular_elements(lat: Lattice, t: int, b: int = 0) -> int:
    """Bitmask of the modular elements of the interval [b, t]."""
    key = ("modmask", b, t)
    hit = lat.cache.get(key)
    if hit is None:
        hit = 0
        for m in lat.interval_idx(b, t):
            if modular_direct_idx(lat, m, t, b).modular:
                hit |= 1 << m
        lat.cache[key] = hit
    return hit


def prime_power_elements(lat: Lattice, t: int) -> list[int]:
    G = lat.group
    orders = G.element_orders
    return [int(x) for x in lat.subgroups[t].indices if x and len(prime_factors(int(orders[x]))) == 1]


def modular_reduced_idx(lat: Lattice, m: int, t: int) -> ModularityResult:
    """``m`` modular in <x, m> for every prime-power-order x of ``t``."""
    if not lat.leq(m, t):
        raise NotContained("subgroup is not contained in the ambient group")
    cyc = lat.cyclic_of
    done = set()
    for x in prime_power_elements(lat, t):
        j = lat.join_idx(int(cyc[x]), m)
        if j in done:
            continue
        done.add(j)
        if not modular_direct_idx(lat, m, j).modular:
            return ModularityResult(False, (x,))
    return ModularityResult(True)


def is_modular_idx(lat: Lattice, m: int, t: int, strategy=Strategy.REDUCED) -> bool:
    if Strategy(strategy) is Strategy.DIRECT:
        return modular_direct_idx(lat, m, t).modular
    return modular_reduced_idx(lat, m, t).modular


def _ctx(M, G):
    M, H = as_subgroup(M), as_subgroup(G)
    if not M <= H:
        raise NotContained("subgroup is not contained in the ambient group")
    lat = get_lattice(H)
    return lat, lat.index(M), lat.index(H)


def is_modular_in(M, G, strategy=Strategy.REDUCED) -> ModularityResult:
    lat, m, t = _ctx(M, G)
    if Strategy(strategy) is Strategy.DIRECT:
        return modular_direct_idx(lat, m, t)
    return modular_reduced_idx(lat, m, t)


# -- quasinormality --------------------------------------------------------------

def quasinormal_full_idx(lat: Lattice, a: int, t: int) -> bool:
    return all(lat.permutes_idx(a, h) for h in _bits(lat.down[t]))


def quasinormal_cyclic_idx(lat: Lattice, a: int, t: int) -> bool:
    """A<x> = <x>A as element sets for every x in ``t``."""
    A = lat[a]
    for c in sorted({int(lat.cyclic_of[x]) for x in lat[t].indices}):
        C = lat[c]
        if product_set(A, C) != product_set(C, A):
            return False
    return True


def is_quasinormal_idx(lat: Lattice, a: int, t: int, strategy=Strategy.CYCLIC) -> bool:
    if Strategy(strategy) is Strategy.FULL:
        return quasinormal_full_idx(lat, a, t)
    return quasinormal_cyclic_idx(lat, a, t)


def is_quasinormal(A, G, strategy=Strategy.CYCLIC) -> bool:
    lat, a, t = _ctx(A, G)
    return is_quasinormal_idx(lat, a, t, strategy)


# -- chains of modular / σ-quasinormal steps -------------------------------------------

def is_sigma_quasinormal_idx(sigma, lat: Lattice, a: int, t: int) -> bool:
    return is_sigma_subnormal_idx(sigma, lat, a, t) and bool(modular_elements(lat, t) >> a & 1)


def _backward(lat: Lattice, t: int, step) -> int:
    found = 1 << t
    stack = [t]
    while stack:
        h = stack.pop()
        for k in _bits(lat.down[h] & ~found):
            if step(k, h):
                found |= 1 << k
                stack.append(k)
    return found


def submodular_mask(lat: Lattice, t: int) -> int:
    key = ("submod", t)
    if key not in lat.cache:
        lat.cache[key] = _backward(lat, t, lambda k, h: bool(modular_elements(lat, h) >> k & 1))
    return lat.cache[key]


def sigma_subquasinormal_mask(sigma, lat: Lattice, t: int) -> int:
    sigma = as_sigma(sigma)
    key = ("ssqn", sigma.spec, t)
    if key not in lat.cache:
        lat.cache[key] = _backward(lat, t, lambda k, h: is_sigma_quasinormal_idx(sigma, lat, k, h))
    return lat.cache[key]


def is_submodular(A, G) -> bool:
    lat, a, t = _ctx(A, G)
    return bool(submodular_mask(lat, t) >> a & 1)


def submodular_chain(A, G) -> list[Subgroup] | None:
    lat, a, t = _ctx(A, G)
    step = lambda k, h: bool(modular_elements(lat, h) >> k & 1)  # noqa: E731
    chain = _reach_chain(lat, a, t, submodular_mask(lat, t), step)
    return None if chain is None else [lat[i] for i in chain]


def is_sigma_quasinormal(sigma, A, G) -> bool:
    lat, a, t = _ctx(A, G)
    return is_sigma_quasinormal_idx(as_sigma(sigma), lat, a, t)


def is_sigma_subquasinormal(sigma, A, G) -> bool:
    lat, a, t = _ctx(A, G)
    return bool(sigma_subquasinormal_mask(sigma, lat, t) >> a & 1)


# -- group classes -------------------------------------------------------------

def is_dedekind_idx(lat: Lattice, t: int) -> bool:
    return all(lat.is_normal_idx(a, t) for a in _bits(lat.down[t]))


def is_m_group_idx(lat: Lattice, t: int, b: int = 0) -> bool:
    """The interval [b, t] is a modular lattice."""
    return modular_elements(lat, t, b) == lat.up[b] & lat.down[t]


def is_dedekind(G) -> bool:
    lat, _, t = _ctx(G, G)
    return is_dedekind_idx(lat, t)


def is_iwasawa(G) -> bool:
    lat, _, t = _ctx(G, G)
    return all(quasinormal_full_idx(lat, a, t) for a in _bits(lat.down[t]))


def is_m_group(G) -> bool:
    lat, _, t = _ctx(G, G)
    return is_m_group_idx(lat, t)


def find_pentagon(G) -> tuple[int, int, int] | None:
    """Lattice indices A < B, C with A∨C = B∨C and A∧C = B∧C, if any."""
    lat, _, t = _ctx(G, G)
    idx = np.array(lat.below(t), dtype=np.int64)
    J = lat.join_table[np.ix_(idx, idx)]
    M = lat.meet_table[np.ix_(idx, idx)]
    L = lat.leq_matrix[np.ix_(idx, idx)]
    for i in range(len(idx)):
        for j in np.flatnonzero(L[i]):
            if j == i:
                continue
            hit = (J[i] == J[j]) & (M[i] == M[j])
            if hit.any():
                return int(idx[i]), int(idx[j]), int(idx[int(np.argmax(hit))])
    return None


# -- power automorphisms and P-groups ---------------------------------------------

def induces_power_automorphisms(X, D) -> bool:
    """Every x in ``X`` (element indices) maps each d in ``D`` into <d>."""
    D = as_subgroup(D)
    grp = D.parent
    xs = np.asarray(sorted({int(x) for x in X}), dtype=np.int64)
    if not len(xs):
        return True
    inD = np.zeros(grp.order, dtype=bool)
    inD[D.indices] = True
    images = grp.conj[np.ix_(xs, D.indices)]
    if not inD[images].all():
        raise NotNormalized("an element does not normalize the subgroup")
    for j, d in enumerate(D.indices):
        cyc = grp.cyclic_mask(int(d))
        for y in np.unique(images[:, j]):
            if not cyc >> int(y) & 1:
                return False
    return True


@dataclass(frozen=True)
class PGroupShape:
    p: int
    q: int
    base: Subgroup
    t: int

    @property
    def top_element_order(self) -> int:
        return self.q


def detect_p_group_shape(G) -> PGroupShape | None:
    """Recognise a non-abelian P-group A ⋊ <t> of type (p, q)."""
    H = as_subgroup(G)
    grp = H.parent
    primes = prime_factors(H.order)
    if len(primes) != 2:
        return None
    orders = grp.element_orders
    for p, q in (primes, primes[::-1]):
        if H.order % (q * q) == 0:
            continue
        pel = [int(x) for x in H.indices if orders[x] in (1, p)]
        A = Subgroup(grp, grp.closure(pel))
        if A.order * q != H.order or len(pel) != A.order:
            continue
        if not is_abelian(A) or not is_normal_in(A, H):
            continue
        for t in H.indices:
            if orders[t] != q:
                continue
            images = grp.conj[int(t), A.indices]
            if (images == A.indices).all():
                continue
            if induces_power_automorphisms([int(t)], A):
                return PGroupShape(p, q, A, int(t))
    return None
