"""Subgroup lattices, normal subgroups and the usual lattice-derived subgroups.

A :class:`Lattice` lists every subgroup of a group in canonical order
(by order, then by element list).  Because that order refines inclusion
by size, the join of two subgroups is the lowest-indexed common upper
bound and their meet the highest-indexed common lower bound, so both are
plain bit operations on the ``up``/``down`` masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .arith import p_part, prime_factors
from .errors import CapExceeded, NotContained
from .perm import Group, Subgroup, as_subgroup, conjugacy_classes, indices_from_mask, mask_from_indices


@dataclass
class Limits:
    order_guard: int = 2_000
    subgroup_cap: int = 100_000


limits = Limits()


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


class Lattice:
    """All subgroups of ``group`` with inclusion structure."""

    def __init__(self, group: Group, masks: list[int], gens: dict[int, tuple[int, ...]]):
        self.group = group
        n_el = group.order
        subs = [Subgroup(group, m) for m in masks]
        subs.sort(key=lambda s: s.key)
        for s in subs:
            # reuse the generators found during enumeration
            s.__dict__["generator_indices"] = gens[s.mask]
        self.subgroups: list[Subgroup] = subs
        self.masks = [s.mask for s in subs]
        self.orders = np.array([s.order for s in subs], dtype=np.int64)
        self.pos = {m: i for i, m in enumerate(self.masks)}
        n = len(subs)
        up = [0] * n
        down = [0] * n
        for i in range(n):
            mi = self.masks[i]
            oi = subs[i].order
            up[i] |= 1 << i
            down[i] |= 1 << i
            for j in range(i + 1, n):
                oj = subs[j].order
                if oj % oi == 0 and oj != oi and self.masks[j] & mi == mi:
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self.up = up
        self.down = down
        self.top = n - 1
        self.bottom = 0
        self._conj_cache: dict[int, np.ndarray] = {}
        self.cache: dict = {}
        assert self.masks[0] == 1 and self.orders[-1] == n_el

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def index(self, S) -> int:
        S = as_subgroup(S)
        if S.parent is not self.group:
            raise ValueError("subgroup belongs to another group")
        return self.pos[S.mask]

    # -- order structure -------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def join_idx(self, i: int, j: int) -> int:
        return _low_bit(self.up[i] & self.up[j])

    def meet_idx(self, i: int, j: int) -> int:
        return (self.down[i] & self.down[j]).bit_length() - 1

    @cached_property
    def leq_matrix(self) -> np.ndarray:
        n = len(self)
        out = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in _bits(self.up[i]):
                out[i, j] = True
        out.setflags(write=False)
        return out

    @cached_property
    def join_table(self) -> np.ndarray:
        n = len(self)
        out = np.empty((n, n), dtype=np.int32)
        up = self.up
        for i in range(n):
            ui = up[i]
            out[i, i] = i
            for j in range(i + 1, n):
                out[i, j] = out[j, i] = _low_bit(ui & up[j])
        out.setflags(write=False)
        return out

    @cached_property
    def meet_table(self) -> np.ndarray:
        n = len(self)
        out = np.empty((n, n), dtype=np.int32)
        down = self.down
        for i in range(n):
            di = down[i]
            out[i, i] = i
            for j in range(i + 1, n):
                out[i, j] = out[j, i] = (di & down[j]).bit_length() - 1
        out.setflags(write=False)
        return out

    def below(self, i: int) -> list[int]:
        """Indices of the subgroups of subgroup ``i`` (inclusive), ascending."""
        return list(_bits(self.down[i]))

    def above(self, i: int) -> list[int]:
        return list(_bits(self.up[i]))

    def interval_idx(self, i: int, j: int) -> list[int]:
        return list(_bits(self.up[i] & self.down[j]))

    @cached_property
    def covers(self) -> list[list[int]]:
        """``covers[j]`` lists the maximal proper subgroups of subgroup ``j``."""
        out = []
        for j in range(len(self)):
            chosen: list[int] = []
            cmask = 0
            for i in sorted(_bits(self.down[j] & ~(1 << j)), reverse=True):
                if self.up[i] & cmask:
                    continue
                chosen.append(i)
                cmask |= 1 << i
            out.append(sorted(chosen))
        return out

    @cached_property
    def cyclic_of(self) -> np.ndarray:
        """Lattice index of ``<x>`` for each element ``x``."""
        G = self.group
        out = np.empty(G.order, dtype=np.int64)
        for x in range(G.order):
            out[x] = self.pos[G.cyclic_mask(x)]
        return out

    # -- conjugation -----------------------------------------------------------

    def conjugate_indices(self, i: int) -> np.ndarray:
        """``result[g]`` is the lattice index of ``S_i^g``."""
        hit = self._conj_cache.get(i)
        if hit is not None:
            return hit
        G = self.group
        S = self.subgroups[i]
        rows = np.sort(G.conj[:, S.indices], axis=1)
        uniq, inv = np.unique(rows, axis=0, return_inverse=True)
        idx = np.array([self.pos[mask_from_indices(r, G.order)] for r in uniq], dtype=np.int64)
        out = idx[np.asarray(inv).ravel()]
        out.setflags(write=False)
        self._conj_cache[i] = out
        return out

    def normalizer_idx(self, i: int) -> int:
        conj = self.conjugate_indices(i)
        return self.pos[mask_from_indices(np.flatnonzero(conj == i), self.group.order)]

    @cached_property
    def normalizers(self) -> np.ndarray:
        return np.array([self.normalizer_idx(i) for i in range(len(self))], dtype=np.int64)

    def is_normal_idx(self, i: int, j: int) -> bool:
        """Subgroup ``i`` normal in subgroup ``j``."""
        return self.leq(i, j) and self.leq(j, int(self.normalizers[i]))

    def core_idx(self, i: int, j: int) -> int:
        """Core of subgroup ``i`` in subgroup ``j`` (largest normal-in-j part)."""
        conj = self.conjugate_indices(i)
        out = self.down[i]
        for k in np.unique(conj[self.subgroups[j].indices]):
            out &= self.down[int(k)]
        return out.bit_length() - 1

    def closure_idx(self, i: int, j: int) -> int:
        """Normal closure of subgroup ``i`` in subgroup ``j``."""
        conj = self.conjugate_indices(i)
        out = self.up[i]
        for k in np.unique(conj[self.subgroups[j].indices]):
            out &= self.up[int(k)]
        return _low_bit(out)

    def normal_in(self, j: int) -> list[int]:
        """Indices of the normal subgroups of subgroup ``j``."""
        return [i for i in self.below(j) if self.is_normal_idx(i, j)]

    def permutes_idx(self, i: int, j: int) -> bool:
        """``S_i S_j = S_j S_i``, i.e. the product set has the order of the join."""
        return int(self.orders[i]) * int(self.orders[j]) == \
            int(self.orders[self.join_idx(i, j)]) * int(self.orders[self.meet_idx(i, j)])

    def subgroups_of_order(self, order: int, within: int | None = None) -> list[int]:
        cand = self.down[self.top if within is None else within]
        return [i for i in _bits(cand) if self.orders[i] == order]


def _bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def enumerate_subgroups(G: Group, subgroup_cap: int | None = None, order_guard: int | None = None) -> Lattice:
    """Every subgroup of ``G`` via join-closure of its cyclic subgroups.

    Only prime-power cyclic subgroups are needed as join partners, and only
    one subgroup per conjugacy class is expanded; its conjugates are
    recorded directly.
    """
    subgroup_cap = limits.subgroup_cap if subgroup_cap is None else subgroup_cap
    order_guard = limits.order_guard if order_guard is None else order_guard
    if G.order > order_guard:
        raise CapExceeded("lattice group order", order_guard, "enumerate_subgroups")
    orders = G.element_orders
    cyclics: dict[int, int] = {}
    for x in range(1, G.order):
        o = int(orders[x])
        if len(prime_factors(o)) == 1:
            cyclics.setdefault(G.cyclic_mask(x), x)
    cyc = sorted(cyclics.items(), key=lambda item: (item[0].bit_count(), item[0]))
    gens: dict[int, tuple[int, ...]] = {1: ()}
    conj = G.conj

    def add_class(mask: int, gen: tuple[int, ...]) -> None:
        idx = indices_from_mask(mask, G.order)
        rows = np.sort(conj[:, idx], axis=1)
        _, first = np.unique(rows, axis=0, return_index=True)
        for g in first:
            m = mask_from_indices(rows[g], G.order)
            if m not in gens:
                gens[m] = tuple(int(y) for y in conj[g, list(gen)]) if gen else ()
        if len(gens) > subgroup_cap:
            raise CapExceeded("subgroup count", subgroup_cap, "enumerate_subgroups")

    queue = []
    for m, x in cyc:
        if m not in gens:
            add_class(m, (x,))
            queue.append(m)
    head = 0
    while head < len(queue):
        h = queue[head]
        head += 1
        hg = gens[h]
        for c, x in cyc:
            if c & h == c:
                continue
            j = G.closure(hg + (x,), start=h)
            if j not in gens:
                add_class(j, hg + (x,))
                queue.append(j)
    return Lattice(G, list(gens), gens)


def get_lattice(G) -> Lattice:
    """The (cached) lattice of the parent group of ``G``."""
    grp = G if isinstance(G, Group) else G.parent
    lat = grp.__dict__.get("_lattice")
    if lat is None:
        lat = enumerate_subgroups(grp)
        grp.__dict__["_lattice"] = lat
    return lat


def has_lattice(G) -> bool:
    grp = G if isinstance(G, Group) else G.parent
    return "_lattice" in grp.__dict__ or grp.order <= limits.order_guard


# -- element-level operations (no lattice needed) -------------------------------

def _check_contained(A: Subgroup, B: Subgroup):
    if not A <= B:
        raise NotContained("first subgroup is not contained in the second")


def is_normal(A, B) -> bool:
    """``A`` normal in ``B``."""
    from .perm import is_normal_in
    A, B = as_subgroup(A), as_subgroup(B)
    _check_contained(A, B)
    return is_normal_in(A, B)


def core(A, G) -> Subgroup:
    """Largest subgroup of ``A`` that is normal in ``G``."""
    A, H = as_subgroup(A), as_subgroup(G)
    _check_contained(A, H)
    grp = A.parent
    member = np.zeros(grp.order, dtype=bool)
    member[A.indices] = True
    # x lies in the core iff x^g lies in A for every g in H
    ok = member[grp.conj[np.ix_(H.indices, A.indices)]].all(axis=0)
    return Subgroup(grp, mask_from_indices(A.indices[ok], grp.order))


def normal_closure(A, G) -> Subgroup:
    A, H = as_subgroup(A), as_subgroup(G)
    _check_contained(A, H)
    grp = A.parent
    conj = np.unique(grp.conj[np.ix_(H.indices, np.asarray(A.generator_indices or (0,)))])
    return Subgroup(grp, grp.closure(conj))


def normal_subgroups(G) -> list[Subgroup]:
    """All normal subgroups, from the normal closures of conjugacy classes."""
    H = as_subgroup(G)
    grp = H.parent
    store = grp.__dict__.setdefault("_normal", {})
    if H.mask not in store:
        store[H.mask] = _normal_subgroups(H)
    return list(store[H.mask])


def _normal_subgroups(H: Subgroup) -> list[Subgroup]:
    grp = H.parent
    found: dict[int, tuple[int, ...]] = {}
    base = []
    for cls in conjugacy_classes(H):
        m = grp.closure(cls)
        if m not in found:
            found[m] = tuple(cls)
            base.append(m)
    queue = list(found)
    head = 0
    while head < len(queue):
        a = queue[head]
        head += 1
        for b in base:
            if b & a == b:
                continue
            j = grp.closure(found[a] + found[b], start=a)
            if j not in found:
                found[j] = found[a] + found[b]
                queue.append(j)
    out = [Subgroup(grp, m) for m in found]
    out.sort(key=lambda s: s.key)
    return out


def normal_subgroups_containing(G, N) -> list[Subgroup]:
    N = as_subgroup(N)
    return [K for K in normal_subgroups(G) if N <= K]


def minimal_normal_subgroups(G) -> list[Subgroup]:
    ns = [N for N in normal_subgroups(G) if not N.is_trivial()]
    return [N for N in ns if not any(M < N for M in ns)]


def maximal_subgroups(G) -> list[Subgroup]:
    H = as_subgroup(G)
    lat = get_lattice(H)
    return [lat[i] for i in lat.covers[lat.index(H)]]


def frattini(G) -> Subgroup:
    H = as_subgroup(G)
    lat = get_lattice(H)
    out = lat.down[lat.index(H)]
    for i in lat.covers[lat.index(H)]:
        out &= lat.down[i]
    return lat[out.bit_length() - 1]


def sylow(G, p: int) -> list[Subgroup]:
    H = as_subgroup(G)
    lat = get_lattice(H)
    return [lat[i] for i in lat.subgroups_of_order(p_part(H.order, p), lat.index(H))]


def join(A, B) -> Subgroup:
    return as_subgroup(A).join(as_subgroup(B))


def meet(A, B) -> Subgroup:
    return as_subgroup(A) & as_subgroup(B)


def interval(A, B) -> list[Subgroup]:
    A, B = as_subgroup(A), as_subgroup(B)
    lat = get_lattice(A)
    return [lat[i] for i in lat.interval_idx(lat.index(A), lat.index(B))]


def product_set(A, B) -> int:
    A, B = as_subgroup(A), as_subgroup(B)
    grp = A.parent
    prods = np.unique(grp.table[np.ix_(A.indices, B.indices)])
    return mask_from_indices(prods, grp.order)


def product_sets(A, B) -> tuple[int, bool]:
    """The set ``AB`` (as an element mask) and whether ``AB = BA``."""
    A, B = as_subgroup(A), as_subgroup(B)
    ab = product_set(A, B)
    size = ab.bit_count()
    assert size * (A & B).order == A.order * B.order
    return ab, ab == product_set(B, A)


def subnormal_by_closures(A, G) -> bool:
    """Classical subnormality via the descending normal-closure series."""
    A, H = as_subgroup(A), as_subgroup(G)
    cur = H
    while True:
        nxt = normal_closure(A, cur)
        if nxt == cur:
            return cur == A
        cur = nxt
