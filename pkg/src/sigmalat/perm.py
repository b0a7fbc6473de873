"""Permutation groups with a fully materialized element set.

Permutations are tuples of 0-based images.  Products are read left to
right: ``x^(pq) = (x^p)^q``, so conjugation is ``x^g = g^-1 x g``.

Every group keeps its elements sorted lexicographically, which makes the
identity element index 0 and gives each element set a canonical form.
Subgroups are stored as bitmasks over the parent's element indices.
"""

from __future__ import annotations

import hashlib
import math
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import BadAction, CapExceeded, NotNormal

DEFAULT_ELEMENT_CAP = 100_000

Perm = tuple


# -- plain permutation helpers -------------------------------------------

def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    n = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        n = n * length // math.gcd(n, length)
    return n


def is_permutation(p: Sequence[int], degree: int) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation from disjoint 0-based cycles."""
    img = list(range(degree))
    seen = set()
    for cyc in cycles:
        for a in cyc:
            if not 0 <= a < degree:
                raise ValueError(f"point {a} out of range for degree {degree}")
            if a in seen:
                raise ValueError(f"point {a} repeated; cycles must be disjoint")
            seen.add(a)
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a] = b
    return tuple(img)


def to_cycles(p: Perm, one_based: bool = True) -> str:
    """Disjoint cycle notation; the identity prints as ``()``."""
    shift = 1 if one_based else 0
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + shift)
            x = p[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


# -- bitmask helpers ------------------------------------------------------

def mask_from_indices(idx, n: int) -> int:
    flags = np.zeros(n, dtype=bool)
    flags[np.asarray(idx, dtype=np.int64)] = True
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def indices_from_mask(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:n])


def _row_keys(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(np.asarray(rows).astype(">u2"))
    if rows.ndim == 1:
        rows = rows[None, :]
    return rows.view(np.dtype((np.void, 2 * rows.shape[1]))).ravel()


def _closure_rows(degree: int, gens: list[Perm], cap: int) -> np.ndarray:
    """All products of ``gens`` as a sorted, duplicate-free row array."""
    start = np.arange(degree, dtype=np.int64)[None, :]
    if not gens:
        return start
    garr = [np.asarray(g, dtype=np.int64) for g in gens]
    known = {k.tobytes() for k in _row_keys(start)}
    chunks = [start]
    frontier = start
    while len(frontier):
        cand = np.concatenate([g[frontier] for g in garr])
        keys = _row_keys(cand)
        _, first = np.unique(keys, return_index=True)
        fresh = [i for i in first if keys[i].tobytes() not in known]
        frontier = cand[fresh]
        for i in fresh:
            known.add(keys[i].tobytes())
        chunks.append(frontier)
        if len(known) > cap:
            raise CapExceeded("group order", cap, "generate")
    rows = np.concatenate(chunks)
    order = np.argsort(_row_keys(rows), kind="stable")
    return rows[order]


# -- groups -----------------------------------------------------------------

class Group:
    """A finite permutation group with every element listed.

    Build groups with :func:`generate` or the constructors below rather
    than calling this directly.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], rows: np.ndarray, name: str | None = None):
        self.degree = degree
        self.generators = tuple(tuple(int(x) for x in g) for g in generators)
        self._rows = np.ascontiguousarray(rows, dtype=np.int64)
        self._rows.setflags(write=False)
        self._keys = _row_keys(self._rows)
        self.order = len(self._rows)
        self.name = name

    def __repr__(self):
        label = self.name or "Group"
        return f"<{label} order={self.order} degree={self.degree}>"

    def __len__(self):
        return self.order

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        return tuple(tuple(int(x) for x in r) for r in self._rows)

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    def index(self, p) -> int:
        key = _row_keys(np.asarray(p, dtype=np.int64))
        i = int(np.searchsorted(self._keys, key[0]))
        if i >= self.order or self._keys[i] != key[0]:
            raise KeyError(f"{p} is not an element of {self!r}")
        return i

    def lookup_rows(self, rows: np.ndarray) -> np.ndarray:
        """Element indices for many permutation rows at once."""
        return np.searchsorted(self._keys, _row_keys(rows))

    def __contains__(self, p) -> bool:
        try:
            self.index(p)
        except KeyError:
            return False
        return True

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        n = self.order
        out = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            out[i] = self.lookup_rows(self._rows[:, self._rows[i]])
        out.setflags(write=False)
        return out

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1).astype(np.int32)
        inv.setflags(write=False)
        return inv

    @cached_property
    def conj(self) -> np.ndarray:
        """``conj[g, x]`` is the index of ``x^g = g^-1 x g``."""
        t = self.table
        left = t[self.inverse]
        out = t[left, np.arange(self.order)[:, None]]
        out.setflags(write=False)
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        cur = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        k = 1
        t = self.table
        while True:
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            if (orders > 0).all():
                break
            cur = t[cur, np.arange(n)]
            k += 1
        return orders

    @cached_property
    def hash(self) -> str:
        h = hashlib.sha256()
        h.update(str(self.degree).encode())
        h.update(self._rows.astype(">u2").tobytes())
        return h.hexdigest()

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        k %= int(self.element_orders[i])
        out = 0
        for _ in range(k):
            out = int(self.table[out, i])
        return out

    def whole(self) -> "Subgroup":
        return Subgroup(self, (1 << self.order) - 1)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, 1)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(self.index(g) for g in self.generators)

    @cached_property
    def table_rows(self) -> list[list[int]]:
        return self.table.tolist()

    def closure(self, gens: Iterable[int], start: int | None = None) -> int:
        """Mask of the subgroup generated by element indices ``gens``.

        ``start`` may be the mask of a subgroup known to lie inside the
        result (its generators must be among ``gens``); the result is then
        built coset by coset over it.
        """
        gens = sorted({int(g) for g in gens})
        n = self.order
        base = [0] if start is None else indices_from_mask(start, n).tolist()
        seen = bytearray(n)
        for h in base:
            seen[h] = 1
        tl = self.table_rows
        reps = [0]
        k = 0
        while k < len(reps):
            row = tl[reps[k]]
            k += 1
            for s in gens:
                y = row[s]
                if not seen[y]:
                    reps.append(y)
                    for h in base:
                        seen[tl[h][y]] = 1
        flags = np.frombuffer(bytes(seen), dtype=np.uint8).astype(bool)
        return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")

    def cyclic_mask(self, i: int) -> int:
        powers = [0]
        x = i
        while x != 0:
            powers.append(x)
            x = int(self.table[x, i])
        return mask_from_indices(powers, self.order)

    def subgroup(self, perms: Iterable[Perm]) -> "Subgroup":
        """The subgroup generated by the given permutations."""
        return Subgroup(self, self.closure(self.index(p) for p in perms))


class Subgroup:
    """A subgroup of ``parent`` stored as a bitmask of element indices."""

    __slots__ = ("parent", "mask", "order", "__dict__")

    def __init__(self, parent: Group, mask: int):
        self.parent = parent
        self.mask = mask
        self.order = mask.bit_count()

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.mask == self.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Subgroup") -> bool:
        return self.mask != other.mask and self <= other

    def __len__(self):
        return self.order

    def __repr__(self):
        gens = " ".join(to_cycles(p) for p in self.generators) or "1"
        return f"<Subgroup order={self.order} gens={gens}>"

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.mask & other.mask)

    @cached_property
    def indices(self) -> np.ndarray:
        idx = indices_from_mask(self.mask, self.parent.order)
        idx.setflags(write=False)
        return idx

    @property
    def elements(self) -> list[Perm]:
        els = self.parent.elements
        return [els[i] for i in self.indices]

    @property
    def key(self):
        return (self.order, tuple(int(i) for i in self.indices))

    def contains_index(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __contains__(self, p) -> bool:
        try:
            return self.contains_index(self.parent.index(p))
        except KeyError:
            return False

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        """A small generating set, picked greedily in element order."""
        gens: list[int] = []
        cur = 1
        G = self.parent
        for i in self.indices:
            if cur == self.mask:
                break
            if not cur >> int(i) & 1:
                gens.append(int(i))
                cur = G.closure(gens, start=cur)
        return tuple(gens)

    @property
    def generators(self) -> list[Perm]:
        els = self.parent.elements
        return [els[i] for i in self.generator_indices]

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        return Subgroup(G, mask_from_indices(G.conj[g, self.indices], G.order))

    def as_group(self, name: str | None = None) -> Group:
        rows = self.parent.rows[self.indices]
        return Group(self.parent.degree, self.generators, rows, name=name)

    def join(self, other: "Subgroup") -> "Subgroup":
        G = self.parent
        if other <= self:
            return self
        gens = self.generator_indices + other.generator_indices
        return Subgroup(G, G.closure(gens, start=self.mask))


def as_subgroup(X) -> Subgroup:
    return X.whole() if isinstance(X, Group) else X


def generate(degree: int, generators: Iterable[Sequence[int]] = (), element_cap: int = DEFAULT_ELEMENT_CAP,
             name: str | None = None) -> Group:
    if element_cap < 1:
        raise ValueError("element_cap must be at least 1")
    gens = []
    for g in generators:
        g = tuple(int(x) for x in g)
        if not is_permutation(g, degree):
            raise ValueError(f"{g} is not a permutation of degree {degree}")
        gens.append(g)
    rows = _closure_rows(degree, gens, element_cap)
    if len(rows) > element_cap:
        raise CapExceeded("group order", element_cap, "generate")
    return Group(degree, gens, rows, name=name)


def element_order(g: Perm) -> int:
    return perm_order(g)


# -- structural primitives ---------------------------------------------------

def centralizer(G, S) -> Subgroup:
    """Elements of ``G`` commuting with every element of ``S``."""
    H = as_subgroup(G)
    grp = H.parent
    s_idx = as_subgroup(S).indices if not isinstance(S, (list, tuple, np.ndarray)) else np.asarray(S, dtype=np.int64)
    t = grp.table
    h_idx = H.indices
    ok = (t[np.ix_(h_idx, s_idx)] == t[np.ix_(s_idx, h_idx)].T).all(axis=1)
    return Subgroup(grp, mask_from_indices(h_idx[ok], grp.order))


def center(G) -> Subgroup:
    return centralizer(G, as_subgroup(G))


def normalizer(G, S) -> Subgroup:
    H = as_subgroup(G)
    S = as_subgroup(S)
    grp = H.parent
    member = np.zeros(grp.order, dtype=bool)
    member[S.indices] = True
    h_idx = H.indices
    ok = member[grp.conj[np.ix_(h_idx, S.indices)]].all(axis=1)
    return Subgroup(grp, mask_from_indices(h_idx[ok], grp.order))


def conjugacy_classes(G) -> list[list[int]]:
    """Conjugation orbits of ``G`` on itself, as sorted index lists."""
    H = as_subgroup(G)
    grp = H.parent
    h_idx = H.indices
    conj = grp.conj
    seen = set()
    classes = []
    for x in h_idx:
        x = int(x)
        if x in seen:
            continue
        orbit = sorted({int(y) for y in conj[h_idx, x]})
        seen.update(orbit)
        classes.append(orbit)
    return classes


def commutator_subgroup(A, B=None) -> Subgroup:
    """``[A, B]``; with one argument the derived subgroup ``A'``."""
    A = as_subgroup(A)
    B = A if B is None else as_subgroup(B)
    grp = A.parent
    t, inv = grp.table, grp.inverse
    a, b = A.indices, B.indices
    ab = t[np.ix_(a, b)]
    ba = t[np.ix_(b, a)].T
    comm = t[inv[ba], ab]
    return Subgroup(grp, grp.closure(np.unique(comm)))


def is_abelian(G) -> bool:
    return commutator_subgroup(G).is_trivial()


def exponent(G) -> int:
    H = as_subgroup(G)
    out = 1
    for o in np.unique(H.parent.element_orders[H.indices]):
        out = out * int(o) // math.gcd(out, int(o))
    return out


def is_normal_in(N, G) -> bool:
    """``N`` normal in ``G`` (``N`` must lie in ``G``)."""
    N, H = as_subgroup(N), as_subgroup(G)
    if not N <= H:
        return False
    grp = N.parent
    member = np.zeros(grp.order, dtype=bool)
    member[N.indices] = True
    gens = H.generator_indices
    if not gens:
        return True
    return bool(member[grp.conj[np.ix_(np.asarray(gens), N.indices)]].all())


# -- homomorphisms and quotients ------------------------------------------------

class GroupHom:
    """Element-wise homomorphism; ``map[i]`` is the image index of element ``i``."""

    def __init__(self, source: Group, target: Group, table: np.ndarray):
        self.source = source
        self.target = target
        self.map = np.asarray(table, dtype=np.int64)
        self.map.setflags(write=False)

    def __call__(self, i: int) -> int:
        return int(self.map[i])

    def is_homomorphism(self) -> bool:
        m = self.map
        lhs = m[self.source.table]
        rhs = self.target.table[np.ix_(m, m)]
        return bool((lhs == rhs).all())

    def image(self, S) -> Subgroup:
        S = as_subgroup(S)
        return Subgroup(self.target, mask_from_indices(np.unique(self.map[S.indices]), self.target.order))

    def preimage(self, T) -> Subgroup:
        T = as_subgroup(T)
        member = np.zeros(self.target.order, dtype=bool)
        member[T.indices] = True
        m = self.map
        hit = (m >= 0) & member[np.maximum(m, 0)]
        return Subgroup(self.source, mask_from_indices(np.flatnonzero(hit), self.source.order))

    @cached_property
    def kernel(self) -> Subgroup:
        return self.preimage(self.target.trivial())


def quotient(G, N, element_cap: int = DEFAULT_ELEMENT_CAP) -> tuple[Group, GroupHom]:
    """``G/N`` acting on the right cosets of ``N``, with its projection.

    ``G`` may be a group or a subgroup; in the latter case the projection
    is defined on the parent's elements that lie in ``G`` (others map to -1).
    """
    H = as_subgroup(G)
    N = as_subgroup(N)
    grp = H.parent
    if not is_normal_in(N, H):
        raise NotNormal("quotient needs a normal subgroup")
    h_idx = H.indices
    t = grp.table
    # label each element by the least index in its right coset N x
    labels = t[np.ix_(N.indices, h_idx)].min(axis=0)
    reps, coset_of_pos = np.unique(labels, return_inverse=True)
    coset_id = np.full(grp.order, -1, dtype=np.int64)
    coset_id[h_idx] = coset_of_pos
    k = len(reps)
    perms = coset_id[t[np.ix_(reps, h_idx)]].T  # row per element of H
    gens = [tuple(int(x) for x in perms[np.searchsorted(h_idx, g)]) for g in H.generator_indices]
    Q = generate(k, gens, element_cap=element_cap)
    images = Q.lookup_rows(perms)
    full = np.full(grp.order, -1, dtype=np.int64)
    full[h_idx] = images
    return Q, GroupHom(grp, Q, full)


def cached_quotient(G, N) -> tuple[Group, GroupHom]:
    """:func:`quotient`, memoized on the parent group."""
    H, N = as_subgroup(G), as_subgroup(N)
    store = H.parent.__dict__.setdefault("_quotients", {})
    key = (H.mask, N.mask)
    if key not in store:
        store[key] = quotient(H, N)
    return store[key]


# -- constructors --------------------------------------------------------------

def _cycle(n: int, shift: int = 0, degree: int | None = None) -> Perm:
    degree = degree if degree is not None else n + shift
    img = list(range(degree))
    for i in range(n):
        img[shift + i] = shift + (i + 1) % n
    return tuple(img)


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("n must be positive")
    gens = [_cycle(n)] if n > 1 else []
    return generate(n, gens, name=f"C{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and positive")
    n = order // 2
    if n == 1:
        return generate(2, [(1, 0)], name="D2")
    if n == 2:
        return generate(4, [(1, 0, 3, 2), (2, 3, 0, 1)], name="D4")
    rot = _cycle(n)
    ref = tuple((-i) % n for i in range(n))
    return generate(n, [rot, ref], name=f"D{order}")


def symmetric(n: int) -> Group:
    if n <= 1:
        return generate(1, [], name="S1")
    gens = [_cycle(n)] + ([from_cycles(n, [(0, 1)])] if n > 2 else [])
    return generate(n, gens, name=f"S{n}")


def alternating(n: int) -> Group:
    if n <= 2:
        return generate(max(n, 1), [], name=f"A{n}")
    gens = [from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return generate(n, gens, name=f"A{n}")


def regular_representation(elements: Sequence, mul, generators: Sequence, name: str | None = None) -> Group:
    """Right-regular permutation group of an abstract group given by ``mul``."""
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise ValueError("duplicate elements")
    perms = [tuple(pos[mul(e, g)] for e in elements) for g in generators]
    return generate(len(elements), perms, element_cap=max(len(elements), 1), name=name)


def quaternion8() -> Group:
    # quaternion units as (sign, axis) with axis in {1, i, j, k}
    names = ["1", "i", "j", "k"]
    prod = {
        ("1", x): (1, x) for x in names
    }
    prod.update({(x, "1"): (1, x) for x in names})
    prod.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})

    def mul(a, b):
        s, x = prod[(a[1], b[1])]
        return (a[0] * b[0] * s, x)

    elements = [(s, x) for s in (1, -1) for x in names]
    return regular_representation(elements, mul, [(1, "i"), (1, "j")], name="Q8")


def sl2(p: int) -> Group:
    """SL(2, p) acting on the nonzero row vectors of F_p^2 by ``v -> vA``."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be prime")
    vecs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        return tuple(pos[((x * a + y * c) % p, (x * b + y * d) % p)] for x, y in vecs)

    gens = [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))]
    return generate(len(vecs), gens, name=f"SL(2,{p})")


def direct_product(A: Group, B: Group, element_cap: int = DEFAULT_ELEMENT_CAP) -> Group:
    if A.order * B.order > element_cap:
        raise CapExceeded("group order", element_cap, "direct_product")
    da, db = A.degree, B.degree
    gens = [tuple(g) + tuple(range(da, da + db)) for g in A.generators]
    gens += [tuple(range(da)) + tuple(da + x for x in g) for g in B.generators]
    name = f"{A.name}x{B.name}" if A.name and B.name else None
    return generate(da + db, gens, element_cap=element_cap, name=name)


def _extend_to_map(G: Group, gen_images: Sequence[int], target_table: np.ndarray) -> np.ndarray:
    """Extend generator images to a map on all of ``G`` by breadth-first words.

    Raises BadAction if the result is not a homomorphism.
    """
    gens = G.generator_indices
    if len(gens) != len(gen_images):
        raise BadAction("wrong number of generator images")
    img = np.full(G.order, -1, dtype=np.int64)
    img[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, gi in zip(gens, gen_images):
                y = G.mul(x, g)
                if img[y] < 0:
                    img[y] = target_table[img[x], gi]
                    nxt.append(y)
        frontier = nxt
    if not (target_table[np.ix_(img, img)] == img[G.table]).all():
        raise BadAction("generator images do not define a homomorphism")
    return img


def semidirect_product(N: Group, H: Group, action, element_cap: int = DEFAULT_ELEMENT_CAP,
                       name: str | None = None) -> Group:
    """``N x| H`` with ``h^-1 n h = n^phi(h)``.

    ``action[j]`` lists the images (as permutations of ``N``) of N's
    generators under the automorphism induced by H's ``j``-th generator.
    The result is the right-regular representation on ``|N||H|`` points.
    """
    if N.order * H.order > element_cap:
        raise CapExceeded("group order", element_cap, "semidirect_product")
    if len(action) != len(H.generators):
        raise BadAction("need one automorphism per generator of H")
    auts = []
    for images in action:
        aut = _extend_to_map(N, [N.index(p) for p in images], N.table)
        if len(set(aut.tolist())) != N.order:
            raise BadAction("action is not bijective")
        auts.append(aut)
    # phi on all of H, composing left to right: phi(xs) = phi(x) then phi(s)
    nN = N.order
    phi = {0: np.arange(nN)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, a in zip(H.generator_indices, auts):
                y = H.mul(x, g)
                img = a[phi[x]]
                if y in phi:
                    if not np.array_equal(phi[y], img):
                        raise BadAction("action is not a homomorphism from H")
                else:
                    phi[y] = img
                    nxt.append(y)
        frontier = nxt
    inv_h = H.inverse
    tN, tH = N.table, H.table
    # (n1 h1)(n2 h2) = n1 * phi(h1^-1)(n2) * h1 h2
    pairs = [(n, h) for n in range(nN) for h in range(H.order)]
    pos = {p: i for i, p in enumerate(pairs)}

    def mul(a, b):
        (n1, h1), (n2, h2) = a, b
        return (int(tN[n1, phi[int(inv_h[h1])][n2]]), int(tH[h1, h2]))

    gens = [(g, 0) for g in N.generator_indices] + [(0, g) for g in H.generator_indices]
    perms = [tuple(pos[mul(e, g)] for e in pairs) for g in gens]
    return generate(len(pairs), perms, element_cap=element_cap, name=name)


def cyclic_extension(n: int, m: int, r: int, name: str | None = None) -> Group:
    """``C_n x| C_m`` where the generator of ``C_m`` acts by ``x -> x^r``."""
    if pow(r, m, n) != 1 % n:
        raise BadAction(f"x -> x^{r} does not have order dividing {m} modulo {n}")
    N, H = cyclic(n), cyclic(m)
    x = N.generators[0] if N.generators else identity_perm(N.degree)
    img = identity_perm(N.degree)
    for _ in range(r % n):
        img = perm_mul(img, x)
    action = [[img]] if H.generators else []
    return semidirect_product(N, H, action, name=name or f"C{n}:C{m}")


def wreath_regular(A: Group, B: Group, size_cap: int = DEFAULT_ELEMENT_CAP, name: str | None = None) -> Group:
    """Regular wreath product: ``|B|`` copies of ``A`` permuted by ``B``."""
    size = A.order ** B.order * B.order
    if size > size_cap:
        raise CapExceeded("wreath product order", size_cap, "wreath_regular")
    da, nb = A.degree, B.order
    deg = da * nb
    gens = []
    for g in A.generators:
        gens.append(tuple(g) + tuple(range(da, deg)))
    tB = B.table
    for s in B.generator_indices:
        img = [0] * deg
        for b in range(nb):
            nb_ = int(tB[b, s])
            for a in range(da):
                img[b * da + a] = nb_ * da + a
        gens.append(tuple(img))
    return generate(deg, gens, element_cap=size_cap, name=name or (f"{A.name}wr{B.name}" if A.name and B.name else None))
