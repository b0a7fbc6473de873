"""σ-partitions of the primes and the σ-embeddings of subgroups.

A :class:`SigmaPartition` lists finitely many explicit prime classes and a
policy for every other prime: either each gets its own class
(``singletons``) or they share one cofinite class (``one-class``).

Subgroup-level predicates come in two flavours.  The public functions take
:class:`~sigmalat.perm.Subgroup` objects.  The ``*_idx`` functions work on
lattice indices and take the ambient subgroup ``t`` explicitly, so "A is
σ-subnormal in K" for any K ≤ G needs no new lattice.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .arith import is_pi_number, is_prime, pi_part, prime_factors
from .errors import NotContained, ParseError
from .lattice import Lattice, _bits, get_lattice, normal_subgroups
from .perm import Subgroup, as_subgroup, normalizer

SINGLETONS = "singletons"
ONE_CLASS = "one-class"


@dataclass(frozen=True)
class SigmaClass:
    """One class σ_i.  A cofinite class holds every prime *not* in ``primes``."""

    primes: frozenset
    cofinite: bool = False

    def __contains__(self, p: int) -> bool:
        return (p not in self.primes) if self.cofinite else (p in self.primes)

    @property
    def sort_key(self):
        return (1, ()) if self.cofinite else (0, tuple(sorted(self.primes)))

    def __lt__(self, other: "SigmaClass") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self):
        body = "{" + ",".join(map(str, sorted(self.primes))) + "}"
        return body + "'" if self.cofinite else body

    __repr__ = __str__


@dataclass(frozen=True)
class SigmaPartition:
    """A partition of all primes, stored finitely."""

    classes: tuple = ()
    rest: str = SINGLETONS
    _named: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.rest not in (SINGLETONS, ONE_CLASS):
            raise ValueError(f"unknown leftover policy {self.rest!r}")
        seen: set[int] = set()
        norm = []
        for cls in self.classes:
            cls = frozenset(int(p) for p in cls)
            if not cls:
                raise ValueError("empty prime class")
            for p in cls:
                if not is_prime(p):
                    raise ValueError(f"{p} is not a prime")
            if cls & seen:
                raise ValueError("prime classes must be disjoint")
            seen |= cls
            # explicit singletons add nothing when leftovers are singletons
            if self.rest == SINGLETONS and len(cls) == 1:
                continue
            norm.append(cls)
        norm.sort(key=lambda c: min(c))
        object.__setattr__(self, "classes", tuple(norm))
        object.__setattr__(self, "_named", frozenset().union(*norm) if norm else frozenset())

    # -- constructors ----------------------------------------------------------

    @classmethod
    def sigma1(cls) -> "SigmaPartition":
        return cls((), SINGLETONS)

    @classmethod
    def pi(cls, primes: Iterable[int]) -> "SigmaPartition":
        """σ^π = {π, π'}."""
        return cls((frozenset(primes),), ONE_CLASS)

    @classmethod
    def one_pi(cls, primes: Iterable[int]) -> "SigmaPartition":
        """σ^{1π} = {{p_1}, ..., {p_n}, π'}."""
        return cls(tuple(frozenset([p]) for p in primes), ONE_CLASS)

    @classmethod
    def parse(cls, text: str) -> "SigmaPartition":
        """Parse ``sigma1``, ``pi:[2,3]`` or ``classes=[[2,3],[5]];rest=singletons``."""
        s = re.sub(r"\s+", "", text)
        try:
            if s == "sigma1":
                return cls.sigma1()
            if s.startswith("pi:"):
                primes = json.loads(s[3:])
                if not isinstance(primes, list) or not all(isinstance(p, int) for p in primes):
                    raise ValueError("expected a list of primes")
                return cls.pi(primes)
            parts = dict(item.split("=", 1) for item in s.split(";") if item)
            if set(parts) - {"classes", "rest"} or "classes" not in parts:
                raise ValueError("expected classes=[...] and optional rest=...")
            raw = json.loads(parts["classes"])
            if not isinstance(raw, list) or not all(
                    isinstance(c, list) and all(isinstance(p, int) for p in c) for c in raw):
                raise ValueError("classes must be a list of prime lists")
            return cls(tuple(frozenset(c) for c in raw), parts.get("rest", SINGLETONS))
        except (ValueError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad sigma spec {text!r}: {exc}") from None

    # -- arithmetic ------------------------------------------------------------

    def class_of(self, p: int) -> SigmaClass:
        for cls in self.classes:
            if p in cls:
                return SigmaClass(cls)
        if self.rest == SINGLETONS:
            return SigmaClass(frozenset([p]))
        return SigmaClass(self._named, cofinite=True)

    def sigma(self, n: int) -> frozenset:
        """σ(n): the classes meeting π(n)."""
        return frozenset(self.class_of(p) for p in prime_factors(n))

    def classes_of(self, n: int) -> list[SigmaClass]:
        return sorted(self.sigma(n))

    def is_primary_number(self, n: int) -> bool:
        return len(self.sigma(n)) <= 1

    def part(self, n: int, cls: SigmaClass) -> int:
        return pi_part(n, cls.__contains__)

    @property
    def spec(self) -> str:
        """Canonical spec string; equal partitions give equal strings."""
        if not self.classes and self.rest == SINGLETONS:
            return "sigma1"
        if len(self.classes) == 1 and self.rest == ONE_CLASS:
            return "pi:[" + ",".join(map(str, sorted(self.classes[0]))) + "]"
        body = ",".join("[" + ",".join(map(str, sorted(c))) + "]" for c in self.classes)
        return f"classes=[{body}];rest={self.rest}"

    def __str__(self):
        return self.spec


def as_sigma(sigma) -> SigmaPartition:
    if isinstance(sigma, SigmaPartition):
        return sigma
    if isinstance(sigma, str):
        return SigmaPartition.parse(sigma)
    raise TypeError(f"cannot use {sigma!r} as a sigma partition")


def sigma_of_int(sigma, n: int) -> frozenset:
    return as_sigma(sigma).sigma(n)


def sigma_of_group(sigma, G) -> frozenset:
    return as_sigma(sigma).sigma(as_subgroup(G).order)


def prime_predicate(spec) -> Callable[[int], bool]:
    """Predicate for a prime set given as primes, a class, or classes."""
    if callable(spec) and not isinstance(spec, SigmaClass):
        return spec
    if isinstance(spec, SigmaClass):
        return spec.__contains__
    items = list(spec)
    if all(isinstance(x, SigmaClass) for x in items):
        return lambda p: any(p in c for c in items)
    primes = frozenset(int(x) for x in items)
    return primes.__contains__


# -- group predicates ---------------------------------------------------------

def is_sigma_primary(sigma, G) -> bool:
    return as_sigma(sigma).is_primary_number(as_subgroup(G).order)


def is_sigma_nilpotent(sigma, G) -> bool:
    """Each σ_i-element set generates a subgroup of order the σ_i-part."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    grp = H.parent
    orders = grp.element_orders[H.indices]
    for cls in sigma.classes_of(H.order):
        sel = [int(x) for x, o in zip(H.indices, orders) if is_pi_number(int(o), cls.__contains__)]
        if grp.closure(sel).bit_count() != sigma.part(H.order, cls):
            return False
    return True


def is_sigma_soluble(sigma, G) -> bool:
    from .formations import chief_series
    sigma = as_sigma(sigma)
    return all(sigma.is_primary_number(f.order) for f in chief_series(G).factors)


def _ctx(G) -> tuple[Lattice, int]:
    H = as_subgroup(G)
    lat = get_lattice(H)
    return lat, lat.index(H)


def hall_idx(sigma: SigmaPartition, lat: Lattice, t: int, cls: SigmaClass) -> list[int]:
    """Lattice indices of the Hall ``cls``-subgroups of subgroup ``t``."""
    key = ("hall", sigma.spec, t, cls)
    hit = lat.cache.get(key)
    if hit is None:
        hit = lat.subgroups_of_order(sigma.part(int(lat.orders[t]), cls), t)
        lat.cache[key] = hit
    return hit


def is_sigma_full_idx(sigma: SigmaPartition, lat: Lattice, t: int) -> bool:
    return all(hall_idx(sigma, lat, t, c) for c in sigma.classes_of(int(lat.orders[t])))


def is_sigma_full(sigma, G) -> bool:
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    if sigma.is_primary_number(H.order):
        return True
    return is_sigma_full_idx(sigma, *_ctx(H))


def hall_subgroups(sigma, G, cls) -> list[Subgroup]:
    """All Hall σ_i-subgroups of ``G``; ``[1]`` when σ_i does not meet |G|."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    if isinstance(cls, int):
        cls = sigma.class_of(cls)
    if cls not in sigma.sigma(H.order):
        return [H.parent.trivial()]
    lat, t = _ctx(H)
    return [lat[i] for i in hall_idx(sigma, lat, t, cls)]


def o_pi(G, spec) -> Subgroup:
    """Largest normal subgroup whose order is a π-number."""
    pred = prime_predicate(spec)
    best = as_subgroup(G).parent.trivial()
    for N in normal_subgroups(G):
        if N.order > best.order and is_pi_number(N.order, pred):
            best = N
    return best


def o_upper_pi(G, spec) -> Subgroup:
    """Subgroup generated by all elements of π'-order."""
    pred = prime_predicate(spec)
    H = as_subgroup(G)
    grp = H.parent
    orders = grp.element_orders[H.indices]
    sel = [int(x) for x, o in zip(H.indices, orders) if not any(pred(p) for p in prime_factors(int(o)))]
    return Subgroup(grp, grp.closure(sel))


# -- σ-subnormality ------------------------------------------------------------

def _step_idx(sigma: SigmaPartition, lat: Lattice, k: int, h: int) -> bool:
    """One σ-subnormal step: K ⊴ H, or H/core_H(K) σ-primary."""
    if lat.is_normal_idx(k, h):
        return True
    oh = int(lat.orders[h])
    if sigma.is_primary_number(oh):
        return True
    if not sigma.is_primary_number(oh // int(lat.orders[k])):
        return False
    return sigma.is_primary_number(oh // int(lat.orders[lat.core_idx(k, h)]))


def sigma_subnormal_mask(sigma, lat: Lattice, t: int) -> int:
    """Bitmask of all σ-subnormal subgroups of subgroup ``t``."""
    sigma = as_sigma(sigma)
    key = ("ssn", sigma.spec, t)
    hit = lat.cache.get(key)
    if hit is not None:
        return hit
    found = 1 << t
    stack = [t]
    while stack:
        h = stack.pop()
        for k in _bits(lat.down[h] & ~found):
            if _step_idx(sigma, lat, k, h):
                found |= 1 << k
                stack.append(k)
    lat.cache[key] = found
    return found


def _reach_chain(lat: Lattice, a: int, t: int, allowed: int, step) -> list[int] | None:
    """Shortest chain a = c_0 < ... < c_n = t through ``allowed`` with ``step``."""
    if not allowed >> a & 1:
        return None
    parent = {a: None}
    frontier = [a]
    while frontier and t not in parent:
        nxt = []
        for k in frontier:
            for h in _bits(lat.up[k] & allowed & ~(1 << k)):
                if h not in parent and step(k, h):
                    parent[h] = k
                    nxt.append(h)
        frontier = sorted(nxt)
    if t not in parent:
        return None
    chain = [t]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    return chain[::-1]


def is_sigma_subnormal_idx(sigma, lat: Lattice, a: int, t: int) -> bool:
    return bool(sigma_subnormal_mask(sigma, lat, t) >> a & 1)


def _check_in(A: Subgroup, H: Subgroup):
    if not A <= H:
        raise NotContained("subgroup is not contained in the ambient group")


def is_sigma_subnormal(sigma, A, G) -> bool:
    sigma = as_sigma(sigma)
    A, H = as_subgroup(A), as_subgroup(G)
    _check_in(A, H)
    lat, t = _ctx(H)
    return is_sigma_subnormal_idx(sigma, lat, lat.index(A), t)


def sigma_subnormal_chain(sigma, A, G) -> list[Subgroup] | None:
    """A shortest σ-subnormal chain from ``A`` to ``G``, or ``None``."""
    sigma = as_sigma(sigma)
    A, H = as_subgroup(A), as_subgroup(G)
    _check_in(A, H)
    lat, t = _ctx(H)
    a = lat.index(A)
    chain = _reach_chain(lat, a, t, sigma_subnormal_mask(sigma, lat, t),
                         lambda k, h: _step_idx(sigma, lat, k, h))
    return None if chain is None else [lat[i] for i in chain]


# -- σ-permutability and σ-seminormality -----------------------------------------

def is_sigma_permutable_idx(sigma, lat: Lattice, a: int, t: int) -> bool:
    sigma = as_sigma(sigma)
    if lat.is_normal_idx(a, t):
        return True
    if not lat.leq(a, t) or not is_sigma_full_idx(sigma, lat, t):
        return False
    for cls in sigma.classes_of(int(lat.orders[t])):
        for h in hall_idx(sigma, lat, t, cls):
            if not lat.permutes_idx(a, h):
                return False
    return True


def sigma_permutable_mask(sigma, lat: Lattice, t: int) -> int:
    sigma = as_sigma(sigma)
    key = ("sperm", sigma.spec, t)
    hit = lat.cache.get(key)
    if hit is None:
        hit = 0
        for a in _bits(lat.down[t]):
            if is_sigma_permutable_idx(sigma, lat, a, t):
                hit |= 1 << a
        lat.cache[key] = hit
    return hit


def is_sigma_permutable(sigma, A, G) -> bool:
    A, H = as_subgroup(A), as_subgroup(G)
    _check_in(A, H)
    lat, t = _ctx(H)
    return is_sigma_permutable_idx(sigma, lat, lat.index(A), t)


def is_sigma_seminormal(sigma, A, G) -> bool:
    """Every x with σ(|x|) ∩ σ(A) = ∅ normalizes ``A``."""
    sigma = as_sigma(sigma)
    A, H = as_subgroup(A), as_subgroup(G)
    _check_in(A, H)
    grp = H.parent
    sa = sigma.sigma(A.order)
    norm = normalizer(H, A)
    orders = grp.element_orders
    for x in H.indices:
        if not sigma.sigma(int(orders[x])) & sa and not norm.contains_index(int(x)):
            return False
    return True

