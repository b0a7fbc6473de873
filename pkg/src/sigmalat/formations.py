"""Chief series, formation membership and residuals."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .arith import is_prime, is_squarefree, prime_factors
from .errors import NotChiefFactor
from .lattice import normal_subgroups
from .perm import (Subgroup, as_subgroup, cached_quotient, commutator_subgroup, exponent, is_abelian,
                   is_normal_in, mask_from_indices)
from .sigma import SigmaPartition, as_sigma, is_sigma_nilpotent


@dataclass(frozen=True)
class ChiefFactor:
    lower: Subgroup
    upper: Subgroup
    order: int
    is_simple: bool
    is_cyclic: bool

    @property
    def primes(self) -> tuple[int, ...]:
        return prime_factors(self.order)

    def sigma_classes(self, sigma) -> list:
        return as_sigma(sigma).classes_of(self.order)


@dataclass(frozen=True)
class ChiefSeries:
    group: Subgroup
    factors: tuple[ChiefFactor, ...]

    @property
    def terms(self) -> list[Subgroup]:
        if not self.factors:
            return [self.group]
        return [self.factors[0].lower] + [f.upper for f in self.factors]

    def below(self, D) -> list[ChiefFactor]:
        D = as_subgroup(D)
        return [f for f in self.factors if f.upper <= D]

    def between(self, K, H) -> list[ChiefFactor]:
        K, H = as_subgroup(K), as_subgroup(H)
        return [f for f in self.factors if K <= f.lower and f.upper <= H]

    def signature(self) -> list[tuple[int, bool, bool]]:
        """Series-independent summary: sorted (order, simple, cyclic) triples."""
        return sorted((f.order, f.is_simple, f.is_cyclic) for f in self.factors)


def _factor(lower: Subgroup, upper: Subgroup) -> ChiefFactor:
    order = upper.order // lower.order
    if is_prime(order):
        return ChiefFactor(lower, upper, order, True, True)
    between = [N for N in normal_subgroups(upper) if lower < N < upper]
    return ChiefFactor(lower, upper, order, not between, False)


def chief_series(G, through=None, seed: int | None = None) -> ChiefSeries:
    """A chief series of ``G`` from the bottom up.

    Each step takes the least-order minimal normal subgroup of G/K (ties by
    element list), or a random one when ``seed`` is given.  ``through`` is a
    normal subgroup (or a chain of them) the series must pass through.
    """
    H = as_subgroup(G)
    ns = normal_subgroups(H)
    rng = random.Random(seed) if seed is not None else None
    stops = [H]
    if through is not None:
        chain = [through] if isinstance(through, Subgroup) else list(through)
        chain = sorted((as_subgroup(D) for D in chain), key=lambda D: D.order)
        for D, E in zip(chain, chain[1:]):
            if not D <= E:
                raise NotChiefFactor("subgroups to pass through must form a chain")
        for D in chain:
            if not is_normal_in(D, H):
                raise NotChiefFactor("series can only pass through normal subgroups")
        stops = chain + [H]
    factors = []
    K = H.parent.trivial()
    for stop in stops:
        while K != stop:
            cand = [N for N in ns if K < N <= stop]
            minimal = [N for N in cand if not any(M < N for M in cand)]
            nxt = rng.choice(minimal) if rng else minimal[0]
            factors.append(_factor(K, nxt))
            K = nxt
    return ChiefSeries(H, tuple(factors))


def derived_series(G) -> list[Subgroup]:
    cur = as_subgroup(G)
    out = [cur]
    while True:
        nxt = commutator_subgroup(cur)
        if nxt == cur:
            return out
        out.append(nxt)
        cur = nxt


def is_soluble(G) -> bool:
    return derived_series(G)[-1].is_trivial()


class Formation(str, Enum):
    ABELIAN_SQFREE = "abelian-sqfree"
    NILPOTENT = "nilpotent"
    SIGMA_NILPOTENT = "sigma-nilpotent"
    SOLUBLE = "soluble"
    SIGMA_SOLUBLE = "sigma-soluble"
    SUPERSOLUBLE = "supersoluble"
    SIGMA_SUPERSOLUBLE = "sigma-supersoluble"
    SC = "sc"
    SIGMA_SC = "sigma-sc"


_SIGMA1 = SigmaPartition.sigma1()


def _as_formation(F) -> Formation:
    return F if isinstance(F, Formation) else Formation(str(F).lower().replace("_", "-"))


def is_member(F, sigma, G) -> bool:
    F = _as_formation(F)
    sigma = as_sigma(sigma) if sigma is not None else _SIGMA1
    H = as_subgroup(G)
    store = H.parent.__dict__.setdefault("_member", {})
    key = (F, sigma.spec, H.mask)
    if key not in store:
        store[key] = _member(F, sigma, H)
    return store[key]


def _member(F: Formation, sigma: SigmaPartition, H: Subgroup) -> bool:
    if F is Formation.ABELIAN_SQFREE:
        return is_abelian(H) and is_squarefree(exponent(H))
    if F is Formation.NILPOTENT:
        return is_sigma_nilpotent(_SIGMA1, H)
    if F is Formation.SIGMA_NILPOTENT:
        return is_sigma_nilpotent(sigma, H)
    if F is Formation.SOLUBLE:
        return is_soluble(H)
    if F is Formation.SIGMA_SOLUBLE:
        return all(sigma.is_primary_number(f.order) for f in chief_series(H).factors)
    if F is Formation.SUPERSOLUBLE:
        return all(f.is_cyclic for f in chief_series(H).factors)
    if F in (Formation.SIGMA_SUPERSOLUBLE, Formation.SIGMA_SC, Formation.SC):
        s = _SIGMA1 if F is Formation.SC else sigma
        D = residual(Formation.SIGMA_NILPOTENT, s, H)
        below = chief_series(H, through=D).below(D)
        if F is Formation.SIGMA_SUPERSOLUBLE:
            return all(f.is_cyclic for f in below)
        return all(f.is_simple for f in below)
    raise ValueError(F)


def quotient_is_member(F, sigma, G, N) -> bool:
    H, N = as_subgroup(G), as_subgroup(N)
    if N.is_trivial():
        return is_member(F, sigma, H)
    Q, _ = cached_quotient(H, N)
    return is_member(F, sigma, Q)


def residual(F, sigma, G) -> Subgroup:
    """Intersection of all normal N with G/N in the formation."""
    F = _as_formation(F)
    H = as_subgroup(G)
    store = H.parent.__dict__.setdefault("_residual", {})
    key = (F, as_sigma(sigma).spec if sigma is not None else "sigma1", H.mask)
    if key not in store:
        mask = H.mask
        for N in normal_subgroups(H):
            if N.mask & mask != mask and quotient_is_member(F, sigma, H, N):
                mask &= N.mask
        store[key] = Subgroup(H.parent, mask)
    return store[key]


def soluble_radical(G) -> Subgroup:
    """Largest soluble normal subgroup."""
    best = as_subgroup(G).parent.trivial()
    for N in normal_subgroups(G):
        if N.order > best.order and is_soluble(N):
            best = N
    return best


def is_chief_factor(G, K, H) -> bool:
    G, K, H = as_subgroup(G), as_subgroup(K), as_subgroup(H)
    if not (K < H <= G and is_normal_in(K, G) and is_normal_in(H, G)):
        return False
    return not any(K < N < H for N in normal_subgroups(G))


def centralizer_of_factor(G, K, H) -> Subgroup:
    """C_G(H/K): elements g with [h, g] in K for every h in H."""
    G, K, H = as_subgroup(G), as_subgroup(K), as_subgroup(H)
    grp = G.parent
    t, inv = grp.table, grp.inverse
    inK = np.zeros(grp.order, dtype=bool)
    inK[K.indices] = True
    h = H.indices
    g = G.indices
    # [h, g] = h^-1 g^-1 h g
    hg = t[np.ix_(h, g)]
    gh = t[np.ix_(g, h)].T
    comm = t[inv[gh], hg]
    ok = inK[comm].all(axis=0)
    return Subgroup(grp, mask_from_indices(g[ok], grp.order))


def is_sigma_central(sigma, G, K, H) -> bool:
    """H/K is a σ_i-group and G/C_G(H/K) a σ_i-group for one class σ_i."""
    sigma = as_sigma(sigma)
    G = as_subgroup(G)
    if not is_chief_factor(G, K, H):
        raise NotChiefFactor("H/K is not a chief factor of G")
    K, H = as_subgroup(K), as_subgroup(H)
    C = centralizer_of_factor(G, K, H)
    classes = sigma.sigma(H.order // K.order) | sigma.sigma(G.order // C.order)
    return len(classes) <= 1
