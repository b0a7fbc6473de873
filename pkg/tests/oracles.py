"""Slow, definition-level reference implementations.

Everything here works on frozensets of permutation tuples and shares no
code with the engine beyond the permutation convention
(``x^(pq) = (x^p)^q``).  Intended for groups of order up to a few dozen.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def mul(p, q):
    return tuple(q[i] for i in p)


def inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conj(x, g):
    return mul(mul(inv(g), x), g)


def closure(gens, degree):
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def order_of(x):
    e = tuple(range(len(x)))
    k, y = 1, x
    while y != e:
        y = mul(y, x)
        k += 1
    return k


def primes_of(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class Brute:
    """A group as a frozenset of permutations, with naive lattice operations."""

    def __init__(self, elements):
        self.G = frozenset(elements)
        self.degree = len(next(iter(self.G)))

    def gen(self, xs):
        return closure(xs, self.degree)

    def join(self, A, B):
        return self.gen(A | B)

    @lru_cache(maxsize=None)
    def subgroups(self):
        cyclic = {self.gen([x]) for x in self.G}
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            nxt = []
            for A in frontier:
                for C in cyclic:
                    if not C <= A:
                        J = self.join(A, C)
                        if J not in found:
                            found.add(J)
                            nxt.append(J)
            frontier = nxt
        return tuple(sorted(found, key=lambda S: (len(S), sorted(S))))

    def below(self, H):
        return [S for S in self.subgroups() if S <= H]

    def is_normal(self, A, H):
        return all(conj(a, h) in A for a in A for h in H)

    def normal_closure(self, A, H):
        return self.gen({conj(a, h) for a in A for h in H})

    def core(self, A, H):
        return frozenset(a for a in A if all(conj(a, h) in A for h in H))

    def is_subnormal(self, A, H):
        cur = H
        while True:
            nxt = self.normal_closure(A, cur)
            if nxt == cur:
                return cur == A
            cur = nxt

    def is_modular(self, M, H):
        subs = self.below(H)
        for X, Z in product(subs, subs):
            if X <= Z and self.join(X, M & Z) != self.join(X, M) & Z:
                return False
            if M <= Z and self.join(M, X & Z) != self.join(M, X) & Z:
                return False
        return True

    def permutes(self, A, B):
        return {mul(a, b) for a in A for b in B} == {mul(b, a) for a in A for b in B}

    def is_quasinormal(self, A, H):
        return all(self.permutes(A, B) for B in self.below(H))

    # -- σ notions, with σ given as a function prime -> class label

    def sig(self, n, cls):
        return {cls(p) for p in primes_of(n)}

    def primary(self, n, cls):
        return len(self.sig(n, cls)) <= 1

    def halls(self, H, cls):
        out = {}
        for c in self.sig(len(H), cls):
            part, n = 1, len(H)
            for p in primes_of(n):
                if cls(p) == c:
                    while n % p == 0:
                        n //= p
                        part *= p
            out[c] = [S for S in self.below(H) if len(S) == part]
        return out

    def sigma_subnormal(self, A, H, cls):
        """Upward search for a chain of normal or σ-primary-core steps."""
        seen = {A}
        stack = [A]
        while stack:
            K = stack.pop()
            if K == H:
                return True
            for L in self.below(H):
                if K < L and L not in seen:
                    if self.is_normal(K, L) or self.primary(len(L) // len(self.core(K, L)), cls):
                        seen.add(L)
                        stack.append(L)
        return False

    def sigma_permutable(self, A, H, cls):
        if self.is_normal(A, H):
            return True
        halls = self.halls(H, cls)
        if not all(halls.values()):
            return False
        return all(self.permutes(A, S) for hs in halls.values() for S in hs)


def from_group(G) -> Brute:
    return Brute(G.elements)


def as_set(S) -> frozenset:
    return frozenset(S.elements)
