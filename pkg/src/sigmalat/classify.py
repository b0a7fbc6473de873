"""Transitivity classes: direct deciders and structural condition checkers.

Direct classifiers quantify over the subgroup lattice.  Each one returns a
:class:`Verdict` whose witness is the canonically least offending subgroup.

The condition checkers evaluate the structural descriptions of the same
classes (abelian Hall residuals with power automorphisms, Robinson
complexes, the **N**/**P**/**t**/**M** quotient conditions).  They never
call the direct classifier of the group under test, so the two routes can
be compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .arith import is_pi_number, pi_part, prime_factors
from .errors import NotSigmaSoluble, NotSoluble
from .formations import (Formation, centralizer_of_factor, chief_series, is_member, is_sigma_central, is_soluble,
                         residual)
from .lattice import Lattice, _bits, frattini, get_lattice, normal_subgroups
from .modularity import (induces_power_automorphisms, detect_p_group_shape, is_dedekind_idx, is_m_group_idx,
                         is_modular_idx, is_quasinormal_idx, modular_elements, sigma_subquasinormal_mask,
                         submodular_mask, Strategy)
from .perm import Subgroup, as_subgroup, cached_quotient, center, commutator_subgroup, is_abelian, is_normal_in
from .sigma import (SigmaPartition, as_sigma, hall_idx, is_sigma_full_idx, is_sigma_nilpotent,
                    is_sigma_permutable_idx, is_sigma_seminormal, is_sigma_soluble, o_pi, prime_predicate,
                    sigma_permutable_mask, sigma_subnormal_mask)

SIGMA1 = SigmaPartition.sigma1()
NOT_SIGMA_FULL = "not-sigma-full"


@dataclass
class Verdict:
    """Outcome of one classifier or checker.

    ``verdict`` is ``None`` when the question is undefined for the group.
    ``details`` holds JSON-friendly per-condition values; ``objects`` holds
    subgroups and other results for programmatic use.
    """

    verdict: bool | None
    witness: Subgroup | None = None
    details: dict = field(default_factory=dict)
    flags: tuple = ()
    objects: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.verdict)


def _ctx(G) -> tuple[Lattice, int]:
    H = as_subgroup(G)
    lat = get_lattice(H)
    return lat, lat.index(H)


def _universal(lat: Lattice, mask: int, pred) -> Verdict:
    for a in _bits(mask):
        if not pred(a):
            return Verdict(False, lat[a])
    return Verdict(True)


# -- direct classifiers -----------------------------------------------------------

def is_T(G) -> Verdict:
    """Every subnormal subgroup is normal."""
    lat, t = _ctx(G)
    return _universal(lat, sigma_subnormal_mask(SIGMA1, lat, t), lambda a: lat.is_normal_idx(a, t))


def is_PT(G, strategy=Strategy.REDUCED) -> Verdict:
    """Every subnormal subgroup is modular (equivalently quasinormal)."""
    lat, t = _ctx(G)
    return _universal(lat, sigma_subnormal_mask(SIGMA1, lat, t), lambda a: is_modular_idx(lat, a, t, strategy))


def is_PST(G) -> Verdict:
    """Every subnormal subgroup permutes with all Sylow subgroups."""
    lat, t = _ctx(G)
    return _universal(lat, sigma_subnormal_mask(SIGMA1, lat, t),
                      lambda a: is_sigma_permutable_idx(SIGMA1, lat, a, t))


class PsigmaTMode(str, Enum):
    SUBNORMAL = "subnormal"
    TRANSITIVE = "transitive"


def is_PsigmaT(sigma, G, mode=PsigmaTMode.SUBNORMAL) -> Verdict:
    """σ-permutability is transitive; undefined unless ``G`` is σ-full."""
    sigma = as_sigma(sigma)
    lat, t = _ctx(G)
    if not is_sigma_full_idx(sigma, lat, t):
        return Verdict(None, flags=(NOT_SIGMA_FULL,))
    if PsigmaTMode(mode) is PsigmaTMode.SUBNORMAL:
        return _universal(lat, sigma_subnormal_mask(sigma, lat, t),
                          lambda a: is_sigma_permutable_idx(sigma, lat, a, t))
    perm_g = sigma_permutable_mask(sigma, lat, t)
    bad = 0
    for k in _bits(perm_g):
        bad |= sigma_permutable_mask(sigma, lat, k) & ~perm_g
    if bad:
        return Verdict(False, lat[(bad & -bad).bit_length() - 1])
    return Verdict(True)


def is_QsigmaT(sigma, G, strategy=Strategy.REDUCED) -> Verdict:
    """Every σ-subnormal subgroup is modular."""
    lat, t = _ctx(G)
    return _universal(lat, sigma_subnormal_mask(sigma, lat, t), lambda a: is_modular_idx(lat, a, t, strategy))


def is_T_sigma(sigma, G) -> Verdict:
    """Every σ-subnormal subgroup is normal."""
    lat, t = _ctx(G)
    return _universal(lat, sigma_subnormal_mask(sigma, lat, t), lambda a: lat.is_normal_idx(a, t))


def is_MsigmaT(sigma, G) -> Verdict:
    """Every σ-subquasinormal subgroup is σ-quasinormal."""
    sigma = as_sigma(sigma)
    lat, t = _ctx(G)
    ssn = sigma_subnormal_mask(sigma, lat, t)
    mod = modular_elements(lat, t)
    return _universal(lat, sigma_subquasinormal_mask(sigma, lat, t), lambda a: bool(ssn & mod >> a & 1))


def is_MT(G) -> Verdict:
    """Every submodular subgroup is modular."""
    lat, t = _ctx(G)
    mod = modular_elements(lat, t)
    return _universal(lat, submodular_mask(lat, t), lambda a: bool(mod >> a & 1))


# -- subgroup functors -------------------------------------------------------------

class PropertyFunctor(str, Enum):
    NORMAL = "normal"
    MODULAR = "modular"
    SIGMA_PERMUTABLE = "sigma-permutable"

    def holds_idx(self, sigma, lat: Lattice, a: int, t: int) -> bool:
        if self is PropertyFunctor.NORMAL:
            return lat.is_normal_idx(a, t)
        if self is PropertyFunctor.MODULAR:
            return bool(modular_elements(lat, t) >> a & 1)
        return is_sigma_permutable_idx(sigma, lat, a, t)

    def holds(self, sigma, A, G) -> bool:
        A, H = as_subgroup(A), as_subgroup(G)
        lat = get_lattice(H)
        return self.holds_idx(as_sigma(sigma), lat, lat.index(A), lat.index(H))

    def all_subgroups(self, sigma, lat: Lattice, t: int) -> bool:
        """Every subgroup of ``t`` lies in τ(t)."""
        if self is PropertyFunctor.NORMAL:
            return is_dedekind_idx(lat, t)
        if self is PropertyFunctor.MODULAR:
            return is_m_group_idx(lat, t)
        return all(is_sigma_permutable_idx(sigma, lat, a, t) for a in _bits(lat.down[t]))


# -- the abelian-Hall-residual bundle ---------------------------------------------

def _normal_complement(lat: Lattice, o: int, s: int) -> bool:
    """Subgroup ``o`` has a normal complement inside subgroup ``s``."""
    if not lat.leq(o, s):
        return False
    need = int(lat.orders[s]) // int(lat.orders[o])
    return any(lat.meet_idx(k, o) == 0 and lat.is_normal_idx(k, s) for k in lat.subgroups_of_order(need, s))


def residual_bundle(sigma, G, functor: PropertyFunctor | None = None) -> Verdict:
    """Conditions (i), (ii) of the σ-nilpotent-residual description.

    D = G^{N_σ} must be an abelian Hall subgroup of odd order with a
    σ-nilpotent complement M, every element of G must induce a power
    automorphism on D, and each O_{σ_i}(D) must have a normal complement in
    some Hall σ_i-subgroup.  With ``functor`` the complement must also have
    every subgroup in τ(M).
    """
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    if not is_sigma_soluble(sigma, H):
        raise NotSigmaSoluble("the group is not σ-soluble")
    lat, t = _ctx(H)
    D = residual(Formation.SIGMA_NILPOTENT, sigma, H)
    d = lat.index(D)
    index = H.order // D.order
    det = {
        "D_abelian": is_abelian(D),
        "D_hall": math.gcd(D.order, index) == 1,
        "D_odd": D.order % 2 == 1,
        "power_automorphisms": all(lat.is_normal_idx(u, t) for u in _bits(lat.down[d])),
    }
    M = None
    for m in lat.subgroups_of_order(index, t):
        if lat.meet_idx(m, d) != 0 or not is_sigma_nilpotent(sigma, lat[m]):
            continue
        if functor is not None and not functor.all_subgroups(sigma, lat, m):
            continue
        M = m
        break
    det["complement"] = M is not None
    ok_ii = True
    for cls in sigma.classes_of(H.order):
        o = lat.index(o_pi(D, cls))
        if not any(_normal_complement(lat, o, s) for s in hall_idx(sigma, lat, t, cls)):
            ok_ii = False
            break
    det["holds_i"] = all(det[k] for k in ("D_abelian", "D_hall", "D_odd", "power_automorphisms", "complement"))
    det["holds_ii"] = ok_ii
    objs = {"D": D, "M": lat[M] if M is not None else None}
    return Verdict(det["holds_i"] and det["holds_ii"], details=det, objects=objs)


def theorem2_3_check(sigma, G) -> Verdict:
    """σ-soluble PσT-groups via the residual bundle."""
    return residual_bundle(sigma, G)


def theorem2_11_check(sigma, G, functor) -> Verdict:
    """Premise: every σ-subnormal subgroup is a τ-subgroup.

    The verdict is the condition bundle; ``details['premise']`` is the
    premise evaluated directly, for comparison.
    """
    sigma = as_sigma(sigma)
    functor = PropertyFunctor(functor)
    out = residual_bundle(sigma, G, functor)
    lat, t = _ctx(G)
    out.details["premise"] = all(functor.holds_idx(sigma, lat, a, t)
                                 for a in _bits(sigma_subnormal_mask(sigma, lat, t)))
    out.details["conditions"] = out.verdict
    return out


def theorem3_5_check(sigma, G) -> Verdict:
    """σ-soluble QσT-groups: the bundle with an M-group complement."""
    return residual_bundle(sigma, G, PropertyFunctor.MODULAR)


def corollary2_16_check(sigma, G) -> Verdict:
    """σ-soluble T_σ-groups: the bundle with a Dedekind complement."""
    return residual_bundle(sigma, G, PropertyFunctor.NORMAL)


def corollary2_17_check(sigma, G) -> Verdict:
    """T-group whose Hall σ_i-subgroups are all Dedekind."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    if not is_sigma_soluble(sigma, H):
        raise NotSigmaSoluble("the group is not σ-soluble")
    lat, t = _ctx(H)
    t_ok = bool(is_T(H))
    halls = all(is_dedekind_idx(lat, s) for cls in sigma.classes_of(H.order) for s in hall_idx(sigma, lat, t, cls))
    return Verdict(t_ok and halls, details={"T": t_ok, "halls_dedekind": halls})


def theorem4_5_check(sigma, G) -> Verdict:
    """Soluble MσT-groups: same bundle as for QσT."""
    if not is_soluble(G):
        raise NotSoluble("the group is not soluble")
    return residual_bundle(sigma, G, PropertyFunctor.MODULAR)


def theorem5_3_check(G) -> Verdict:
    """Soluble MT-groups are exactly the groups with modular subgroup lattice."""
    if not is_soluble(G):
        raise NotSoluble("the group is not soluble")
    lat, t = _ctx(G)
    ok = is_m_group_idx(lat, t)
    return Verdict(ok, details={"m_group": ok})


# -- Robinson complexes -------------------------------------------------------------

@dataclass(frozen=True)
class RobinsonComplex:
    D: Subgroup
    Z: Subgroup
    U: tuple

    @property
    def k(self) -> int:
        return len(self.U)


def find_robinson_complex(sigma, G, D=None) -> tuple[RobinsonComplex | None, str | None]:
    """The complex on ``D`` (default G^{S_σ}) or the first failing clause."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    D = residual(Formation.SIGMA_SOLUBLE, sigma, H) if D is None else as_subgroup(D)
    if D.is_trivial():
        return None, "D is trivial"
    if not is_normal_in(D, H):
        return None, "D is not normal"
    Z = center(D)
    if not Z <= frattini(D):
        return None, "Z(D) is not in the Frattini subgroup of D"
    ns = normal_subgroups(H)
    above = [N for N in ns if Z < N <= D]
    Us = [U for U in above if not any(V < U for V in above)]
    for U in Us:
        order = U.order // Z.order
        if sigma.is_primary_number(order):
            return None, "a factor U/Z(D) is σ-primary"
        if any(Z < V < U for V in normal_subgroups(U)):
            return None, "a factor U/Z(D) is not simple"
    joined = Z
    for U in Us:
        joined = joined.join(U)
    if joined != D or math.prod(U.order // Z.order for U in Us) != D.order // Z.order:
        return None, "D/Z(D) is not the direct product of the factors"
    if not all(f.is_cyclic for f in chief_series(H, through=Z).below(Z)):
        return None, "a chief factor below Z(D) is not cyclic"
    return RobinsonComplex(D, Z, tuple(Us)), None


def robinson_complex(sigma, G, D=None) -> RobinsonComplex | None:
    return find_robinson_complex(sigma, G, D)[0]


def _complex_quotients(H: Subgroup, cx: RobinsonComplex | None) -> list[Subgroup]:
    """Normal subgroups W = U'_{j1}...U'_{jr} for nonempty proper index sets."""
    if cx is None or cx.k < 2:
        return []
    derived = [commutator_subgroup(U) for U in cx.U]
    out = []
    for r in range(1, cx.k):
        for js in combinations(range(cx.k), r):
            W = derived[js[0]]
            for j in js[1:]:
                W = W.join(derived[j])
            if W not in out:
                out.append(W)
    return out


# -- quotient conditions N, P, t, M ---------------------------------------------------

def soluble_normal_subgroups(G) -> list[Subgroup]:
    return [N for N in normal_subgroups(G) if is_soluble(N)]


def _power_condition(G, pi, all_elements: bool) -> Verdict:
    H = as_subgroup(G)
    pred = prime_predicate(pi)
    orders = H.parent.element_orders
    if all_elements:
        xs = [int(x) for x in H.indices]
    else:
        xs = [int(x) for x in H.indices if not any(pred(p) for p in prime_factors(int(orders[x])))]
    for N in soluble_normal_subgroups(H):
        if N.is_whole() and H.is_whole():
            continue
        Q, phi = cached_quotient(H, N)
        L = o_pi(Q, pred)
        if L.is_trivial():
            continue
        if not induces_power_automorphisms({phi(x) for x in xs}, L):
            return Verdict(False, N)
    return Verdict(True)


def condition_N(G, pi) -> Verdict:
    """π'-elements induce power automorphisms on O_π(G/N), N soluble normal."""
    return _power_condition(G, pi, all_elements=False)


def condition_t(G, pi) -> Verdict:
    """Every subgroup of O_π(G/N) is normal in G/N, N soluble normal."""
    return _power_condition(G, pi, all_elements=True)


def _o_pi_preimage(H: Subgroup, N: Subgroup, pred) -> Subgroup:
    best = N
    for L in normal_subgroups(H):
        if N <= L and L.order > best.order and is_pi_number(L.order // N.order, pred):
            best = L
    return best


def condition_P(G, pi, mode: str = "every") -> Verdict:
    """Subgroups of O_π(G/N) are modular in the Hall π-subgroups of G/N.

    Vacuous when G has no Hall π-subgroup.  ``mode`` chooses whether the
    modularity must hold in every Hall π-subgroup of G/N or in some.
    """
    if mode not in ("every", "some"):
        raise ValueError("mode must be 'every' or 'some'")
    H = as_subgroup(G)
    pred = prime_predicate(pi)
    lat, t = _ctx(H)

    def halls(b: int) -> list[int]:
        part = pi_part(int(lat.orders[t]) // int(lat.orders[b]), pred)
        return [s for s in lat.subgroups_of_order(part * int(lat.orders[b]), t) if lat.leq(b, s)]

    if not halls(0):
        return Verdict(True, details={"vacuous": True})
    for N in soluble_normal_subgroups(H):
        n = lat.index(N)
        L = lat.index(_o_pi_preimage(H, N, pred))
        inner = lat.interval_idx(n, L)
        oks = []
        for s in halls(n):
            mod = modular_elements(lat, s, n) if lat.leq(L, s) else 0
            oks.append(all(mod >> u & 1 for u in inner))
        if not (all(oks) if mode == "every" else any(oks)):
            return Verdict(False, N)
    return Verdict(True)


def condition_M(G, p: int | None = None, q: int | None = None) -> Verdict:
    """Non-subnormal subgroups of normal P-subgroups P/N are modular in G/N.

    With ``p`` and ``q`` only P-groups of type (p, q) count; without them
    every non-abelian P-group does.
    """
    H = as_subgroup(G)
    lat, t = _ctx(H)
    for N in soluble_normal_subgroups(H):
        n = lat.index(N)
        Q, phi = cached_quotient(H, N)
        mod = None
        for P in normal_subgroups(H):
            if not N < P:
                continue
            shape = detect_p_group_shape(phi.image(P))
            if shape is None or (p is not None and (shape.p, shape.q) != (p, q)):
                continue
            if mod is None:
                mod = modular_elements(lat, t, n)
            k = lat.index(P)
            sub = sigma_subnormal_mask(SIGMA1, lat, k)
            for u in lat.interval_idx(n, k):
                if not sub >> u & 1 and not mod >> u & 1:
                    return Verdict(False, lat[u], details={"N": N.order, "type": [shape.p, shape.q]})
    return Verdict(True)


# -- Robinson-complex theorems ------------------------------------------------------

def _quotient_group(H: Subgroup, W: Subgroup):
    return H if W.is_trivial() else cached_quotient(H, W)[0]


def _hall_hypothesis(sigma: SigmaPartition, lat: Lattice, t: int) -> bool:
    for cls in sigma.classes_of(int(lat.orders[t])):
        for s in hall_idx(sigma, lat, t, cls):
            S = lat[s]
            if not (is_member(Formation.SUPERSOLUBLE, None, S) or is_PST(S)):
                return False
    return True


def _complex_part(sigma: SigmaPartition, H: Subgroup, D: Subgroup, det: dict):
    if D.is_trivial():
        det["ii"] = True
        return None
    cx, reason = find_robinson_complex(sigma, H, D)
    det["ii"] = cx is not None
    if reason:
        det["complex_failure"] = reason
    return cx


def _iii(H: Subgroup, cx: RobinsonComplex | None, check) -> bool:
    groups = [H] + [_quotient_group(H, W) for W in _complex_quotients(H, cx)]
    return all(check(X) for X in groups)


def _rc_verdict(det: dict, objs: dict) -> Verdict:
    ok = det["i"] and det["ii"] and det["iii"]
    return Verdict(ok, details=det, objects=objs)


def theorem2_20_check(sigma, G) -> Verdict:
    """PσT for σ-full groups whose Hall σ_i-subgroups are supersoluble or PST."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    lat, t = _ctx(H)
    full = is_sigma_full_idx(sigma, lat, t)
    hyp = full and _hall_hypothesis(sigma, lat, t)
    det = {"hypothesis": hyp}
    if not hyp:
        return Verdict(None, details=det, flags=(() if full else (NOT_SIGMA_FULL,)) + ("hypothesis-fails",))
    D = residual(Formation.SIGMA_SOLUBLE, sigma, H)
    det["i"] = bool(theorem2_3_check(sigma, _quotient_group(H, D)))
    cx = _complex_part(sigma, H, D, det)
    z_classes = sigma.classes_of(cx.Z.order) if cx else []
    det["iii"] = det["ii"] and _iii(H, cx, lambda X: all(condition_N(X, c) for c in z_classes))
    return _rc_verdict(det, {"D": D, "complex": cx})


def theorem3_6_check(sigma, G, p_mode: str = "every") -> Verdict:
    """QσT for σ-full groups."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    lat, t = _ctx(H)
    det = {"hypothesis": is_sigma_full_idx(sigma, lat, t)}
    if not det["hypothesis"]:
        return Verdict(None, details=det, flags=(NOT_SIGMA_FULL,))
    D = residual(Formation.SIGMA_SOLUBLE, sigma, H)
    det["i"] = bool(theorem3_5_check(sigma, _quotient_group(H, D)))
    cx = _complex_part(sigma, H, D, det)
    z_classes = sigma.classes_of(cx.Z.order) if cx else []
    d_classes = sigma.classes_of(D.order) if cx else []

    def check(X):
        return (all(condition_N(X, c) for c in z_classes)
                and all(condition_P(X, c, p_mode) for c in d_classes))

    det["iii"] = det["ii"] and _iii(H, cx, check)
    return _rc_verdict(det, {"D": D, "complex": cx})


def theorem3_19_check(sigma, G) -> Verdict:
    """T_σ for σ-full groups: t_{σ_i} for all i, non-σ-primary chief factors simple."""
    sigma = as_sigma(sigma)
    H = as_subgroup(G)
    lat, t = _ctx(H)
    det = {"hypothesis": is_sigma_full_idx(sigma, lat, t)}
    if not det["hypothesis"]:
        return Verdict(None, details=det, flags=(NOT_SIGMA_FULL,))
    det["t"] = all(condition_t(H, c) for c in sigma.classes_of(H.order))
    det["chief_simple"] = all(f.is_simple for f in chief_series(H).factors
                              if not sigma.is_primary_number(f.order))
    return Verdict(det["t"] and det["chief_simple"], details=det)


def theorem5_8_check(G) -> Verdict:
    """MT-groups via the soluble residual and a Robinson complex."""
    H = as_subgroup(G)
    lat, t = _ctx(H)
    D = residual(Formation.SOLUBLE, None, H)
    det = {"hypothesis": True, "i": is_m_group_idx(lat, t, lat.index(D))}
    cx = _complex_part(SIGMA1, H, D, det)
    z_primes = prime_factors(cx.Z.order) if cx else ()
    d_primes = prime_factors(D.order) if cx else ()
    primes = prime_factors(H.order)
    pairs = [(p, q) for p in primes for q in primes if p != q and (p in d_primes or q in d_primes)]

    def check(X):
        return (all(condition_N(X, [p]) for p in z_primes)
                and all(condition_P(X, [p]) for p in d_primes)
                and all(condition_M(X, p, q) for p, q in pairs))

    det["iii"] = det["ii"] and _iii(H, cx, check)
    return _rc_verdict(det, {"D": D, "complex": cx})


# -- σ-quasinormal structure ------------------------------------------------------

def theorem3_3_clauses(sigma, A, G) -> dict:
    """Evaluate the structural consequences of σ-quasinormality for ``A``."""
    sigma = as_sigma(sigma)
    A, H = as_subgroup(A), as_subgroup(G)
    lat, t = _ctx(H)
    a = lat.index(A)
    out = {}
    out["i"] = all(lat.permutes_idx(a, s) for cls in sigma.classes_of(H.order)
                   for s in hall_idx(sigma, lat, t, cls))
    top = lat[lat.closure_idx(a, t)]
    bottom = lat[lat.core_idx(a, t)]
    C = centralizer_of_factor(H, bottom, top)
    ab_nil = is_sigma_nilpotent(sigma, cached_quotient(top, bottom)[0]) if bottom != top else True
    gc_nil = is_sigma_nilpotent(sigma, cached_quotient(H, C)[0]) if C != H else True
    out["ii"] = ab_nil and gc_nil
    factors = chief_series(H, through=[bottom, top]).between(bottom, top)
    out["iii"] = all(is_sigma_central(sigma, H, f.lower, f.upper) for f in factors)
    out["iv"] = sigma.sigma(H.order // C.order) <= sigma.sigma(top.order // bottom.order)
    out["v"] = is_sigma_seminormal(sigma, A, H)
    return out


# -- registry used by the corpus runner ------------------------------------------------

PROPERTIES = ("T", "PT", "PST", "PsigmaT", "QsigmaT", "MsigmaT", "T_sigma", "MT")

_DIRECT = {
    "T": lambda s, G, o: is_T(G),
    "PT": lambda s, G, o: is_PT(G, Strategy.DIRECT if o else Strategy.REDUCED),
    "PST": lambda s, G, o: is_PST(G),
    "PsigmaT": lambda s, G, o: is_PsigmaT(s, G, PsigmaTMode.TRANSITIVE if o else PsigmaTMode.SUBNORMAL),
    "QsigmaT": lambda s, G, o: is_QsigmaT(s, G, Strategy.DIRECT if o else Strategy.REDUCED),
    "MsigmaT": lambda s, G, o: is_MsigmaT(s, G),
    "T_sigma": lambda s, G, o: is_T_sigma(s, G),
    "MT": lambda s, G, o: is_MT(G),
}


def classify(prop: str, sigma, G, oracle: bool = False) -> Verdict:
    """Direct verdict for a property name from :data:`PROPERTIES`."""
    if prop not in _DIRECT:
        raise ValueError(f"unknown property {prop!r}; expected one of {', '.join(PROPERTIES)}")
    return _DIRECT[prop](as_sigma(sigma), G, oracle)


THEOREMS = {
    "2.3": lambda s, G: theorem2_3_check(s, G),
    "2.20": lambda s, G: theorem2_20_check(s, G),
    "3.5": lambda s, G: theorem3_5_check(s, G),
    "3.6": lambda s, G: theorem3_6_check(s, G),
    "3.19": lambda s, G: theorem3_19_check(s, G),
    "4.5": lambda s, G: theorem4_5_check(s, G),
    "5.3": lambda s, G: theorem5_3_check(G),
    "5.8": lambda s, G: theorem5_8_check(G),
}


def is_quasinormal_everywhere(G) -> bool:
    lat, t = _ctx(G)
    return all(is_quasinormal_idx(lat, a, t) for a in _bits(lat.down[t]))
