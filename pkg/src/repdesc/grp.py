"""Finite permutation groups on points 0..d-1.

Elements are tuples mapping point i to images[i].  Groups enumerate their full
element list at construction (desk scale, capped by a configurable bound), so
every later query is a pure lookup.  All enumerations are deterministic:
elements sort lexicographically, conjugacy classes by (size, least member),
subgroups by (order, canonical generator list).
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

from .errors import (
    GroupMismatch,
    InvalidPermutation,
    NoProperStep,
    NotNormal,
    NotSubgroup,
    OrderBoundExceeded,
    PrimalityViolated,
)

Perm = tuple

DEFAULT_ORDER_BOUND = 1000


def resolve_bound(explicit=None) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("REPDESC_BOUND")
    return int(env) if env else DEFAULT_ORDER_BOUND


def perm_identity(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """p after q: (p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def perm_conj(g: Perm, x: Perm) -> Perm:
    """g x g^{-1}."""
    return perm_mul(perm_mul(g, x), perm_inv(g))


def perm_order(p: Perm) -> int:
    order = 1
    cur = p
    ident = perm_identity(len(p))
    while cur != ident:
        cur = perm_mul(cur, p)
        order += 1
    return order


def perm_from_cycles(degree: int, cycles) -> Perm:
    images = list(range(degree))
    for cyc in cycles:
        for i, pt in enumerate(cyc):
            images[pt] = cyc[(i + 1) % len(cyc)]
    return tuple(images)


def validate_perm(degree: int, p) -> Perm:
    p = tuple(int(x) for x in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InvalidPermutation("not a bijection on the declared points",
                                 degree=degree, images=list(p))
    return p


def _closure(degree, gens, bound):
    """BFS closure; returns (bfs_order, parents) with parents[g] = (h, i) for
    the tree edge g = h * gens[i]."""
    ident = perm_identity(degree)
    seen = {ident}
    order = [ident]
    parents = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for i, s in enumerate(gens):
                g = perm_mul(h, s)
                if g not in seen:
                    seen.add(g)
                    if len(seen) > bound:
                        raise OrderBoundExceeded(
                            "group closure exceeded the order cap", bound=bound
                        )
                    parents[g] = (h, i)
                    order.append(g)
                    nxt.append(g)
        frontier = nxt
    return order, parents


def closure_of(degree: int, elems) -> frozenset:
    """Subgroup generated by elems, as an element set (no bound; internal)."""
    ident = perm_identity(degree)
    seen = {ident}
    frontier = list(elems)
    seen.update(frontier)
    gens = list(dict.fromkeys(elems))
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                g = perm_mul(h, s)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return frozenset(seen)


class FiniteGroup:
    """A permutation group with its full element list and class data."""

    def __init__(self, degree: int, generators, name=None, bound=None):
        bound = resolve_bound(bound)
        self.degree = degree
        self.generators = tuple(validate_perm(degree, g) for g in generators)
        if not self.generators:
            self.generators = (perm_identity(degree),)
        self.name = name
        bfs, parents = _closure(degree, self.generators, bound)
        self._bfs_order = tuple(bfs)
        self._parents = parents
        self.elements = tuple(sorted(bfs))
        self._elem_set = frozenset(self.elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._orders = {g: perm_order(g) for g in self.elements}
        self._build_classes()

    def _build_classes(self):
        unassigned = set(self.elements)
        classes = []
        for g in self.elements:  # lex order ensures least-member reps
            if g not in unassigned:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in self.generators:
                        y = perm_conj(s, x)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            unassigned -= orbit
            classes.append((min(orbit), sorted(orbit)))
        classes.sort(key=lambda c: (len(c[1]), c[0]))
        self.class_reps = tuple((rep, len(members)) for rep, members in classes)
        self.class_members = tuple(tuple(members) for _, members in classes)
        self.class_index = {}
        for idx, (_, members) in enumerate(classes):
            for x in members:
                self.class_index[x] = idx

    # queries

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._elem_set

    def __len__(self):
        return len(self.elements)

    def identity(self) -> Perm:
        return perm_identity(self.degree)

    def element_order(self, g: Perm) -> int:
        return self._orders[g]

    def exponent(self) -> int:
        return math.lcm(*self._orders.values())

    def is_abelian(self) -> bool:
        return all(len(m) == 1 for m in self.class_members)

    def same_group(self, other: "FiniteGroup") -> bool:
        return self.degree == other.degree and self._elem_set == other._elem_set

    def require_same(self, other: "FiniteGroup"):
        if not self.same_group(other):
            raise GroupMismatch("objects live over different groups")

    # BFS access for evaluating homomorphisms defined on generators

    def bfs_edges(self):
        """Yield (g, parent, generator index) along the BFS spanning tree."""
        for g in self._bfs_order[1:]:
            h, i = self._parents[g]
            yield g, h, i

    def nontree_edges(self):
        """Yield (g, i, g*gens[i]) for every Cayley edge outside the BFS tree."""
        for g in self._bfs_order:
            for i, s in enumerate(self.generators):
                prod = perm_mul(g, s)
                if self._parents.get(prod) == (g, i):
                    continue
                yield g, i, prod

    # subgroup construction

    def subgroup(self, elems) -> "Subgroup":
        return Subgroup(self, elems)

    def subgroup_generated(self, gens) -> "Subgroup":
        return Subgroup(self, closure_of(self.degree, list(gens) or [self.identity()]))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity()])

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"FiniteGroup(degree={self.degree}, order={self.order}{label})"


def canonical_generators(degree: int, elems: frozenset) -> tuple:
    """Greedy lexicographic generating sequence: repeatedly add the least
    element not yet generated."""
    ident = perm_identity(degree)
    gens = []
    have = frozenset({ident})
    for g in sorted(elems):
        if g not in have:
            gens.append(g)
            have = closure_of(degree, gens)
            if len(have) == len(elems):
                break
    return tuple(gens) if gens else (ident,)


class Subgroup:
    """A subgroup of a fixed parent group."""

    def __init__(self, parent: FiniteGroup, elems):
        self.parent = parent
        elem_set = frozenset(elems)
        if not elem_set <= parent._elem_set:
            raise NotSubgroup("elements are not contained in the parent group")
        # closedness check: regenerate from the canonical generators
        self.generators = canonical_generators(parent.degree, elem_set)
        regenerated = closure_of(parent.degree, self.generators)
        if regenerated != elem_set:
            raise NotSubgroup("element set is not closed")
        self.elements = frozenset(elem_set)
        self.is_normal_in_parent = all(
            perm_conj(g, h) in self.elements
            for g in parent.generators
            for h in self.generators
        )
        self._as_group = None

    @staticmethod
    def generated(parent: FiniteGroup, gens) -> "Subgroup":
        gens = list(gens)
        for g in gens:
            if g not in parent:
                raise NotSubgroup("generator outside the parent group")
        return Subgroup(parent, closure_of(parent.degree, gens or [parent.identity()]))

    @property
    def order(self) -> int:
        return len(self.elements)

    def key(self):
        return (self.order, self.generators)

    def as_group(self) -> FiniteGroup:
        if self._as_group is None:
            self._as_group = FiniteGroup(
                self.parent.degree, self.generators, bound=self.order
            )
        return self._as_group

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other.elements <= self.elements

    def conjugate_by(self, g) -> "Subgroup":
        return Subgroup(self.parent, [perm_conj(g, h) for h in self.elements])

    def __contains__(self, p):
        return p in self.elements

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.elements == other.elements

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __repr__(self):
        return f"Subgroup(order={self.order} of order-{self.parent.order} parent)"


# ---------------------------------------------------------------------------
# the public operations


def group_from_generators(degree: int, gens, name=None, bound=None) -> FiniteGroup:
    return FiniteGroup(degree, gens, name=name, bound=bound)


def conjugacy_classes(G: FiniteGroup):
    """[(lexicographically least representative, class size), ...]."""
    return list(G.class_reps)


def _require_normal(G: FiniteGroup, N: Subgroup):
    if N.parent is not G and not N.parent.same_group(G):
        raise GroupMismatch("subgroup belongs to a different group")
    if not all(perm_conj(g, h) in N.elements for g in G.generators for h in N.generators):
        raise NotNormal("subgroup is not normal in the group")


def left_cosets(G: FiniteGroup, elems: frozenset):
    """Left cosets of a subgroup, each sorted, ordered by least member."""
    seen = set()
    cosets = []
    for g in G.elements:
        if g in seen:
            continue
        coset = sorted(perm_mul(g, h) for h in elems)
        seen.update(coset)
        cosets.append(coset)
    cosets.sort(key=lambda c: c[0])
    return cosets


def quotient_map(G: FiniteGroup, N: Subgroup):
    """(quotient group as permutations of the cosets, element -> image map)."""
    _require_normal(G, N)
    cosets = left_cosets(G, N.elements)
    coset_of = {}
    for idx, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = idx
    reps = [c[0] for c in cosets]

    def act(g):
        return tuple(coset_of[perm_mul(g, r)] for r in reps)

    images = {g: act(g) for g in G.elements}
    Q = FiniteGroup(len(cosets), [images[g] for g in G.generators], bound=G.order)
    return Q, images


def all_subgroups(G: FiniteGroup):
    """Every subgroup as an element frozenset, bottom-up from cyclic ones."""
    ident = G.identity()
    cyclics = set()
    for g in G.elements:
        cyclics.add(closure_of(G.degree, [g]))
    subs = set(cyclics)
    subs.add(frozenset({ident}))
    queue = list(subs)
    while queue:
        s = queue.pop()
        for c in cyclics:
            if c <= s:
                continue
            joined = closure_of(G.degree, list(s | c))
            if joined not in subs:
                subs.add(joined)
                queue.append(joined)
    return sorted(subs, key=lambda s: (len(s), canonical_generators(G.degree, s)))


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _sylow_data(degree: int, elems: frozenset):
    """For each prime p | order: the subgroup generated by all p-elements.

    The group is nilpotent iff each of those has exact Sylow order (then it is
    the unique, hence normal, Sylow p-subgroup).
    """
    order = len(elems)
    orders = {g: perm_order(g) for g in elems}
    out = {}
    n = order
    d = 2
    primes = []
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    for p in primes:
        pelems = [g for g in elems if orders[g] > 1 and _p_part(orders[g], p) == orders[g]]
        out[p] = closure_of(degree, pelems or [perm_identity(degree)])
    return out


def _is_nilpotent_set(degree: int, elems: frozenset) -> bool:
    order = len(elems)
    return all(
        len(syl) == _p_part(order, p) for p, syl in _sylow_data(degree, elems).items()
    )


def _is_elementary_set(degree: int, elems: frozenset) -> bool:
    """Elementary: direct product of a cyclic group and a p-group.

    Equivalent to nilpotent with at most one non-cyclic Sylow subgroup.
    """
    sylows = _sylow_data(degree, elems)
    order = len(elems)
    if not all(len(s) == _p_part(order, p) for p, s in sylows.items()):
        return False
    noncyclic = 0
    for syl in sylows.values():
        if not any(perm_order(g) == len(syl) for g in syl):
            noncyclic += 1
    return noncyclic <= 1


def is_nilpotent_quotient(G: FiniteGroup, N: Subgroup) -> bool:
    Q, _ = quotient_map(G, N)
    return _is_nilpotent_set(Q.degree, Q._elem_set)


def elementary_mod_N(G: FiniteGroup, N: Subgroup):
    """Subgroups N <= H <= G with H/N elementary, up to G-conjugacy.

    Deterministic: representatives are minimal for (order, generator list)
    within their conjugacy orbit, and the list is sorted the same way.
    """
    Q, images = quotient_map(G, N)
    preimage = {}
    for g in G.elements:
        preimage.setdefault(images[g], []).append(g)
    found = {}
    for qsub in all_subgroups(Q):
        if not _is_elementary_set(Q.degree, qsub):
            continue
        h_elems = frozenset(x for q in qsub for x in preimage[q])
        if h_elems in found:
            continue
        # orbit under G-conjugation
        orbit = {h_elems}
        frontier = [h_elems]
        while frontier:
            nxt = []
            for s in frontier:
                for g in G.generators:
                    t = frozenset(perm_conj(g, x) for x in s)
                    if t not in orbit:
                        orbit.add(t)
                        nxt.append(t)
            frontier = nxt
        rep = min(orbit, key=lambda s: canonical_generators(G.degree, s))
        for s in orbit:
            found[s] = rep
    reps = sorted(set(found.values()),
                  key=lambda s: (len(s), canonical_generators(G.degree, s)))
    return [Subgroup(G, s) for s in reps]


def normal_closure(G: FiniteGroup, seed) -> frozenset:
    """Smallest subgroup of G containing seed and closed under G-conjugation."""
    current = closure_of(G.degree, list(seed))
    while True:
        extra = [
            perm_conj(g, x)
            for g in G.generators
            for x in current
            if perm_conj(g, x) not in current
        ]
        if not extra:
            return current
        current = closure_of(G.degree, list(current) + extra)


def normal_subgroups_containing(G: FiniteGroup, N: Subgroup):
    """All normal subgroups of G containing N, sorted by (order, generators)."""
    _require_normal(G, N)
    base = frozenset(N.elements)
    seen = {base}
    queue = [base]
    while queue:
        s = queue.pop()
        for members in G.class_members:
            if members[0] in s:
                continue
            bigger = normal_closure(G, list(s) + list(members))
            if bigger not in seen:
                seen.add(bigger)
                queue.append(bigger)
    return [
        Subgroup(G, s)
        for s in sorted(seen, key=lambda s: (len(s), canonical_generators(G.degree, s)))
    ]


def chief_step(G: FiniteGroup, N: Subgroup, K: Subgroup) -> Subgroup:
    """A maximal G-normal L with N <= L < K; its index in K must be prime."""
    _require_normal(G, N)
    _require_normal(G, K)
    if not N.elements <= K.elements:
        raise NotSubgroup("lower subgroup not contained in upper subgroup")
    if N.elements == K.elements:
        raise NoProperStep("interval is trivial")
    current = frozenset(N.elements)
    grew = True
    while grew:
        grew = False
        # prefer high-order elements so cyclic steps beat involution joins
        for k in sorted(K.elements - current,
                        key=lambda p: (-G.element_order(p), p)):
            candidate = normal_closure(G, list(current) + [k])
            if candidate < K.elements:
                current = candidate
                grew = True
                break
    index = K.order // len(current)
    if not _is_prime(index):
        raise PrimalityViolated("chief step index is not prime", index=index)
    return Subgroup(G, current)


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def no_intermediate_normal(G: FiniteGroup, L: Subgroup, K: Subgroup) -> bool:
    """True iff no G-normal M satisfies L < M < K.

    Prime index settles it by Lagrange; otherwise any intermediate normal M
    contains the G-normal closure of L together with one element of K - L,
    and such a closure is itself intermediate, so scanning closures is
    exhaustive.
    """
    index = K.order // L.order
    if _is_prime(index):
        return True
    for k in sorted(K.elements - L.elements):
        candidate = normal_closure(G, list(L.elements) + [k])
        if candidate < K.elements:
            return False
    return True
