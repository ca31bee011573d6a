"""Matrix representations and characters over cyclotomic fields.

A representation stores exact generator images and resolves other elements
lazily along the group's BFS spanning tree, so large groups only pay for the
elements actually used.  Validation walks the full multiplication structure
once (every Cayley edge outside the spanning tree) and is applied to
externally supplied matrices; representations produced here by restriction,
induction, twisting, or block sums are well-defined by construction and skip
that pass.
"""

from __future__ import annotations

from fractions import Fraction

from . import chartab
from .cyclo import CycNum, GaloisAut, galois_apply
from .errors import GroupMismatch, InputError, NotConstituent, NotNormal, NotSubgroup
from .grp import FiniteGroup, Subgroup, perm_conj, perm_inv, perm_mul, perm_order
from .linalg import Mat

_ZERO = CycNum.zero()
_ONE = CycNum.one()


def _frac(x) -> CycNum:
    return CycNum.rational(Fraction(x))


class Character:
    """Exact class function given by one value per conjugacy class."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        values = tuple(v if isinstance(v, CycNum) else _frac(v) for v in values)
        if len(values) != len(group.class_reps):
            raise GroupMismatch("value list does not match the class count")
        self.group = group
        self.values = values

    @property
    def degree(self) -> Fraction:
        return self.values[0].as_fraction()

    def value_at(self, g) -> CycNum:
        return self.values[self.group.class_index[g]]

    def conjugate(self) -> "Character":
        return Character(self.group, [v.conjugate() for v in self.values])

    def twist(self, s: GaloisAut) -> "Character":
        return Character(self.group, [galois_apply(s, v) for v in self.values])

    def conjugate_by(self, g) -> "Character":
        """The class function x -> value(g^{-1} x g); g must normalize the group."""
        return Character(
            self.group,
            [self.value_at(perm_conj(perm_inv(g), r)) for r, _ in self.group.class_reps],
        )

    def restrict_to(self, H: FiniteGroup) -> "Character":
        return Character(H, [self.value_at(r) for r, _ in H.class_reps])

    def __add__(self, other: "Character") -> "Character":
        self.group.require_same(other.group)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def sort_key(self):
        return (self.degree, tuple(v.sort_key() for v in self.values))

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.group.same_group(other.group) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Character(degree={self.degree}, values={list(self.values)})"


class MatrixRep:
    """Homomorphism into invertible matrices, given by generator images."""

    __slots__ = ("group", "rank", "gen_images", "_cache", "_char")

    def __init__(self, group: FiniteGroup, gen_images, validate: bool = True):
        gen_images = tuple(gen_images)
        if len(gen_images) != len(group.generators):
            raise InputError("one image per group generator is required")
        rank = gen_images[0].nrows if gen_images else 0
        for m in gen_images:
            if m.nrows != rank or m.ncols != rank:
                raise InputError("generator images must be square of equal size")
        self.group = group
        self.rank = rank
        self.gen_images = gen_images
        self._cache = {group.identity(): Mat.identity(rank)}
        self._char = None
        if validate:
            self._validate()

    def _validate(self):
        for g, parent, i in self.group.bfs_edges():
            self._cache[g] = self._cache[parent] @ self.gen_images[i]
        for g, i, prod in self.group.nontree_edges():
            if self._cache[g] @ self.gen_images[i] != self._cache[prod]:
                raise InputError("generator images violate a group relation")

    def image(self, g) -> Mat:
        cached = self._cache.get(g)
        if cached is not None:
            return cached
        chain = []
        cur = g
        while cur not in self._cache:
            parent, i = self.group._parents[cur]
            chain.append((cur, i))
            cur = parent
        acc = self._cache[cur]
        for elem, i in reversed(chain):
            acc = acc @ self.gen_images[i]
            self._cache[elem] = acc
        return acc

    def character(self) -> Character:
        if self._char is None:
            self._char = Character(
                self.group, [self.image(r).trace() for r, _ in self.group.class_reps]
            )
        return self._char

    def __repr__(self):
        return f"MatrixRep(rank={self.rank}, group order {self.group.order})"


# ---------------------------------------------------------------------------
# basic constructions


def trivial_rep(G: FiniteGroup) -> MatrixRep:
    one = Mat.identity(1)
    return MatrixRep(G, [one for _ in G.generators], validate=False)


def linear_rep(G: FiniteGroup, gen_values) -> MatrixRep:
    return MatrixRep(G, [Mat([[v]]) for v in gen_values])


def regular_rep(G: FiniteGroup) -> MatrixRep:
    n = G.order
    mats = []
    for s in G.generators:
        rows = [[_ZERO] * n for _ in range(n)]
        for j, x in enumerate(G.elements):
            rows[G._index[perm_mul(s, x)]][j] = _ONE
        mats.append(Mat(rows))
    return MatrixRep(G, mats, validate=False)


def direct_sum_rep(reps) -> MatrixRep:
    reps = list(reps)
    G = reps[0].group
    for r in reps[1:]:
        G.require_same(r.group)
    mats = [
        Mat.direct_sum([r.gen_images[i] for r in reps]) for i in range(len(G.generators))
    ]
    return MatrixRep(G, mats, validate=False)


def zero_rep(G: FiniteGroup) -> MatrixRep:
    return MatrixRep(G, [Mat.identity(0) for _ in G.generators], validate=False)


# ---------------------------------------------------------------------------
# the character-level operations


def character_of(rho: MatrixRep) -> Character:
    return rho.character()


def inner_product(a: Character, b: Character) -> CycNum:
    a.group.require_same(b.group)
    total = CycNum.zero()
    for (r, size), va, vb in zip(a.group.class_reps, a.values, b.values):
        total = total + _frac(size) * va * vb.conjugate()
    return total * _frac(Fraction(1, a.group.order))


def char_table(G: FiniteGroup):
    cached = getattr(G, "_char_table", None)
    if cached is None:
        cached = [Character(G, row) for row in chartab.char_table_values(G)]
        G._char_table = cached
    return cached


def constituents_of(chi: Character):
    """[(irreducible, multiplicity)] with multiplicity >= 1, in table order."""
    out = []
    for irr in char_table(chi.group):
        m = inner_product(chi, irr)
        if not m.is_zero():
            out.append((irr, int(m.as_fraction())))
    return out


def frobenius_induced_character(chi: Character, G: FiniteGroup) -> Character:
    """Induced class function via the averaging formula over the big group."""
    H = chi.group
    if not H._elem_set <= G._elem_set:
        raise NotSubgroup("character group is not a subgroup of the target")
    values = []
    for r, _ in G.class_reps:
        total = CycNum.zero()
        for x in G.elements:
            y = perm_conj(perm_inv(x), r)
            if y in H._elem_set:
                total = total + chi.value_at(y)
        values.append(total * _frac(Fraction(1, H.order)))
    return Character(G, values)


# ---------------------------------------------------------------------------
# the matrix-level operations


def restrict(rho: MatrixRep, H: Subgroup) -> MatrixRep:
    if not H.parent.same_group(rho.group):
        raise NotSubgroup("subgroup belongs to a different group")
    Hgrp = H.as_group()
    return MatrixRep(Hgrp, [rho.image(g) for g in Hgrp.generators], validate=False)


def induce_rep(sigma: MatrixRep, G: FiniteGroup) -> MatrixRep:
    H = sigma.group
    if H.degree != G.degree or not H._elem_set <= G._elem_set:
        raise NotSubgroup("representation group is not a subgroup of the target")
    from .grp import left_cosets

    cosets = left_cosets(G, H._elem_set)
    reps = [c[0] for c in cosets]
    coset_of = {}
    for idx, coset in enumerate(cosets):
        for x in coset:
            coset_of[x] = idx
    m = len(reps)
    r = sigma.rank
    zero_block = Mat.zero(r, r)
    mats = []
    for g in G.generators:
        blocks = [[zero_block] * m for _ in range(m)]
        for j, tj in enumerate(reps):
            gtj = perm_mul(g, tj)
            i = coset_of[gtj]
            blocks[i][j] = sigma.image(perm_mul(perm_inv(reps[i]), gtj))
        rows = []
        for bi in range(m):
            for rr in range(r):
                row = []
                for bj in range(m):
                    row.extend(blocks[bi][bj].rows[rr])
                rows.append(row)
        mats.append(Mat(rows))
    out = MatrixRep(G, mats, validate=False)
    expected = frobenius_induced_character(sigma.character(), G)
    assert out.character() == expected, "induced character mismatch"
    return out


def galois_twist(rho: MatrixRep, s: GaloisAut) -> MatrixRep:
    mats = [m.apply_entrywise(lambda v: galois_apply(s, v)) for m in rho.gen_images]
    return MatrixRep(rho.group, mats, validate=False)


def hom_space(rho: MatrixRep, tau: MatrixRep):
    """Basis of all X with tau(g) X = X rho(g), by exact null space."""
    tau.group.require_same(rho.group)
    rt, rr = tau.rank, rho.rank
    rows = []
    for R, T in zip(rho.gen_images, tau.gen_images):
        for i in range(rt):
            for j in range(rr):
                row = [_ZERO] * (rt * rr)
                for a in range(rt):
                    if not T.rows[i][a].is_zero():
                        row[a * rr + j] = row[a * rr + j] + T.rows[i][a]
                for b in range(rr):
                    if not R.rows[b][j].is_zero():
                        row[i * rr + b] = row[i * rr + b] - R.rows[b][j]
                rows.append(row)
    if not rows:
        rows = [[_ZERO] * (rt * rr)]
    basis = []
    for vec in Mat(rows).nullspace():
        basis.append(Mat([[vec[i * rr + j] for j in range(rr)] for i in range(rt)]))
    return HomBasis(rho, tau, basis)


class HomBasis:
    """Basis of the space of intertwiners source -> target."""

    __slots__ = ("source", "target", "basis")

    def __init__(self, source: MatrixRep, target: MatrixRep, basis):
        self.source = source
        self.target = target
        self.basis = list(basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return f"HomBasis(dimension={self.dimension})"


def is_abs_irreducible(rho: MatrixRep) -> bool:
    chi = rho.character()
    return inner_product(chi, chi) == _ONE


# ---------------------------------------------------------------------------
# isotypic pieces


def coords_in_basis(B: Mat, V: Mat) -> Mat:
    """C with B C = V, for B of full column rank; one RREF of [B | V]."""
    aug = Mat([list(br) + list(vr) for br, vr in zip(B.rows, V.rows)])
    red, pivots = aug.rref()
    assert pivots == list(range(B.ncols)), "basis matrix is column deficient"
    crows = [red.rows[i][B.ncols:] for i in range(B.ncols)]
    for i in range(B.ncols, red.nrows):
        assert all(v.is_zero() for v in red.rows[i][B.ncols:]), "vector outside span"
    return Mat(crows)


def isotypic_projector(rho: MatrixRep, L: Subgroup, chi: Character) -> Mat:
    """(deg/|L|) * sum over l in L of conj(chi(l)) rho(l)."""
    acc = Mat.zero(rho.rank, rho.rank)
    for l in L.elements:
        acc = acc + rho.image(l).scale(chi.value_at(l).conjugate())
    return acc.scale(_frac(Fraction(int(chi.degree), L.order)))


def clifford_component(rho: MatrixRep, L: Subgroup, sigma1: MatrixRep):
    """(inertia subgroup I, action of I on the sigma1-isotypic subspace)."""
    G = rho.group
    if not L.parent.same_group(G):
        raise NotSubgroup("subgroup belongs to a different group")
    if not L.is_normal_in_parent:
        raise NotNormal("subgroup is not normal")
    Lgrp = L.as_group()
    if not sigma1.group.same_group(Lgrp):
        raise GroupMismatch("constituent lives on a different subgroup")
    chi1 = sigma1.character().restrict_to(Lgrp)
    res = rho.character().restrict_to(Lgrp)
    mult = inner_product(res, chi1)
    if mult.is_zero():
        raise NotConstituent("not a constituent of the restriction")

    inertia = []
    lreps = [r for r, _ in Lgrp.class_reps]
    for g in G.elements:
        gi = perm_inv(g)
        if all(chi1.value_at(perm_conj(gi, r)) == chi1.value_at(r) for r in lreps):
            inertia.append(g)
    I = Subgroup(G, inertia)

    proj = isotypic_projector(rho, L, chi1)
    red, pivots = proj.transpose().rref()
    space = Mat([[red.rows[i][j] for i in range(len(pivots))] for j in range(rho.rank)])
    Igrp = I.as_group()
    mats = [coords_in_basis(space, rho.image(s) @ space) for s in Igrp.generators]
    rho_prime = MatrixRep(Igrp, mats, validate=False)
    induced = frobenius_induced_character(rho_prime.character(), G)
    assert induced == rho.character(), "isotypic component fails to induce back"
    return I, rho_prime


# ---------------------------------------------------------------------------
# building matrices from a character


def realize_character(chi: Character) -> MatrixRep:
    """Matrices for an irreducible character, via a minimal left ideal.

    Needs some cyclic subgroup A and linear character mu of A occurring
    exactly once in the restriction; the ideal generated by the product of
    the two projectors is then a copy of the irreducible module.
    """
    G = chi.group
    d = int(chi.degree)
    if d == 1:
        out = MatrixRep(
            G, [Mat([[chi.value_at(s)]]) for s in G.generators], validate=False
        )
        assert out.character() == chi, "linear character failed to expose a rep"
        return out

    pick = None
    seen_cyclic = set()
    for g in sorted(G.elements, key=lambda g: (-G.element_order(g), g)):
        m = G.element_order(g)
        if m == 1:
            continue
        powers = []
        cur = G.identity()
        for _ in range(m):
            powers.append(cur)
            cur = perm_mul(cur, g)
        key = frozenset(powers)
        if key in seen_cyclic:
            continue
        seen_cyclic.add(key)
        for j in range(m):
            total = CycNum.zero()
            for s, gs in enumerate(powers):
                total = total + chi.value_at(gs) * CycNum.root_of_unity(m, (-j * s) % m)
            mult = total * _frac(Fraction(1, m))
            if mult == _ONE:
                pick = (g, m, j, powers)
                break
        if pick:
            break
    assert pick is not None, "no multiplicity-one linear slice found"
    g0, m, j, powers = pick

    n = G.order
    idx = G._index
    echi = [chi.value_at(x).conjugate() * _frac(Fraction(d, n)) for x in G.elements]
    w = [CycNum.zero()] * n
    for s, gs in enumerate(powers):
        emu = CycNum.root_of_unity(m, (-j * s) % m) * _frac(Fraction(1, m))
        gs_inv = perm_inv(gs)
        for xi, x in enumerate(G.elements):
            w[xi] = w[xi] + echi[idx[perm_mul(x, gs_inv)]] * emu

    def translate(h):
        hinv = perm_inv(h)
        return [w[idx[perm_mul(hinv, x)]] for x in G.elements]

    basis_elems = []
    basis_vecs = []
    rref_rows = []
    for h in G.elements:
        if len(basis_elems) == d:
            break
        vec = translate(h)
        red = list(vec)
        for prow, pcol in rref_rows:
            c = red[pcol]
            if not c.is_zero():
                red = [a - c * b for a, b in zip(red, prow)]
        piv = next((i for i, v in enumerate(red) if not v.is_zero()), None)
        if piv is None:
            continue
        inv = red[piv].inverse()
        rref_rows.append(([v * inv for v in red], piv))
        basis_elems.append(h)
        basis_vecs.append(vec)
    assert len(basis_elems) == d, "ideal has lower rank than the degree"

    pivots = sorted(pcol for _, pcol in rref_rows)
    square = Mat([[basis_vecs[c][p] for c in range(d)] for p in pivots])
    sq_inv = square.inverse()
    mats = []
    for s in G.generators:
        cols = []
        for h in basis_elems:
            vec = translate(perm_mul(s, h))
            cols.append(sq_inv.mul_vec([vec[p] for p in pivots]))
        mats.append(Mat.from_cols(cols))
    out = MatrixRep(G, mats, validate=False)
    assert out.character() == chi, "realized matrices have the wrong traces"
    return out
