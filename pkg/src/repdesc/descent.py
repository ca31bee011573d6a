"""Field-of-definition machinery for matrix representations.

Given a representation whose character lives in a subfield, these routines
find a conjugating matrix that rewrites the representation itself over that
subfield: eigenvalue witnesses, the Galois intertwiner cocycle, an explicit
additive Hilbert-90 solver, and a block-peeling routine that extracts a
complement of one representation inside another without leaving the field.
"""

import random

from .cyclo import (
    CycNum,
    GaloisAut,
    SubfieldSpec,
    galois_apply,
    has_simple_root,
    in_fixed_field,
)
from .errors import (
    CharacterMismatch,
    CocycleCheckFailed,
    DescentCheckFailed,
    EntriesNotInBaseField,
    NotAbsolutelyIrreducible,
    RetryLimitExceeded,
    TraceNotRational,
    WitnessInvalid,
)
from .grp import perm_inv, perm_order
from .linalg import Mat
from .rep import (
    MatrixRep,
    char_table,
    character_of,
    coords_in_basis,
    galois_twist,
    hom_space,
    inner_product,
    is_abs_irreducible,
)

_ONE = CycNum.one()


class MultOneWitness:
    """A class representative together with a simple eigenvalue of its image.

    alpha is an eigenvalue of rho(element) with multiplicity exactly one in
    the characteristic polynomial, lying in the target base field.
    """

    __slots__ = ("element", "alpha")

    def __init__(self, element, alpha: CycNum):
        self.element = tuple(element)
        self.alpha = alpha

    def __eq__(self, other):
        if not isinstance(other, MultOneWitness):
            return NotImplemented
        return self.element == other.element and self.alpha == other.alpha

    def __repr__(self):
        return f"MultOneWitness(element={self.element}, alpha={self.alpha!r})"


def find_multiplicity_one(rho: MatrixRep, base: SubfieldSpec):
    """Scan conjugacy classes for a simple eigenvalue lying in base.

    Classes are visited in the group's class order; within a class the
    candidate roots of unity zeta_m^j are tried for j ascending, where m is
    the order of the class representative.  Returns the first witness found,
    or None when no class representative has a multiplicity-one eigenvalue
    in the base field.
    """
    G = rho.group
    for r, _size in G.class_reps:
        f = rho.image(r).charpoly()
        if not has_simple_root(f):
            continue
        m = perm_order(r)
        for j in range(m):
            alpha = CycNum.root_of_unity(m, j)
            if f.root_multiplicity(alpha) == 1 and in_fixed_field(alpha, base):
                return MultOneWitness(r, alpha)
    return None


class Cocycle:
    """Normalized family of self-intertwiners indexed by Galois elements.

    rep0 is the witness-adapted conjugate of the original representation
    (first basis vector an eigenvector for the witness eigenvalue), living
    inside the full cyclotomic field of conductor n.  maps sends each
    element sigma of the group fixing base to the unique intertwiner
    a(sigma) with rep0(g) a(sigma) = a(sigma) sigma(rep0(g)) and
    a(sigma) e_1 = e_1; the family satisfies
    a(sigma tau) = a(sigma) sigma(a(tau)).
    """

    __slots__ = ("base", "field", "maps", "rep0", "basis_change")

    def __init__(self, base, field, maps, rep0, basis_change):
        self.base = base
        self.field = field
        self.maps = maps
        self.rep0 = rep0
        self.basis_change = basis_change

    @property
    def conductor(self) -> int:
        return self.field.n

    def __repr__(self):
        return (
            f"Cocycle(base={self.base!r}, conductor={self.conductor}, "
            f"size={len(self.maps)})"
        )


def _conjugated(rho: MatrixRep, P: Mat) -> MatrixRep:
    Pinv = P.inverse()
    return MatrixRep(
        rho.group,
        [Pinv @ M @ P for M in rho.gen_images],
        validate=False,
    )


def intertwiner_cocycle(rho: MatrixRep, k0: SubfieldSpec,
                        witness: MultOneWitness) -> Cocycle:
    """Build the Galois cocycle attached to an absolutely irreducible rho.

    Requires the character of rho to take values in k0 and the witness to
    name a simple eigenvalue in k0.  The cocycle lives over the compositum
    of k0 and the field generated by the matrix entries.
    """
    if not is_abs_irreducible(rho):
        raise NotAbsolutelyIrreducible(
            "cocycle construction needs an absolutely irreducible input"
        )
    chi = rho.character()
    for v in chi.values:
        if not in_fixed_field(v, k0):
            raise TraceNotRational(
                f"character value {v!r} lies outside the base field"
            )
    G = rho.group
    g0 = witness.element
    if g0 not in G._index:
        raise WitnessInvalid("witness element does not belong to the group")
    if not in_fixed_field(witness.alpha, k0):
        raise WitnessInvalid("witness eigenvalue lies outside the base field")
    M0 = rho.image(g0)
    if M0.charpoly().root_multiplicity(witness.alpha) != 1:
        raise WitnessInvalid(
            "witness eigenvalue is not simple on the named element"
        )

    # adapted basis: eigenvector first, then standard vectors off its pivot
    shifted = M0 - Mat.identity(rho.rank).scale(witness.alpha)
    kernel = shifted.nullspace()
    assert len(kernel) == 1
    v = kernel[0]
    pivot = next(i for i, c in enumerate(v) if not c.is_zero())
    cols = [list(v)]
    for j in range(rho.rank):
        if j != pivot:
            cols.append([_ONE if i == j else CycNum.zero()
                         for i in range(rho.rank)])
    P = Mat.from_cols(cols)
    rho0 = _conjugated(rho, P)

    n = k0.n
    for M in rho0.gen_images:
        for e in M.entries():
            n = _lcm(n, e.n)
    field = SubfieldSpec.full_field(n)
    lifted = k0.lift(n)

    maps = {}
    for u in sorted(lifted.stabilizer):
        sigma = GaloisAut(n, u)
        X = _normalized_selfmap(rho0, sigma)
        maps[sigma] = X

    for s1, a1 in maps.items():
        for s2, a2 in maps.items():
            left = maps[s1.compose(s2)]
            right = a1 @ a2.apply_entrywise(lambda c: galois_apply(s1, c))
            if left != right:
                raise CocycleCheckFailed(
                    f"cocycle identity fails at ({s1!r}, {s2!r})"
                )
    return Cocycle(k0, field, maps, rho0, P)


def _normalized_selfmap(rho0: MatrixRep, sigma: GaloisAut) -> Mat:
    twisted = galois_twist(rho0, sigma)
    hom = hom_space(twisted, rho0)
    assert hom.dimension == 1, "self-intertwiner space is not one-dimensional"
    X = hom.basis[0]
    lam = X.rows[0][0]
    for i in range(1, rho0.rank):
        assert X.rows[i][0].is_zero(), \
            "intertwiner does not preserve the witness eigenline"
    assert not lam.is_zero()
    return X.scale(lam.inverse())


def _lcm(a: int, b: int) -> int:
    import math
    return math.lcm(a, b)


def hilbert90_solve(cocycle: Cocycle, seed: int = 0,
                    max_trials: int = 64) -> Mat:
    """Find invertible b with a(sigma) sigma(b) = b for every sigma.

    Averages a(sigma) sigma(C) over the Galois group for trial matrices C:
    the identity first, then small seeded random matrices.  Raises
    RetryLimitExceeded if every trial produces a singular average.
    """
    n = cocycle.conductor
    r = cocycle.rep0.rank
    sigmas = sorted(cocycle.maps, key=lambda s: s.k)
    zeta = CycNum.root_of_unity(n)
    for trial in range(max_trials):
        if trial == 0:
            C = Mat.identity(r)
        else:
            rng = random.Random(f"h90:{seed}:{trial}")
            C = Mat([
                [
                    CycNum.rational(rng.randint(-3, 3))
                    + zeta * CycNum.rational(rng.randint(-3, 3))
                    for _ in range(r)
                ]
                for _ in range(r)
            ])
        b = Mat.zero(r, r)
        for sigma in sigmas:
            sC = C.apply_entrywise(lambda c: galois_apply(sigma, c))
            b = b + cocycle.maps[sigma] @ sC
        if not b.is_invertible():
            continue
        for sigma in sigmas:
            sb = b.apply_entrywise(lambda c: galois_apply(sigma, c))
            assert cocycle.maps[sigma] @ sb == b
        return b
    raise RetryLimitExceeded(
        f"no invertible average found in {max_trials} trials"
    )


class DescentWitness:
    """A conjugation certificate rewriting a representation over a subfield.

    descended(g) = b^-1 original(g) b for every g, with all entries of the
    descended generator images inside base.
    """

    __slots__ = ("original", "base", "b", "descended")

    def __init__(self, original, base, b, descended):
        self.original = original
        self.base = base
        self.b = b
        self.descended = descended

    def __repr__(self):
        return f"DescentWitness(base={self.base!r}, rank={self.original.rank})"


def descend_prop7(rho: MatrixRep, k0: SubfieldSpec,
                  witness: MultOneWitness, seed: int = 0) -> DescentWitness:
    """Rewrite an absolutely irreducible rho over its character field k0.

    Chains the cocycle construction with the Hilbert-90 average and checks
    the result: every entry of the conjugated generator images must land in
    k0 and the character must be unchanged, else DescentCheckFailed.
    """
    cocycle = intertwiner_cocycle(rho, k0, witness)
    b0 = hilbert90_solve(cocycle, seed=seed)
    b = cocycle.basis_change @ b0
    binv = b.inverse()
    images = [binv @ M @ b for M in rho.gen_images]
    for M in images:
        for e in M.entries():
            if not in_fixed_field(e, k0):
                raise DescentCheckFailed(
                    f"conjugated entry {e!r} lies outside the base field"
                )
    descended = MatrixRep(rho.group, images, validate=False)
    if character_of(descended) != character_of(rho):
        raise DescentCheckFailed("conjugation changed the character")
    return DescentWitness(rho, k0, b, descended)


# ---------------------------------------------------------------------------
# dimension comparison under extension of scalars


def hom_dim_base_change_check(M: MatrixRep, N: MatrixRep,
                              k: SubfieldSpec) -> bool:
    """Compare the intertwiner-space dimension before and after extension.

    Side one solves the intertwiner equations directly over the field
    generated by the entries; side two counts the dimension over the larger
    field k through the character pairing.  Both sides are ranks of the same
    integer-free linear system, so the two counts must agree; the return
    value reports whether they do.
    """
    M.group.require_same(N.group)
    for rep in (M, N):
        for img in rep.gen_images:
            for e in img.entries():
                if not in_fixed_field(e, k):
                    raise EntriesNotInBaseField(
                        f"entry {e!r} lies outside the given field"
                    )
    d_small = hom_space(M, N).dimension
    pairing = inner_product(character_of(M), character_of(N))
    assert pairing.is_rational()
    d_large = pairing.as_fraction()
    assert d_large.denominator == 1
    return d_small == int(d_large)


# ---------------------------------------------------------------------------
# cancellation: peel one summand off another without leaving the field


def _orbit_partition(G, k0: SubfieldSpec):
    """Partition the character table into orbits of the group fixing k0."""
    table = char_table(G)
    n = k0.n
    for chi in table:
        for v in chi.values:
            n = _lcm(n, v.n)
    lifted = k0.lift(n)
    remaining = list(table)
    orbits = []
    while remaining:
        chi = remaining[0]
        orbit = []
        for u in sorted(lifted.stabilizer):
            t = chi.twist(GaloisAut(n, u))
            if t not in orbit:
                orbit.append(t)
        for t in orbit:
            assert t in remaining, "orbit left the character table"
            remaining.remove(t)
        orbits.append(sorted(orbit, key=lambda c: c.sort_key()))
    orbits.sort(key=lambda o: o[0].sort_key())
    return orbits


def _orbit_multiplicity(chi_rep, orbit):
    mults = []
    for chi in orbit:
        m = inner_product(chi_rep, chi)
        assert m.is_rational()
        f = m.as_fraction()
        assert f.denominator == 1
        mults.append(int(f))
    assert len(set(mults)) == 1, \
        "multiplicity is not constant on a Galois orbit"
    return mults[0]


def _orbit_block(rep: MatrixRep, orbit, k0: SubfieldSpec, role: str):
    """Cut out the isotypic block of an orbit and its matrix action.

    The block is the column space of the averaged projector whose weight
    function is the orbit's summed character; the action is rewritten in a
    basis of that column space.  Entries of the resulting matrices must lie
    in k0, else the needed constituent has no model over k0 and
    ConstituentMissing is raised.
    """
    from .errors import ConstituentMissing

    G = rep.group
    order = G.order
    proj = Mat.zero(rep.rank, rep.rank)
    for g in G.elements:
        w = CycNum.zero()
        ginv = perm_inv(g)
        for chi in orbit:
            w = w + CycNum.rational(chi.degree) * chi.value_at(ginv)
        if w.is_zero():
            continue
        proj = proj + rep.image(g).scale(w)
    proj = proj.scale(CycNum.rational(1) / CycNum.rational(order))
    red, pivots = proj.transpose().rref()
    basis = Mat([[red.rows[i][j] for i in range(len(pivots))]
                 for j in range(rep.rank)])
    if not pivots:
        return basis, None
    blocks = []
    for M in rep.gen_images:
        blocks.append(coords_in_basis(basis, M @ basis))
    for B in blocks:
        for e in B.entries():
            if not in_fixed_field(e, k0):
                raise ConstituentMissing(
                    f"{role} block for orbit led by {orbit[0].values[0]!r} "
                    f"has entry {e!r} outside the base field"
                )
    return basis, MatrixRep(G, blocks, validate=False)


def _injective_map(tau_block: MatrixRep, pi_block: MatrixRep) -> Mat:
    hom = hom_space(tau_block, pi_block)
    assert hom.dimension > 0
    for X in hom.basis:
        if X.rank() == tau_block.rank:
            return X
    for trial in range(1, 64):
        rng = random.Random(f"nd:{trial}")
        X = Mat.zero(pi_block.rank, tau_block.rank)
        for Y in hom.basis:
            X = X + Y.scale(CycNum.rational(rng.randint(-2, 2)))
        if X.rank() == tau_block.rank:
            return X
    raise RetryLimitExceeded("no injective intertwiner found")


def _left_inverse(u: Mat, tau_block: MatrixRep, pi_block: MatrixRep) -> Mat:
    """Equivariant v with v u = identity, from the reverse intertwiners."""
    hom = hom_space(pi_block, tau_block)
    r = tau_block.rank
    cols = []
    for Y in hom.basis:
        prod = Y @ u
        cols.append([prod.rows[i][j] for i in range(r) for j in range(r)])
    target = [_ONE if i == j else CycNum.zero()
              for i in range(r) for j in range(r)]
    sol = Mat.from_cols(cols).solve(target)
    assert sol is not None, "no equivariant left inverse exists"
    v = Mat.zero(r, pi_block.rank)
    for c, Y in zip(sol, hom.basis):
        v = v + Y.scale(c)
    assert v @ u == Mat.identity(r)
    return v


def _complement_block(tau_block: MatrixRep, pi_block: MatrixRep) -> MatrixRep:
    u = _injective_map(tau_block, pi_block)
    v = _left_inverse(u, tau_block, pi_block)
    q = Mat.identity(pi_block.rank) - u @ v
    red, pivots = q.transpose().rref()
    basis = Mat([[red.rows[i][j] for i in range(len(pivots))]
                 for j in range(pi_block.rank)])
    assert len(pivots) == pi_block.rank - tau_block.rank
    blocks = [coords_in_basis(basis, M @ basis) for M in pi_block.gen_images]
    return MatrixRep(pi_block.group, blocks, validate=False)


def noether_deuring(rho: MatrixRep, tau0: MatrixRep, pi0: MatrixRep,
                    k0: SubfieldSpec) -> MatrixRep:
    """Extract a k0-model of rho from the relation rho + tau0 = pi0.

    The characters must satisfy chi_tau0 + chi_rho = chi_pi0 exactly
    (CharacterMismatch otherwise).  Works one Galois orbit of characters at
    a time: orbits with equal multiplicity on both sides cancel, orbits
    absent from tau0 contribute their whole pi0 block, and orbits present
    on both sides contribute the complement of an embedded copy.  Every
    extracted block must have entries in k0, else ConstituentMissing.
    """
    G = rho.group
    G.require_same(tau0.group)
    G.require_same(pi0.group)
    chi_rho = character_of(rho)
    chi_tau = character_of(tau0)
    chi_pi = character_of(pi0)
    if chi_tau + chi_rho != chi_pi:
        raise CharacterMismatch(
            "the two sides of the cancellation relation have "
            "different characters"
        )
    if tau0.rank == 0:
        return pi0

    from .rep import direct_sum_rep, zero_rep

    pieces = []
    for orbit in _orbit_partition(G, k0):
        m_pi = _orbit_multiplicity(chi_pi, orbit)
        if m_pi == 0:
            continue
        m_tau = _orbit_multiplicity(chi_tau, orbit)
        assert m_tau <= m_pi
        if m_tau == m_pi:
            continue
        _, pi_block = _orbit_block(pi0, orbit, k0, "target")
        if m_tau == 0:
            pieces.append(pi_block)
            continue
        _, tau_block = _orbit_block(tau0, orbit, k0, "cancelled")
        pieces.append(_complement_block(tau_block, pi_block))
    out = direct_sum_rep(pieces) if pieces else zero_rep(G)
    assert character_of(out) == chi_rho
    for M in out.gen_images:
        for e in M.entries():
            assert in_fixed_field(e, k0)
    return out
