"""Built-in groups and representations used by the command line and tests.

Groups are permutation groups on 0..d-1; representations carry exact
cyclotomic entries.  Everything is cached, so repeated lookups share the
underlying objects (and their lazily grown image caches).
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import CycNum
from .grp import FiniteGroup, group_from_generators
from .linalg import Mat
from .rep import MatrixRep, char_table, induce_rep, realize_character


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return group_from_generators(1, [(0,)], name="C1")
    gen = tuple((i + 1) % n for i in range(n))
    return group_from_generators(n, [gen], name=f"C{n}")


@lru_cache(maxsize=None)
def symmetric(n: int) -> FiniteGroup:
    gens = []
    for i in range(n - 1):
        img = list(range(n))
        img[i], img[i + 1] = img[i + 1], img[i]
        gens.append(tuple(img))
    return group_from_generators(n, gens or [(0,)], name=f"S{n}")


@lru_cache(maxsize=None)
def alternating(n: int) -> FiniteGroup:
    gens = []
    for i in range(n - 2):
        img = list(range(n))
        img[i], img[i + 1], img[i + 2] = img[i + 1], img[i + 2], img[i]
        gens.append(tuple(img))
    return group_from_generators(n, gens or [tuple(range(n))], name=f"A{n}")


@lru_cache(maxsize=None)
def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n, acting on the vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((-i) % n for i in range(n))
    return group_from_generators(n, [rot, flip], name=f"D{n}")


@lru_cache(maxsize=None)
def quaternion8() -> FiniteGroup:
    """Order-8 quaternion group in its left-regular action on
    1, -1, i, -i, j, -j, k, -k."""
    mul_i = (2, 3, 1, 0, 6, 7, 5, 4)
    mul_j = (4, 5, 7, 6, 1, 0, 2, 3)
    return group_from_generators(8, [mul_i, mul_j], name="Q8")


GROUPS = {
    "s3": lambda: symmetric(3),
    "s4": lambda: symmetric(4),
    "s6": lambda: symmetric(6),
    "a4": lambda: alternating(4),
    "a6": lambda: alternating(6),
    "d4": lambda: dihedral(4),
    "d6": lambda: dihedral(6),
    "q8": lambda: quaternion8(),
    **{f"c{n}": (lambda n=n: cyclic(n)) for n in range(1, 13)},
}


def group_by_name(name: str) -> FiniteGroup:
    return GROUPS[name.lower()]()


# representations


def _sign_of(p) -> int:
    sign = 1
    seen = set()
    for start in range(len(p)):
        if start in seen:
            continue
        length = 0
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = p[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def sign_rep(n: int) -> MatrixRep:
    G = symmetric(n)
    return MatrixRep(G, [Mat([[_sign_of(g)]]) for g in G.generators], validate=False)


def _std_matrix(p) -> Mat:
    """Action of a permutation on the sum-zero hyperplane in the basis
    e_0 - e_1, ..., e_{n-2} - e_{n-1}."""
    n = len(p)
    cols = []
    for j in range(n - 1):
        a, b = p[j], p[j + 1]
        col = [0] * (n - 1)
        lo, hi, s = (a, b, 1) if a < b else (b, a, -1)
        for i in range(lo, hi):
            col[i] = s
        cols.append(col)
    return Mat.from_cols(cols)


@lru_cache(maxsize=None)
def std_perm_rep(G_name: str) -> MatrixRep:
    """Standard (n-1)-dimensional piece of the permutation action."""
    G = group_by_name(G_name)
    return MatrixRep(G, [_std_matrix(g) for g in G.generators])


@lru_cache(maxsize=None)
def s3_std_cyclotomic() -> MatrixRep:
    """Two-dimensional irreducible of S3 diagonalized on the 3-cycle:
    (012) acts as diag(z3, z3^2), (01) swaps the eigenvectors."""
    z3 = CycNum.root_of_unity(3, 1)
    z32 = CycNum.root_of_unity(3, 2)
    one = CycNum.one()
    zero = CycNum.zero()
    m01 = Mat([[zero, one], [one, zero]])
    m12 = Mat([[zero, z32], [z3, zero]])
    return MatrixRep(symmetric(3), [m01, m12])


@lru_cache(maxsize=None)
def s3_std_rational() -> MatrixRep:
    return std_perm_rep("s3")


@lru_cache(maxsize=None)
def s4_std() -> MatrixRep:
    return std_perm_rep("s4")


@lru_cache(maxsize=None)
def s4_two_dim() -> MatrixRep:
    """Two-dimensional irreducible of S4, factoring through the quotient by
    the normal four-group."""
    m01 = Mat([[-1, 1], [0, 1]])
    m12 = Mat([[1, 0], [1, -1]])
    return MatrixRep(symmetric(4), [m01, m12, m01])


@lru_cache(maxsize=None)
def a4_std() -> MatrixRep:
    G = alternating(4)
    return MatrixRep(G, [_std_matrix(g) for g in G.generators])


@lru_cache(maxsize=None)
def d4_plane() -> MatrixRep:
    """Faithful 2-dimensional rep of D4 by quarter-turn and reflection."""
    rot = Mat([[0, -1], [1, 0]])
    flip = Mat([[1, 0], [0, -1]])
    return MatrixRep(dihedral(4), [rot, flip])


@lru_cache(maxsize=None)
def d6_plane() -> MatrixRep:
    """Faithful 2-dimensional rep of D6; the rotation has sixth-root
    eigenvalues but integer entries."""
    rot = Mat([[1, -1], [1, 0]])
    flip = Mat([[0, 1], [1, 0]])
    return MatrixRep(dihedral(6), [rot, flip])


@lru_cache(maxsize=None)
def q8_standard() -> MatrixRep:
    """Irreducible 2-dimensional rep of the quaternion group over the
    Gaussian numbers."""
    z4 = CycNum.root_of_unity(4, 1)
    zero = CycNum.zero()
    one = CycNum.one()
    mi = Mat([[z4, zero], [zero, -z4]])
    mj = Mat([[zero, -one], [one, zero]])
    return MatrixRep(quaternion8(), [mi, mj])


@lru_cache(maxsize=None)
def q8_rational4() -> MatrixRep:
    """Left multiplication of the quaternion group on the rational span of
    1, i, j, k: a 4-dimensional rational rep with character twice that of
    the 2-dimensional one."""
    mi = Mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    mj = Mat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
    return MatrixRep(quaternion8(), [mi, mj])


@lru_cache(maxsize=None)
def cyclic_char_rep(n: int, j: int) -> MatrixRep:
    G = cyclic(n)
    if n == 1:
        return MatrixRep(G, [Mat([[1]])], validate=False)
    return MatrixRep(G, [Mat([[CycNum.root_of_unity(n, j)]])])


@lru_cache(maxsize=None)
def a6_eight_dim() -> MatrixRep:
    """First degree-8 irreducible of A6, realized with fifth-root entries."""
    G = alternating(6)
    chi = next(c for c in char_table(G) if c.degree == 8)
    return realize_character(chi)


@lru_cache(maxsize=None)
def s6_sixteen_dim() -> MatrixRep:
    """The 16-dimensional irreducible of S6, induced from degree 8 below."""
    return induce_rep(a6_eight_dim(), symmetric(6))


REPS = {
    "s3_std": s3_std_cyclotomic,
    "s3_std_rational": s3_std_rational,
    "s4_std": s4_std,
    "s4_two_dim": s4_two_dim,
    "a4_std": a4_std,
    "d4_plane": d4_plane,
    "d6_plane": d6_plane,
    "q8_standard": q8_standard,
    "q8_rational4": q8_rational4,
    "a6_eight_dim": a6_eight_dim,
    "s6_sixteen_dim": s6_sixteen_dim,
}


def rep_by_name(name: str) -> MatrixRep:
    key = name.lower()
    if key in REPS:
        return REPS[key]()
    raise KeyError(name)
