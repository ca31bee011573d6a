"""Integral induction decompositions and their certificates.

Every character of a finite group is an integer combination of characters
induced from subgroups that are elementary relative to a chosen normal
subgroup.  This module computes such combinations exactly, classifies how an
invariant irreducible behaves under restriction along a chief section,
shrinks induction pairs until their restriction to the normal subgroup is
irreducible, and packages the result as a certificate that an independent
checker can replay.
"""

import math
from fractions import Fraction

from .cyclo import CycNum
from .errors import (
    CertificateCheckFailed,
    HypothesisViolation,
    InternalCaseViolation,
    NoIntegralSolution,
    NotIrreducible,
    NotNilpotent,
)
from .grp import (
    FiniteGroup,
    Subgroup,
    _require_normal,
    chief_step,
    elementary_mod_N,
    is_nilpotent_quotient,
    normal_subgroups_containing,
)
from .intsolve import solve_integer
from .linalg import Mat
from .rep import (
    Character,
    MatrixRep,
    char_table,
    character_of,
    clifford_component,
    constituents_of,
    frobenius_induced_character,
    inner_product,
    is_abs_irreducible,
    realize_character,
    restrict,
)

_ONE = CycNum.one()


def _as_int(x: CycNum) -> int:
    assert x.is_rational()
    f = x.as_fraction()
    assert f.denominator == 1
    return int(f)


# ---------------------------------------------------------------------------
# integral decomposition into induced characters


class BrauerDecomposition:
    """chi written as an integer combination of induced characters.

    terms is a list of (H, psi, coefficient) with H a subgroup elementary
    relative to the chosen normal subgroup, psi an irreducible character of
    H, and a nonzero integer coefficient; the combination of the induced
    characters equals target exactly.
    """

    __slots__ = ("target", "normal", "terms")

    def __init__(self, target: Character, normal: Subgroup, terms):
        self.target = target
        self.normal = normal
        self.terms = list(terms)

    def __repr__(self):
        return f"BrauerDecomposition(terms={len(self.terms)})"


def brauer_decompose(chi: Character, G: FiniteGroup,
                     N: Subgroup) -> BrauerDecomposition:
    """Solve for integer coefficients expressing chi in induced characters.

    Builds one column per pair (H, psi) with H elementary relative to N and
    psi irreducible on H, flattens all class values over a common cyclotomic
    power basis with denominators cleared, and solves the integer linear
    system canonically.  Raises NoIntegralSolution if no integer combination
    exists (never on genuine characters).
    """
    chi.group.require_same(G)
    _require_normal(G, N)
    subs = elementary_mod_N(G, N)
    pairs = []
    columns = []
    for H in subs:
        Hgrp = H.as_group()
        for psi in char_table(Hgrp):
            pairs.append((H, psi))
            columns.append(frobenius_induced_character(psi, G))

    big = 1
    for col in columns + [chi]:
        for v in col.values:
            big = math.lcm(big, v.n)
    width = len(_flatten(CycNum.one(), big))

    rows = []
    rhs = []
    k = len(chi.values)
    for ci in range(k):
        for j in range(width):
            rows.append([_flatten(col.values[ci], big)[j] for col in columns])
            rhs.append(_flatten(chi.values[ci], big)[j])
    int_rows, int_rhs = _clear_denominators(rows, rhs)
    sol = solve_integer(int_rows, int_rhs)
    if sol is None:
        raise NoIntegralSolution(
            "no integer combination of induced characters matches"
        )
    terms = [(H, psi, c) for (H, psi), c in zip(pairs, sol) if c]

    total = Character(G, [CycNum.zero()] * k)
    for (H, psi, c) in terms:
        ind = frobenius_induced_character(psi, G)
        total = Character(
            G,
            [t + v * CycNum.rational(c) for t, v in zip(total.values,
                                                        ind.values)],
        )
    assert total == chi, "re-evaluated combination deviates from the target"
    return BrauerDecomposition(chi, N, terms)


def _flatten(v: CycNum, big: int):
    from .cyclo import _degree

    coeffs = v._embedded(big)
    return [coeffs.get(e, Fraction(0)) for e in range(_degree(big))]


def _clear_denominators(rows, rhs):
    int_rows = []
    int_rhs = []
    for row, b in zip(rows, rhs):
        den = b.denominator
        for x in row:
            den = math.lcm(den, x.denominator)
        int_rows.append([int(x * den) for x in row])
        int_rhs.append(int(b * den))
    return int_rows, int_rhs


# ---------------------------------------------------------------------------
# restriction along a chief section


class TrichotomyResult:
    """How an invariant irreducible restricts along an abelian section.

    case_tag is "I" (t = [K:L] pairwise distinct constituents, each with
    multiplicity one), "II" (the restriction stays irreducible), or "III"
    (a single constituent with multiplicity e, e^2 = [K:L]).  constituents
    holds the constituent characters of L; e is set in case III.
    """

    __slots__ = ("case_tag", "constituents", "e")

    def __init__(self, case_tag, constituents, e=None):
        self.case_tag = case_tag
        self.constituents = list(constituents)
        self.e = e

    def __repr__(self):
        return f"TrichotomyResult(case={self.case_tag})"


def clifford_trichotomy(pi: MatrixRep, G: FiniteGroup, K: Subgroup,
                        L: Subgroup) -> TrichotomyResult:
    """Classify Res_L(pi) for pi an invariant irreducible of K.

    Hypotheses checked up front: K and L normal in G, L contained in K,
    K/L abelian, pi irreducible, and the class of pi fixed by G-conjugation.
    The classification itself decides among the three shapes; inputs whose
    restriction fits none (possible only when a normal subgroup sits
    strictly between L and K) raise HypothesisViolation naming that
    condition.
    """
    if not K.parent.same_group(G):
        raise HypothesisViolation("upper subgroup belongs to a different group")
    if not L.parent.same_group(G):
        raise HypothesisViolation("lower subgroup belongs to a different group")
    if not K.is_normal_in_parent:
        raise HypothesisViolation("upper subgroup is not normal")
    if not L.is_normal_in_parent:
        raise HypothesisViolation("lower subgroup is not normal")
    if not L.elements <= K.elements:
        raise HypothesisViolation("lower subgroup is not contained in upper")
    Kgrp = K.as_group()
    if not pi.group.same_group(Kgrp):
        raise HypothesisViolation("representation lives on the wrong group")

    from .grp import quotient_map

    Q, _images = quotient_map(Kgrp, Subgroup(Kgrp, L.elements))
    if not Q.is_abelian():
        raise HypothesisViolation("section is not abelian")
    chi = pi.character()
    if inner_product(chi, chi) != _ONE:
        raise HypothesisViolation("representation is not irreducible")
    for g in G.generators:
        if chi.conjugate_by(g) != chi:
            raise HypothesisViolation(
                "isomorphism class is not invariant under conjugation"
            )

    index = K.order // L.order
    Lgrp = L.as_group()
    res = chi.restrict_to(Lgrp)
    if inner_product(res, res) == _ONE:
        return TrichotomyResult("II", [res])
    cons = constituents_of(res)
    mults = sorted({m for _, m in cons})
    if len(cons) == index and mults == [1]:
        return TrichotomyResult("I", [c for c, _ in cons])
    if len(cons) == 1:
        e = cons[0][1]
        if e * e == index:
            return TrichotomyResult("III", [cons[0][0]], e=e)
    raise HypothesisViolation(
        "restriction fits no case: a normal subgroup lies strictly "
        "between the two given ones"
    )


# ---------------------------------------------------------------------------
# shrinking an induction pair


class IsaacsWitness:
    """Outcome of the recursive reduction: rho = Ind from (H, sigma).

    sigma is irreducible with irreducible restriction to the normal
    subgroup; induction_chain records each (K, L, constituent, I) recursion
    step from the outside in.
    """

    __slots__ = ("H", "sigma", "induction_chain")

    def __init__(self, H: Subgroup, sigma: MatrixRep, induction_chain):
        self.H = H
        self.sigma = sigma
        self.induction_chain = list(induction_chain)

    def __repr__(self):
        return (
            f"IsaacsWitness(order={self.H.order}, rank={self.sigma.rank}, "
            f"steps={len(self.induction_chain)})"
        )


def _res_irreducible(chi: Character, sub_elems, parent: FiniteGroup) -> bool:
    sub = Subgroup(parent, sub_elems)
    res = chi.restrict_to(sub.as_group())
    return inner_product(res, res) == _ONE


def isaacs_reduce(rho: MatrixRep, G: FiniteGroup, N: Subgroup) -> IsaacsWitness:
    """Shrink (G, rho) to an induction pair restricting irreducibly to N.

    Requires G/N nilpotent and rho irreducible.  Repeatedly: find the
    smallest normal K above N restricting irreducibly, step down one chief
    section to L, classify (must be case I; II is excluded by minimality of
    K and III by primality of the section), pass to the inertia group of the
    least constituent, and recurse.  The result satisfies
    Ind from H of sigma = rho at the character level.
    """
    if not is_nilpotent_quotient(G, N):
        raise NotNilpotent("quotient by the normal subgroup is not nilpotent")
    if not is_abs_irreducible(rho):
        raise NotIrreducible("input representation is not irreducible")

    chain = []
    G_cur = G
    rho_cur = rho
    while True:
        N_cur = Subgroup(G_cur, N.elements)
        if _res_irreducible(rho_cur.character(), N.elements, G_cur):
            H = Subgroup(G, frozenset(G_cur.elements))
            witness = IsaacsWitness(H, rho_cur, chain)
            ind = frobenius_induced_character(rho_cur.character(), G)
            assert ind == character_of(rho), \
                "induced character deviates from the input"
            return witness
        K = next(
            M for M in normal_subgroups_containing(G_cur, N_cur)
            if _res_irreducible(rho_cur.character(), M.elements, G_cur)
        )
        L = chief_step(G_cur, N_cur, K)
        pi = restrict(rho_cur, K)
        tri = clifford_trichotomy(pi, G_cur, K, L)
        if tri.case_tag != "I":
            raise InternalCaseViolation(
                f"expected case I along the chief section, got "
                f"{tri.case_tag}"
            )
        sigma1_chi = min(tri.constituents, key=lambda c: c.sort_key())
        sigma1 = realize_character(sigma1_chi)
        I, rho_prime = clifford_component(rho_cur, L, sigma1)
        chain.append((K, L, sigma1_chi, I))
        G_cur = I.as_group()
        rho_cur = rho_prime


# ---------------------------------------------------------------------------
# certificate assembly


class DevissageCertificate:
    """rho together with induction pairs satisfying the two-sided identity.

    pairs is a list of (H_i, sigma_i); the first t pairs sit on the same
    side as rho, the remaining s - t on the other, and

        chi_rho + sum_{i < t} Ind chi_i = sum_{i >= t} Ind chi_i

    holds exactly on every conjugacy class.  Every sigma_i is irreducible
    with irreducible restriction to the normal subgroup.
    """

    __slots__ = ("rho", "normal", "pairs", "t", "s")

    def __init__(self, rho: MatrixRep, normal: Subgroup, pairs, t: int,
                 s: int):
        self.rho = rho
        self.normal = normal
        self.pairs = list(pairs)
        self.t = t
        self.s = s

    def __repr__(self):
        return f"DevissageCertificate(t={self.t}, s={self.s})"


def _finite_order_det(rho: MatrixRep) -> bool:
    order = rho.group.order
    for M in rho.gen_images:
        if M.det() ** order != _ONE:
            return False
    return True


def devissage(rho: MatrixRep, G: FiniteGroup,
              N: Subgroup) -> DevissageCertificate:
    """Assemble a certificate reducing rho to well-restricted pairs.

    Decomposes chi_rho over subgroups elementary relative to N, expands
    coefficients into one list entry per unit, replaces every pair whose
    restriction to N is reducible through the recursive reduction, and
    splits by sign.  The identity is re-verified exactly before returning.
    """
    rho.group.require_same(G)
    _require_normal(G, N)
    if not is_abs_irreducible(rho):
        raise NotIrreducible("input representation is not irreducible")
    if not _finite_order_det(rho):
        raise HypothesisViolation(
            "generator determinant is not of finite order"
        )
    chi_rho = character_of(rho)
    dec = brauer_decompose(chi_rho, G, N)

    left = []
    right = []
    for (H, psi, c) in dec.terms:
        Hgrp = H.as_group()
        if H.order == G.order and psi == chi_rho:
            sigma = rho
        else:
            sigma = realize_character(psi)
        if not _res_irreducible(psi, N.elements, Hgrp):
            inner = isaacs_reduce(
                sigma, Hgrp, Subgroup(Hgrp, N.elements)
            )
            H = Subgroup(G, frozenset(inner.H.elements))
            sigma = inner.sigma
        bucket = left if c < 0 else right
        for _ in range(abs(c)):
            bucket.append((H, sigma))

    pairs = left + right
    t = len(left)
    s = len(pairs)
    cert = DevissageCertificate(rho, N, pairs, t, s)
    report = verify_certificate(cert)
    if not report:
        raise CertificateCheckFailed(
            "assembled certificate fails its own verification: "
            + "; ".join(report.failures)
        )
    return cert


class VerificationReport:
    """Outcome of an independent certificate check; truthy iff clean."""

    __slots__ = ("failures",)

    def __init__(self, failures):
        self.failures = list(failures)

    def __bool__(self):
        return not self.failures

    def __repr__(self):
        return f"VerificationReport(failures={self.failures})"


def verify_certificate(cert: DevissageCertificate) -> VerificationReport:
    """Re-check a certificate from scratch.

    Conditions: every subgroup squeezes between the normal subgroup and the
    whole group; every sigma is irreducible; every restriction to the normal
    subgroup is irreducible; and the two-sided induced-character identity
    holds on every conjugacy class.  Failures are named in the report.
    """
    failures = []
    G = cert.rho.group
    n_elems = frozenset(cert.normal.elements)
    g_elems = frozenset(G.elements)
    chi_rho = character_of(cert.rho)
    k = len(G.class_reps)
    total = [CycNum.zero()] * k

    for idx, (H, sigma) in enumerate(cert.pairs):
        h_elems = frozenset(H.elements)
        if not (n_elems <= h_elems and h_elems <= g_elems):
            failures.append(
                f"pair {idx}: subgroup does not sit between the normal "
                f"subgroup and the group"
            )
            continue
        chi = sigma.character()
        if inner_product(chi, chi) != _ONE:
            failures.append(f"pair {idx}: component is not irreducible")
        res = chi.restrict_to(Subgroup(sigma.group, n_elems).as_group())
        if inner_product(res, res) != _ONE:
            failures.append(
                f"pair {idx}: restriction to the normal subgroup is not "
                f"irreducible"
            )
        ind = frobenius_induced_character(chi, G)
        sign = 1 if idx < cert.t else -1
        total = [
            tv + iv * CycNum.rational(sign)
            for tv, iv in zip(total, ind.values)
        ]

    if not (0 <= cert.t <= cert.s and cert.s == len(cert.pairs)):
        failures.append("pair counts are inconsistent")
    lhs = [a + b for a, b in zip(chi_rho.values, total)]
    if any(not v.is_zero() for v in lhs):
        failures.append("induced-character identity fails")
    return VerificationReport(failures)
