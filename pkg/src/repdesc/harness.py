"""End-to-end pipeline: certificate, witnesses, twist, descent, recovery.

Chains the other modules into one run: decompose a representation into
induction pairs, hunt a multiplicity-one eigenvalue witness for each pair,
form the composite coefficient field, check the two-sided trace identity,
twist the whole family by a Galois automorphism, descend each twisted piece
to the composite field, and cancel the induced pieces to recover the twisted
representation itself over that field.
"""

import math

from .cyclo import CycNum, GaloisAut, SubfieldSpec, galois_apply
from .descent import (
    MultOneWitness,
    descend_prop7,
    find_multiplicity_one,
    noether_deuring,
)
from .errors import IdentityCheckFailed
from .grp import FiniteGroup, Subgroup
from .rep import (
    Character,
    MatrixRep,
    character_of,
    direct_sum_rep,
    frobenius_induced_character,
    galois_twist,
    induce_rep,
    zero_rep,
)

_UNITS = lambda n: [u for u in range(1, n + 1) if math.gcd(u, n) == 1]


def composite_field(values) -> SubfieldSpec:
    """Smallest cyclotomic subfield containing every given value.

    Returned as the fixed field of the joint stabilizer inside the field of
    conductor lcm of the canonical conductors.
    """
    n = 1
    for v in values:
        n = math.lcm(n, v.n)
    if n == 1:
        return SubfieldSpec.rationals()
    vals = list(values)
    stab = []
    for u in _UNITS(n):
        s = GaloisAut(n, u)
        if all(galois_apply(s, v) == v for v in vals):
            stab.append(u)
    return SubfieldSpec(n, stab)


class HarnessReport:
    """Everything the pipeline produced, stage by stage.

    status is "ok" when every stage ran, "blocked" when some induction pair
    had no eigenvalue witness; in that case failure names the first such
    pair and the descent stages are skipped.  witnesses aligns with
    certificate.pairs (None where the search failed), descents aligns with
    it in an "ok" run, and final is the recovered model of the twisted
    representation over F.
    """

    __slots__ = (
        "status",
        "failure",
        "certificate",
        "witnesses",
        "F",
        "twist",
        "identity_check",
        "twisted_identity_check",
        "descents",
        "final",
    )

    def __init__(self, status, failure, certificate, witnesses, F, twist,
                 identity_check, twisted_identity_check, descents, final):
        self.status = status
        self.failure = failure
        self.certificate = certificate
        self.witnesses = witnesses
        self.F = F
        self.twist = twist
        self.identity_check = identity_check
        self.twisted_identity_check = twisted_identity_check
        self.descents = descents
        self.final = final

    def __repr__(self):
        return f"HarnessReport(status={self.status!r})"


def _identity_holds(chi_rho: Character, pairs, t: int, G: FiniteGroup,
                    twist=None) -> bool:
    k = len(G.class_reps)
    total = list(chi_rho.values)
    if twist is not None:
        total = [galois_apply(twist, v) for v in total]
    for idx, (_H, sigma) in enumerate(pairs):
        chi = sigma.character()
        if twist is not None:
            chi = chi.twist(twist)
        ind = frobenius_induced_character(chi, G)
        sign = 1 if idx < t else -1
        total = [
            tv + iv * CycNum.rational(sign)
            for tv, iv in zip(total, ind.values)
        ]
    return all(v.is_zero() for v in total)


def run_harness(rho: MatrixRep, G: FiniteGroup, N: Subgroup,
                twist: GaloisAut, seed: int = 0) -> HarnessReport:
    """Run the full pipeline and return a stage-by-stage report.

    Stage order: certificate assembly; per-pair witness search over each
    pair's own trace field; composite field F from all traces and witness
    eigenvalues; exact trace identity; the same identity after twisting
    the whole family; per-pair descent of the twisted pieces to F; and
    recovery of the twisted representation over F by cancellation.  A
    failed witness search blocks the stages after the identity check; a
    failed identity check raises IdentityCheckFailed.
    """
    from .brauer import devissage

    cert = devissage(rho, G, N)
    chi_rho = character_of(rho)

    witnesses = []
    blocked = None
    for idx, (H, sigma) in enumerate(cert.pairs):
        base = composite_field(list(sigma.character().values))
        w = find_multiplicity_one(sigma, base)
        witnesses.append(w)
        if w is None and blocked is None:
            blocked = {
                "error": "WitnessUnavailable",
                "pair": idx,
                "subgroup_order": H.order,
                "rank": sigma.rank,
            }

    f_values = list(chi_rho.values)
    for _H, sigma in cert.pairs:
        f_values.extend(sigma.character().values)
    for w in witnesses:
        if w is not None:
            f_values.append(w.alpha)
    F = composite_field(f_values)

    identity_check = _identity_holds(chi_rho, cert.pairs, cert.t, G)
    if not identity_check:
        raise IdentityCheckFailed("trace identity fails on the certificate")

    if blocked is not None:
        return HarnessReport(
            "blocked", blocked, cert, witnesses, F, twist,
            identity_check, None, [], None,
        )

    twisted_identity = _identity_holds(chi_rho, cert.pairs, cert.t, G,
                                       twist=twist)
    if not twisted_identity:
        raise IdentityCheckFailed("trace identity fails after twisting")

    rho_t = galois_twist(rho, twist)
    descents = []
    for (_H, sigma), w in zip(cert.pairs, witnesses):
        sigma_t = galois_twist(sigma, twist)
        w_t = MultOneWitness(w.element, galois_apply(twist, w.alpha))
        descents.append(descend_prop7(sigma_t, F, w_t, seed=seed))

    left = [induce_rep(d.descended, G) for d in descents[:cert.t]]
    right = [induce_rep(d.descended, G) for d in descents[cert.t:]]
    tau0 = direct_sum_rep(left) if left else zero_rep(G)
    pi0 = direct_sum_rep(right) if right else zero_rep(G)
    final = noether_deuring(rho_t, tau0, pi0, F)
    if character_of(final) != chi_rho.twist(twist):
        raise IdentityCheckFailed(
            "recovered representation has the wrong character"
        )
    return HarnessReport(
        "ok", None, cert, witnesses, F, twist,
        identity_check, twisted_identity, descents, final,
    )
