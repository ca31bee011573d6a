"""JSON encoding and strict decoding for every document the tools exchange.

All emitters produce deterministic documents (sorted keys, canonical value
forms) so identical inputs give byte-identical files; all parsers validate
shape and content before any computation and raise InputError on anything
malformed.
"""

from fractions import Fraction

from .cyclo import CycNum, GaloisAut, SubfieldSpec
from .errors import InputError
from .grp import FiniteGroup, Subgroup, validate_perm
from .linalg import Mat
from .rep import Character, MatrixRep


def _expect(cond: bool, msg: str):
    if not cond:
        raise InputError(msg)


def _expect_keys(doc, required, optional=()):
    _expect(isinstance(doc, dict), "expected a JSON object")
    for k in required:
        _expect(k in doc, f"missing field {k!r}")
    for k in doc:
        _expect(k in required or k in optional, f"unknown field {k!r}")


# ---------------------------------------------------------------------------
# numbers


def cyc_to_json(v: CycNum) -> dict:
    terms = [
        [e, f"{c.numerator}/{c.denominator}"]
        for e, c in sorted(v.coeffs.items())
    ]
    return {"n": v.n, "terms": terms}


def cyc_from_json(doc) -> CycNum:
    _expect_keys(doc, ("n", "terms"))
    n = doc["n"]
    _expect(isinstance(n, int) and n >= 1, "conductor must be a positive integer")
    _expect(isinstance(doc["terms"], list), "terms must be a list")
    total = CycNum.zero()
    prev = -1
    for item in doc["terms"]:
        _expect(
            isinstance(item, list) and len(item) == 2,
            "each term must be an [exponent, coefficient] pair",
        )
        e, c = item
        _expect(isinstance(e, int) and 0 <= e < n if n > 1 else e == 0,
                "term exponent out of range")
        _expect(e > prev, "term exponents must be strictly increasing")
        prev = e
        total = total + CycNum(n, {e: _parse_fraction(c)})
    return total


def _parse_fraction(s) -> Fraction:
    _expect(isinstance(s, str), "coefficient must be a string")
    parts = s.split("/")
    _expect(len(parts) in (1, 2), "coefficient must look like num/den")
    try:
        num = int(parts[0])
        den = int(parts[1]) if len(parts) == 2 else 1
    except ValueError:
        raise InputError(f"bad coefficient {s!r}")
    _expect(den > 0, "coefficient denominator must be positive")
    return Fraction(num, den)


def galois_to_json(s: GaloisAut) -> dict:
    return {"n": s.n, "k": s.k}


def galois_from_json(doc) -> GaloisAut:
    _expect_keys(doc, ("n", "k"))
    _expect(isinstance(doc["n"], int) and isinstance(doc["k"], int),
            "automorphism fields must be integers")
    try:
        return GaloisAut(doc["n"], doc["k"])
    except Exception as exc:
        raise InputError(f"bad automorphism: {exc}")


def subfield_to_json(k: SubfieldSpec) -> dict:
    return {"n": k.n, "stabilizer": sorted(k.stabilizer)}


def subfield_from_json(doc) -> SubfieldSpec:
    _expect_keys(doc, ("n", "stabilizer"))
    _expect(isinstance(doc["n"], int), "conductor must be an integer")
    _expect(
        isinstance(doc["stabilizer"], list)
        and all(isinstance(u, int) for u in doc["stabilizer"]),
        "stabilizer must be a list of integers",
    )
    try:
        return SubfieldSpec(doc["n"], doc["stabilizer"])
    except Exception as exc:
        raise InputError(f"bad subfield: {exc}")


# ---------------------------------------------------------------------------
# groups


def group_to_json(G: FiniteGroup) -> dict:
    doc = {
        "degree": G.degree,
        "generators": [list(g) for g in G.generators],
    }
    if G.name:
        doc["name"] = G.name
    return doc


def group_from_json(doc, bound=None) -> FiniteGroup:
    _expect_keys(doc, ("degree", "generators"), optional=("name",))
    degree = doc["degree"]
    _expect(isinstance(degree, int) and degree >= 1,
            "degree must be a positive integer")
    gens_doc = doc["generators"]
    _expect(isinstance(gens_doc, list) and gens_doc,
            "at least one generator is required")
    gens = []
    for g in gens_doc:
        _expect(
            isinstance(g, list) and all(isinstance(x, int) for x in g),
            "each generator must be a list of integers",
        )
        try:
            gens.append(validate_perm(degree, g))
        except Exception as exc:
            raise InputError(f"bad generator: {exc}")
    name = doc.get("name")
    _expect(name is None or isinstance(name, str), "name must be a string")
    return FiniteGroup(degree, gens, name=name, bound=bound)


def subgroup_to_json(H: Subgroup) -> dict:
    return {
        "group": group_to_json(H.parent),
        "generators": [list(g) for g in H.generators],
    }


def subgroup_from_json(doc, bound=None) -> Subgroup:
    _expect_keys(doc, ("group", "generators"))
    parent = group_from_json(doc["group"], bound=bound)
    return _subgroup_in(parent, doc["generators"])


def _subgroup_in(parent: FiniteGroup, gens_doc) -> Subgroup:
    _expect(isinstance(gens_doc, list), "generators must be a list")
    gens = []
    for g in gens_doc:
        _expect(
            isinstance(g, list) and all(isinstance(x, int) for x in g),
            "each generator must be a list of integers",
        )
        gens.append(tuple(g))
    if not gens:
        gens = [tuple(range(parent.degree))]
    try:
        return parent.subgroup_generated(gens)
    except Exception as exc:
        raise InputError(f"bad subgroup: {exc}")


# ---------------------------------------------------------------------------
# matrices, representations, characters


def matrix_to_json(M: Mat) -> list:
    return [[cyc_to_json(e) for e in row] for row in M.rows]


def matrix_from_json(doc) -> Mat:
    _expect(isinstance(doc, list) and doc, "matrix must be a non-empty list")
    rows = []
    width = None
    for row in doc:
        _expect(isinstance(row, list), "matrix rows must be lists")
        if width is None:
            width = len(row)
        _expect(len(row) == width, "matrix rows must have equal length")
        rows.append([cyc_from_json(e) for e in row])
    return Mat(rows)


def rep_to_json(rho: MatrixRep) -> dict:
    return {
        "group": group_to_json(rho.group),
        "rank": rho.rank,
        "images": {
            str(i): matrix_to_json(M) for i, M in enumerate(rho.gen_images)
        },
    }


def rep_from_json(doc, bound=None, validate: bool = True) -> MatrixRep:
    _expect_keys(doc, ("group", "rank", "images"))
    G = group_from_json(doc["group"], bound=bound)
    rank = doc["rank"]
    _expect(isinstance(rank, int) and rank >= 0, "rank must be a non-negative integer")
    images_doc = doc["images"]
    _expect(isinstance(images_doc, dict), "images must be an object")
    _expect(
        set(images_doc) == {str(i) for i in range(len(G.generators))},
        "images must cover exactly the generator indices",
    )
    if rank == 0:
        from .rep import zero_rep

        for i in range(len(G.generators)):
            _expect(images_doc[str(i)] == [], "rank-zero images must be empty")
        return zero_rep(G)
    images = []
    for i in range(len(G.generators)):
        M = matrix_from_json(images_doc[str(i)])
        _expect(M.nrows == rank and M.ncols == rank,
                "image size does not match the stated rank")
        images.append(M)
    return MatrixRep(G, images, validate=validate)


def character_to_json(chi: Character) -> list:
    return [cyc_to_json(v) for v in chi.values]


# ---------------------------------------------------------------------------
# witnesses, certificates, reports


def multone_to_json(w) -> dict:
    return {"class_rep": list(w.element), "alpha": cyc_to_json(w.alpha)}


def multone_from_json(doc):
    from .descent import MultOneWitness

    _expect_keys(doc, ("class_rep", "alpha"))
    rep = doc["class_rep"]
    _expect(
        isinstance(rep, list) and all(isinstance(x, int) for x in rep),
        "class_rep must be a list of integers",
    )
    return MultOneWitness(tuple(rep), cyc_from_json(doc["alpha"]))


def descent_witness_to_json(w) -> dict:
    return {
        "b": matrix_to_json(w.b),
        "base": subfield_to_json(w.base),
        "descended": rep_to_json(w.descended),
    }


def certificate_to_json(cert) -> dict:
    return {
        "group": group_to_json(cert.rho.group),
        "rho": rep_to_json(cert.rho),
        "normal": [list(g) for g in cert.normal.generators],
        "t": cert.t,
        "s": cert.s,
        "pairs": [
            {"H": subgroup_to_json(H), "sigma": rep_to_json(sigma)}
            for H, sigma in cert.pairs
        ],
    }


def certificate_from_json(doc, bound=None):
    from .brauer import DevissageCertificate

    _expect_keys(doc, ("group", "rho", "normal", "t", "s", "pairs"),
                 optional=("verify",))
    G = group_from_json(doc["group"], bound=bound)
    rho = rep_from_json(doc["rho"], bound=bound)
    _expect(rho.group.same_group(G), "rho lives on a different group")
    normal = _subgroup_in(G, doc["normal"])
    _expect(isinstance(doc["t"], int) and isinstance(doc["s"], int),
            "t and s must be integers")
    _expect(isinstance(doc["pairs"], list), "pairs must be a list")
    pairs = []
    for p in doc["pairs"]:
        _expect_keys(p, ("H", "sigma"))
        H_doc = p["H"]
        _expect_keys(H_doc, ("group", "generators"))
        H = _subgroup_in(G, H_doc["generators"])
        sigma = rep_from_json(p["sigma"], bound=bound)
        _expect(
            frozenset(sigma.group.elements) == frozenset(H.elements),
            "pair representation does not live on its subgroup",
        )
        pairs.append((H, sigma))
    return DevissageCertificate(rho, normal, pairs, doc["t"], doc["s"])


def harness_report_to_json(report) -> dict:
    doc = {
        "status": report.status,
        "certificate": certificate_to_json(report.certificate),
        "witnesses": [
            None if w is None else multone_to_json(w)
            for w in report.witnesses
        ],
        "F": subfield_to_json(report.F),
        "twist": galois_to_json(report.twist),
        "identity_check": report.identity_check,
        "twisted_identity_check": report.twisted_identity_check,
        "descents": [descent_witness_to_json(d) for d in report.descents],
        "final": None if report.final is None else rep_to_json(report.final),
    }
    if report.failure is not None:
        doc["failure"] = report.failure
    return doc
