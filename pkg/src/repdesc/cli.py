"""Command-line front end.

One binary with subcommands; every command reads JSON documents, dispatches
to the library, and writes a deterministic JSON document (or a summary) to
--out or standard output.  Exit codes: 0 all requested checks pass, 1 a
mathematical check failed (a structured report is still emitted), 2 usage
error, 3 malformed input.
"""

import argparse
import io
import json
import os
import sys
from contextlib import redirect_stderr

from . import jsonio
from .cyclo import SubfieldSpec
from .errors import InputError, RepdescError
from .grp import Subgroup
from .rep import char_table, character_of


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _group(args):
    return jsonio.group_from_json(_load(args.group), bound=args.bound)


def _rep_on(G, path, bound):
    rho = jsonio.rep_from_json(_load(path), bound=bound)
    if not rho.group.same_group(G):
        raise InputError("representation lives on a different group")
    return rho


def _normal_subgroup(G, args):
    if getattr(args, "normal", None) is None:
        return Subgroup(G, [G.elements[0]])
    doc = _load(args.normal)
    if isinstance(doc, dict) and "group" in doc:
        doc = doc["generators"]
    return jsonio._subgroup_in(G, doc)


# ---------------------------------------------------------------------------
# command handlers: each returns (exit code, output document or text)


def _cmd_chartable(args):
    G = _group(args)
    table = char_table(G)
    doc = {
        "classes": [[list(r), size] for r, size in G.class_reps],
        "table": [jsonio.character_to_json(chi) for chi in table],
    }
    return 0, _dumps(doc)


def _cmd_brauer(args):
    from .brauer import brauer_decompose

    G = _group(args)
    rho = _rep_on(G, args.rep, args.bound)
    N = _normal_subgroup(G, args)
    dec = brauer_decompose(character_of(rho), G, N)
    doc = {
        "target": jsonio.character_to_json(dec.target),
        "terms": [
            {
                "subgroup": [list(g) for g in H.generators],
                "psi": jsonio.character_to_json(psi),
                "coefficient": c,
            }
            for H, psi, c in dec.terms
        ],
    }
    return 0, _dumps(doc)


def _cmd_devissage(args):
    from .brauer import devissage, verify_certificate

    G = _group(args)
    rho = _rep_on(G, args.rep, args.bound)
    N = _normal_subgroup(G, args)
    cert = devissage(rho, G, N)
    doc = jsonio.certificate_to_json(cert)
    doc["verify"] = bool(verify_certificate(cert))
    return 0, _dumps(doc)


def _cmd_verify(args):
    from .brauer import verify_certificate

    cert = jsonio.certificate_from_json(_load(args.certificate),
                                        bound=args.bound)
    report = verify_certificate(cert)
    doc = {"ok": bool(report), "failures": report.failures}
    return (0 if report else 1), _dumps(doc)


def _cmd_simple_root_scan(args):
    from .cyclo import has_simple_root
    from .descent import find_multiplicity_one

    G = _group(args)
    rho = _rep_on(G, args.rep, args.bound)
    base = (SubfieldSpec.rationals() if args.base is None
            else jsonio.subfield_from_json(_load(args.base)))
    classes = []
    for r, _size in G.class_reps:
        f = rho.image(r).charpoly()
        classes.append({
            "class_rep": list(r),
            "simple_root": has_simple_root(f),
        })
    w = find_multiplicity_one(rho, base)
    doc = {
        "classes": classes,
        "witness": None if w is None else jsonio.multone_to_json(w),
        "message": (
            "no multiplicity-one eigenvalue in any class"
            if w is None
            else "multiplicity-one eigenvalue found"
        ),
    }
    return 0, _dumps(doc)


def _cmd_descend(args):
    from .descent import descend_prop7, find_multiplicity_one

    rho = jsonio.rep_from_json(_load(args.rep), bound=args.bound)
    base = jsonio.subfield_from_json(_load(args.base))
    w = find_multiplicity_one(rho, base)
    if w is None:
        doc = {
            "error": "NotFound",
            "detail": "no multiplicity-one eigenvalue in the base field",
        }
        return 1, _dumps(doc)
    witness = descend_prop7(rho, base, w, seed=args.seed)
    doc = jsonio.descent_witness_to_json(witness)
    doc["witness"] = jsonio.multone_to_json(w)
    return 0, _dumps(doc)


def _cmd_noether_deuring(args):
    from .descent import noether_deuring

    rho = jsonio.rep_from_json(_load(args.rho), bound=args.bound)
    tau = _rep_on(rho.group, args.tau, args.bound)
    pi = _rep_on(rho.group, args.pi, args.bound)
    base = jsonio.subfield_from_json(_load(args.base))
    out = noether_deuring(rho, tau, pi, base)
    return 0, _dumps(jsonio.rep_to_json(out))


def _cmd_homcheck(args):
    from .descent import hom_dim_base_change_check
    from .rep import hom_space

    M = jsonio.rep_from_json(_load(args.source), bound=args.bound)
    N = _rep_on(M.group, args.target, args.bound)
    k = jsonio.subfield_from_json(_load(args.field))
    agree = hom_dim_base_change_check(M, N, k)
    doc = {"agree": agree, "dimension": hom_space(M, N).dimension}
    return (0 if agree else 1), _dumps(doc)


def _cmd_harness(args):
    from .harness import run_harness

    G = _group(args)
    rho = _rep_on(G, args.rep, args.bound)
    N = _normal_subgroup(G, args)
    twist = jsonio.galois_from_json(_load(args.twist))
    report = run_harness(rho, G, N, twist, seed=args.seed)
    code = 0 if report.status == "ok" else 1
    if args.summary:
        lines = [
            f"certificate: ok (t={report.certificate.t}, "
            f"s={report.certificate.s})",
            "witnesses: "
            + (
                f"ok ({len(report.witnesses)}/{len(report.witnesses)})"
                if report.status == "ok"
                else f"blocked (pair {report.failure['pair']})"
            ),
            f"identity: {'pass' if report.identity_check else 'fail'}",
        ]
        if report.status == "ok":
            lines.append(
                "twisted-identity: "
                + ("pass" if report.twisted_identity_check else "fail")
            )
            lines.append(f"descent: ok ({len(report.descents)} pairs)")
            lines.append("recovery: pass")
        else:
            lines.append("twisted-identity: skipped")
            lines.append("descent: skipped")
            lines.append("recovery: skipped")
        return code, "\n".join(lines) + "\n"
    return code, _dumps(jsonio.harness_report_to_json(report))


def _cmd_corpus(args):
    cases = sorted(
        f for f in os.listdir(args.directory) if f.endswith(".case.json")
    )
    lines = []
    failures = 0
    for case in cases:
        path = os.path.join(args.directory, case)
        try:
            doc = _load(path)
            code, out = _run_case(doc, args.directory)
            ok, reason = _check_case(doc, code, out)
        except (InputError, RepdescError) as exc:
            ok, reason = False, f"{type(exc).__name__}: {exc}"
        if ok:
            lines.append(f"{case}: PASS")
        else:
            lines.append(f"{case}: FAIL ({reason})")
            failures += 1
    lines.append(f"{len(cases) - failures}/{len(cases)} cases passed")
    return (1 if failures else 0), "\n".join(lines) + "\n"


def _run_case(doc, directory):
    jsonio._expect_keys(doc, ("argv", "expect_exit"), optional=("expect",))
    argv = doc["argv"]
    jsonio._expect(
        isinstance(argv, list) and all(isinstance(a, str) for a in argv),
        "argv must be a list of strings",
    )
    jsonio._expect(argv and argv[0] != "corpus", "cases cannot nest corpora")
    resolved = [
        os.path.join(directory, a) if a.endswith(".json") else a
        for a in argv
    ]
    return run(resolved)


def _check_case(doc, code, out):
    if code != doc["expect_exit"]:
        return False, f"exit {code}, expected {doc['expect_exit']}"
    expect = doc.get("expect")
    if expect is not None:
        try:
            got = json.loads(out)
        except json.JSONDecodeError:
            return False, "output is not JSON"
        for key, want in expect.items():
            if key not in got:
                return False, f"missing output field {key!r}"
            if got[key] != want:
                return False, f"output field {key!r} differs"
    return True, ""


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repdesc",
        description="exact representation calculations and descent checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, seed=False):
        p.add_argument("--bound", type=int, default=None,
                       help="group order cap (overrides REPDESC_BOUND)")
        p.add_argument("--out", default=None,
                       help="write the output document to this file")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("chartable", help="exact character table")
    p.add_argument("--group", required=True)
    common(p)
    p.set_defaults(fn=_cmd_chartable)

    p = sub.add_parser("brauer", help="integral induced-character solution")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--normal", default=None)
    common(p)
    p.set_defaults(fn=_cmd_brauer)

    p = sub.add_parser("devissage", help="build and verify a certificate")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--normal", required=True)
    common(p)
    p.set_defaults(fn=_cmd_devissage)

    p = sub.add_parser("verify", help="independently re-check a certificate")
    p.add_argument("--certificate", required=True)
    common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("simple-root-scan",
                       help="per-class simple-eigenvalue scan")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--base", default=None)
    common(p)
    p.set_defaults(fn=_cmd_simple_root_scan)

    p = sub.add_parser("descend", help="rewrite a representation over a subfield")
    p.add_argument("--rep", required=True)
    p.add_argument("--base", required=True)
    common(p, seed=True)
    p.set_defaults(fn=_cmd_descend)

    p = sub.add_parser("noether-deuring",
                       help="peel a summand without leaving the field")
    p.add_argument("--rho", required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--base", required=True)
    common(p)
    p.set_defaults(fn=_cmd_noether_deuring)

    p = sub.add_parser("homcheck",
                       help="compare intertwiner dimensions across fields")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--field", required=True)
    common(p)
    p.set_defaults(fn=_cmd_homcheck)

    p = sub.add_parser("harness", help="full pipeline with twist and descent")
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--normal", required=True)
    p.add_argument("--twist", required=True)
    p.add_argument("--summary", action="store_true")
    common(p, seed=True)
    p.set_defaults(fn=_cmd_harness)

    p = sub.add_parser("corpus", help="run a directory of golden cases")
    p.add_argument("directory",
                   help="holds *.case.json files; other .json files are "
                        "inputs the cases refer to")
    common(p)
    p.set_defaults(fn=_cmd_corpus)

    return parser


def run(argv):
    """Dispatch one invocation; returns (exit code, output text)."""
    parser = _build_parser()
    try:
        with redirect_stderr(io.StringIO()) as err:
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if exc.code else 0), err.getvalue()
    try:
        code, out = args.fn(args)
    except InputError as exc:
        return 3, _dumps({"error": type(exc).__name__, "detail": str(exc)})
    except RepdescError as exc:
        return 1, _dumps({"error": type(exc).__name__, "detail": str(exc)})
    if args.out is not None:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
        return code, ""
    return code, out


def main() -> int:
    code, out = run(sys.argv[1:])
    if out:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
