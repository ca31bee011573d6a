#!/usr/bin/env python3
"""Regenerate the golden command corpus under corpus/.

Writes the input documents (groups, representations, subgroup generator
lists, fields, twists), runs every command once through the normal entry
point, and freezes selected output fields into *.case.json expectation
files.  Run from anywhere: paths are anchored on this file's location.
"""

import json
import os
import sys

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))

from repdesc import catalog, jsonio                       # noqa: E402
from repdesc.cli import run                               # noqa: E402
from repdesc.cyclo import GaloisAut, SubfieldSpec         # noqa: E402
from repdesc.linalg import Mat                            # noqa: E402
from repdesc.rep import MatrixRep                         # noqa: E402

OUT = os.path.join(ROOT, "corpus")


def write(name, doc):
    with open(os.path.join(OUT, name), "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def case(name, argv, expect_exit, expect_keys=()):
    """Run argv once, check the exit code, freeze the named fields."""
    resolved = [
        os.path.join(OUT, a) if a.endswith(".json") else a for a in argv
    ]
    code, out = run(resolved)
    if code != expect_exit:
        raise SystemExit(
            f"{name}: exit {code}, wanted {expect_exit}\n{out}"
        )
    doc = {"argv": argv, "expect_exit": expect_exit}
    if expect_keys:
        got = json.loads(out)
        doc["expect"] = {k: got[k] for k in expect_keys}
    write(name, doc)
    print(f"  {name}: exit {code}")


def permutation_matrices(G):
    return [
        Mat([[1 if g[j] == i else 0 for j in range(G.degree)]
             for i in range(G.degree)])
        for g in G.generators
    ]


def main():
    os.makedirs(OUT, exist_ok=True)
    for old in os.listdir(OUT):
        if old.endswith(".json"):
            os.remove(os.path.join(OUT, old))

    print("input documents")
    s3 = catalog.GROUPS["s3"]()
    s4 = catalog.GROUPS["s4"]()
    q8 = catalog.GROUPS["q8"]()
    write("s3.json", jsonio.group_to_json(s3))
    write("s4.json", jsonio.group_to_json(s4))
    write("q8.json", jsonio.group_to_json(q8))
    write("d4.json", jsonio.group_to_json(catalog.GROUPS["d4"]()))
    write("s6.json", jsonio.group_to_json(catalog.symmetric(6)))

    write("s3_std.json", jsonio.rep_to_json(catalog.std_perm_rep("s3")))
    write("s3_stdcyc.json", jsonio.rep_to_json(catalog.s3_std_cyclotomic()))
    write("s3_perm.json", jsonio.rep_to_json(
        MatrixRep(s3, permutation_matrices(s3))))
    write("s3_triv.json", jsonio.rep_to_json(
        MatrixRep(s3, [Mat.identity(1) for _ in s3.generators])))
    write("s4_two_dim.json", jsonio.rep_to_json(catalog.s4_two_dim()))
    write("q8_standard.json", jsonio.rep_to_json(catalog.q8_standard()))
    write("d4_plane.json", jsonio.rep_to_json(catalog.d4_plane()))

    write("s3_a3_gens.json", [[1, 2, 0]])
    write("s3_trivial_gens.json", [])
    write("s4_v4_gens.json", [[1, 0, 3, 2], [2, 3, 0, 1]])
    write("q8_center_gens.json", [[1, 0, 3, 2, 5, 4, 7, 6]])

    write("rationals.json", jsonio.subfield_to_json(SubfieldSpec.rationals()))
    write("field3.json", jsonio.subfield_to_json(SubfieldSpec.full_field(3)))
    write("field4.json", jsonio.subfield_to_json(SubfieldSpec.full_field(4)))
    write("twist3.json", jsonio.galois_to_json(GaloisAut(3, 2)))

    print("cases")
    case("chartable_s3.case.json",
         ["chartable", "--group", "s3.json"],
         0, ("classes", "table"))
    case("chartable_q8.case.json",
         ["chartable", "--group", "q8.json"],
         0, ("classes", "table"))
    case("chartable_s6.case.json",
         ["chartable", "--group", "s6.json"],
         0, ("classes", "table"))

    case("brauer_s3_std.case.json",
         ["brauer", "--group", "s3.json", "--rep", "s3_std.json"],
         0, ("terms",))
    case("brauer_s3_std_a3.case.json",
         ["brauer", "--group", "s3.json", "--rep", "s3_std.json",
          "--normal", "s3_a3_gens.json"],
         0, ("terms",))
    case("brauer_q8_standard.case.json",
         ["brauer", "--group", "q8.json", "--rep", "q8_standard.json",
          "--normal", "q8_center_gens.json"],
         0, ("terms",))

    case("devissage_s3.case.json",
         ["devissage", "--group", "s3.json", "--rep", "s3_std.json",
          "--normal", "s3_a3_gens.json"],
         0, ("t", "s", "verify"))
    case("devissage_s4_v4.case.json",
         ["devissage", "--group", "s4.json", "--rep", "s4_two_dim.json",
          "--normal", "s4_v4_gens.json"],
         0, ("t", "s", "verify"))

    code, out = run([
        "devissage",
        "--group", os.path.join(OUT, "s3.json"),
        "--rep", os.path.join(OUT, "s3_std.json"),
        "--normal", os.path.join(OUT, "s3_a3_gens.json"),
    ])
    assert code == 0
    cert = json.loads(out)
    write("cert_s3.json", cert)
    bad = json.loads(out)
    bad["t"], bad["s"] = bad["s"], bad["t"]
    write("cert_s3_bad.json", bad)
    case("verify_s3.case.json",
         ["verify", "--certificate", "cert_s3.json"],
         0, ("ok", "failures"))
    case("verify_s3_bad.case.json",
         ["verify", "--certificate", "cert_s3_bad.json"],
         1, ("ok",))

    case("scan_s3.case.json",
         ["simple-root-scan", "--group", "s3.json", "--rep", "s3_std.json"],
         0, ("witness", "message"))
    case("scan_q8.case.json",
         ["simple-root-scan", "--group", "q8.json",
          "--rep", "q8_standard.json"],
         0, ("witness", "message"))

    case("descend_s3.case.json",
         ["descend", "--rep", "s3_stdcyc.json", "--base", "rationals.json",
          "--seed", "0"],
         0, ("b", "base"))
    case("descend_q8_notfound.case.json",
         ["descend", "--rep", "q8_standard.json", "--base", "rationals.json"],
         1, ("error",))

    case("noether_s3.case.json",
         ["noether-deuring", "--rho", "s3_std.json", "--tau", "s3_triv.json",
          "--pi", "s3_perm.json", "--base", "rationals.json"],
         0, ("rank",))

    case("homcheck_s3.case.json",
         ["homcheck", "--source", "s3_std.json", "--target",
          "s3_stdcyc.json", "--field", "field3.json"],
         0, ("agree", "dimension"))

    case("harness_s3.case.json",
         ["harness", "--group", "s3.json", "--rep", "s3_stdcyc.json",
          "--normal", "s3_a3_gens.json", "--twist", "twist3.json",
          "--seed", "0"],
         0, ("status", "F", "twist"))

    code, out = run(["corpus", OUT])
    print(out, end="")
    if code != 0:
        raise SystemExit("corpus self-check failed")


if __name__ == "__main__":
    main()
