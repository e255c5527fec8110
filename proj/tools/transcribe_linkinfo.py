#!/usr/bin/env python3
"""Write PD files and knot tables from the KnotInfo / LinkInfo databases.

Needs the `database_knotinfo` package (pip install database_knotinfo).

    transcribe_linkinfo.py links OUTDIR L10a99 L10n96:+1,-1,+1,+1 ...
    transcribe_linkinfo.py knots OUTDIR [--max-crossings 8]

A link argument may carry an orientation vector after a colon; it is written
as the `orient` header.  The PD code is always taken from the `{0...}`
oriented version of the link.
"""

import argparse
import ast
import pathlib
import sys

from database_knotinfo import link_list


def _vector(text):
    return ast.literal_eval(text.replace("{", "[").replace("}", "]"))


def _links_by_unoriented_name():
    rows = {}
    for row in link_list(proper_links=True)[1:]:
        rows.setdefault(row["name_unoriented"], []).append(row)
    return rows


def write_links(outdir, specs):
    rows = _links_by_unoriented_name()
    outdir.mkdir(parents=True, exist_ok=True)
    for spec in specs:
        name, _, orient = spec.partition(":")
        if name not in rows:
            sys.exit(f"unknown link {name}")
        row = sorted(rows[name], key=lambda r: r["name"])[0]
        pd = _vector(row["pd_notation_vector"])
        k = int(row["components"])
        lines = [f"# {row['name']} from LinkInfo", f"name {name}", f"components {k}"]
        if orient:
            signs = [int(s) for s in orient.split(",")]
            if len(signs) != k:
                sys.exit(f"{name}: orientation has {len(signs)} entries, link has {k} components")
            lines.append("orient " + " ".join(f"{s:+d}" for s in signs))
        lines += ["X " + " ".join(str(e) for e in x) for x in pd]
        (outdir / f"{name}.pd").write_text("\n".join(lines) + "\n")
        print(f"wrote {outdir / (name + '.pd')}")


def _jones_knot(vec):
    # KnotInfo knot vectors are [min, max, coeffs...] in powers of t.
    v = _vector(vec) if isinstance(vec, str) else vec
    lo = int(v[0])
    return {2 * (lo + i): int(c) for i, c in enumerate(v[2:]) if int(c) != 0}


def write_knots(outdir, max_crossings):
    outdir.mkdir(parents=True, exist_ok=True)
    unknotting, jones = [], []
    for row in link_list()[1:]:
        try:
            cn = int(row["crossing_number"])
        except (TypeError, ValueError):
            continue
        if cn < 3 or cn > max_crossings:
            continue
        u = row["unknotting_number"]
        if u and u.isdigit():
            unknotting.append(f"{row['name']} {u}")
        poly = _jones_knot(row["jones_polynomial_vector"])
        for suffix, p in (("", poly), ("*", {-e: c for e, c in poly.items()})):
            terms = " ".join(f"{e}:{c}" for e, c in sorted(p.items()))
            jones.append(f"{row['name']}{suffix} {terms}")
    (outdir / "unknotting.txt").write_text(
        "# knot unknotting-number, prime knots from KnotInfo\n" + "\n".join(unknotting) + "\n")
    (outdir / "jones.txt").write_text(
        "# knot exponent:coefficient in powers of t^(1/2); '*' marks the mirror image\n"
        + "\n".join(jones) + "\n")
    print(f"wrote {len(unknotting)} unknotting numbers and {len(jones)} Jones polynomials")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)
    lp = sub.add_parser("links")
    lp.add_argument("outdir", type=pathlib.Path)
    lp.add_argument("names", nargs="+")
    kp = sub.add_parser("knots")
    kp.add_argument("outdir", type=pathlib.Path)
    kp.add_argument("--max-crossings", type=int, default=8)
    args = ap.parse_args()
    if args.cmd == "links":
        write_links(args.outdir, args.names)
    else:
        write_knots(args.outdir, args.max_crossings)


if __name__ == "__main__":
    main()
