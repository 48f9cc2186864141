"""Command-line front end.

Subcommands: ``gen`` writes a family member as JSON or DOT, ``charpoly``
prints a characteristic polynomial, ``verify`` sweeps generators against
their closed forms, ``census`` reports faces and coefficient rules,
``components`` counts strands and ``decompose`` prints the permutation
splittings.  Exit codes: 0 success / all pass, 1 verification failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import diagram as dg
from . import families as fam
from . import polynomials as poly
from . import spectra as sp

_USAGE_ERROR = 2
_VERIFY_FAILURE = 1


class InputError(Exception):
    pass


def _load_spec_or_diagram(text: str) -> dg.Diagram:
    """Family spec string or path to a diagram JSON document."""
    try:
        return fam.generate(fam.parse_spec_string(text))
    except fam.FamilyError as spec_err:
        if ":" in text and not os.path.exists(text):
            raise InputError(str(spec_err)) from spec_err
    path = Path(text)
    if not path.exists():
        raise InputError(f"{text!r} is neither a family spec nor a file")
    try:
        return dg.from_json(path.read_text())
    except dg.DiagramFormatError as exc:
        raise InputError(f"{text}: {exc}") from exc


def _load_matrix_source(text: str) -> sp.AdjMatrix:
    """Family spec, diagram JSON path, or matrix file (text or JSON rows)."""
    try:
        return sp.adjacency(_load_spec_or_diagram(text))
    except InputError:
        pass
    path = Path(text)
    if not path.exists():
        raise InputError(f"{text!r} is neither a family spec nor a file")
    content = path.read_text()
    try:
        return sp.adjacency(dg.from_json(content))
    except dg.DiagramFormatError:
        try:
            return sp.parse_matrix(content)
        except (ValueError, json.JSONDecodeError) as exc:
            raise InputError(f"{text}: not a diagram or matrix: {exc}") from exc


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    d = fam.generate(fam.parse_spec_string(args.spec))
    text = dg.to_json(d, indent=2) + "\n" if args.format == "json" else dg.to_dot(d)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_charpoly(args: argparse.Namespace) -> int:
    m = _load_matrix_source(args.source)
    print(poly.charpoly(m))
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    d = _load_spec_or_diagram(args.source)
    problems = dg.validate(d)
    if problems:
        print("invalid diagram: " + "; ".join(problems))
        return _USAGE_ERROR
    _, census = dg.faces(d)
    loops = d.loop_count()
    parts = [" ".join(f"C_{j}={c}" for j, c in sorted(census.counts.items()))]
    parts.append(f"loops={loops}")
    if census.counts.get(1, 0):
        parts.append("face_identity: skipped (loops present)")
    else:
        parts.append("face_identity: "
                     + ("pass" if dg.check_face_identity(census) else "fail"))
    report = poly.coefficient_report(poly.charpoly(sp.adjacency(d)),
                                     census, loops)
    parts.append("coeffs: " + ("pass" if report.all_pass() else "fail"))
    print("; ".join(parts))
    return 0 if report.all_pass() else _VERIFY_FAILURE


def cmd_components(args: argparse.Namespace) -> int:
    m = _load_matrix_source(args.source)
    print(sp.trace_strands(m).count)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    m = _load_matrix_source(args.source)
    dec = sp.trace_strands(m)
    pairs = sp.permutation_decompositions(m)
    print(f"strands: {dec.count}")
    print(f"canonical decompositions: {len(pairs)}")
    for idx, (p1, p2) in enumerate(pairs):
        print(f"decomposition {idx}:")
        print("P1:")
        print(sp.AdjMatrix(p1).to_text())
        print("P2:")
        print(sp.AdjMatrix(p2).to_text())
    return 0


# ---------------------------------------------------------------------------
# verify sweeps
# ---------------------------------------------------------------------------

def _sweep_specs(name: str, maximum: int) -> list[fam.FamilySpec]:
    cap = dg.max_vertices()
    single_v = {
        "cyclic": (fam.CYCLIC_TORUS, 1),
        "twistchain": (fam.TWIST_CHAIN, 1),
        "hopftwist": (fam.HOPF_TWIST, 2),
        "trefoiltwist": (fam.TREFOIL_TWIST, 3),
        "fourknottwist": (fam.FOUR_KNOT_TWIST, 4),
        "twistknot": (fam.TWIST_KNOTS, 3),
    }
    specs: list[fam.FamilySpec] = []
    if name in single_v:
        family, lo = single_v[name]
        specs = [fam.FamilySpec(family, (v,))
                 for v in range(lo, maximum + 1)]
    elif name == "f":
        specs = [fam.FamilySpec(fam.TWO_RIBBON, (j, k))
                 for j in range(1, maximum + 1) for k in range(1, j + 1)]
    elif name == "p":
        specs = [fam.FamilySpec(fam.THREE_RIBBON_P, (k, l, m))
                 for k in range(1, maximum + 1)
                 for l in range(1, maximum + 1)
                 for m in range(1, maximum + 1)]
    elif name == "g":
        specs = [fam.FamilySpec(fam.THREE_RIBBON_G, (k, l, m))
                 for k in range(1, maximum + 1)
                 for l in range(1, k + 1) for m in range(1, l + 1)]
    elif name == "chain":
        specs = [fam.FamilySpec(fam.CLOSED_CHAIN, (k,))
                 for k in range(1, maximum + 1)]
    elif name == "kribbon":
        specs = [fam.FamilySpec(fam.K_RIBBON_CYCLIC, (k, m))
                 for k in range(1, maximum + 1) for m in range(1, maximum + 1)]
    elif name == "lchain":
        specs = [fam.FamilySpec(fam.CHAINED_CYCLIC, (k, n))
                 for k in range(0, maximum + 1) for n in range(1, maximum + 1)]
    else:
        raise InputError(f"unknown verify family {name!r}")
    return [s for s in specs if fam.vertex_count(s) <= cap]


def cmd_verify(args: argparse.Namespace) -> int:
    rows: list[tuple[str, str, str, bool, str, str]] = []
    if args.family == "identities":
        for key, ok in fam.check_identities(args.max).items():
            rows.append(("identities", key, "", ok, "", ""))
    else:
        names = ([args.family] if args.family != "all" else
                 ["cyclic", "twistchain", "hopftwist", "trefoiltwist",
                  "fourknottwist", "twistknot", "f", "p", "g", "chain",
                  "kribbon", "lchain"])
        for name in names:
            for spec in _sweep_specs(name, args.max):
                res = fam.verify_member(spec)
                rows.append((name, fam.spec_string(spec),
                             str(fam.vertex_count(spec)), res.match,
                             str(res.generated), str(res.formula)))
        if args.family == "all":
            for key, ok in fam.check_identities(args.max).items():
                rows.append(("identities", key, "", ok, "", ""))

    all_ok = all(r[3] for r in rows)
    if args.report == "csv":
        print("family,params,V,match,generated_poly,formula_poly")
        for name, params, v, ok, gen, formula in rows:
            print(f'{name},{params},{v},{str(ok).lower()},"{gen}","{formula}"')
    else:
        for name, params, v, ok, gen, formula in rows:
            status = "ok" if ok else "MISMATCH"
            tail = f"  {gen}" if gen else ""
            print(f"{status:9s} {name:14s} {params:22s} V={v:3s}{tail}")
        print(f"{len(rows)} rows, "
              + ("all match" if all_ok else "MISMATCHES PRESENT"))
    return 0 if all_ok else _VERIFY_FAILURE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altknot",
        description="Alternating knot/link/twist diagrams, their exact "
                    "characteristic polynomials, and family verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a family member")
    p_gen.add_argument("spec", help="family spec, e.g. cyclic:V=5")
    p_gen.add_argument("--out", help="output path (default: stdout)")
    p_gen.add_argument("--format", choices=("json", "dot"), default="json")
    p_gen.set_defaults(func=cmd_gen)

    p_charpoly = sub.add_parser("charpoly",
                                help="characteristic polynomial of a spec, "
                                     "diagram JSON, or matrix file")
    p_charpoly.add_argument("source")
    p_charpoly.set_defaults(func=cmd_charpoly)

    p_verify = sub.add_parser("verify",
                              help="sweep generators against closed forms")
    p_verify.add_argument("--family", default="all",
                          choices=("all", "identities", "cyclic", "twistchain",
                                   "hopftwist", "trefoiltwist", "fourknottwist",
                                   "twistknot", "f", "p", "g", "chain",
                                   "kribbon", "lchain"))
    p_verify.add_argument("--max", type=int, default=8,
                          help="largest index swept (default 8)")
    p_verify.add_argument("--report", choices=("csv", "text"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_census = sub.add_parser("census",
                              help="face census, face identity, coefficient "
                                   "rules")
    p_census.add_argument("source")
    p_census.set_defaults(func=cmd_census)

    p_comp = sub.add_parser("components", help="number of closed strands")
    p_comp.add_argument("source")
    p_comp.set_defaults(func=cmd_components)

    p_dec = sub.add_parser("decompose",
                           help="permutation-matrix decompositions")
    p_dec.add_argument("source")
    p_dec.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (fam.FamilyError, InputError, dg.DiagramError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
