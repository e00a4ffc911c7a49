"""Command-line front end for the tangency package.

Exit codes: 0 success, 1 a verification suite failed, 2 usage error,
3 domain error (bad composition, incomparable pair, ambiguous transport...).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import cells as cells_mod
from .classifier import (
    classify_family,
    family_from_expressions,
    negativity_components,
    real_roots,
)
from .composition import Composition, decompose, from_text, reduced_norm, to_text
from .errors import AmbiguousTransportError, TangencyError
from .export import complex_dot, poset_dot, star_dot, to_json
from .markers import (
    MarkedComposition,
    blocks,
    marked_insert,
    marked_merge,
    marker_set,
    transport_paths,
    xi_at_marker,
)
from .polynomial import parse_coeffs
from .poset import (
    BULLET,
    EXACT,
    OMEGA,
    UPTO,
    bullet_geq,
    bullet_mor_enumerate,
    generate_bullet,
    generate_omega,
    geq,
    hasse,
    mor_enumerate,
    witness,
)
from .trajectory import build_t_model, link_complex
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

# options whose values may legitimately start with "-"
_VALUE_OPTIONS = ("--poly", "--coeffs", "--samples")


class UsageError(Exception):
    pass


def nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def composition_arg(text: str) -> Composition:
    try:
        return from_text(text)
    except TangencyError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _morphism_dict(m) -> dict:
    return {"source": list(m.source), "target": list(m.target), "map": list(m.map), "parity": list(m.parity)}


def _rows(rows) -> str:
    return "\n".join("  ".join(str(c) for c in r) for r in rows) + "\n"


# Each command returns (payload, table_text, dot_text_or_None, exit_code).


def cmd_gen(args):
    if args.poset == OMEGA:
        if args.d is None:
            raise UsageError("gen --poset omega needs --d")
        elems = generate_omega(args.d, args.mode)
    else:
        if args.n is None:
            raise UsageError("gen --poset bullet needs --n")
        elems = generate_bullet(args.n)
    payload = {"kind": args.poset, "count": len(elems), "elements": [list(w) for w in elems]}
    table = _rows([(to_text(w), reduced_norm(w)) for w in elems]) + f"{len(elems)} elements\n"
    return payload, table, None, EXIT_OK


def cmd_order(args):
    a, b = args.a, args.b
    if args.kind == OMEGA:
        holds = geq(a, b)
        m = witness(a, b) if holds else None
        wit = _morphism_dict(m) if m else None
    else:
        holds = bullet_geq(a, b)
        wit = None
        if holds:
            for w in generate_omega(sum(b), UPTO):
                if geq(w, b) and a in decompose(w).elements:
                    wit = {"composition": list(w), "morphism": _morphism_dict(witness(w, b))}
                    break
    payload = {"kind": args.kind, "a": list(a), "b": list(b), "holds": holds, "witness": wit}
    table = f"({to_text(a)}) >= ({to_text(b)}) [{args.kind}]: {str(holds).lower()}\n"
    return payload, table, None, EXIT_OK


def cmd_mor(args):
    found = bullet_mor_enumerate(args.a, args.b) if args.loose else mor_enumerate(args.a, args.b)
    payload = {"a": list(args.a), "b": list(args.b), "loose": args.loose, "morphisms": [_morphism_dict(m) for m in found]}
    table = _rows([(i + 1, list(m.map)) for i, m in enumerate(found)]) + f"{len(found)} morphisms\n"
    return payload, table, None, EXIT_OK


def cmd_hasse(args):
    if args.poset == OMEGA:
        if args.d is None:
            raise UsageError("hasse --poset omega needs --d")
        poset = hasse(generate_omega(args.d, args.mode), OMEGA)
    else:
        if args.n is None:
            raise UsageError("hasse --poset bullet needs --n")
        poset = hasse(generate_bullet(args.n), BULLET)
    table = _rows(
        (to_text(poset.elements[i]), ">", to_text(poset.elements[j])) for i, j in poset.covers
    ) + f"{len(poset.elements)} elements, {len(poset.covers)} covers\n"
    return poset.to_dict(), table, poset_dot(poset), EXIT_OK


def cmd_cells(args):
    f = cells_mod.f_vector(args.d, args.ambient)
    payload = {**f.to_dict(), "euler_characteristic": cells_mod.euler_characteristic(f)}
    table = _rows((f"dim {i}", c) for i, c in enumerate(f.counts)) + f"chi = {payload['euler_characteristic']}\n"
    return payload, table, None, EXIT_OK


def cmd_star(args):
    star = cells_mod.normal_star(args.omega, args.d)
    payload = {**star.to_dict(), "counts": star.counts()}
    table = _rows((f"dim {c['dim']}", to_text(c["label"])) for c in star.cells) + f"counts {star.counts()}\n"
    return payload, table, star_dot(star), EXIT_OK


def cmd_ram(args):
    o = cells_mod.ramification_o(args.a, args.b)
    payload = {"omega": list(args.a), "omega_tilde": list(args.b), "o": o}
    return payload, f"o(({to_text(args.a)}), ({to_text(args.b)})) = {o}\n", None, EXIT_OK


def cmd_markers(args):
    w = args.omega
    payload = {"omega": list(w), "markers": marker_set(w), "blocks": blocks(w).to_dict()["blocks"]}
    lines = [f"markers of ({to_text(w)}): {marker_set(w)}"]
    code = EXIT_OK
    if args.marker is not None:
        m = MarkedComposition(w, args.marker)
        payload["stratum"] = list(xi_at_marker(m))
        lines.append(f"marker {args.marker} names ({to_text(xi_at_marker(m))})")
        if args.merge is not None:
            r = marked_merge(m, args.merge)
            payload["result"] = r.to_dict()
            lines.append(f"merge {args.merge}: {r}")
        if args.insert is not None:
            r = marked_insert(m, args.insert)
            payload["result"] = r.to_dict()
            lines.append(f"insert {args.insert}: {r}")
        if args.target is not None:
            paths = transport_paths(m, args.target)
            payload["transport"] = {
                "target": list(args.target),
                "markers": sorted(paths),
                "paths": {str(k): [f"{kind}{j}" for kind, j in p] for k, p in paths.items()},
                "unique": len(paths) == 1,
            }
            lines.append(f"transport to ({to_text(args.target)}): {sorted(paths)}")
            if len(paths) != 1:
                lines.append("ambiguous: different operation sequences give different markers")
                code = EXIT_DOMAIN
    elif any(v is not None for v in (args.merge, args.insert, args.target)):
        raise UsageError("--merge/--insert/--target need --marker")
    return payload, "\n".join(lines) + "\n", None, code


def cmd_tmodel(args):
    cx = link_complex(args.omega) if args.link else build_t_model(args.omega)
    payload = {**cx.to_dict(), "f_vector": cx.f_vector(), "link": args.link}
    table = _rows(
        (f"dim {c.dim}", str(c.label), f"@{c.marker}", f"({to_text(c.stratum)})") for c in cx.cells
    ) + f"f-vector {cx.f_vector()}, {len(cx.covers)} covers\n"
    return payload, table, complex_dot(cx), EXIT_OK


def cmd_classify(args):
    p = parse_coeffs(args.poly)
    roots = real_roots(p)
    w = Composition(r.multiplicity for r in roots)
    payload = {"coeffs": p.to_strings(), "type": list(w), "roots": [r.to_dict() for r in roots]}
    lines = [f"type ({to_text(w)})"]
    if args.components:
        comps = negativity_components(p)
        payload["components"] = [c.to_dict() for c in comps]
        lines += [f"component ({to_text(c.type)}) from root {c.marker_root_index}" for c in comps]
    return payload, "\n".join(lines) + "\n", None, EXIT_OK


def cmd_family(args):
    exprs = [e.strip() for e in args.coeffs.split(",")]
    samples = [s.strip() for s in args.samples.split(",")]
    try:
        fam = family_from_expressions(exprs)
    except (SyntaxError, ValueError) as exc:
        raise UsageError(f"bad coefficient expression: {exc}") from None
    report = classify_family(fam, samples)
    table = _rows((f"t={t}", f"({to_text(w)})") for t, w in report.rows)
    table += "".join(
        f"({to_text(t['from'])}) -> ({to_text(t['to'])}): {'ok' if t['ok'] else 'VIOLATION'}\n"
        for t in report.transitions
    )
    return report.to_dict(), table, None, EXIT_OK if report.ok else EXIT_VERIFY


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = [
        run_suite(n, max_d=args.max_d, max_n=args.max_n, count=args.count, seed=args.seed) for n in names
    ]
    payload = {"results": [r.to_dict() for r in results], "ok": all(r.ok for r in results)}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({r.checked} checks, {r.seconds:.2f}s)")
        lines += [f"      {f}" for f in r.failures[:5]]
    return payload, "\n".join(lines) + "\n", None, EXIT_OK if payload["ok"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "dot", "table"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")

    parser = argparse.ArgumentParser(prog="tangency", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "list compositions or strings/atoms")
    p.add_argument("--poset", choices=[OMEGA, BULLET], default=OMEGA)
    p.add_argument("--d", type=nonneg)
    p.add_argument("--n", type=nonneg)
    p.add_argument("--mode", choices=[EXACT, UPTO], default=UPTO)

    p = add("order", cmd_order, "test a >= b")
    p.add_argument("--kind", choices=[OMEGA, BULLET], default=OMEGA)
    p.add_argument("a", type=composition_arg)
    p.add_argument("b", type=composition_arg)

    p = add("mor", cmd_mor, "enumerate morphisms a -> b")
    p.add_argument("--loose", action="store_true", help="drop parity conditions (strings and atoms only)")
    p.add_argument("a", type=composition_arg)
    p.add_argument("b", type=composition_arg)

    p = add("hasse", cmd_hasse, "cover relations of a poset")
    p.add_argument("--poset", choices=[OMEGA, BULLET], default=OMEGA)
    p.add_argument("--d", type=nonneg)
    p.add_argument("--n", type=nonneg)
    p.add_argument("--mode", choices=[EXACT, UPTO], default=UPTO)

    p = add("cells", cmd_cells, "f-vector of a polynomial space")
    p.add_argument("--d", type=nonneg, required=True)
    p.add_argument("--ambient", choices=list(cells_mod.AMBIENTS), default=cells_mod.FULL)

    p = add("star", cmd_star, "normal star of a stratum")
    p.add_argument("--omega", type=composition_arg, required=True)
    p.add_argument("--d", type=nonneg, required=True)

    p = add("ram", cmd_ram, "ramification number o(a, b)")
    p.add_argument("a", type=composition_arg)
    p.add_argument("b", type=composition_arg)

    p = add("markers", cmd_markers, "markers, blocks and marker transport")
    p.add_argument("--omega", type=composition_arg, required=True)
    p.add_argument("--marker", type=int)
    p.add_argument("--merge", type=int)
    p.add_argument("--insert", type=int)
    p.add_argument("--target", type=composition_arg)

    p = add("tmodel", cmd_tmodel, "local trajectory cell model")
    p.add_argument("--omega", type=composition_arg, required=True)
    p.add_argument("--link", action="store_true", help="output the link instead")

    p = add("classify", cmd_classify, "real-root pattern of a polynomial")
    p.add_argument("--poly", required=True, help="ascending rational coefficients, comma-separated")
    p.add_argument("--components", action="store_true", help="also list the components of p <= 0")

    p = add("family", cmd_family, "classify a one-parameter family at samples of t")
    p.add_argument("--coeffs", required=True, help="ascending coefficients as expressions in t, comma-separated")
    p.add_argument("--samples", required=True, help="comma-separated rationals, ordered toward the degenerate end")

    p = add("verify", cmd_verify, "run self-check suites")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-d", type=nonneg)
    p.add_argument("--max-n", type=nonneg)
    p.add_argument("--count", type=nonneg)
    p.add_argument("--seed", type=int)
    return parser


def _glue_values(argv: List[str]) -> List[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    # parent parsers share action objects, so defaults are filled in here
    fmt = getattr(args, "format", "json")
    out = getattr(args, "out", None)
    try:
        payload, table, dot, code = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"tangency: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AmbiguousTransportError as exc:
        print(f"tangency: ambiguous: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (TangencyError, IndexError) as exc:
        print(f"tangency: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"tangency: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if fmt == "dot":
        if dot is None:
            parser.print_usage(sys.stderr)
            print(f"tangency: error: {args.command} has no DOT output", file=sys.stderr)
            return EXIT_USAGE
        text = dot
    elif fmt == "table":
        text = table
    else:
        text = to_json(payload)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
