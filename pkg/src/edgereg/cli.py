"""Command-line entry point: ``python -m edgereg <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import graph as gr
from .betti import (
    DEFAULT_LATTICE_CAP,
    FieldDisagreement,
    LatticeCapError,
    betti_gpw_oracle,
    betti_multigraded,
    is_prime,
    verify_field_agreement,
)
from .harness import CHECK_ORDER, build_corpus, default_smax, graph_name, j_ideal, j_pol, run_corpus
from .ideal import edge_ideal, power, whisker_edge_ideal

SUBCOMMANDS = ("alpha", "nu", "whisker", "bounds", "ideal", "betti", "reg", "check", "sweep")
IDEAL_KINDS = {
    "I": lambda g: edge_ideal(g),
    "J": j_ideal,
    "Jpol": j_pol,
    "Istar": whisker_edge_ideal,
}


class UsageError(Exception):
    pass


def _field(text: str):
    if text == "q":
        return None
    if text.startswith("p") and text[1:].isdigit():
        p = int(text[1:])
        if p <= 10000 or not is_prime(p):
            raise argparse.ArgumentTypeError(f"{text}: need a prime p > 10000")
        return p
    raise argparse.ArgumentTypeError(f"field must be 'q' or 'p<prime>', got {text!r}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--family", help="path:N | cycle:N | complete:N | random:N,P[,SEED]")
    src.add_argument("--input", type=Path, help="edge-list file: 'n m' then m lines 'u v'")
    common.add_argument("--smax", type=_positive, default=None)
    common.add_argument("--field", type=_field, default=None, help="q (rationals, default) or pP for GF(P)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--lattice-cap", type=_positive, default=DEFAULT_LATTICE_CAP)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="edgereg", description="Regularity of powers of edge ideals, verified exactly.")
    sub = p.add_subparsers(dest="cmd", required=True)
    sub.add_parser("alpha", parents=[common], help="independence number and stable complex dimension")
    sub.add_parser("nu", parents=[common], help="induced matching number")
    sub.add_parser("whisker", parents=[common], help="whisker graph G*")
    sub.add_parser("bounds", parents=[common], help="Hansen and Kwok bounds")
    for name in ("ideal", "betti", "reg"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--kind", choices=tuple(IDEAL_KINDS), default="I")
        sp.add_argument("--power", type=_positive, default=1)
        if name == "betti":
            sp.add_argument("--oracle", action="store_true", help="use the lattice-interval formula")
    ck = sub.add_parser("check", parents=[common], help="run theorem checks on one graph")
    ck.add_argument("--all", action="store_true")
    ck.add_argument("--checks", default=None, help="comma-separated subset of " + ",".join(CHECK_ORDER))
    sw = sub.add_parser("sweep", parents=[common], help="run checks over a corpus")
    sw.add_argument("--corpus", nargs="+", default=["default"])
    sw.add_argument("--checks", default=None)
    return p


def load_graph(args) -> tuple[str, gr.Graph]:
    if args.input is not None:
        try:
            text = args.input.read_text()
        except OSError as e:
            raise UsageError(f"cannot read {args.input}: {e}") from None
        return args.input.stem, gr.parse_graph(text)
    if args.family is None:
        raise UsageError("give --family or --input")
    name, _, params = args.family.partition(":")
    parts = [x for x in params.split(",") if x]
    if name == "random":
        if len(parts) == 2:
            parts.append(str(args.seed))
        if len(parts) != 3:
            raise UsageError("random family takes N,P[,SEED]")
        g = gr.family("random", int(parts[0]), Fraction(parts[1]), int(parts[2]))
        p = Fraction(parts[1])
        return f"G({parts[0]},{p},{parts[2]})", g
    if len(parts) != 1:
        raise UsageError(f"family {name!r} takes one parameter N")
    g = gr.family(name, int(parts[0]))
    return graph_name(g), g


def _checks(args) -> list[str]:
    if getattr(args, "all", False) or not args.checks:
        return list(CHECK_ORDER)
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in names if c not in CHECK_ORDER]
    if bad:
        raise UsageError(f"unknown checks {bad}")
    return names


def _emit(out, fmt: str, doc, text: str, csv_text: str | None = None):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        if csv_text is None:
            csv_text = ",".join(doc) + "\n" + ",".join(str(v) for v in doc.values()) + "\n"
        out.write(csv_text)
    else:
        out.write(text + "\n")


def _ideal_label(kind: str, gid: str, s: int) -> str:
    base = {"I": f"I({gid})", "J": f"J({gid})", "Jpol": f"J({gid})^pol", "Istar": f"I({gid}*)"}[kind]
    if s == 1:
        return base
    return f"({base})^{s}" if kind == "Jpol" else f"{base}^{s}"


def run(args, out) -> int:
    if args.field is not None:
        probe = [edge_ideal(g) for n in (2, 3, 4) for g in gr.connected_graphs(n)]
        probe += [j_ideal(g) for n in (2, 3, 4) for g in gr.connected_graphs(n)]
        verify_field_agreement(args.field, probe)

    if args.cmd == "sweep":
        corpus = build_corpus(args.corpus)
        rep = run_corpus(corpus, _checks(args), args.smax, args.jobs, args.field, args.lattice_cap)
        lines = []
        for r in rep.reports:
            bad = [k for k, v in r.verdicts.items() if not v.passed]
            lines.append(f"{r.graph_id}: " + ("pass" if not bad else "FAIL " + ",".join(bad)))
        for e in rep.errors:
            lines.append(f"{e['graph_id']}: resource error: {e['error']}")
        lines.append(f"{len(rep.reports)} graphs, {sum(not r.passed for r in rep.reports)} failing, "
                     f"{len(rep.errors)} errors, {len(rep.skipped)} skipped")
        _emit(out, args.format, rep.to_json(), "\n".join(lines), rep.to_csv())
        if not rep.passed:
            return 1
        return 3 if rep.errors else 0

    gid, g = load_graph(args)

    if args.cmd == "alpha":
        a = gr.alpha(g)
        doc = {"graph": gid, "alpha": a.alpha, "c": a.c, "witness": list(a.witness),
               "maximal_set_sizes": list(a.maximal_set_sizes)}
        _emit(out, args.format, {**doc, "witness": " ".join(map(str, a.witness)),
                                 "maximal_set_sizes": " ".join(map(str, a.maximal_set_sizes))}
              if args.format == "csv" else doc,
              f"alpha({gid}) = {a.alpha}, c = {a.c}, witness = {{{', '.join(map(str, a.witness))}}}")
        return 0
    if args.cmd == "nu":
        nu = gr.induced_matching_number(g)
        _emit(out, args.format, {"graph": gid, "nu": nu}, f"nu({gid}) = {nu}")
        return 0
    if args.cmd == "whisker":
        w = gr.whisker(g)
        doc = {"graph": gid, "whisker": w.to_json(), "very_well_covered": gr.is_very_well_covered(w)}
        if args.format == "csv":
            raise UsageError("whisker has no csv form")
        _emit(out, args.format, doc, w.to_text().rstrip("\n"))
        return 0
    if args.cmd == "bounds":
        a = gr.alpha(g)
        h = gr.hansen_bound(g.n, g.e)
        k = str(gr.kwok_bound(g)) if g.e else None
        doc = {"graph": gid, "hansen": h, "kwok": k, "alpha": a.alpha, "c": a.c}
        _emit(out, args.format, doc, f"hansen={h}, kwok={k if k is not None else 'undefined'}, alpha={a.alpha}, c={a.c}")
        return 0
    if args.cmd in ("ideal", "betti", "reg"):
        ideal = power(IDEAL_KINDS[args.kind](g), args.power)
        label = _ideal_label(args.kind, gid, args.power)
        if args.cmd == "ideal":
            if args.format == "csv":
                raise UsageError("ideal has no csv form")
            _emit(out, args.format, ideal.to_json(), f"{label} = {ideal}")
            return 0
        if ideal.is_zero():
            raise UsageError(f"{label} is the zero ideal")
        if args.cmd == "betti":
            fn = betti_gpw_oracle if args.oracle else betti_multigraded
            table = fn(ideal, args.field, args.lattice_cap)
            csv_text = "i,j,dim\n" + "".join(f"{i},{j},{d}\n" for (i, j), d in table.graded().items())
            _emit(out, args.format, table.to_json(), f"{label}\n{table.diagram()}", csv_text)
            return 0
        r = betti_multigraded(ideal, args.field, args.lattice_cap).regularity
        _emit(out, args.format, {"ideal": label, "regularity": r}, f"reg {label} = {r}")
        return 0
    if args.cmd == "check":
        smax = args.smax or default_smax(g.n)
        rep = run_corpus([(gid, g)], _checks(args), smax, 1, args.field, args.lattice_cap)
        if rep.skipped:
            raise UsageError(f"{gid} has no edges; theorem checks need at least one edge")
        if rep.errors:
            raise LatticeCapError(rep.errors[0]["error"])
        r = rep.reports[0]
        inv = r.invariants
        lines = [f"{gid}: n={g.n}, e={g.e}, c={inv['c']}, nu={inv['nu_G']}, nu*={inv['nu_Gstar']}, "
                 f"hansen={inv['hansen']}, kwok={inv['kwok']}, smax={smax}"]
        for s in range(1, smax + 1):
            vals = ", ".join(f"{k}={v}" for k, v in sorted(r.per_s.get(s, {}).items()))
            lines.append(f"  s={s}: {vals}")
        for name, v in r.verdicts.items():
            lines.append(f"  {name}: {'pass' if v.passed else 'FAIL'}")
        lines.append("all pass" if r.passed else "FAILED")
        _emit(out, args.format, r.to_json(), "\n".join(lines), rep.to_csv())
        return 0 if r.passed else 1
    raise UsageError(f"unknown subcommand {args.cmd}")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return run(args, out)
    except (UsageError, gr.GraphParseError, ValueError) as e:
        err.write(f"edgereg: error: {e}\n")
        return 2
    except LatticeCapError as e:
        err.write(f"edgereg: resource limit: {e}\n")
        return 3
    except FieldDisagreement as e:
        err.write(f"edgereg: field check failed: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
