"""Command-line front end.

Exit codes: 0 on success, 1 when a verification reports a failure, 2 on
unparseable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .admissibility import classify_pair
from .characters import branching_multiplicities, decompose
from .errors import LeviWeylError
from .levi import (LeviSubalgebra, enumerate_simple_levis, levi_from_generators,
                   project_current_weight)
from .rootsystem import RootSystem, parse_system_name
from .syntax import (format_current, format_eps, format_labels, format_root, parse_current,
                     parse_labels, parse_roots)
from .verify import (CHECKS, DEFAULT_SYSTEMS, SweepConfig, summarize, sweep)
from .weylmodule import current_weight, global_weyl_descriptor, local_weyl_character, local_weyl_dim, wt

FORMAT_ENV = "LEVIWEYL_FORMAT"

VERIFY_TARGETS = {
    "thm2i": ("highest-component", "quotient"),
    "thm2ii": ("global-rank",),
    "support": ("support",),
    "lemmas": ("levi-identities",),
    "surjectivity": ("surjectivity",),
    "global-local": ("global-local",),
    "simple-restriction": ("simple-restriction",),
    "all": CHECKS,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help=f"output format (default from ${FORMAT_ENV}, else text)")
    common.add_argument("--output", default=argparse.SUPPRESS,
                        help="write the result to this file instead of stdout")
    p = _Parser(prog="leviweyl", description="Levi subalgebras and Weyl modules of current algebras",
                parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(subs, name, **kw):
        return subs.add_parser(name, parents=[common], **kw)

    def g_arg(sp):
        sp.add_argument("--g", required=True, help="root system, e.g. B3")

    rootsys = add(sub, "rootsys", help="root system data")
    rs_sub = rootsys.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g_arg(add(rs_sub, "show"))

    levi = add(sub, "levi", help="Levi subalgebras")
    lv_sub = levi.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g_arg(add(lv_sub, "enumerate"))
    cl = add(lv_sub, "classify")
    g_arg(cl)
    cl.add_argument("--roots", required=True, help='generating roots, e.g. "e1-e2,e2-e4"')

    for name in ("project", "admissible", "branch"):
        sp = add(sub, name)
        g_arg(sp)
        sp.add_argument("--levi", required=True, help="root set or enumeration index")
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--weight", help="fundamental coordinates, e.g. 0,1,0")
        if name == "project":
            grp.add_argument("--current", help="current weight, e.g. p:1,0,0;q:0,1,0")

    for name in ("weyl-char", "weyl-dim"):
        sp = add(sub, name)
        g_arg(sp)
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--weight")
        grp.add_argument("--current")

    ver = add(sub, "verify")
    ver.add_argument("target", choices=sorted(VERIFY_TARGETS))
    ver.add_argument("--g", action="append", help="restrict to these systems (repeatable)")
    ver.add_argument("--max-rank", type=int, default=4)
    ver.add_argument("--max-sum", type=int, default=3)
    ver.add_argument("--admissibility-max-sum", type=int, default=2)
    ver.add_argument("--bound", type=int, default=6, help="surjectivity search bound")
    ver.add_argument("--failures-only", action="store_true")
    return p


def _levi(rs: RootSystem, given: str) -> LeviSubalgebra:
    if given.strip().isdigit():
        levis = enumerate_simple_levis(rs)
        idx = int(given)
        if not 0 <= idx < len(levis):
            raise UsageError(f"Levi index {idx} out of range (0..{len(levis) - 1})")
        return levis[idx]
    return levi_from_generators(rs, parse_roots(rs, given))


def _weight(rs: RootSystem, args) -> tuple[int, ...]:
    if getattr(args, "current", None):
        psi = current_weight(rs, parse_current(args.current, rs.rank))
        return rs.labels(wt(psi))
    lam = parse_labels(args.weight, rs.rank)
    if any(c < 0 for c in lam):
        raise UsageError(f"weight {args.weight} is not dominant")
    return lam


def _levi_dict(a: LeviSubalgebra) -> dict:
    return {"name": a.name, "type": a.type_name,
            "components": [{"type": c.name, "simple_roots": [format_root(b) for b in c.simple_roots]}
                           for c in a.components],
            "simple_root_generated": a.is_simple_root_generated}


def _consts(rs: RootSystem, d) -> list[dict]:
    items = sorted(((rs.labels(w), m) for w, m in d.items()), key=lambda t: (-sum(t[0]), t[0]))
    return [{"weight": format_labels(l), "multiplicity": m} for l, m in items]


def _text_consts(consts: list[dict]) -> list[str]:
    return [f"V({c['weight']}) x {c['multiplicity']}" for c in consts]


def _run(args) -> tuple[dict, list[str], int]:
    """Returns (json document, text lines, exit code)."""
    if args.command == "verify":
        return _verify(args)
    rs = parse_system_name(args.g)
    if args.command == "rootsys":
        doc = {"g": rs.name, "rank": rs.rank,
               "simple_roots": [format_root(a) for a in rs.simple_roots],
               "positive_roots": [format_root(a) for a in rs.positive_roots],
               "fundamental_weights": [format_eps(w) for w in rs.fundamental_weights],
               "cartan": [list(r) for r in rs.cartan],
               "weyl_group_order": rs.weyl_group_order}
        text = [f"{rs.name}: rank {rs.rank}, {len(rs.positive_roots)} positive roots, |W| = {rs.weyl_group_order}",
                "simple roots: " + ", ".join(doc["simple_roots"]),
                "positive roots: " + ", ".join(doc["positive_roots"])]
        text += [f"omega_{i + 1} = {w}" for i, w in enumerate(doc["fundamental_weights"])]
        text += ["cartan: " + " ".join(format_labels(r) for r in rs.cartan)]
        return doc, text, 0
    if args.command == "levi":
        if args.action == "enumerate":
            levis = enumerate_simple_levis(rs)
            doc = {"g": rs.name, "levis": [_levi_dict(a) for a in levis]}
            text = [f"{i}: {a.type_name} [{a.name}]" + ("" if a.is_simple_root_generated else " *")
                    for i, a in enumerate(levis)]
            return doc, text, 0
        a = levi_from_generators(rs, parse_roots(rs, args.roots))
        doc = {"g": rs.name, "levi": _levi_dict(a)}
        text = [f"type {a.type_name}"] + [f"{c.name}: " + ", ".join(format_root(b) for b in c.simple_roots)
                                          for c in a.components]
        return doc, text, 0

    if args.command in ("weyl-char", "weyl-dim"):
        lam = _weight(rs, args)
        if args.command == "weyl-dim":
            d = local_weyl_dim(rs, lam)
            desc = global_weyl_descriptor(rs, lam)
            doc = {"g": rs.name, "weight": format_labels(lam), "dimension": d,
                   "variables": [{"node": i, "multiplicity": m} for i, m in desc.variable_multiplicities]}
            return doc, [str(d)], 0
        char = local_weyl_character(rs, lam)
        consts = _consts(rs, decompose(rs, char))
        doc = {"g": rs.name, "weight": format_labels(lam), "dimension": char.mass, "constituents": consts}
        return doc, _text_consts(consts) + [f"dimension {char.mass}"], 0

    a = _levi(rs, args.levi)
    if args.command == "project":
        if args.current:
            psi = current_weight(rs, parse_current(args.current, rs.rank))
            image = project_current_weight(a, psi)
            lab = image.ambient.labels
            entries = {p: lab(w) for p, w in image.entries.items()}
            doc = {"g": rs.name, "levi": a.name, "current": format_current(entries),
                   "weight": format_labels(a.project(wt(psi)))}
            return doc, [doc["current"] or "(empty)"], 0
        lam = _weight(rs, args)
        tau = a.project(rs.from_labels(lam))
        doc = {"g": rs.name, "levi": a.name, "weight": format_labels(tau),
               "components": [format_labels(x) for x in a.split(tau)]}
        return doc, [doc["weight"]], 0
    lam = _weight(rs, args)
    if args.command == "admissible":
        v = classify_pair(a, lam)
        doc = v.as_dict()
        text = [f"globally admissible: {str(v.globally).lower()}",
                f"locally admissible: {str(v.locally).lower()}"]
        text += [f"component {r.component} omega_{r.k}: {r.projection} ({r.case.value})" for r in v.reasons]
        return doc, text, 0
    # branch
    consts = _consts(a.levi_system, branching_multiplicities(rs, lam, a))
    doc = {"g": rs.name, "levi": a.name, "levi_type": a.type_name, "weight": format_labels(lam),
           "constituents": consts}
    return doc, _text_consts(consts), 0


def _verify(args) -> tuple[dict, list[str], int]:
    if args.g:
        systems = tuple(parse_system_name(g).blocks[0] for g in args.g)
    else:
        systems = tuple(s for s in DEFAULT_SYSTEMS if s[1] <= args.max_rank)
    cfg = SweepConfig(systems=systems, max_sum=args.max_sum, checks=VERIFY_TARGETS[args.target],
                      admissibility_max_sum=args.admissibility_max_sum, surjectivity_bound=args.bound)
    reports = sweep(cfg)
    counts = summarize(reports)
    shown = [r for r in reports if r.status == "fail"] if args.failures_only else reports
    doc = {"summary": counts, "reports": [r.as_dict() for r in shown]}
    text = [f"{r.status.upper():7} {r.check} {r.g} [{r.levi}] lambda={r.lam} "
            f"expected={json.dumps(r.expected, sort_keys=True)} computed={json.dumps(r.computed, sort_keys=True)}"
            + (f" ({r.reason})" if r.reason else "") for r in shown]
    text.append(f"pass {counts['pass']}  fail {counts['fail']}  skipped {counts['skipped']}")
    return doc, text, 1 if counts["fail"] else 0


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        fmt = getattr(args, "format", None) or os.environ.get(FORMAT_ENV, "text")
        if fmt not in ("text", "json"):
            raise UsageError(f"${FORMAT_ENV} must be text or json, got {fmt!r}")
        doc, text, code = _run(args)
    except (UsageError, LeviWeylError) as exc:
        print(f"leviweyl: error: {exc}", file=stderr)
        return 2
    out = json.dumps(doc, sort_keys=True, indent=2) + "\n" if fmt == "json" else "\n".join(text) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
