"""Command line: validate, analyze, law, enumerate, survey, audit-paper.

Exit codes: 0 success, 1 semantic failure (not an AG-group, law violated,
theorem audit failed), 2 usage/parse/bound error, 3 internal invariant breach.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analysis import analysis_report
from .audit import InternalInvariantError
from .core import check_axioms
from .enumeration import MAX_ORDER, EnumerationBoundError, SearchConfig, enumerate_ag_groups
from .fixtures import audit_paper
from .laws import LawSyntaxError, EvaluationError, NamedLaw, builtin_laws, run_suite
from .mapgroup import lemma2_suite
from .survey import survey
from .tables import Permutation, TableError, parse_table, serialize_table

log = logging.getLogger("aggroup")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_table(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_table(text)
    except TableError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _cycles(images) -> str:
    return Permutation(tuple(images)).cycle_notation()


# -- validate ---------------------------------------------------------------------

def cmd_validate(args) -> tuple[int, str]:
    t = _read_table(args.path)
    report = check_axioms(t)
    d = report.to_dict()
    if args.json:
        return (EXIT_OK if report.ok else EXIT_FAIL), _dump(d)
    lines = [f"order {t.order}: " + ("AG-group" if report.ok else "not an AG-group")]
    if report.ok:
        g = report.group
        c = report.classification
        lines.append(f"left identity {g.identity}; inverses {list(g.inverse)}")
        lines.append(
            f"commutative {c.commutative}, associative {c.associative}, proper {c.proper}"
        )
        if c.commutative_witness:
            x, y = c.commutative_witness
            lines.append(f"  {x}*{y} = {g.mul(x, y)} but {y}*{x} = {g.mul(y, x)}")
    else:
        lines.extend("  " + p for p in report.problems())
    return (EXIT_OK if report.ok else EXIT_FAIL), "\n".join(lines) + "\n"


# -- analyze ----------------------------------------------------------------------

def _render_analysis(r: dict) -> str:
    out = [f"AG-group of order {r['order']}, left identity {r['identity']}"]
    c = r["classification"]
    out.append(f"  proper: {c['proper']}   commutative: {c['commutative']}   inverses: {r['inverse_map']}")
    out.append("translations:")
    for kind in ("left", "right"):
        for a, images in enumerate(r["translations"][kind]):
            out.append(f"  {kind[0].upper()}{a} = {_cycles(images)}")
    if r["translations"]["coincide"]:
        out.append("  L_a = R_a for every a")
    ls = r["left_section"]
    out.append(f"left section: order {ls['order']}, abelian {ls['abelian']}, ~ {ls['recognized']}")
    rs = r["right_section"]
    if rs["closed"]:
        out.append("right section: closed")
    else:
        w = rs["witness"]
        out.append(f"right section: not closed (R{w['a']} R{w['b']} = {w['product']})")
    mg = r["mult_group"]
    out.append(
        f"multiplication group: order {mg['order']}, abelian {mg['abelian']}, ~ {mg['recognized']}"
        + (f", isomorphic to G: {mg['isomorphic_to_G']}" if mg["isomorphic_to_G"] else "")
    )
    labels = mg["table"]["labels"]
    width = max(len(l) for l in labels)
    out.append("  " + " " * width + " | " + " ".join(l.rjust(width) for l in labels))
    for lab, row in zip(labels, mg["table"]["cayley"]):
        out.append("  " + lab.rjust(width) + " | " + " ".join(labels[k].rjust(width) for k in row))
    inn = r["inner"]
    out.append(
        f"inner mapping group: {{{', '.join(inn['elements'])}}} ~ {inn['recognized']}, normal in M(G): {inn['normal_in_mg']}"
    )
    out.append("audits:")
    a = r["audits"]
    out.append(f"  lemma1: {a['lemma1']['status']}")
    for item in a["lemma2"] + a["observations"]:
        out.append(f"  {item['name']}: {item['status']}")
    for key, item in a.items():
        if key in ("lemma1", "lemma2", "observations"):
            continue
        line = f"  {item['name']}: {item['status']}"
        if item["status"] != "pass" and item.get("detail"):
            line += f" ({item['detail']})"
        out.append(line)
    if r["discrepancies"]:
        out.append("discrepancies: " + ", ".join(r["discrepancies"]))
    return "\n".join(out) + "\n"


def cmd_analyze(args) -> tuple[int, str]:
    t = _read_table(args.path)
    report = check_axioms(t)
    if not report.ok:
        msg = _dump(report.to_dict()) if args.json else "not an AG-group:\n" + "\n".join("  " + p for p in report.problems()) + "\n"
        return EXIT_FAIL, msg
    r = analysis_report(report.group, report.to_dict())
    code = EXIT_OK if not r["discrepancies"] else EXIT_FAIL
    return code, _dump(r) if args.json else _render_analysis(r)


# -- law --------------------------------------------------------------------------

def _axioms_results(t) -> list[dict]:
    rep = check_axioms(t)
    out = []
    if rep.left_invertive is None:
        out.append({"name": "left-invertive", "law": "(a*b)*c = (c*b)*a", "status": "pass"})
    else:
        a, b, c = rep.left_invertive
        out.append({"name": "left-invertive", "law": "(a*b)*c = (c*b)*a", "status": "fail",
                    "counterexample": {"a": a, "b": b, "c": c}})
    out.append({"name": "left-identity", "law": "e*a = a",
                "status": "pass" if rep.left_identities else "fail",
                **({"identities": rep.left_identities} if rep.left_identities else {})})
    if not rep.left_identities:
        out.append({"name": "inverse", "law": "inv(a)*a = a*inv(a) = e", "status": "fail",
                    "detail": "no left identity"})
    elif rep.inverse_failure is None:
        out.append({"name": "inverse", "law": "inv(a)*a = a*inv(a) = e", "status": "pass"})
    else:
        e, x, reason = rep.inverse_failure
        out.append({"name": "inverse", "law": "inv(a)*a = a*inv(a) = e", "status": "fail",
                    "counterexample": {"a": x}, "detail": f"{reason} (e={e})"})
    return out


def cmd_law(args) -> tuple[int, str]:
    t = _read_table(args.path)
    rep = check_axioms(t)
    model = rep.group if rep.ok else t
    results: list[dict] = []
    if args.law is not None:
        try:
            nl = NamedLaw.from_text("law", args.law)
            results = [r.to_dict() for r in run_suite(model, [nl]).results]
        except LawSyntaxError as exc:
            raise UsageError(f"law syntax error: {exc}\n  {exc.text}\n  {' ' * exc.pos}^") from exc
        except EvaluationError as exc:
            raise UsageError(f"{exc} (the table is not an AG-group)") from exc
    else:
        suites = ["axioms", "lemma1", "lemma2"] if args.suite == "all" else [args.suite]
        for suite in suites:
            if suite == "axioms":
                results += [dict(r, suite="axioms") for r in _axioms_results(t)]
            elif not rep.ok:
                return EXIT_FAIL, f"suite {suite} needs an AG-group: " + "; ".join(rep.problems()) + "\n"
            elif suite == "lemma1":
                results += [dict(r.to_dict(), suite="lemma1") for r in run_suite(rep.group, builtin_laws()).results]
            else:
                results += [dict(a.to_dict(), suite="lemma2") for a in lemma2_suite(rep.group)]
    ok = all(r["status"] != "fail" for r in results)
    if args.json:
        return (EXIT_OK if ok else EXIT_FAIL), _dump({"status": "pass" if ok else "fail", "results": results})
    lines = []
    for r in results:
        name = r["name"] + (f" [{r['variant']}]" if r.get("variant") else "")
        line = f"{r['status']:>12}  {name}"
        if r.get("law"):
            line += f": {r['law']}"
        elif r.get("detail"):
            line += f": {r['detail']}"
        if "counterexample" in r:
            line += "  counterexample " + ", ".join(f"{k}={v}" for k, v in r["counterexample"].items())
        elif r["status"] == "fail" and r.get("witness"):
            line += f"  witness {r['witness']}"
        lines.append(line)
    lines.append("all pass" if ok else "FAILED")
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines) + "\n"


# -- enumerate / survey ---------------------------------------------------------------

def cmd_enumerate(args) -> tuple[int, str]:
    try:
        cfg = SearchConfig(args.order, args.proper_only, args.count_only, args.jobs, args.max_order)
    except (ValueError, EnumerationBoundError) as exc:
        raise UsageError(str(exc)) from exc
    res = enumerate_ag_groups(cfg)
    if args.count_only:
        return EXIT_OK, json.dumps({"order": res.order, "total": res.total, "proper": res.proper}) + "\n"
    if args.json:
        return EXIT_OK, _dump([[list(r) for r in t.entries] for t in res.tables])
    return EXIT_OK, "\n".join(serialize_table(t) for t in res.tables)


def cmd_survey(args) -> tuple[int, str]:
    try:
        r = survey(args.max_order, args.jobs, bound=args.bound)
    except (ValueError, EnumerationBoundError) as exc:
        raise UsageError(str(exc)) from exc
    failed = any(row["failures"] for row in r["rows"])
    code = EXIT_FAIL if failed else EXIT_OK
    if args.json:
        return code, _dump(r)
    head = f"{'n':>2} {'#':>2} {'proper':>6}  {'L_S':<10} {'M(G)':<24} {'Inn':<4} {'Inn normal':<10} audits"
    lines = [head]
    for row in r["rows"]:
        lines.append(
            f"{row['order']:>2} {row['class']:>2} {str(row['proper']):>6}  {row['left_section']:<10} "
            f"{row['mult_group']:<24} {row['inner']:<4} {str(row['inn_normal']):<10} "
            + ("pass" if not row["failures"] else "FAIL " + ",".join(row["failures"]))
        )
    lines.append("")
    lines.append(f"{'n':>2} {'total':>5} {'proper':>6} {'dihedral M(G)':>13}")
    for t in r["tallies"]:
        lines.append(f"{t['order']:>2} {t['total']:>5} {t['proper']:>6} {t['proper_with_dihedral_mult_group']:>13}")
    return code, "\n".join(lines) + "\n"


# -- audit-paper --------------------------------------------------------------------

def _render_audit(r: dict) -> str:
    out = ["published tables:"]
    for name, fx in r["fixtures"].items():
        status = "matches" if not fx["differences"] else f"{fx['differences']} cells differ (errata detected)"
        out.append(f"  {name}: {status}")
        for c in fx["cells"]:
            out.append(f"    {c['row']}*{c['col']}: printed {c['fixture']}, recomputed {c['recomputed']}  via {c['closed_form']}")
    out.append("claims:")
    for name, v in r["observations"].items():
        out.append(f"  {name}: claimed {v['claimed']}, recomputed {v['recomputed']} -> {v['verdict']}")
    out.append("theorem audits:")
    for name, t in r["theorems"].items():
        out.append(f"  {name}: " + ("all pass" if not t["failures"] else "FAIL " + ", ".join(t["failures"])))
    s = r["summary"]
    out.append(
        f"summary: theorems {'pass' if s['theorems_pass'] else 'FAIL'}; newE1 "
        f"{'exact' if s['newE1_exact'] else 'DIFFERS'}; errata: {', '.join(s['errata_detected']) or 'none'}"
    )
    return "\n".join(out) + "\n"


def cmd_audit_paper(args) -> tuple[int, str]:
    r = audit_paper()
    return r["exit_code"], _dump(r) if args.json else _render_audit(r)


# -- entry point --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no report output; exit code only")

    p = argparse.ArgumentParser(prog="aggroup", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the AG-group axioms")
    s.add_argument("path", help="table file ('-' for stdin)")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common], help="sections, M(G), Inn(G) and all audits")
    s.add_argument("path")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("law", parents=[common], help="check a law or a builtin suite")
    s.add_argument("path")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--law", help='e.g. "(a*b)*(c*d) = (a*c)*(b*d)"')
    g.add_argument("--suite", choices=["axioms", "lemma1", "lemma2", "all"])
    s.set_defaults(func=cmd_law)

    s = sub.add_parser("enumerate", parents=[common], help="AG-groups of one order up to isomorphism")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--proper-only", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--max-order", type=int, default=MAX_ORDER, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("survey", parents=[common], help="structure table for all orders up to a bound")
    s.add_argument("--max-order", type=int, default=6)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--bound", type=int, default=MAX_ORDER, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("audit-paper", parents=[common], help="recompute the published example tables and claims")
    s.set_defaults(func=cmd_audit_paper)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal invariant breached: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if not args.quiet:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            sys.stderr.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
