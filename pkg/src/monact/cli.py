"""The monact command line tool.

Parses monoid/act files, runs analyses and classifiers, emits JSON reports
and DOT Cayley graphs, and runs the built-in verification battery.

Exit codes: 0 success, 1 property failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .core import (
    Act,
    Category,
    Monoid,
    acto_view,
    is_isomorphic,
    make_act,
    validate_monoid,
    viewed,
    zero_set,
)
from .constructions import (
    coproduct,
    functor_F_mor,
    functor_F_obj,
    product,
    substantial_summand,
)
from .classifiers import (
    FAILS,
    acc_cyclic_subacts_report,
    is_left_0perfect,
    is_left_0steady,
    is_left_perfect,
    is_left_steady,
)
from .enumeration import enumerate_acts, enumerate_monoids_with_zero_upto
from .errors import (
    MonactError,
    ParseError,
    UnknownAct,
    UnknownMonoid,
)
from .fixtures import act_b, fixture_workspace, s2
from .projectivity import is_projective, projective_cover
from .core import enumerate_homs, subact_as_act, theta_act
from .structure import (
    decompose,
    is_cyclic,
    is_hollow,
    is_locally_cyclic,
    is_superfluous,
)

SCHEMA = 1


@dataclass
class Workspace:
    monoids: dict[str, Monoid] = field(default_factory=dict)
    acts: dict[str, Act] = field(default_factory=dict)
    bounds: dict[str, int] = field(default_factory=dict)

    def monoid(self, name: str) -> Monoid:
        if name not in self.monoids:
            raise UnknownMonoid(name)
        return self.monoids[name]

    def act(self, name: str) -> Act:
        if name not in self.acts:
            raise UnknownAct(name)
        return self.acts[name]


# ---------------------------------------------------------------------------
# file format


def parse_file(text: str, workspace: Workspace) -> None:
    """Parse a file of monoid/act blocks into the workspace."""
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        head = lines[i].split()
        if head[0] == "monoid":
            i = _parse_monoid_block(lines, i, workspace)
        elif head[0] == "act":
            i = _parse_act_block(lines, i, workspace)
        else:
            raise ParseError(f"expected 'monoid' or 'act', got {head[0]!r}",
                             i + 1)


def _expect(lines, i, key):
    if i >= len(lines):
        raise ParseError(f"missing {key!r} line", len(lines))
    line = lines[i].strip()
    if not line.startswith(key):
        raise ParseError(f"expected {key!r}", i + 1)
    return line[len(key):].strip()


def parse_monoid_file(text: str) -> Monoid:
    ws = Workspace()
    parse_file(text, ws)
    if len(ws.monoids) != 1 or ws.acts:
        raise ParseError("expected exactly one monoid block", 1)
    return next(iter(ws.monoids.values()))


def _parse_monoid_block(lines, i, workspace) -> int:
    head = lines[i].split()
    if len(head) != 2:
        raise ParseError("usage: monoid <name>", i + 1)
    name = head[1]
    labels = _expect(lines, i + 1, "elements:").split()
    if not labels:
        raise ParseError("empty element list", i + 2)
    one_lbl = _expect(lines, i + 2, "one:")
    zero_lbl = _expect(lines, i + 3, "zero:")
    _expect(lines, i + 4, "table:")
    pos = {lbl: k for k, lbl in enumerate(labels)}
    if one_lbl not in pos:
        raise ParseError(f"unknown element {one_lbl!r}", i + 3)
    if zero_lbl not in pos:
        raise ParseError(f"unknown element {zero_lbl!r}", i + 4)
    table = []
    for r in range(len(labels)):
        ln = i + 5 + r
        if ln >= len(lines):
            raise ParseError("table row missing", len(lines))
        row = lines[ln].split()
        if len(row) != len(labels):
            raise ParseError(
                f"table row has {len(row)} entries, expected {len(labels)}",
                ln + 1)
        for col, entry in enumerate(row):
            if entry not in pos:
                raise ParseError(f"unknown element {entry!r}", ln + 1,
                                 col + 1)
        table.append([pos[entry] for entry in row])
    workspace.monoids[name] = validate_monoid(labels, table, pos[one_lbl],
                                              pos[zero_lbl])
    return i + 5 + len(labels)


def parse_act_file(text: str, workspace: Workspace) -> Act:
    before = set(workspace.acts)
    parse_file(text, workspace)
    new = [n for n in workspace.acts if n not in before]
    if len(new) != 1:
        raise ParseError("expected exactly one act block", 1)
    return workspace.acts[new[0]]


def _parse_act_block(lines, i, workspace) -> int:
    head = lines[i].split()
    if len(head) != 6 or head[2] != "over" or head[4] != "category":
        raise ParseError(
            "usage: act <name> over <monoid> category <acto|act0>", i + 1)
    name, monoid_name, cat = head[1], head[3], head[5]
    if cat not in ("acto", "act0"):
        raise ParseError(f"unknown category {cat!r}", i + 1)
    category = Category(cat)
    monoid = workspace.monoid(monoid_name)
    labels = _expect(lines, i + 1, "elements:").split()
    j = i + 2
    zero = None
    if category is Category.ACT0:
        zero_lbl = _expect(lines, j, "zero:")
        if zero_lbl not in labels:
            raise ParseError(f"unknown element {zero_lbl!r}", j + 1)
        zero = labels.index(zero_lbl)
        j += 1
    _expect(lines, j, "table:")
    j += 1
    pos = {lbl: k for k, lbl in enumerate(labels)}
    table = []
    for r in range(monoid.size):
        ln = j + r
        if ln >= len(lines):
            raise ParseError("table row missing", len(lines))
        row = lines[ln].split()
        if len(row) != len(labels):
            raise ParseError(
                f"table row has {len(row)} entries, expected {len(labels)}",
                ln + 1)
        for col, entry in enumerate(row):
            if entry not in pos:
                raise ParseError(f"unknown element {entry!r}", ln + 1,
                                 col + 1)
        table.append([pos[entry] for entry in row])
    workspace.acts[name] = make_act(monoid, labels, table, category, zero)
    return j + monoid.size


def print_monoid(name: str, m: Monoid) -> str:
    out = [f"monoid {name}",
           "elements: " + " ".join(m.labels),
           f"one: {m.labels[m.one]}",
           f"zero: {m.labels[m.zero]}",
           "table:"]
    for row in m.mul:
        out.append(" ".join(m.labels[v] for v in row))
    return "\n".join(out) + "\n"


def print_act(name: str, monoid_name: str, a: Act) -> str:
    out = [f"act {name} over {monoid_name} category {a.category.value}",
           "elements: " + " ".join(a.labels)]
    if a.category is Category.ACT0:
        out.append(f"zero: {a.labels[a.zero]}")
    out.append("table:")
    for row in a.action:
        out.append(" ".join(a.labels[v] for v in row))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_dot(act: Act, name: str) -> str:
    """Cayley digraph, unit loops omitted; a self-loop is kept only when its
    node has no other incident edge, so lone fixed points still show their
    action."""
    m = act.monoid
    edges = []
    for a in act.elements():
        for s in m.elements():
            if s == m.one:
                continue
            edges.append((a, act.action[s][a], s))
    nonloop = [(a, b, s) for a, b, s in edges if a != b]
    touched = {a for a, b, _ in nonloop} | {b for _, b, _ in nonloop}
    kept = nonloop + [(a, b, s) for a, b, s in edges
                      if a == b and a not in touched]
    kept.sort()
    lines = [f'digraph "{name}" {{']
    for a in act.elements():
        lines.append(f'  "{act.labels[a]}";')
    for a, b, s in kept:
        lines.append(f'  "{act.labels[a]}" -> "{act.labels[b]}" '
                     f'[label="{m.labels[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_analyze(act: Act, category: Category) -> dict:
    a = viewed(act, category)
    report = {"schema": SCHEMA, "category": category.value}
    report["zero_set"] = list(zero_set(a).label_set())
    gen = is_cyclic(a)
    report["cyclic"] = a.labels[gen] if gen is not None else None
    report["locally_cyclic"] = is_locally_cyclic(a)
    report["hollow"] = is_hollow(a, category)
    comps = decompose(a, category).components
    report["decomposition"] = [list(c.label_set()) for c in comps]
    cert = is_projective(a, category)
    if cert is None:
        report["projective"] = None
    else:
        report["projective"] = [
            {"component": list(comp.label_set()),
             "idempotent": a.monoid.labels[e]}
            for comp, e, _ in cert.parts]
    sub = substantial_summand(acto_view(a))
    report["substantial_summand"] = {
        "substantial": list(sub.substantial.label_set()),
        "discrete_zeros": sorted(acto_view(a).labels[i]
                                 for i in sub.discrete_zeros),
    }
    return report


def cmd_cover(act: Act, category: Category, size_bound=None) -> dict:
    a = viewed(act, category)
    cover = projective_cover(a, category, size_bound)
    if cover is None:
        return {"schema": SCHEMA, "found": False,
                "note": "none within bound"}
    p = cover.epi.source
    return {
        "schema": SCHEMA,
        "found": True,
        "domain": {"elements": list(p.labels)},
        "epi": {p.labels[x]: a.labels[cover.epi(x)] for x in p.elements()},
    }


def cmd_classify(monoid: Monoid, bounds: dict) -> dict:
    pb = bounds.get("perfect_act_size", 4)
    sb = bounds.get("steady_act_size", 5)
    reports = [
        is_left_perfect(monoid, pb),
        is_left_0perfect(monoid, pb),
        acc_cyclic_subacts_report(monoid, pb),
        is_left_steady(monoid, sb),
        is_left_0steady(monoid, sb),
    ]
    return {"schema": SCHEMA, "properties": [
        {"property": r.property, "verdict": r.verdict, "bounds": r.bounds,
         "witnesses": len(r.witnesses),
         "details": {k: v for k, v in r.details.items()
                     if not isinstance(v, dict)}}
        for r in reports]}


def cmd_enumerate(args, workspace: Workspace) -> dict:
    if args.what == "monoids":
        mons = enumerate_monoids_with_zero_upto(args.size)
        return {"schema": SCHEMA, "count": len(mons), "monoids": [
            {"elements": list(m.labels), "table": [list(r) for r in m.mul]}
            for m in mons]}
    monoid = workspace.monoid(args.monoid)
    acts = enumerate_acts(monoid, args.size, Category(args.category))
    return {"schema": SCHEMA, "count": len(acts), "acts": [
        {"elements": list(a.labels), "table": [list(r) for r in a.action]}
        for a in acts]}


# ---------------------------------------------------------------------------
# the verification battery


def _check_not_faithful(bounds):
    m = s2()
    a1 = theta_act(m, Category.ACTO)
    a2 = coproduct(Category.ACTO, [a1, a1]).act
    n_o = len(enumerate_homs(a1, a2, Category.ACTO))
    f1, _ = functor_F_obj(a1)
    f2, _ = functor_F_obj(a2)
    n_0 = len(enumerate_homs(f1, f2, Category.ACT0))
    return (n_o, n_0) == (2, 1), f"hom counts {n_o} -> {n_0}"


def _check_not_left_exact(bounds):
    b = act_b()
    fbb, _ = functor_F_obj(product(Category.ACTO, [b, b]))
    fb, _ = functor_F_obj(b)
    prod_f = product(Category.ACT0, [fb, fb])
    return (fbb.size, prod_f.size) == (6, 4), \
        f"sizes {fbb.size} vs {prod_f.size}"


def _sweep_monoids(bounds):
    return enumerate_monoids_with_zero_upto(bounds.get("monoid_size", 3))


def _check_coproducts(bounds):
    import itertools
    part_size = bounds.get("part_size", 3)
    family = bounds.get("family_size", 3)
    checked = 0
    for m in _sweep_monoids(bounds):
        pool = [a for a in enumerate_acts(m, part_size, Category.ACTO)
                if a.size > 0]
        for k in range(1, family + 1):
            for parts in itertools.combinations_with_replacement(pool, k):
                lhs, _ = functor_F_obj(coproduct(Category.ACTO,
                                                 list(parts)).act)
                rhs = coproduct(Category.ACT0,
                                [functor_F_obj(p)[0] for p in parts]).act
                if is_isomorphic(lhs, rhs) is None:
                    return False, f"family of sizes {[p.size for p in parts]}"
                checked += 1
    return True, f"{checked} families"


def _check_projectivity_preserved(bounds):
    act_size = bounds.get("act_size", 3)
    proj_checked = cover_checked = 0
    for m in _sweep_monoids(bounds):
        for a in enumerate_acts(m, act_size, Category.ACTO):
            if a.size == 0:
                continue
            fa, _ = functor_F_obj(a)
            if is_projective(a, Category.ACTO) is not None:
                proj_checked += 1
                if is_projective(fa, Category.ACT0) is None:
                    return False, f"F drops projectivity on {a}"
            cover = projective_cover(a, Category.ACTO)
            if cover is not None:
                cover_checked += 1
                ff = functor_F_mor(cover.epi)
                from .projectivity import is_cover as _is_cover
                if _is_cover(ff) is None or \
                        is_projective(ff.source, Category.ACT0) is None:
                    return False, f"F drops the cover of {a}"
    return True, f"{proj_checked} projectives, {cover_checked} covers"


def _check_unique_zero(bounds):
    act_size = bounds.get("act_size", 3)
    for m in _sweep_monoids(bounds):
        for a in enumerate_acts(m, act_size, Category.ACTO):
            if a.size and is_cyclic(a) is not None:
                if len(zero_set(a).members) != 1:
                    return False, f"cyclic act with several zeros: {a}"
    return True, "no cyclic act with several zeros"


def _check_substantial(bounds):
    act_size = bounds.get("act_size", 3)
    count = 0
    for m in _sweep_monoids(bounds):
        for a in enumerate_acts(m, act_size, Category.ACTO):
            if a.size == 0:
                continue
            substantial_summand(a)  # asserts the reconstruction iso
            count += 1
    return True, f"{count} reconstructions"


def _check_hollow_lemma(bounds):
    act_size = bounds.get("act_size", 3)
    for m in _sweep_monoids(bounds):
        for a in enumerate_acts(m, act_size, Category.ACTO):
            if a.size == 0:
                continue
            if not is_superfluous(a, zero_set(a)):
                continue
            fa, _ = functor_F_obj(a)
            if is_hollow(a, Category.ACTO) != is_hollow(fa, Category.ACT0):
                return False, f"biconditional fails on {a}"
    return True, "biconditional holds where 0A is superfluous"


def _check_preim_cyclic(bounds):
    act_size = bounds.get("act_size", 3)
    for m in _sweep_monoids(bounds):
        for a in enumerate_acts(m, act_size, Category.ACTO):
            if a.size == 0:
                continue
            fa, _ = functor_F_obj(a)
            if fa.size > 1 and is_cyclic(fa) is not None:
                sub = substantial_summand(a)
                sub_act, _ = subact_as_act(sub.substantial)
                if is_cyclic(sub_act) is None:
                    return False, f"substantial summand of {a} not cyclic"
    return True, "preimages of cyclic acts are cyclic up to zeros"


def _check_char_0perfect(bounds):
    pb = bounds.get("perfect_act_size", 3)
    for m in _sweep_monoids(bounds):
        r1 = is_left_perfect(m, pb)
        r2 = is_left_0perfect(m, pb)
        if r1.verdict == FAILS or r2.verdict == FAILS or \
                r1.verdict != r2.verdict:
            return False, f"{m}: {r1.verdict} vs {r2.verdict}"
    return True, "perfect and 0-perfect verdicts coincide"


def _check_char_0steady(bounds):
    sb = bounds.get("steady_act_size", 4)
    for m in _sweep_monoids(bounds):
        r = is_left_0steady(m, sb)
        if r.verdict == FAILS or not r.details.get("acc_agrees"):
            return False, f"{m}: {r.verdict}"
    return True, "0-steadiness matches the a.c.c. characterization"


CHECKS = [
    ("F_not_faithful", _check_not_faithful),
    ("F_not_left_exact", _check_not_left_exact),
    ("F_preserves_coproducts", _check_coproducts),
    ("F_preserves_projectivity_and_covers", _check_projectivity_preserved),
    ("unique_zero_of_cyclic", _check_unique_zero),
    ("substantial_summand_reconstruction", _check_substantial),
    ("hollow_biconditional", _check_hollow_lemma),
    ("preimage_of_cyclic", _check_preim_cyclic),
    ("char_0perfect", _check_char_0perfect),
    ("char_0steady", _check_char_0steady),
]


def cmd_verify_paper(bounds: dict, out=None) -> int:
    out = out if out is not None else sys.stdout
    failures = 0
    for name, check in CHECKS:
        ok, detail = check(bounds)
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}: {detail}", file=out)
        if not ok:
            failures += 1
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="monact",
        description="workbench for finite monoids with zero and their acts")
    p.add_argument("--json", action="store_true",
                   help="emit JSON where a command has a plain-text default")
    p.add_argument("--bounds", action="append", default=[], metavar="K=V",
                   help="sweep bounds, e.g. --bounds monoid_size=3")
    p.add_argument("--seed-fixtures", action="store_true",
                   help="preload the built-in S2/ActA/ActB/ActW/Theta")
    p.add_argument("-f", "--file", action="append", default=[],
                   help="monoid/act file to load (repeatable)")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", help="validate all loaded files")

    pa = sub.add_parser("analyze", help="structural report for one act")
    pa.add_argument("act")
    pa.add_argument("--category", choices=["acto", "act0"], default=None)

    pf = sub.add_parser("functor-f", help="apply the gluing functor")
    pf.add_argument("act")

    pc = sub.add_parser("cover", help="search a projective cover")
    pc.add_argument("act")
    pc.add_argument("--category", choices=["acto", "act0"], default=None)
    pc.add_argument("--size-bound", type=int, default=None)

    pk = sub.add_parser("classify", help="monoid-level verdicts")
    pk.add_argument("monoid")

    pe = sub.add_parser("enumerate", help="exhaustive enumerations")
    pe.add_argument("what", choices=["monoids", "acts"])
    pe.add_argument("--size", type=int, required=True)
    pe.add_argument("--monoid", default=None)
    pe.add_argument("--category", choices=["acto", "act0"], default="acto")

    sub.add_parser("verify-paper", help="run the verification battery")

    pd = sub.add_parser("dot", help="Cayley graph in DOT format")
    pd.add_argument("act")
    return p


def _parse_bounds(pairs) -> dict:
    bounds = {}
    for pair in pairs:
        if "=" not in pair:
            raise MonactError(f"bad bound {pair!r}, expected k=v")
        k, v = pair.split("=", 1)
        bounds[k.strip()] = int(v)
    return bounds


def _category_of(act: Act, override) -> Category:
    if override is None:
        return act.category
    return Category(override)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        bounds = _parse_bounds(args.bounds)
        ws = Workspace(bounds=bounds)
        if args.seed_fixtures:
            fx = fixture_workspace()
            ws.monoids.update(fx["monoids"])
            ws.acts.update(fx["acts"])
        for path in args.file:
            with open(path, encoding="utf-8") as fh:
                parse_file(fh.read(), ws)

        if args.command == "validate":
            for name in ws.monoids:
                print(f"monoid {name}: ok")
            for name in ws.acts:
                print(f"act {name}: ok")
            return 0
        if args.command == "analyze":
            act = ws.act(args.act)
            cat = _category_of(act, args.category)
            print(json.dumps(cmd_analyze(act, cat), ensure_ascii=False,
                             indent=2))
            return 0
        if args.command == "functor-f":
            act = ws.act(args.act)
            fa, pi = functor_F_obj(acto_view(act))
            out = {"schema": SCHEMA,
                   "elements": list(fa.labels),
                   "table": [list(r) for r in fa.action],
                   "projection": {act.labels[a]: fa.labels[pi(a)]
                                  for a in act.elements()}}
            print(json.dumps(out, ensure_ascii=False, indent=2))
            return 0
        if args.command == "cover":
            act = ws.act(args.act)
            cat = _category_of(act, args.category)
            print(json.dumps(cmd_cover(act, cat, args.size_bound),
                             ensure_ascii=False, indent=2))
            return 0
        if args.command == "classify":
            print(json.dumps(cmd_classify(ws.monoid(args.monoid), bounds),
                             ensure_ascii=False, indent=2))
            return 0
        if args.command == "enumerate":
            if args.what == "acts" and args.monoid is None:
                raise MonactError("enumerate acts needs --monoid")
            print(json.dumps(cmd_enumerate(args, ws), ensure_ascii=False,
                             indent=2))
            return 0
        if args.command == "verify-paper":
            return cmd_verify_paper(bounds)
        if args.command == "dot":
            print(cmd_dot(ws.act(args.act), args.act), end="")
            return 0
        raise MonactError(f"unhandled command {args.command!r}")
    except MonactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
