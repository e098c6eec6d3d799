"""Command line entry point: ``frontcalc <command> ...``.

Arguments naming a front, pattern or trace accept either a file path or the
name of a corpus entry.  Exit status is 0 on success, 1 when a verification
fails and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus as _corpus
from .claims import ClaimError, infer, parse_graph
from .cobordism import CobordismTrace, TraceError, compose, parse_documents
from .dga import build_dga, check_d_squared, find_augmentations
from .front import FrontDiagram, FrontError, OrientedFront, classical_invariants, orient
from .ops import Pattern, cusp_connect_sum, full_twist, parse_pattern, satellite, stabilize, torus_front
from .render import render_svg
from .scenario import run_scenario_theorem1
from .smooth import BudgetExceeded, jones, resolve


class UsageError(Exception):
    pass


def _documents(arg: str) -> dict:
    entries = _corpus.load_corpus()
    if os.path.exists(arg):
        with open(arg) as fh:
            text = fh.read()
        known = {n: e.item.front for n, e in entries.items() if e.kind == "front"}
        docs = parse_documents(text, known)
        if not docs:
            raise UsageError(f"{arg}: no front, pattern or trace block")
        return docs
    if arg in entries:
        e = entries[arg]
        return {arg: e.item.front if e.kind == "front" else e.item}
    raise UsageError(f"{arg}: no such file or corpus entry")


def _pick(arg: str, kind: type):
    for item in _documents(arg).values():
        if kind is Pattern and isinstance(item, str):
            return parse_pattern(item)
        if isinstance(item, kind):
            return orient(item) if kind is FrontDiagram else item
    raise UsageError(f"{arg}: contains no {kind.__name__}")


def _front(arg: str) -> OrientedFront:
    return _pick(arg, FrontDiagram)


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def emit(self, line: str, **data):
        self.lines.append(line)
        self.data.update(data)

    def flush(self):
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
        else:
            for ln in self.lines:
                print(ln)


def _front_out(out: _Out, f: OrientedFront):
    inv = classical_invariants(f)
    out.emit(f.front.text().rstrip("\n"), front=f.front.text(), name=f.name)
    out.emit(f"tb {inv.tb} rot {inv.rot} components {inv.components}", tb=inv.tb, rot=inv.rot, components=inv.components)


def cmd_invariants(a, out):
    f = _front(a.file)
    inv = classical_invariants(f)
    out.emit(f"name {f.name or '-'}", name=f.name)
    for key in ("tb", "rot", "components", "crossings", "left_cusps", "right_cusps", "writhe"):
        out.emit(f"{key} {getattr(inv, key)}", **{key: getattr(inv, key)})
    return 0


def cmd_stabilize(a, out):
    f = _front(a.file)
    for _ in range(a.n):
        f = stabilize(f, a.sign)
    _front_out(out, f)
    return 0


def cmd_satellite(a, out):
    f = _front(a.file)
    p = _pick(a.pattern, Pattern)
    if a.twists:
        if a.twists < 0:
            raise UsageError("negative twists give a non-Legendrian pattern")
        p = full_twist(p, a.twists)
    res = satellite(f, p)
    _front_out(out, res.front)
    return 0


def cmd_connect_sum(a, out):
    _front_out(out, cusp_connect_sum(_front(a.a), _front(a.b)))
    return 0


def cmd_torus(a, out):
    try:
        f = torus_front(a.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _front_out(out, f)
    return 0


def cmd_jones(a, out):
    f = _front(a.file)
    try:
        poly = jones(resolve(f), a.max_crossings)
    except BudgetExceeded as exc:
        out.emit(f"SKIPPED(budget): {exc}", skipped=str(exc))
        return 1
    out.emit(f"jones {poly.format_t()}", jones=poly.format_t(), trivial=poly == 1)
    return 0


def cmd_dga(a, out):
    f = _front(a.file)
    try:
        d = build_dga(f, a.max_crossings)
    except BudgetExceeded as exc:
        out.emit(f"SKIPPED(budget): {exc}", skipped=str(exc))
        return 1
    out.emit(d.text().rstrip("\n"), dga=d.text())
    verdict = check_d_squared(d)
    out.emit(f"d^2 {verdict}", d_squared=str(verdict))
    defects = d.degree_defects()
    out.emit(f"degree {'PASS' if not defects else 'FAIL'}", degree_ok=not defects)
    if a.augmentations or a.graded:
        augs = find_augmentations(d, graded=a.graded)
        kind = "graded" if a.graded else "ungraded"
        out.emit(f"augmentations {kind} {len(augs)}", augmentations=len(augs), graded=a.graded)
        for aug in augs:
            out.emit("  " + (" ".join(aug.support()) or "0"))
    return 0 if verdict and not defects else 1


def cmd_trace_check(a, out):
    t = _pick(a.file, CobordismTrace)
    try:
        s = t.summary
    except TraceError as exc:
        out.emit(f"FAIL {exc}", verdict="FAIL", error=str(exc), index=exc.index)
        return 1
    for ln in s.lines():
        out.emit(ln)
    out.data.update(summary=s.__dict__)
    out.emit("PASS", verdict="PASS")
    return 0


def cmd_trace_compose(a, out):
    try:
        t = compose(_pick(a.a, CobordismTrace), _pick(a.b, CobordismTrace))
        s = t.summary
    except TraceError as exc:
        out.emit(f"FAIL {exc}", verdict="FAIL", error=str(exc))
        return 1
    out.emit(t.text().rstrip("\n"), trace=t.text())
    for ln in s.lines():
        out.emit(ln)
    return 0


def cmd_claims_run(a, out):
    with open(a.file) as fh:
        text = fh.read()
    blocks, records = [], []
    inside = False
    for line in text.split("\n"):
        word = line.split("#", 1)[0].split()[:1]
        if not inside and word and word[0] in ("front", "trace", "pattern"):
            inside = True
        (blocks if inside else records).append(line)
        if inside and word == ["end"]:
            inside = False
    entries = _corpus.load_corpus()
    traces = {n: e.item for n, e in entries.items() if e.kind == "trace"}
    known = {n: e.item.front for n, e in entries.items() if e.kind == "front"}
    traces.update({n: d for n, d in parse_documents("\n".join(blocks), known).items() if isinstance(d, CobordismTrace)})
    g = infer(parse_graph("\n".join(records), traces))
    out.emit(g.text().rstrip("\n"), graph=g.text())
    return 0


def cmd_scenario(a, out):
    r = run_scenario_theorem1(_pick(a.seed, CobordismTrace), a.n)
    for ln in r.lines():
        out.emit(ln)
    out.data.update(r.as_dict())
    return 0 if r.passed else 1


def cmd_render(a, out):
    try:
        item = _pick(a.file, FrontDiagram)
    except UsageError:
        item = _pick(a.file, Pattern)
    svg = render_svg(item)
    with open(a.svg, "w") as fh:
        fh.write(svg)
    out.emit(f"wrote {a.svg}", path=a.svg, bytes=len(svg))
    return 0


def cmd_corpus_verify(a, out):
    checks = _corpus.verify_corpus()
    for c in checks:
        out.emit(c.line())
    ok = all(c.passed for c in checks)
    out.data.update(checks=[{"entry": c.entry, "key": c.key, "passed": c.passed} for c in checks], verdict="PASS" if ok else "FAIL")
    out.emit(f"{'PASS' if ok else 'FAIL'} {sum(c.passed for c in checks)}/{len(checks)} checks")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frontcalc", description="Legendrian front calculus")
    p.add_argument("--json", action="store_true", help="machine readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("stabilize")
    s.add_argument("file")
    s.add_argument("--sign", choices=["+", "-"], required=True)
    s.add_argument("--n", type=int, default=1)
    s.set_defaults(func=cmd_stabilize)

    s = sub.add_parser("satellite")
    s.add_argument("file")
    s.add_argument("--pattern", required=True)
    s.add_argument("--twists", type=int, default=0)
    s.set_defaults(func=cmd_satellite)

    s = sub.add_parser("connect-sum")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_connect_sum)

    s = sub.add_parser("torus")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_torus)

    s = sub.add_parser("jones")
    s.add_argument("file")
    s.add_argument("--max-crossings", type=int, default=None)
    s.set_defaults(func=cmd_jones)

    s = sub.add_parser("dga")
    s.add_argument("file")
    s.add_argument("--augmentations", action="store_true")
    s.add_argument("--graded", action="store_true")
    s.add_argument("--max-crossings", type=int, default=16)
    s.set_defaults(func=cmd_dga)

    t = sub.add_parser("trace").add_subparsers(dest="trace_command", required=True)
    s = t.add_parser("check")
    s.add_argument("file")
    s.set_defaults(func=cmd_trace_check)
    s = t.add_parser("compose")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_trace_compose)

    c = sub.add_parser("claims").add_subparsers(dest="claims_command", required=True)
    s = c.add_parser("run")
    s.add_argument("file")
    s.set_defaults(func=cmd_claims_run)

    c = sub.add_parser("scenario").add_subparsers(dest="scenario_command", required=True)
    s = c.add_parser("theorem1")
    s.add_argument("--seed", required=True)
    s.add_argument("--n", type=int, default=1)
    s.set_defaults(func=cmd_scenario)

    s = sub.add_parser("render")
    s.add_argument("file")
    s.add_argument("--svg", required=True)
    s.set_defaults(func=cmd_render)

    c = sub.add_parser("corpus").add_subparsers(dest="corpus_command", required=True)
    s = c.add_parser("verify")
    s.set_defaults(func=cmd_corpus_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    out = _Out(args.json)
    try:
        code = args.func(args, out)
    except (UsageError, FrontError, ClaimError, OSError, KeyError) as exc:
        print(f"frontcalc: error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
