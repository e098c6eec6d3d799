"""End-to-end run: non-regular concordances between Whitehead doubles.

Starting from a decomposable concordance ``L- -> L+`` the runner stabilises
both ends, takes Whitehead doubles, assembles the claim graph

    L- -> L+                    decomposable trace (the seed)
    S(L-) -> S(L+)              satellite over the seed
    S(L+) -> S(L-)              inversion, existence only
    Sigma(S(L-)) -> Sigma(S(L+))  satellite with W0 over the stabilised edge
    Sigma(S(L+)) -> Sigma(S(L-))  satellite with W0 over the inversion

and runs inference.  The run passes when both doubles have tb 1 and rot 0,
their Jones polynomials differ, the forward double edge is REGULAR and the
backward one NON-REGULAR-CERTIFIED.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .claims import (
    DECOMPOSABLE,
    INVERSION,
    NON_REGULAR,
    REGULAR,
    SATELLITE,
    ClaimError,
    ClaimGraph,
    claim_edge,
    infer,
    node_from_front,
)
from .cobordism import CobordismTrace, TraceError
from .dga import DGA_CROSSING_BUDGET, build_dga, check_d_squared, find_augmentations
from .front import OrientedFront
from .ops import double_stabilize, satellite, whitehead_pattern
from .smooth import DISTINCT, BudgetExceeded

__all__ = ["ScenarioReport", "run_scenario_theorem1"]


@dataclass
class ScenarioReport:
    seed: str
    n: int
    verdict: str = "FAIL"
    reason: str = ""
    fronts: dict[str, OrientedFront] = field(default_factory=dict)
    invariants: dict[str, tuple[int, int]] = field(default_factory=dict)
    distinct: str | None = None
    certificates: dict[str, str] = field(default_factory=dict)
    graph: ClaimGraph | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def status(self, src: str, dst: str) -> str | None:
        if self.graph is None:
            return None
        k = self.graph.find(src, dst)
        return None if k is None else self.graph.edges[k].regularity

    def lines(self) -> list[str]:
        out = [f"scenario theorem1 seed {self.seed} n {self.n}"]
        for name, (tb, rot) in self.invariants.items():
            out.append(f"knot {name} tb {tb} rot {rot}")
        if self.distinct:
            out.append(f"distinct Sigma(S(L-)) Sigma(S(L+)) {self.distinct}")
        for name, cert in self.certificates.items():
            out.append(f"dga {name} {cert}")
        if self.graph is not None:
            out += [e.text() for e in self.graph.edges]
        out.append(self.verdict + (f": {self.reason}" if self.reason else ""))
        return out

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "verdict": self.verdict,
            "reason": self.reason,
            "invariants": {k: {"tb": v[0], "rot": v[1]} for k, v in self.invariants.items()},
            "distinct": self.distinct,
            "certificates": self.certificates,
            "edges": [
                {"from": e.src, "to": e.dst, "prov": e.provenance, "reg": e.regularity, "shr": e.ribbon}
                for e in (self.graph.edges if self.graph else ())
            ],
        }


def _certificate(front: OrientedFront, fillable: bool) -> str:
    """Machine check of (non)fillability via graded augmentations."""
    try:
        dga = build_dga(front, DGA_CROSSING_BUDGET)
    except BudgetExceeded:
        return "SKIPPED(budget)" + (" CITED" if fillable else "")
    if not check_d_squared(dga):
        return "FAIL(d^2)"
    count = len(find_augmentations(dga, graded=True))
    if fillable:
        return f"CERTIFIED augmentations {count}" if count else "FAIL(no augmentation)"
    return "CERTIFIED no augmentation" if count == 0 else f"FAIL(augmentations {count})"


def run_scenario_theorem1(seed: CobordismTrace, n: int = 1, dga: bool = True) -> ScenarioReport:
    report = ScenarioReport(seed.name or "seed", n)
    try:
        seed.summary
    except TraceError as exc:
        report.reason = f"seed invalid: {exc}"
        return report
    lm, lp = seed.start, seed.end
    if lm.front.n_components != 1 or lp.front.n_components != 1:
        report.reason = "seed invalid: ends must be knots"
        return report

    pattern = whitehead_pattern()
    g = ClaimGraph()
    g = g.with_node(node_from_front(lm, "L-"))
    g = g.with_node(node_from_front(lp, "L+"))
    try:
        g = claim_edge(g, "L-", "L+", DECOMPOSABLE, trace=seed)
    except ClaimError as exc:
        report.reason = f"claim_edge L- -> L+: {exc}"
        report.graph = g
        return report

    fronts = {"L-": lm, "L+": lp}
    for side in ("L-", "L+"):
        s = double_stabilize(fronts[side], n)
        fronts[f"S({side})"] = s
        g = g.with_node(node_from_front(s, f"S({side})", ("stab", side, f"S{n}")))
    for side in ("L-", "L+"):
        sat = satellite(fronts[f"S({side})"], pattern).front
        name = f"Sigma(S({side}))"
        fronts[name] = sat
        g = g.with_node(node_from_front(sat, name, ("satellite", f"S({side})", pattern.name), max_crossings=None))
    report.fronts = fronts
    report.invariants = {k: (v.tb, v.rot) for k, v in fronts.items()}

    for name in ("Sigma(S(L-))", "Sigma(S(L+))"):
        if report.invariants[name] != (1, 0):
            report.reason = f"{name} has tb, rot = {report.invariants[name]}, expected (1, 0)"
            report.graph = g
            return report

    if dga:
        for name in ("S(L-)", "S(L+)"):
            report.certificates[name] = _certificate(fronts[name], fillable=False)
        for name in ("Sigma(S(L-))", "Sigma(S(L+))"):
            report.certificates[name] = _certificate(fronts[name], fillable=True)

    try:
        g = claim_edge(g, "S(L-)", "S(L+)", SATELLITE)
        g = claim_edge(g, "S(L+)", "S(L-)", INVERSION)
        g = claim_edge(g, "Sigma(S(L-))", "Sigma(S(L+))", SATELLITE)
        g = claim_edge(g, "Sigma(S(L+))", "Sigma(S(L-))", SATELLITE)
        g = infer(g)
    except ClaimError as exc:
        report.reason = str(exc)
        report.graph = g
        return report
    report.graph = g

    report.distinct = g.distinctness("Sigma(S(L-))", "Sigma(S(L+))")
    if report.distinct != DISTINCT:
        report.reason = "ends not DISTINCT: Jones polynomials of the doubles agree"
        return report
    fwd = report.status("Sigma(S(L-))", "Sigma(S(L+))")
    back = report.status("Sigma(S(L+))", "Sigma(S(L-))")
    if fwd != REGULAR:
        report.reason = f"forward edge is {fwd}, expected {REGULAR}"
    elif back != NON_REGULAR:
        report.reason = f"backward edge is {back}, expected {NON_REGULAR}"
    elif any(c.startswith("FAIL") for c in report.certificates.values()):
        report.reason = "a DGA certificate failed"
    else:
        report.verdict = "PASS"
    return report
