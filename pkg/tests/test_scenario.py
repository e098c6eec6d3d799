from frontcalc.claims import NON_REGULAR, REGULAR
from frontcalc.cobordism import CobordismTrace
from frontcalc.corpus import get_front, get_trace
from frontcalc.moves import MoveApplication
from frontcalc.scenario import run_scenario_theorem1


def test_two_stabilisations_pass():
    r = run_scenario_theorem1(get_trace("unknot-to-m946"), 2, dga=False)
    assert r.passed, r.reason
    assert r.invariants["S(L-)"] == (-5, 0)
    assert r.invariants["Sigma(S(L+))"] == (1, 0)
    assert r.status("Sigma(S(L+))", "Sigma(S(L-))") == NON_REGULAR


def test_certificates():
    r = run_scenario_theorem1(get_trace("unknot-to-m946"), 1)
    assert r.certificates["S(L-)"] == "CERTIFIED no augmentation"
    assert r.certificates["S(L+)"] == "CERTIFIED no augmentation"
    assert r.certificates["Sigma(S(L-))"].startswith("CERTIFIED augmentations")
    assert r.certificates["Sigma(S(L+))"] == "SKIPPED(budget) CITED"


def test_report_text_and_dict():
    r = run_scenario_theorem1(get_trace("unknot-to-m946"), 1, dga=False)
    lines = r.lines()
    assert lines[0] == "scenario theorem1 seed unknot-to-m946 n 1"
    assert lines[-1] == "PASS"
    d = r.as_dict()
    assert d["verdict"] == "PASS" and d["distinct"] == "DISTINCT"
    regs = {(e["from"], e["to"]): e["reg"] for e in d["edges"]}
    assert regs[("Sigma(S(L-))", "Sigma(S(L+))")] == REGULAR
    assert regs[("L-", "L+")] == REGULAR


def test_invalid_seed():
    bad = CobordismTrace(get_front("unknot"), (MoveApplication("move", (9, 1), "r1b"),), "bad")
    r = run_scenario_theorem1(bad)
    assert not r.passed and r.reason.startswith("seed invalid")


def test_filling_seed_is_rejected():
    r = run_scenario_theorem1(get_trace("m946-filling"))
    assert not r.passed and "ends must be knots" in r.reason
