"""Concordance claim graphs and regularity / ribbon inference.

Nodes are Legendrian knots with their classical invariants, a Jones
fingerprint and an optional construction record (``origin``).  Edges are
concordance claims carrying a provenance.  Statuses start at ``UNKNOWN`` and
are raised by four monotone rules:

R1  a decomposable-trace edge is REGULAR and STRONGLY-HOMOTOPY-RIBBON;
R2  a satellite-CNS edge over a REGULAR edge is REGULAR;
R3  if ``a -> b`` is STRONGLY-HOMOTOPY-RIBBON, ``a`` and ``b`` are smoothly
    DISTINCT and ``b -> a`` is also claimed, then ``b -> a`` is
    NOT-SHR-CERTIFIED and NON-REGULAR-CERTIFIED;
R4  a connectsum edge over a REGULAR edge with a trivial-cylinder companion
    is REGULAR.

Every REGULAR edge is also STRONGLY-HOMOTOPY-RIBBON.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .front import OrientedFront, classical_invariants
from .smooth import DISTINCT, INCONCLUSIVE, JONES_CROSSING_BUDGET, BudgetExceeded, jones, resolve

__all__ = [
    "ClaimError",
    "InferenceError",
    "Node",
    "Edge",
    "ClaimGraph",
    "node_from_front",
    "claim_edge",
    "infer",
    "parse_graph",
    "jones_hash",
    "PROVENANCES",
]

DECOMPOSABLE = "decomposable-trace"
INVERSION = "inversion-Thm2.1"
SATELLITE = "satellite-CNS"
CONNECTSUM = "connectsum"
PROVENANCES = (DECOMPOSABLE, INVERSION, SATELLITE, CONNECTSUM)

UNKNOWN = "UNKNOWN"
REGULAR = "REGULAR"
NON_REGULAR = "NON-REGULAR-CERTIFIED"
SHR = "STRONGLY-HOMOTOPY-RIBBON"
NOT_SHR = "NOT-SHR-CERTIFIED"


class ClaimError(ValueError):
    pass


class InferenceError(ClaimError):
    pass


def jones_hash(poly) -> str:
    return hashlib.sha256(poly.format_t().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class Node:
    """A knot in the graph.

    ``origin`` is ``(op, parent, tag)`` with ``op`` one of ``stab`` (tag is
    the stabilisation count), ``satellite`` (tag is the pattern name) or
    ``connectsum`` (tag is the companion name).
    """

    name: str
    tb: int
    rot: int
    jones: str | None = None
    origin: tuple[str, str, str] | None = None
    front: OrientedFront | None = field(default=None, compare=False, repr=False)

    def text(self) -> str:
        s = f"node {self.name} tb {self.tb} rot {self.rot}"
        if self.jones:
            s += f" jones {self.jones}"
        if self.origin:
            s += " origin " + " ".join(str(x) for x in self.origin)
        return s


def node_from_front(front: OrientedFront, name: str | None = None, origin=None, max_crossings: int | None = JONES_CROSSING_BUDGET) -> Node:
    inv = classical_invariants(front)
    try:
        jh = jones_hash(jones(resolve(front), max_crossings))
    except BudgetExceeded:
        jh = None
    return Node(name or front.name or "?", inv.tb, inv.rot, jh, origin, front)


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    provenance: str
    ref: str | None = None
    over: int | None = None
    regularity: str = UNKNOWN
    ribbon: str = UNKNOWN
    trace: object = field(default=None, compare=False, repr=False)

    def text(self) -> str:
        s = f"edge {self.src} {self.dst} prov {self.provenance}"
        if self.ref:
            s += f" ref {self.ref}"
        return s + f" reg {self.regularity} shr {self.ribbon}"


@dataclass(frozen=True)
class ClaimGraph:
    nodes: tuple[Node, ...] = ()
    edges: tuple[Edge, ...] = ()

    def node(self, name: str) -> Node:
        for n in self.nodes:
            if n.name == name:
                return n
        raise ClaimError(f"unknown node {name!r}")

    def with_node(self, node: Node) -> ClaimGraph:
        if any(n.name == node.name for n in self.nodes):
            raise ClaimError(f"node {node.name!r} already present")
        return ClaimGraph(self.nodes + (node,), self.edges)

    def find(self, src: str, dst: str, provenance: str | None = None) -> int | None:
        for k, e in enumerate(self.edges):
            if e.src == src and e.dst == dst and (provenance is None or e.provenance == provenance):
                return k
        return None

    def distinctness(self, a: str, b: str) -> str:
        na, nb = self.node(a), self.node(b)
        if na.jones and nb.jones and na.jones != nb.jones:
            return DISTINCT
        return INCONCLUSIVE

    def labels(self) -> tuple[tuple[str, str], ...]:
        return tuple((e.regularity, e.ribbon) for e in self.edges)

    def text(self) -> str:
        return "\n".join([n.text() for n in self.nodes] + [e.text() for e in self.edges]) + "\n"


def claim_edge(
    graph: ClaimGraph,
    src: str,
    dst: str,
    provenance: str,
    *,
    trace=None,
    ref: str | None = None,
) -> ClaimGraph:
    """Add the concordance claim ``src -> dst`` after checking its preconditions."""
    a, b = graph.node(src), graph.node(dst)
    if (a.tb, a.rot) != (b.tb, b.rot):
        raise ClaimError(f"tb/rot mismatch: {src} has ({a.tb}, {a.rot}), {dst} has ({b.tb}, {b.rot})")
    over = None
    if provenance == DECOMPOSABLE:
        if trace is None:
            raise ClaimError(f"{provenance} edge {src} -> {dst} needs a concordance trace")
        s = trace.summary
        if not s.is_concordance:
            raise ClaimError(f"trace {trace.name} is not a concordance")
        for node, end in ((a, trace.start), (b, trace.end)):
            if node.front is not None and node.front.front != end.front:
                raise ClaimError(f"trace {trace.name} does not end on node {node.name}")
        ref = ref or trace.name
    elif provenance in (SATELLITE, CONNECTSUM, INVERSION):
        ops = {SATELLITE: ("satellite", "stab"), CONNECTSUM: ("connectsum",), INVERSION: ("stab",)}[provenance]
        if not (a.origin and b.origin and a.origin[0] in ops and a.origin[0] == b.origin[0] and a.origin[2] == b.origin[2]):
            raise ClaimError(f"{provenance} edge {src} -> {dst} needs both nodes built by the same {'/'.join(ops)} construction")
        pa, pb = a.origin[1], b.origin[1]
        if provenance == INVERSION:
            over = graph.find(pb, pa, DECOMPOSABLE)
            if over is None:
                raise ClaimError(f"{provenance} edge {src} -> {dst} needs a decomposable-trace edge {pb} -> {pa}")
        else:
            over = graph.find(pa, pb)
            if over is None:
                raise ClaimError(f"{provenance} edge {src} -> {dst} needs an edge {pa} -> {pb}")
        ref = ref or str(a.origin[2])
    else:
        raise ClaimError(f"unknown provenance {provenance!r}")
    return ClaimGraph(graph.nodes, graph.edges + (Edge(src, dst, provenance, ref, over, trace=trace),))


# ---------------------------------------------------------------------------
# inference


def _set(edge: Edge, reg: str | None = None, shr: str | None = None) -> Edge:
    new_reg = reg or edge.regularity
    new_shr = shr or edge.ribbon
    if new_reg == REGULAR:
        new_shr = SHR if new_shr == UNKNOWN else new_shr
    clash = {edge.regularity, new_reg} >= {REGULAR, NON_REGULAR} or {edge.ribbon, new_shr} >= {SHR, NOT_SHR}
    if clash or (new_reg == REGULAR and new_shr == NOT_SHR):
        raise InferenceError(f"edge {edge.src} -> {edge.dst} derived both regular and non-regular")
    return replace(edge, regularity=new_reg, ribbon=new_shr)


def _rule(graph: ClaimGraph, edges: list[Edge], rule: str, k: int) -> Edge | None:
    e = edges[k]
    if rule == "R1" and e.provenance == DECOMPOSABLE:
        return _set(e, REGULAR, SHR)
    if rule == "R2" and e.provenance == SATELLITE and edges[e.over].regularity == REGULAR:
        return _set(e, REGULAR)
    if rule == "R4" and e.provenance == CONNECTSUM and edges[e.over].regularity == REGULAR:
        if graph.node(e.src).origin[2] == graph.node(e.dst).origin[2]:
            return _set(e, REGULAR)
    if rule == "R3" and e.src != e.dst:
        back = [f for f in edges if f.src == e.dst and f.dst == e.src and f.ribbon == SHR]
        if back and graph.distinctness(e.src, e.dst) == DISTINCT:
            return _set(e, NON_REGULAR, NOT_SHR)
    return None


def infer(graph: ClaimGraph, rng: random.Random | None = None) -> ClaimGraph:
    """Apply R1-R4 until nothing changes.

    With ``rng`` the rule applications are tried in a random order, which
    is only useful for checking that the result does not depend on it.
    Raises :class:`InferenceError` when an edge would become both regular
    and non-regular.
    """
    edges = list(graph.edges)
    tasks = [(r, k) for k in range(len(edges)) for r in ("R1", "R2", "R3", "R4")]
    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(tasks)
        for rule, k in tasks:
            new = _rule(graph, edges, rule, k)
            if new is not None and new != edges[k]:
                edges[k] = new
                changed = True
    return ClaimGraph(graph.nodes, tuple(edges))


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str, traces: Mapping[str, object] = {}) -> ClaimGraph:
    """Read ``node`` and ``edge`` lines; edges go through :func:`claim_edge`.

    Statuses in the input are ignored, since they are recomputed by
    :func:`infer`.  Decomposable edges name their trace with ``ref``.
    """
    g = ClaimGraph()
    pending = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "node":
                kv = _pairs(parts[2:])
                origin = tuple(kv["origin"]) if "origin" in kv else None
                g = g.with_node(Node(parts[1], int(kv["tb"][0]), int(kv["rot"][0]), kv.get("jones", [None])[0], origin))
            elif parts[0] == "edge":
                kv = _pairs(parts[3:])
                pending.append((lineno, parts[1], parts[2], kv["prov"][0], kv.get("ref", [None])[0]))
            else:
                raise ClaimError(f"unknown record {parts[0]!r}")
        except (KeyError, IndexError, ValueError) as exc:
            if isinstance(exc, ClaimError):
                raise ClaimError(f"line {lineno}: {exc}") from None
            raise ClaimError(f"line {lineno}: malformed record {line!r}") from None
    for lineno, src, dst, prov, ref in pending:
        trace = None
        if prov == DECOMPOSABLE and ref is not None:
            if ref not in traces:
                raise ClaimError(f"line {lineno}: unknown trace {ref!r}")
            trace = traces[ref]
        try:
            g = claim_edge(g, src, dst, prov, trace=trace, ref=ref)
        except ClaimError as exc:
            raise ClaimError(f"line {lineno}: {exc}") from None
    return g


_KEYS = {"tb": 1, "rot": 1, "jones": 1, "origin": 3, "prov": 1, "ref": 1, "reg": 1, "shr": 1}


def _pairs(tokens: Sequence[str]) -> dict[str, list[str]]:
    out = {}
    k = 0
    while k < len(tokens):
        key = tokens[k]
        if key not in _KEYS:
            raise ClaimError(f"unknown field {key!r}")
        n = _KEYS[key]
        out[key] = list(tokens[k + 1 : k + 1 + n])
        if len(out[key]) != n:
            raise ClaimError(f"field {key!r} needs {n} value(s)")
        k += 1 + n
    return out
