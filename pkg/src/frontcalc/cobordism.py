"""Decomposable cobordisms as move scripts, replayed from the bottom end up.

A trace starts at a (possibly empty) oriented front and applies isotopy
moves, births of standard unknots and pinches.  A pinch removes a facing
pair ``R p / L p``; read upwards this is a saddle, so the surface Euler
characteristic is ``births - pinches``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .front import FrontDiagram, FrontError, OrientedFront, orient, parse_events
from .moves import MOVE_TABLE, MoveApplication, MoveError, apply_move

__all__ = [
    "TraceError",
    "CobordismTrace",
    "TraceSummary",
    "replay",
    "frames",
    "compose",
    "connect_sum_trace",
    "parse_trace",
    "parse_documents",
    "EMPTY",
]

EMPTY = "empty"


class TraceError(FrontError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"move {index}: {message}")
        self.index = index
        self.reason = message


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

    def classes(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


@dataclass(frozen=True)
class TraceSummary:
    chi: int
    births: int
    pinches: int
    isotopy_moves: int
    start_components: int
    end_components: int
    surface_connected: bool
    is_filling: bool
    is_concordance: bool
    genus: int | None
    start_tb: int
    start_rot: int
    end_tb: int
    end_rot: int

    def lines(self) -> list[str]:
        genus = "-" if self.genus is None else str(self.genus)
        return [
            f"chi {self.chi}",
            f"births {self.births} pinches {self.pinches} isotopy {self.isotopy_moves}",
            f"components {self.start_components} -> {self.end_components}",
            f"connected {str(self.surface_connected).lower()} genus {genus}",
            f"filling {str(self.is_filling).lower()} concordance {str(self.is_concordance).lower()}",
            f"ends tb {self.start_tb} -> {self.end_tb} rot {self.start_rot} -> {self.end_rot}",
        ]


@dataclass(frozen=True)
class CobordismTrace:
    start: OrientedFront
    moves: tuple[MoveApplication, ...] = ()
    name: str | None = None
    expected_end: FrontDiagram | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))

    @cached_property
    def _run(self):
        return _replay(self)

    @property
    def end(self) -> OrientedFront:
        return self._run[0]

    @property
    def summary(self) -> TraceSummary:
        return self._run[1]

    def text(self) -> str:
        src = self.start.name or (EMPTY if not self.start.events else "start")
        # moves keep the start's name, so only a declared end names the target
        dst = (self.expected_end.name if self.expected_end is not None else None) or (self.end.name if not self.moves else None) or "end"
        head = f"trace {self.name or 'unnamed'} from {src} to {dst}"
        return "\n".join([head] + [m.text() for m in self.moves] + ["end"]) + "\n"


def _replay(trace: CobordismTrace) -> tuple[OrientedFront, TraceSummary]:
    cur = trace.start
    uf = _UnionFind()
    piece = [uf.add() for _ in range(cur.front.n_components)]
    births = pinches = iso = 0
    for idx, mv in enumerate(trace.moves):
        try:
            nxt = apply_move(cur, mv)
        except MoveError as exc:
            raise TraceError(str(exc), idx) from None
        old_of = cur.front.component_of()
        new_of = nxt.front.component_of()
        new_piece: list[int | None] = [None] * nxt.front.n_components
        for g_old, g_new in _gap_pairs(cur, mv):
            for p in range(1, cur.front.counts[g_old] + 1):
                a = piece[old_of[(g_old, p)]]
                c = new_of[(g_new, p)]
                if new_piece[c] is None:
                    new_piece[c] = a
                else:
                    uf.union(new_piece[c], a)
        for c, x in enumerate(new_piece):
            if x is None:
                if mv.kind != "birth":
                    raise TraceError("component lost track of its surface piece", idx)
                new_piece[c] = uf.add()
        piece = new_piece
        if mv.kind == "birth":
            births += 1
        elif mv.kind == "pinch":
            pinches += 1
        else:
            iso += 1
        cur = nxt
    end = cur
    if trace.expected_end is not None:
        if end.front != trace.expected_end:
            raise TraceError(f"replay ends at a different front than {trace.expected_end.name or 'expected'}")
        end = OrientedFront(end.front.renamed(trace.expected_end.name), end.flips)
    chi = births - pinches
    n0, n1 = trace.start.front.n_components, end.front.n_components
    connected = uf.classes() == 1
    genus = None
    if connected:
        genus = (2 - chi - n0 - n1) // 2
    s = TraceSummary(
        chi=chi,
        births=births,
        pinches=pinches,
        isotopy_moves=iso,
        start_components=n0,
        end_components=n1,
        surface_connected=connected,
        is_filling=n0 == 0,
        is_concordance=n0 == 1 and n1 == 1 and chi == 0 and connected,
        genus=genus,
        start_tb=trace.start.tb if n0 else 0,
        start_rot=trace.start.rot if n0 else 0,
        end_tb=end.tb if n1 else 0,
        end_rot=end.rot if n1 else 0,
    )
    return end, s


def _gap_pairs(cur: OrientedFront, mv: MoveApplication):
    """Pairs (old gap, new gap) whose strands pass through a move unchanged."""
    n = len(cur.front.counts)
    if mv.kind == "swap":
        k, old = mv.site[0], 2
        new = 2
    elif mv.kind == "birth":
        k, old, new = mv.site[0], 0, 2
    elif mv.kind == "pinch":
        k, old, new = mv.site[0], 2, 0
    else:
        lhs, rhs = MOVE_TABLE[mv.name]
        k, old, new = mv.site[0], len(lhs), len(rhs)
    for g in range(n):
        if g <= k:
            yield g, g
        elif g >= k + old:
            yield g, g + new - old


def frames(trace: CobordismTrace) -> list[OrientedFront]:
    """The front before the first move and after every move."""
    out = [trace.start]
    for mv in trace.moves:
        out.append(apply_move(out[-1], mv))
    return out


def replay(trace: CobordismTrace) -> TraceSummary:
    """Replay ``trace`` and summarise the surface it traces out.

    Raises :class:`TraceError` naming the first move that does not apply.
    """
    return trace.summary


def compose(a: CobordismTrace, b: CobordismTrace, name: str | None = None) -> CobordismTrace:
    """Stack ``b`` on top of ``a``; the ends must agree event for event."""
    if a.end.front != b.start.front:
        raise TraceError(f"end of {a.name or 'first trace'} does not match start of {b.name or 'second trace'}")
    return CobordismTrace(a.start, a.moves + b.moves, name or f"{a.name}*{b.name}", b.expected_end)


def connect_sum_trace(a: CobordismTrace, b: CobordismTrace, name: str | None = None) -> CobordismTrace:
    """Filling of the cusp connected sum: ``b`` built to the right of ``a``,
    then one pinch joining the two knots."""
    for t in (a, b):
        s = t.summary
        if not s.is_filling or s.end_components != 1:
            raise TraceError(f"{t.name or 'trace'} is not a filling of a knot")
    offset = len(a.end.events)
    # the pinch needs the two facing cusps oriented alike
    flip = a.end.direction[(offset - 1, 1)] != b.end.direction[(1, 1)]
    moves = list(a.moves)
    for mv in b.moves:
        mv = mv.shifted(offset)
        if flip and mv.kind == "birth":
            mv = MoveApplication("birth", mv.site, reverse=not mv.reverse)
        moves.append(mv)
    moves.append(MoveApplication("pinch", (offset - 1, 1)))
    return CobordismTrace(a.start, moves, name or f"{a.name}#{b.name}")


# ---------------------------------------------------------------------------
# text format


def _resolve(name: str, fronts: Mapping[str, FrontDiagram]) -> FrontDiagram:
    if name == EMPTY:
        return FrontDiagram((), EMPTY)
    if name not in fronts:
        raise TraceError(f"unknown front {name!r}")
    return fronts[name].renamed(name)


def parse_trace(text: str, fronts: Mapping[str, FrontDiagram] = {}) -> CobordismTrace:
    """Parse a single ``trace <name> from <a> to <b>`` ... ``end`` block."""
    traces = [d for d in parse_documents(text, fronts).values() if isinstance(d, CobordismTrace)]
    if len(traces) != 1:
        raise TraceError(f"expected one trace, found {len(traces)}")
    return traces[0]


def parse_documents(text: str, fronts: Mapping[str, FrontDiagram] = {}) -> dict:
    """Parse every ``front`` and ``trace`` block in ``text``.

    Traces may refer to fronts defined earlier in the same text, to
    ``fronts``, or to ``empty``.
    """
    known = dict(fronts)
    out: dict = {}
    lines = text.split("\n")
    k = 0
    while k < len(lines):
        line = lines[k].split("#", 1)[0].strip()
        if not line:
            k += 1
            continue
        head = line.split()
        start = k
        k += 1
        body = []
        while k < len(lines) and lines[k].split("#", 1)[0].strip() != "end":
            body.append(lines[k])
            k += 1
        if k == len(lines):
            raise TraceError(f"line {start + 1}: block {line!r} has no 'end'")
        k += 1
        if head[0] == "front" and len(head) == 2:
            fd = FrontDiagram(parse_events("\n".join(body), line_offset=start + 1), head[1])
            known[head[1]] = fd
            out[head[1]] = fd
        elif head[0] == "trace" and len(head) == 6 and head[2] == "from" and head[4] == "to":
            src = _resolve(head[3], known)
            dst = _resolve(head[5], known) if head[5] in known or head[5] == EMPTY else None
            moves = []
            for j, ln in enumerate(body):
                ln = ln.split("#", 1)[0].strip()
                if ln:
                    try:
                        moves.append(MoveApplication.parse(ln))
                    except MoveError as exc:
                        raise TraceError(f"line {start + 2 + j}: {exc}") from None
            out[head[1]] = CobordismTrace(orient(src), tuple(moves), head[1], dst)
        elif head[0] == "pattern":
            out[head[1]] = "\n".join(lines[start:k])
        else:
            raise TraceError(f"line {start + 1}: unknown block header {line!r}")
    return out
