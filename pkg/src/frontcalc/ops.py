"""Constructions on fronts: stabilisation, Legendrian satellites, twists,
cusp connected sums and the (2, n) torus knot generator."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .front import (
    Event,
    FrontDiagram,
    FrontError,
    OrientedFront,
    _build_strands,
    _step,
    format_events,
    orient,
    parse_events,
    strand_counts,
    transport_orientation,
)
from .smooth import _block_swap, full_twist_word

__all__ = [
    "Pattern",
    "SatelliteResult",
    "stabilize",
    "double_stabilize",
    "n_copy",
    "satellite",
    "whitehead_pattern",
    "trivial_pattern",
    "full_twist",
    "cusp_connect_sum",
    "torus_front",
    "parse_pattern",
]

WHITEHEAD_W0 = "L 2\nX 1\nX 3\nR 2"


def _site_check(front: FrontDiagram, site) -> tuple[int, int]:
    g, p = site
    if not (0 <= g < len(front.counts) and 1 <= p <= front.counts[g]):
        raise FrontError(f"site {site} is not a strand segment of the front")
    return g, p


def stabilize(front: OrientedFront, sign: str | int = "+", site: tuple[int, int] | None = None) -> OrientedFront:
    """Insert a zigzag at ``site``; tb drops by one and rot moves by ``sign``."""
    positive = sign in ("+", 1, "+1")
    if sign not in ("+", "-", 1, -1, "+1", "-1"):
        raise ValueError(f"sign must be + or -, got {sign!r}")
    g, p = _site_check(front.front, site or front.front.default_site)
    rightward = front.direction[(g, p)] > 0
    # a zigzag whose cusps are both traversed downwards raises rot
    zig = [Event("L", p + 1), Event("R", p)] if positive == rightward else [Event("L", p), Event("R", p + 1)]
    events = front.events[:g] + tuple(zig) + front.events[g:]
    new = FrontDiagram(events, front.name)
    return transport_orientation(front, new, lambda h: h if h <= g else h + 2)


def double_stabilize(front: OrientedFront, n: int = 1, site: tuple[int, int] | None = None) -> OrientedFront:
    """Apply ``n`` positive and ``n`` negative stabilisations."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = front
    for _ in range(n):
        out = stabilize(stabilize(out, "+", site), "-", site)
    if front.name:
        out = OrientedFront(out.front.renamed(f"S{n}({front.name})"), out.flips)
    return out


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class Pattern:
    """A Legendrian tangle in J^1([0,1]) with ``arity`` strands at both ends.

    ``Y`` events (mirrored crossings) are allowed for smooth comparison
    patterns; such patterns cannot be used for Legendrian satellites.
    """

    arity: int
    events: tuple[Event, ...] = ()
    name: str | None = None

    def __post_init__(self):
        if self.arity < 1:
            raise FrontError("pattern arity must be at least 1")
        evs = tuple(Event(k, i) for k, i in self.events)
        object.__setattr__(self, "events", evs)
        counts = strand_counts(evs, self.arity, floor=1)
        if counts[-1] != self.arity:
            raise FrontError(f"pattern ends with {counts[-1]} strands, expected {self.arity}")
        self._arcs  # validates

    @property
    def legendrian(self) -> bool:
        return all(k != "Y" for k, _ in self.events)

    @property
    def crossings(self) -> int:
        return sum(1 for k, _ in self.events if k in ("X", "Y"))

    @cached_property
    def _arcs(self):
        strands = _build_strands(self.events, self.arity)
        last = len(self.events)
        ends = [("in", k) for k in range(1, self.arity + 1)] + [("out", k) for k in range(1, self.arity + 1)]
        match = {}
        for end in ends:
            if end in match:
                continue
            node, d = ((0, end[1]), 1) if end[0] == "in" else ((last, end[1]), -1)
            seen = 0
            while True:
                nxt, nd = _step(strands, node, d)
                if nxt is None:
                    break
                node, d = nxt, nd
                seen += 1
                if seen > 10 * (len(self.events) + 1) * (self.arity + 2) + 10:
                    raise FrontError("tangle strand does not terminate")
            other = ("in", node[1]) if node[0] == 0 and d < 0 else ("out", node[1])
            match[end] = other
            match[other] = end
        return match

    def boundary_matching(self) -> dict:
        """Which boundary point each boundary point is joined to inside the tangle."""
        return dict(self._arcs)

    def boundary_permutation(self) -> tuple[int, ...] | None:
        """``sigma`` with left end ``i`` joined to right end ``sigma[i-1]``,
        or ``None`` when some arc returns to the side it started from."""
        out = []
        for k in range(1, self.arity + 1):
            side, j = self._arcs[("in", k)]
            if side != "out":
                return None
            out.append(j)
        return tuple(out)

    def closure_cycles(self) -> int:
        """Components of the closure where right end ``i`` is joined to left end ``i``."""
        seen = set()
        cycles = 0
        for k in range(1, self.arity + 1):
            if ("in", k) in seen:
                continue
            cycles += 1
            end = ("in", k)
            while end not in seen:
                seen.add(end)
                other = self._arcs[end]
                seen.add(other)
                end = ("in", other[1]) if other[0] == "out" else ("out", other[1])
        closed = _closed_loops(self)
        return cycles + closed

    def text(self) -> str:
        body = format_events(self.events)
        return f"pattern {self.name or 'unnamed'} arity {self.arity}\n{body}{chr(10) if body else ''}end\n"


def _closed_loops(pattern: Pattern) -> int:
    strands = _build_strands(pattern.events, pattern.arity)
    on_arc = set()
    last = len(pattern.events)
    for k in range(1, pattern.arity + 1):
        for start, d in (((0, k), 1), ((last, k), -1)):
            node = start
            while node is not None:
                on_arc.add(node)
                node, d = _step(strands, node, d)
    seen = set(on_arc)
    loops = 0
    for g, s in enumerate(strands.counts):
        for p in range(1, s + 1):
            if (g, p) in seen:
                continue
            loops += 1
            node, d = (g, p), 1
            while node not in seen:
                seen.add(node)
                node, d = _step(strands, node, d)
    return loops


def parse_pattern(text: str, name: str | None = None, arity: int | None = None) -> Pattern:
    """Parse ``pattern <name> arity <n>`` ... ``end`` (or a bare body with ``arity``)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.split("\n")]
    idx = [k for k, ln in enumerate(lines) if ln]
    if idx and lines[idx[0]].startswith("pattern"):
        parts = lines[idx[0]].split()
        if len(parts) != 4 or parts[2] != "arity":
            raise FrontError("expected 'pattern <name> arity <n>'")
        name = name or parts[1]
        arity = int(parts[3])
        if lines[idx[-1]] != "end":
            raise FrontError("missing 'end'")
        body = "\n".join(text.split("\n")[idx[0] + 1 : idx[-1]])
    else:
        body = text
    if arity is None:
        raise FrontError("pattern arity not given")
    return Pattern(arity, tuple(parse_events(body, kinds=("L", "R", "X", "Y"))), name)


def whitehead_pattern() -> Pattern:
    """The Legendrian Whitehead clasp W0 (two hooks, one clasp, two crossings)."""
    return Pattern(2, tuple(parse_events(WHITEHEAD_W0)), "W0")


def trivial_pattern(n: int = 1) -> Pattern:
    return Pattern(n, (), f"id{n}")


def full_twist(pattern: Pattern, k: int) -> Pattern:
    """Append ``|k|`` full twists of all strands (right handed for ``k > 0``).

    Left-handed twists are written with mirrored ``Y`` crossings, so the
    result is then a smooth comparison pattern only.
    """
    if k == 0:
        return pattern
    extra = full_twist_word(1, pattern.arity, k)
    name = f"{pattern.name or 'P'}^{k:+d}"
    return Pattern(pattern.arity, pattern.events + tuple(extra), name)


# ---------------------------------------------------------------------------
# satellites


def _cusp_interleave(p: int, n: int) -> list[Event]:
    """Crossings turning ``U1 D1 U2 D2 ...`` into ``U1 .. Un D1 .. Dn``."""
    order = []
    for k in range(n):
        order += [("U", k), ("D", k)]
    out = []
    for diff in range(1, n):
        for b in range(n - diff):
            a = b + diff
            j = order.index(("D", b))
            assert order[j + 1] == ("U", a)
            order[j], order[j + 1] = order[j + 1], order[j]
            out.append(Event("X", p + j))
    return out


def _cusp_deinterleave(p: int, n: int) -> list[Event]:
    order = [("U", k) for k in range(n)] + [("D", k) for k in range(n)]
    out = []
    for diff in range(n - 1, 0, -1):
        for b in range(n - diff):
            a = b + diff
            j = order.index(("U", a))
            assert order[j + 1] == ("D", b)
            order[j], order[j + 1] = order[j + 1], order[j]
            out.append(Event("X", p + j))
    return out


def _n_copy_blocks(events: Sequence[Event], n: int) -> list[list[Event]]:
    blocks = []
    for kind, i in events:
        p = n * (i - 1) + 1
        if kind == "L":
            block = [Event("L", p + 2 * k) for k in range(n)] + _cusp_interleave(p, n)
        elif kind == "R":
            block = _cusp_deinterleave(p, n) + [Event("R", p)] * n
        else:
            block = _block_swap(p, n, "X")
        blocks.append(block)
    return blocks


def n_copy(front: FrontDiagram, n: int) -> FrontDiagram:
    """The ``n``-copy: ``n`` push-offs of the front in the Reeb direction."""
    return FrontDiagram([e for b in _n_copy_blocks(front.events, n) for e in b], f"{n}-copy")


@dataclass(frozen=True)
class SatelliteResult:
    front: OrientedFront
    companion: str | None
    pattern: str | None
    components: int


def satellite(companion: OrientedFront, pattern: Pattern, site: tuple[int, int] | None = None) -> SatelliteResult:
    """Legendrian satellite: splice ``pattern`` into the contact-framed n-copy."""
    if companion.front.n_components != 1:
        raise FrontError("satellites need a one-component companion")
    if not pattern.legendrian:
        raise FrontError(f"pattern {pattern.name!r} has mirrored crossings and is not Legendrian")
    g, p = _site_check(companion.front, site or companion.front.default_site)
    n = pattern.arity
    blocks = _n_copy_blocks(companion.events, n)
    base = n * (p - 1)
    splice = [Event(k, i + base) for k, i in pattern.events]
    events = [e for b in blocks[:g] for e in b] + splice + [e for b in blocks[g:] for e in b]
    name = f"Sigma({companion.name or '?'},{pattern.name or '?'})"
    front = orient(FrontDiagram(events, name))
    return SatelliteResult(front, companion.name, pattern.name, front.front.n_components)


def cusp_connect_sum(a: OrientedFront, b: OrientedFront) -> OrientedFront:
    """Join the last right cusp of ``a`` to the first left cusp of ``b``.

    The result keeps the orientation of ``a``; ``b`` is reversed if its
    orientation does not match across the join.
    """
    if a.front.n_components != 1 or b.front.n_components != 1:
        raise FrontError("cusp connected sum needs two knots")
    events = a.events[:-1] + b.events[1:]
    name = f"{a.name or '?'}#{b.name or '?'}"
    new = FrontDiagram(events, name)
    last = len(a.events) - 1
    return transport_orientation(a, new, lambda h: h if h < last else None)


def torus_front(n: int) -> OrientedFront:
    """Max-tb Legendrian (2, n) torus knot: n crossings between two nested cusp pairs."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"torus_front needs an odd n >= 3, got {n}")
    events = [Event("L", 1), Event("L", 1)] + [Event("X", 2)] * n + [Event("R", 1), Event("R", 1)]
    return orient(FrontDiagram(events, f"T(2,{n})"))
