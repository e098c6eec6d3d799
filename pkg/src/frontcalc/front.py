"""Legendrian front diagrams encoded as event words.

A front is read left to right as a sequence of events.  Each event acts on
the strands present at that moment, numbered 1, 2, ... from the top:

* ``L i`` -- a left cusp opens a new pair of strands at levels ``i, i+1``;
* ``R i`` -- a right cusp closes the strands at levels ``i, i+1``;
* ``X i`` -- the strands at levels ``i, i+1`` cross.

The space between two consecutive events is a *gap*.  Gap ``g`` sits just
before event ``g`` (so gap 0 is left of everything and gap ``len(events)``
is right of everything).  A strand piece is addressed by a *site*
``(gap, level)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Event",
    "FrontError",
    "FrontSyntaxError",
    "StrandCountError",
    "OpenComponentError",
    "FrontDiagram",
    "OrientedFront",
    "ClassicalInvariants",
    "MaslovLabeling",
    "parse_events",
    "parse_front",
    "format_events",
    "orient",
    "classical_invariants",
    "maslov_labeling",
    "strand_counts",
    "transport_orientation",
]

LEGENDRIAN_KINDS = ("L", "R", "X")


class FrontError(ValueError):
    """Base class for invalid fronts and patterns."""


class FrontSyntaxError(FrontError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class StrandCountError(FrontError):
    def __init__(self, message: str, index: int):
        super().__init__(f"event {index}: {message}")
        self.index = index


class OpenComponentError(FrontError):
    pass


class Event(NamedTuple):
    kind: str
    level: int

    def __str__(self) -> str:
        return f"{self.kind} {self.level}"


def strand_counts(events: Sequence[Event], start: int = 0, *, floor: int = 0) -> list[int]:
    """Strand count in every gap; raises StrandCountError on a bad level.

    ``floor`` is the minimum count allowed in interior gaps (tangles use 1).
    """
    counts = [start]
    s = start
    for k, ev in enumerate(events):
        kind, i = ev
        if kind == "L":
            if not 1 <= i <= s + 1:
                raise StrandCountError(f"LeftCusp level {i} invalid at strand count {s}", k)
            s += 2
        elif kind == "R":
            if not 1 <= i <= s - 1:
                raise StrandCountError(f"RightCusp level {i} invalid at strand count {s}", k)
            s -= 2
        elif kind in ("X", "Y"):
            if not 1 <= i <= s - 1:
                raise StrandCountError(f"Crossing level {i} invalid at strand count {s}", k)
        else:
            raise StrandCountError(f"unknown event kind {kind!r}", k)
        if s < floor and k != len(events) - 1:
            raise StrandCountError(f"strand count drops to {s}", k)
        counts.append(s)
    return counts


# ---------------------------------------------------------------------------
# strand tracing


@dataclass(frozen=True)
class _Strands:
    """Neighbour tables of the strand graph.

    Nodes are sites ``(gap, level)``.  ``right[node]`` is the node reached by
    moving right from ``node``; it lies in the same gap exactly when the move
    goes round a right cusp.  ``left`` is symmetric for left cusps.
    """

    counts: tuple[int, ...]
    right: dict
    left: dict


def _build_strands(events: Sequence[Event], start: int = 0) -> _Strands:
    counts = strand_counts(events, start)
    right: dict = {}
    left: dict = {}
    for g, (kind, i) in enumerate(events):
        s = counts[g]
        if kind in ("X", "Y"):
            for p in range(1, s + 1):
                q = i + 1 if p == i else i if p == i + 1 else p
                right[(g, p)] = (g + 1, q)
                left[(g + 1, q)] = (g, p)
        elif kind == "L":
            for p in range(1, s + 1):
                q = p if p < i else p + 2
                right[(g, p)] = (g + 1, q)
                left[(g + 1, q)] = (g, p)
            left[(g + 1, i)] = (g + 1, i + 1)
            left[(g + 1, i + 1)] = (g + 1, i)
        else:  # R
            for p in range(1, s + 1):
                if p < i:
                    q = p
                elif p > i + 1:
                    q = p - 2
                else:
                    continue
                right[(g, p)] = (g + 1, q)
                left[(g + 1, q)] = (g, p)
            right[(g, i)] = (g, i + 1)
            right[(g, i + 1)] = (g, i)
    return _Strands(tuple(counts), right, left)


def _step(strands: _Strands, node, d: int):
    """Advance one step from ``node`` travelling in x-direction ``d``."""
    nxt = strands.right.get(node) if d > 0 else strands.left.get(node)
    if nxt is None:
        return None, d
    if nxt[0] == node[0]:
        d = -d
    return nxt, d


def _components(strands: _Strands) -> list[list[tuple[tuple[int, int], int]]]:
    """Closed components as lists of ``(node, direction)`` in default orientation."""
    seen: set = set()
    comps = []
    for g, s in enumerate(strands.counts):
        for p in range(1, s + 1):
            node = (g, p)
            if node in seen:
                continue
            path = []
            cur, d = node, 1
            while True:
                path.append((cur, d))
                seen.add(cur)
                cur, d = _step(strands, cur, d)
                if cur is None:
                    raise OpenComponentError(f"strand through site {node} does not close")
                if cur == node:
                    break
            comps.append(path)
    return comps


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class FrontDiagram:
    """A validated closed front.  Equality ignores the name."""

    events: tuple[Event, ...]
    name: str | None = None

    def __init__(self, events: Iterable, name: str | None = None):
        evs = tuple(Event(str(k), int(i)) for k, i in events)
        for k, ev in enumerate(evs):
            if ev.kind not in LEGENDRIAN_KINDS:
                raise StrandCountError(f"event kind {ev.kind!r} is not a front event", k)
        counts = strand_counts(evs)
        if counts[-1] != 0:
            raise StrandCountError(f"final strand count {counts[-1]} is not 0", len(evs) - 1)
        object.__setattr__(self, "events", evs)
        object.__setattr__(self, "name", name)
        _components(self._strands)  # closure check

    def __eq__(self, other):
        return isinstance(other, FrontDiagram) and self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __len__(self):
        return len(self.events)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FrontDiagram{label}: {format_events(self.events, sep=' / ')}>"

    @cached_property
    def _strands(self) -> _Strands:
        return _build_strands(self.events)

    @cached_property
    def _components(self):
        return _components(self._strands)

    @property
    def counts(self) -> tuple[int, ...]:
        return self._strands.counts

    @property
    def n_components(self) -> int:
        return len(self._components)

    @property
    def crossings(self) -> int:
        return sum(1 for e in self.events if e.kind == "X")

    @property
    def left_cusps(self) -> int:
        return sum(1 for e in self.events if e.kind == "L")

    @property
    def right_cusps(self) -> int:
        return sum(1 for e in self.events if e.kind == "R")

    def renamed(self, name: str | None) -> FrontDiagram:
        return FrontDiagram(self.events, name)

    def sites(self) -> list[tuple[int, int]]:
        return [(g, p) for g, s in enumerate(self.counts) for p in range(1, s + 1)]

    def component_of(self) -> dict:
        """Map every site to the index of its component."""
        return {node: c for c, comp in enumerate(self._components) for node, _ in comp}

    def text(self, header: bool = True) -> str:
        body = format_events(self.events)
        if not header:
            return body
        name = self.name or "unnamed"
        return f"front {name}\n{body}{chr(10) if body else ''}end\n"

    @classmethod
    def parse(cls, text: str, name: str | None = None) -> FrontDiagram:
        return parse_front(text, name)

    @property
    def default_site(self) -> tuple[int, int]:
        """First strand segment after the first left cusp."""
        if not self.events:
            raise FrontError("the empty front has no strand segments")
        return (1, self.events[0].level)


def format_events(events: Sequence[Event], sep: str = "\n") -> str:
    return sep.join(f"{k} {i}" for k, i in events)


def parse_events(text: str, kinds: Sequence[str] = LEGENDRIAN_KINDS, line_offset: int = 0) -> list[Event]:
    """Parse bare event lines; ``/`` also separates events."""
    events = []
    for ln, raw in enumerate(text.split("\n"), start=1 + line_offset):
        line = raw.split("#", 1)[0]
        col = 1
        for chunk in line.split("/"):
            stripped = chunk.strip()
            if stripped:
                c = col + len(chunk) - len(chunk.lstrip())
                parts = stripped.split()
                if len(parts) != 2 or parts[0] not in kinds:
                    raise FrontSyntaxError(f"expected '<{'|'.join(kinds)}> <level>', got {stripped!r}", ln, c)
                try:
                    level = int(parts[1])
                except ValueError:
                    raise FrontSyntaxError(f"level {parts[1]!r} is not an integer", ln, c) from None
                if level < 1:
                    raise FrontSyntaxError(f"level {level} must be positive", ln, c)
                events.append(Event(parts[0], level))
            col += len(chunk) + 1
    return events


def parse_front(text: str, name: str | None = None) -> FrontDiagram:
    """Parse a single front, with or without the ``front <name>`` / ``end`` wrapper."""
    lines = text.split("\n")
    meaningful = [(k, ln.split("#", 1)[0].strip()) for k, ln in enumerate(lines)]
    meaningful = [(k, ln) for k, ln in meaningful if ln]
    offset = 0
    if meaningful and meaningful[0][1].split()[0] == "front":
        head_idx, head = meaningful[0]
        parts = head.split()
        if len(parts) != 2:
            raise FrontSyntaxError("expected 'front <name>'", head_idx + 1, 1)
        name = name or parts[1]
        if meaningful[-1][1] != "end":
            raise FrontSyntaxError("missing 'end'", meaningful[-1][0] + 1, 1)
        body_lines = lines[head_idx + 1 : meaningful[-1][0]]
        offset = head_idx + 1
        text = "\n".join(body_lines)
    return FrontDiagram(parse_events(text, line_offset=offset), name)


# ---------------------------------------------------------------------------
# orientation and invariants


@dataclass(frozen=True)
class OrientedFront:
    """A front with a direction on every component.

    ``flips[c]`` reverses component ``c`` relative to the default, in which
    the upper branch of each component's leftmost left cusp points right.
    """

    front: FrontDiagram
    flips: tuple[bool, ...] = ()

    def __post_init__(self):
        n = self.front.n_components
        flips = tuple(bool(f) for f in self.flips) + (False,) * (n - len(self.flips))
        if len(flips) != n:
            raise FrontError(f"{len(self.flips)} orientation flags for {n} components")
        object.__setattr__(self, "flips", flips)

    @property
    def events(self) -> tuple[Event, ...]:
        return self.front.events

    @property
    def name(self):
        return self.front.name

    @cached_property
    def direction(self) -> dict:
        """x-direction (+1 right, -1 left) of the strand at every site."""
        out = {}
        for c, comp in enumerate(self.front._components):
            sgn = -1 if self.flips[c] else 1
            for node, d in comp:
                out[node] = d * sgn
        return out

    def reversed(self, components: Iterable[int] | None = None) -> OrientedFront:
        which = set(range(self.front.n_components) if components is None else components)
        return OrientedFront(self.front, tuple(f ^ (c in which) for c, f in enumerate(self.flips)))

    def crossing_signs(self) -> list[int]:
        """Sign of every front crossing: +1 iff both strands point the same way."""
        d = self.direction
        return [1 if d[(g, i)] == d[(g, i + 1)] else -1 for g, (k, i) in enumerate(self.events) if k == "X"]

    def cusp_classes(self) -> list[tuple[int, str]]:
        """``(event index, 'up'|'down')`` for every cusp.

        A cusp is *down* when the orientation runs through it from the upper
        branch to the lower one.
        """
        d = self.direction
        out = []
        for g, (k, i) in enumerate(self.events):
            if k == "R":
                out.append((g, "down" if d[(g, i)] > 0 else "up"))
            elif k == "L":
                out.append((g, "down" if d[(g + 1, i)] < 0 else "up"))
        return out

    @property
    def up_cusps(self) -> int:
        return sum(1 for _, c in self.cusp_classes() if c == "up")

    @property
    def down_cusps(self) -> int:
        return sum(1 for _, c in self.cusp_classes() if c == "down")

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs())

    @property
    def tb(self) -> int:
        return classical_invariants(self).tb

    @property
    def rot(self) -> int:
        return classical_invariants(self).rot

    def component_rots(self) -> list[int]:
        comp = self.front.component_of()
        tally = [0] * self.front.n_components
        for g, cls in self.cusp_classes():
            k, i = self.events[g]
            c = comp[(g, i) if k == "R" else (g + 1, i)]
            tally[c] += 1 if cls == "down" else -1
        return [t // 2 for t in tally]


def orient(front: FrontDiagram, choice: Sequence[bool] | None = None) -> OrientedFront:
    """Orient ``front``; ``choice[c]`` flips component ``c`` from the default."""
    return OrientedFront(front, tuple(choice or ()))


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rot: int
    components: int
    crossings: int
    left_cusps: int
    right_cusps: int
    writhe: int


def classical_invariants(of: OrientedFront) -> ClassicalInvariants:
    f = of.front
    w = of.writhe
    cusps = f.left_cusps + f.right_cusps
    twice_rot = of.down_cusps - of.up_cusps
    return ClassicalInvariants(
        tb=w - cusps // 2,
        rot=twice_rot // 2,
        components=f.n_components,
        crossings=f.crossings,
        left_cusps=f.left_cusps,
        right_cusps=f.right_cusps,
        writhe=w,
    )


@dataclass(frozen=True)
class MaslovLabeling:
    """Maslov potential on sites, taken modulo ``modulus`` (0 means integers)."""

    modulus: int
    labels: dict

    def __getitem__(self, site):
        return self.labels[site]

    def reduce(self, value: int) -> int:
        return value % self.modulus if self.modulus else value

    def crossing_degree(self, gap: int, level: int) -> int:
        """Degree of the crossing at event ``gap``: label of the strand with
        lesser slope minus the label of the other one."""
        return self.reduce(self.labels[(gap, level)] - self.labels[(gap, level + 1)])


def maslov_labeling(of: OrientedFront | FrontDiagram) -> MaslovLabeling:
    """Label sites so the upper branch of every cusp sits one above the lower.

    Each component is normalised so the lower branch of its leftmost left cusp
    has label 0.  Labels on a component are defined modulo twice its rotation
    number; the labeling as a whole uses the gcd of those moduli.
    """
    front = of.front if isinstance(of, OrientedFront) else of
    strands = front._strands
    labels = {}
    moduli = []
    for comp in front._components:
        (g0, p0), _ = comp[0]
        # walk from the lower branch of the anchor cusp; its left neighbour is the upper branch
        start = (g0, p0 + 1)
        cur, d, mu = start, 1, 0
        while True:
            labels[cur] = mu
            nxt, nd = _step(strands, cur, d)
            if nd != d:  # went round a cusp
                mu += 1 if nxt[1] < cur[1] else -1
            cur, d = nxt, nd
            if cur == start:
                break
        moduli.append(abs(mu))
    modulus = 0
    for m in moduli:
        modulus = gcd(modulus, m)
    if modulus:
        labels = {k: v % modulus for k, v in labels.items()}
    return MaslovLabeling(modulus, labels)


def transport_orientation(of: OrientedFront, new: FrontDiagram, gap_map, default: bool = False) -> OrientedFront:
    """Carry the orientation of ``of`` over to ``new``.

    ``gap_map`` sends every gap of ``of.front`` that survives unchanged to the
    corresponding gap of ``new`` (or ``None`` when the gap was rewritten).
    Components with no surviving gap get the default orientation, reversed
    when ``default`` is true.
    """
    d = of.direction
    inherited = {}
    for g, s in enumerate(of.front.counts):
        h = gap_map(g)
        if h is None:
            continue
        for p in range(1, s + 1):
            inherited[(h, p)] = d[(g, p)]
    flips = []
    for comp in new._components:
        for node, dd in comp:
            if node in inherited:
                flips.append(inherited[node] != dd)
                break
        else:
            flips.append(default)
    return OrientedFront(new, tuple(flips))
