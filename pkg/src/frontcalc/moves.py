"""Local rewrites of front words: Legendrian isotopy, births and pinches.

Sites are written ``k:p``.  For a rewrite, ``k`` is the index of the first
event of the matched pattern (or the insertion point when the pattern is
empty) and ``p`` is its base level.  Pattern levels below are offsets from
``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .front import Event, FrontDiagram, FrontError, OrientedFront, transport_orientation

__all__ = [
    "MoveError",
    "MoveApplication",
    "MOVE_TABLE",
    "apply_move",
    "applicable_moves",
    "swappable",
    "simple_front",
    "parse_site",
    "format_site",
]


class MoveError(FrontError):
    pass


# name: (left side, right side), levels as offsets from the base level
_BASE_MOVES = {
    "r1a": ((), (("L", 1), ("X", 0), ("R", 1))),
    "r1b": ((), (("L", 0), ("X", 1), ("R", 0))),
    "r2a": ((("L", 1),), (("L", 0), ("X", 1), ("X", 0))),
    "r2b": ((("L", 0),), (("L", 1), ("X", 0), ("X", 1))),
    "r2c": ((("R", 1),), (("X", 0), ("X", 1), ("R", 0))),
    "r2d": ((("R", 0),), (("X", 1), ("X", 0), ("R", 1))),
    "r3": ((("X", 0), ("X", 1), ("X", 0)), (("X", 1), ("X", 0), ("X", 1))),
}

MOVE_TABLE: dict[str, tuple[tuple, tuple]] = {}
for _name, (_lhs, _rhs) in _BASE_MOVES.items():
    MOVE_TABLE[_name] = (_lhs, _rhs)
    MOVE_TABLE[_name + "-inv"] = (_rhs, _lhs)
INVERSE = {n: (n[:-4] if n.endswith("-inv") else n + "-inv") for n in MOVE_TABLE}


def parse_site(text: str) -> tuple[int, int]:
    try:
        k, p = text.split(":")
        return int(k), int(p)
    except ValueError:
        raise MoveError(f"bad site {text!r}, expected k:p") from None


def format_site(site: tuple[int, int]) -> str:
    return f"{site[0]}:{site[1]}"


@dataclass(frozen=True)
class MoveApplication:
    """One step of a move script.

    ``kind`` is ``move`` (a table rewrite called ``name``), ``swap`` (``site``
    holds the two adjacent event indices), ``birth`` or ``pinch``.
    """

    kind: str
    site: tuple[int, int]
    name: str | None = None
    reverse: bool = False

    def __post_init__(self):
        if self.kind not in ("move", "swap", "birth", "pinch"):
            raise MoveError(f"unknown move kind {self.kind!r}")
        if self.kind == "move" and self.name not in MOVE_TABLE:
            raise MoveError(f"unknown front move {self.name!r}")

    @property
    def is_isotopy(self) -> bool:
        return self.kind in ("move", "swap")

    def shifted(self, offset: int) -> MoveApplication:
        k, p = self.site
        site = (k + offset, p + offset) if self.kind == "swap" else (k + offset, p)
        return MoveApplication(self.kind, site, self.name, self.reverse)

    def inverse(self) -> MoveApplication:
        if self.kind != "move":
            raise MoveError(f"{self.kind} has no inverse in a move script")
        return MoveApplication("move", self.site, INVERSE[self.name])

    def text(self) -> str:
        if self.kind == "move":
            return f"move {self.name} at {format_site(self.site)}"
        if self.kind == "swap":
            return f"swap {self.site[0]} {self.site[1]}"
        tail = " reversed" if self.reverse else ""
        return f"{self.kind} at {format_site(self.site)}{tail}"

    @classmethod
    def parse(cls, line: str) -> MoveApplication:
        parts = line.split()
        try:
            if parts[0] == "move" and len(parts) == 4 and parts[2] == "at":
                return cls("move", parse_site(parts[3]), parts[1])
            if parts[0] == "swap" and len(parts) == 3:
                return cls("swap", (int(parts[1]), int(parts[2])))
            if parts[0] in ("birth", "pinch") and parts[1] == "at" and len(parts) in (3, 4):
                rev = len(parts) == 4
                if rev and parts[3] != "reversed":
                    raise MoveError(f"unexpected {parts[3]!r}")
                return cls(parts[0], parse_site(parts[2]), reverse=rev)
        except (IndexError, ValueError) as exc:
            if isinstance(exc, MoveError):
                raise
        raise MoveError(f"cannot parse move {line!r}")


# ---------------------------------------------------------------------------
# far commutation


def _footprint_first(ev: Event) -> tuple[float, float]:
    # levels touched by ``ev`` in the gap after it
    if ev.kind == "R":
        return ev.level - 0.5, ev.level - 0.5
    return ev.level, ev.level + 1


def _footprint_second(ev: Event) -> tuple[float, float]:
    # levels touched by ``ev`` in the gap before it
    if ev.kind == "L":
        return ev.level - 0.5, ev.level - 0.5
    return ev.level, ev.level + 1


_DELTA = {"L": 2, "R": -2, "X": 0}


def swappable(events, i: int) -> tuple[Event, Event] | None:
    """The commuted pair for events ``i`` and ``i + 1``, or ``None``."""
    e1, e2 = events[i], events[i + 1]
    lo1, hi1 = _footprint_first(e1)
    lo2, hi2 = _footprint_second(e2)
    if hi2 < lo1:
        return e2, Event(e1.kind, e1.level + _DELTA[e2.kind])
    if lo2 > hi1:
        return Event(e2.kind, e2.level - _DELTA[e1.kind]), e1
    return None


# ---------------------------------------------------------------------------
# application


def _instantiate(pattern, p: int) -> tuple[Event, ...]:
    return tuple(Event(k, p + o) for k, o in pattern)


def _rewrite(of: OrientedFront, k: int, old_len: int, new: tuple[Event, ...], reverse=False, extra=None) -> OrientedFront:
    events = of.events
    try:
        fd = FrontDiagram(events[:k] + new + events[k + old_len :], of.name)
    except FrontError as exc:
        raise MoveError(f"rewrite at event {k} gives an invalid front: {exc}") from None
    shift = len(new) - old_len

    def gap_map(g):
        if g <= k:
            return g
        if g >= k + old_len:
            return g + shift
        return extra(g) if extra else None

    return transport_orientation(of, fd, gap_map, default=reverse)


def apply_move(front: OrientedFront, move: MoveApplication) -> OrientedFront:
    """Apply one move, raising :class:`MoveError` if its pattern is absent."""
    events = front.events
    counts = front.front.counts
    k, p = move.site
    if move.kind == "swap":
        i, j = move.site
        if j != i + 1 or not 0 <= i < len(events) - 1:
            raise MoveError(f"swap {i} {j}: events must be adjacent and in range")
        pair = swappable(events, i)
        if pair is None:
            raise MoveError(f"swap {i} {j}: events {events[i]} and {events[j]} do not commute")
        return _rewrite(front, i, 2, pair)
    if not 0 <= k < len(counts):
        raise MoveError(f"{move.text()}: gap {k} out of range")
    if move.kind == "move":
        lhs, rhs = MOVE_TABLE[move.name]
        want = _instantiate(lhs, p)
        if p < 1 or tuple(events[k : k + len(want)]) != want:
            raise MoveError(f"{move.text()}: pattern {' / '.join(map(str, want)) or 'strand'} not found")
        if not lhs and not 1 <= p <= counts[k]:
            raise MoveError(f"{move.text()}: no strand at level {p}")
        return _rewrite(front, k, len(want), _instantiate(rhs, p))
    if move.kind == "birth":
        if not 1 <= p <= counts[k] + 1:
            raise MoveError(f"{move.text()}: level {p} outside 1..{counts[k] + 1}")
        return _rewrite(front, k, 0, (Event("L", p), Event("R", p)), reverse=move.reverse)
    # pinch: a facing pair R p, L p becomes two strands
    if events[k : k + 2] != (Event("R", p), Event("L", p)):
        raise MoveError(f"{move.text()}: expected R {p} / L {p} at event {k}")
    d = front.direction
    if d[(k, p)] != d[(k + 2, p)]:
        raise MoveError(f"{move.text()}: strands would be parallel, the saddle is not orientable")
    return _rewrite(front, k, 2, (), extra=lambda g: None)


def simple_front(front: OrientedFront, max_steps: int = 100_000) -> OrientedFront:
    """Legendrian isotopic front ending in ``R 1`` repeated, with no other right cusps.

    Then all right cusps can sit at one x-coordinate and the DGA disks are
    bounded by an upper and a lower x-monotone path.  A right cusp is pushed
    right past commuting events by swaps, past a crossing of the two strands
    around it by first moving it below the lower one (``r2d``), and past a
    facing left cusp by first moving that cusp down (``r2b``) or up (``r2a``).  A cusp in the
    final block at an even level is moved down one strand with ``r2d``, at an
    odd level it commutes up to level 1.
    """
    cur = front
    for _ in range(max_steps):
        events = cur.events
        n = len(events)
        ks = [k for k in range(n - 1) if events[k].kind == "R" and any(e.kind != "R" for e in events[k + 1 :])]
        if ks:
            k = ks[-1]
            if swappable(events, k) is None:
                nxt = events[k + 1]
                if nxt.kind == "X":
                    cur = apply_move(cur, MoveApplication("move", (k, events[k].level), "r2d"))
                    k += 2
                elif cur.front.counts[k + 1] >= nxt.level:
                    cur = apply_move(cur, MoveApplication("move", (k + 1, nxt.level), "r2b"))
                elif nxt.level > 1:
                    cur = apply_move(cur, MoveApplication("move", (k + 1, nxt.level - 1), "r2a"))
                else:
                    # nothing else at this x: the two pieces are split, stack them
                    cur = _rewrite(cur, k, 2, (Event("L", 1), Event("R", 3)))
                    continue
            cur = apply_move(cur, MoveApplication("swap", (k, k + 1)))
            continue
        run = n
        while run > 0 and events[run - 1] == Event("R", 1):
            run -= 1
        k = run - 1
        if k < 0 or events[k].kind != "R":
            return cur
        if events[k].level % 2:
            cur = apply_move(cur, MoveApplication("swap", (k, k + 1)))
        else:
            cur = apply_move(cur, MoveApplication("move", (k, events[k].level), "r2d"))
    raise MoveError(f"simple_front did not finish in {max_steps} steps")


def _fits(fd: FrontDiagram, k: int, n: int, rhs, p: int) -> bool:
    try:
        FrontDiagram(fd.events[:k] + _instantiate(rhs, p) + fd.events[k + n :])
    except FrontError:
        return False
    return True


def applicable_moves(front: OrientedFront | FrontDiagram, kinds=("move", "swap")) -> Iterator[MoveApplication]:
    """Every move of the given kinds whose pattern matches somewhere."""
    fd = front.front if isinstance(front, OrientedFront) else front
    events = fd.events
    counts = fd.counts
    if "swap" in kinds:
        for i in range(len(events) - 1):
            if swappable(events, i):
                yield MoveApplication("swap", (i, i + 1))
    if "move" in kinds:
        for name, (lhs, _) in MOVE_TABLE.items():
            if not lhs:
                for k, s in enumerate(counts):
                    for p in range(1, s + 1):
                        yield MoveApplication("move", (k, p), name)
                continue
            for k in range(len(events) - len(lhs) + 1):
                p = events[k].level - lhs[0][1]
                if p >= 1 and tuple(events[k : k + len(lhs)]) == _instantiate(lhs, p) and _fits(fd, k, len(lhs), MOVE_TABLE[name][1], p):
                    yield MoveApplication("move", (k, p), name)
    if "pinch" in kinds and isinstance(front, OrientedFront):
        d = front.direction
        for k in range(len(events) - 1):
            (a, i), (b, j) = events[k], events[k + 1]
            if a == "R" and b == "L" and i == j and d[(k, i)] == d[(k + 2, i)]:
                yield MoveApplication("pinch", (k, i))
    if "birth" in kinds:
        for k, s in enumerate(counts):
            for p in range(1, s + 2):
                yield MoveApplication("birth", (k, p))
