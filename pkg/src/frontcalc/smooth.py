"""Smooth shadows of fronts and the Jones polynomial.

Smooth diagrams use the same word encoding as fronts, read as a Morse
diagram: ``L`` is a cup, ``R`` a cap, ``X i`` a crossing where the strand
running from level ``i`` down to ``i+1`` passes over, and ``Y i`` the mirror
crossing.  A front crossing becomes an ``X`` (the strand of lesser slope is
on top) and every right cusp becomes an ``X`` kink followed by a cap.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .front import (
    Event,
    FrontDiagram,
    FrontError,
    OrientedFront,
    _build_strands,
    _components,
    _step,
    strand_counts,
)

__all__ = [
    "BudgetExceeded",
    "KnotDiagram",
    "BracketPolynomial",
    "resolve",
    "shadow",
    "bracket",
    "jones",
    "smoothly_distinguished",
    "smooth_satellite",
    "DISTINCT",
    "INCONCLUSIVE",
    "JONES_CROSSING_BUDGET",
]

DISTINCT = "DISTINCT"
INCONCLUSIVE = "INCONCLUSIVE"
JONES_CROSSING_BUDGET = 24


class BudgetExceeded(ValueError):
    pass


# ---------------------------------------------------------------------------
# Laurent polynomials in the bracket variable A


class BracketPolynomial(Mapping):
    """Integer Laurent polynomial in ``A``, stored as ``{exponent: coefficient}``.

    With ``normalized=True`` it holds the Jones polynomial written in ``A``;
    ``t = A**-4`` is used only for display.
    """

    __slots__ = ("_c", "normalized")

    def __init__(self, coeffs: Mapping[int, int] | None = None, normalized: bool = False):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self.normalized = normalized

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, BracketPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    def __add__(self, other):
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return BracketPolynomial(out, self.normalized)

    def __neg__(self):
        return BracketPolynomial({e: -c for e, c in self._c.items()}, self.normalized)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BracketPolynomial({e: c * other for e, c in self._c.items()}, self.normalized)
        out: dict = defaultdict(int)
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] += c1 * c2
        return BracketPolynomial(out, self.normalized)

    __rmul__ = __mul__

    def shift(self, k: int) -> BracketPolynomial:
        return BracketPolynomial({e + k: c for e, c in self._c.items()}, self.normalized)

    def exact_div(self, divisor: BracketPolynomial) -> BracketPolynomial:
        """Exact division; raises ArithmeticError when there is a remainder."""
        rem = dict(self._c)
        if not rem:
            return BracketPolynomial({}, self.normalized)
        dlo, dhi = min(divisor._c), max(divisor._c)
        lead = divisor._c[dhi]
        floor = min(rem) - dlo
        quot: dict = {}
        while rem:
            top = max(rem)
            c, r = divmod(rem[top], lead)
            k = top - dhi
            if r or k < floor:
                raise ArithmeticError("inexact division")
            quot[k] = c
            for e, dc in divisor._c.items():
                rem[e + k] = rem.get(e + k, 0) - c * dc
                if rem[e + k] == 0:
                    del rem[e + k]
        return BracketPolynomial(quot, self.normalized)

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> BracketPolynomial:
        return cls({e: c})

    def t_terms(self) -> list[tuple[Fraction, int]]:
        """``(t-exponent, coefficient)`` pairs in ascending t-exponent."""
        return sorted((Fraction(-e, 4), c) for e, c in self._c.items())

    def format_t(self) -> str:
        """Canonical ascending-exponent text in ``t``."""
        if not self._c:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.t_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                mono = str(mag)
            else:
                power = "" if e == 1 else f"^{e}" if e.denominator == 1 else f"^({e})"
                mono = ("" if mag == 1 else f"{mag}*") + "t" + power
            if k == 0:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{sign} {mono}")
        return " ".join(parts)

    def format_A(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"({c})*A^{e}" for e, c in sorted(self._c.items()))

    def __repr__(self):
        kind = "Jones" if self.normalized else "Bracket"
        return f"<{kind} {self.format_t() if self.normalized else self.format_A()}>"


_LOOP = BracketPolynomial({2: -1, -2: -1})  # d = -A^2 - A^-2


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class KnotDiagram:
    """Oriented smooth diagram as a Morse word.

    ``flips`` reverse components from the default orientation, exactly as for
    :class:`~frontcalc.front.OrientedFront`.  ``kinks`` lists the event
    indices of crossings introduced by resolving right cusps.
    """

    events: tuple[Event, ...]
    flips: tuple[bool, ...] = ()
    kinks: tuple[int, ...] = ()

    def __post_init__(self):
        evs = tuple(Event(k, i) for k, i in self.events)
        object.__setattr__(self, "events", evs)
        counts = strand_counts(evs)
        if counts[-1] != 0:
            raise FrontError("smooth diagram does not close")
        n = len(self._components)
        flips = tuple(self.flips) + (False,) * (n - len(self.flips))
        object.__setattr__(self, "flips", flips[:n])

    @cached_property
    def _strands(self):
        return _build_strands(self.events)

    @cached_property
    def _components(self):
        return _components(self._strands)

    @property
    def components(self) -> int:
        return len(self._components)

    @property
    def n_crossings(self) -> int:
        return sum(1 for k, _ in self.events if k in ("X", "Y"))

    @cached_property
    def direction(self) -> dict:
        out = {}
        for c, comp in enumerate(self._components):
            sgn = -1 if self.flips[c] else 1
            for node, d in comp:
                out[node] = d * sgn
        return out

    def crossing_signs(self) -> list[tuple[int, int]]:
        """``(event index, sign)`` for every crossing."""
        d = self.direction
        out = []
        for g, (k, i) in enumerate(self.events):
            if k in ("X", "Y"):
                same = d[(g, i)] == d[(g, i + 1)]
                s = 1 if same else -1
                out.append((g, s if k == "X" else -s))
        return out

    @property
    def writhe(self) -> int:
        return sum(s for _, s in self.crossing_signs())

    @property
    def front_writhe(self) -> int:
        """Writhe over the crossings inherited from front crossings only."""
        kinks = set(self.kinks)
        return sum(s for g, s in self.crossing_signs() if g not in kinks)

    def pd_code(self) -> list[tuple[int, int, int, int]]:
        """PD 4-tuples: incoming under-arc first, then counterclockwise."""
        label = self._edge_labels()
        d = self.direction
        out = []
        for g, (k, i) in enumerate(self.events):
            if k not in ("X", "Y"):
                continue
            nw, sw, ne, se = (g, i), (g, i + 1), (g + 1, i), (g + 1, i + 1)
            ccw = [nw, sw, se, ne]
            # the under strand joins SW and NE for X, NW and SE for Y
            if k == "X":
                start = sw if d[sw] > 0 else ne
            else:
                start = nw if d[nw] > 0 else se
            j = ccw.index(start)
            out.append(tuple(label[ccw[(j + m) % 4]] for m in range(4)))
        return out

    def pd_text(self) -> str:
        return ", ".join("X[" + ",".join(map(str, x)) + "]" for x in self.pd_code())

    def _edge_labels(self) -> dict:
        strands = self._strands
        label = {}
        nxt_label = 1
        for c, comp in enumerate(self._components):
            sgn = -1 if self.flips[c] else 1
            oriented = [(node, d * sgn) for node, d in comp]
            if sgn < 0:
                oriented = oriented[::-1]
            # rotate so we start right after a crossing
            def crosses(a, b):
                if a[0] == b[0]:
                    return False
                left = a if a[0] < b[0] else b
                kind, i = self.events[left[0]]
                return kind in ("X", "Y") and left[1] in (i, i + 1)

            n = len(oriented)
            starts = [k for k in range(n) if crosses(oriented[k - 1][0], oriented[k][0])]
            if not starts:
                raise FrontError("component without crossings has no PD representation")
            k0 = starts[0]
            cur = nxt_label
            for m in range(n):
                node = oriented[(k0 + m) % n][0]
                if m and crosses(oriented[(k0 + m - 1) % n][0], node):
                    cur += 1
                label[node] = cur
            nxt_label = cur + 1
        return label

    def text(self) -> str:
        return "\n".join(f"{k} {i}" for k, i in self.events)


def _transport_flips(of: OrientedFront, events: Sequence[Event], gap_map) -> tuple[bool, ...]:
    strands = _build_strands(events)
    comps = _components(strands)
    d = of.direction
    inv = {}
    for g, s in enumerate(of.front.counts):
        for p in range(1, s + 1):
            inv[gap_map(g), p] = d[(g, p)]
    flips = []
    for comp in comps:
        for node, dd in comp:
            if node in inv:
                flips.append(inv[node] != dd)
                break
        else:  # pragma: no cover - every component meets an inherited gap
            flips.append(False)
    return tuple(flips)


def resolve(front: OrientedFront) -> KnotDiagram:
    """Resolve a front to the smooth diagram of its Lagrangian projection."""
    events: list[Event] = []
    kinks = []
    starts = []
    for kind, i in front.events:
        starts.append(len(events))
        if kind == "R":
            kinks.append(len(events))
            events.append(Event("X", i))
        events.append(Event(kind, i))
    starts.append(len(events))
    flips = _transport_flips(front, events, lambda g: starts[g])
    return KnotDiagram(tuple(events), flips, tuple(kinks))


def shadow(front: OrientedFront) -> KnotDiagram:
    """The front itself read as a smooth diagram (cusps become smooth turns)."""
    return KnotDiagram(front.events, front.flips)


# ---------------------------------------------------------------------------
# Kauffman bracket by a left-to-right transfer over planar matchings


def _cap(match: tuple, a: int) -> tuple[tuple, bool]:
    """Join positions ``a`` and ``a+1``; returns the new matching and whether a loop closed."""
    b = a + 1
    m = list(match)
    loop = m[a] == b
    if not loop:
        x, y = m[a], m[b]
        m[x], m[y] = y, x
    keep = [p for p in range(len(m)) if p not in (a, b)]
    index = {p: k for k, p in enumerate(keep)}
    return tuple(index[m[p]] for p in keep), loop


def _cup(match: tuple, a: int) -> tuple:
    def shift(p):
        return p if p < a else p + 2

    m = [shift(q) for q in match]
    m[a:a] = [a + 1, a]
    return tuple(m)


def bracket(diagram: KnotDiagram | Sequence[Event], max_crossings: int | None = None) -> BracketPolynomial:
    """Kauffman bracket with ``<O> = 1`` (exact, integer coefficients)."""
    events = diagram.events if isinstance(diagram, KnotDiagram) else tuple(diagram)
    n_x = sum(1 for k, _ in events if k in ("X", "Y"))
    if max_crossings is not None and n_x > max_crossings:
        raise BudgetExceeded(f"{n_x} crossings exceed the budget of {max_crossings}")
    if not events:
        raise FrontError("the bracket of the empty diagram is undefined")
    one = BracketPolynomial({0: 1})
    states: dict = {(): one}
    a_pos, a_neg = BracketPolynomial({1: 1}), BracketPolynomial({-1: 1})
    for kind, i in events:
        a = i - 1
        new: dict = {}

        def put(m, poly):
            new[m] = new[m] + poly if m in new else poly

        for m, poly in states.items():
            if kind == "L":
                put(_cup(m, a), poly)
            elif kind == "R":
                m2, loop = _cap(m, a)
                put(m2, poly * _LOOP if loop else poly)
            else:
                capped, loop = _cap(m, a)
                turned = _cup(capped, a)
                turned_poly = poly * _LOOP if loop else poly
                straight_w, turn_w = (a_pos, a_neg) if kind == "X" else (a_neg, a_pos)
                put(m, poly * straight_w)
                put(turned, turned_poly * turn_w)
        states = {m: p for m, p in new.items() if p}
    total = states.get((), BracketPolynomial())
    return total.exact_div(_LOOP)


def jones(diagram: KnotDiagram, max_crossings: int | None = JONES_CROSSING_BUDGET) -> BracketPolynomial:
    """Jones polynomial as ``(-A^3)^(-writhe) <D>``, kept in the variable A."""
    br = bracket(diagram, max_crossings)
    w = diagram.writhe
    out = br.shift(-3 * w) * (-1 if w % 2 else 1)
    out.normalized = True
    return out


def smoothly_distinguished(a: OrientedFront, b: OrientedFront, max_crossings: int | None = JONES_CROSSING_BUDGET) -> str:
    """DISTINCT when the Jones polynomials differ, INCONCLUSIVE otherwise."""
    ja = jones(resolve(a), max_crossings)
    jb = jones(resolve(b), max_crossings)
    return DISTINCT if ja != jb else INCONCLUSIVE


# ---------------------------------------------------------------------------
# smooth satellites with explicit framing


def _block_swap(p: int, n: int, kind: str) -> list[Event]:
    """Crossings moving a block of ``n`` strands at ``p..p+n-1`` past the next block."""
    out = []
    order = [("a", k) for k in range(n)] + [("b", k) for k in range(n)]
    for diff in range(n - 1, -n, -1):
        for ka in range(n):
            kb = ka - diff
            if not 0 <= kb < n:
                continue
            j = order.index(("a", ka))
            assert order[j + 1] == ("b", kb)
            order[j], order[j + 1] = order[j + 1], order[j]
            out.append(Event(kind, p + j))
    return out


def full_twist_word(base: int, n: int, k: int) -> list[Event]:
    """``|k|`` full twists on strands ``base..base+n-1`` (``X`` for k > 0, ``Y`` for k < 0)."""
    kind = "X" if k > 0 else "Y"
    one = [Event(kind, base + j) for _ in range(n) for j in range(n - 1)]
    return one * abs(k)


def smooth_satellite(diagram: KnotDiagram, pattern, twists: int = 0, site: tuple[int, int] | None = None) -> KnotDiagram:
    """Satellite of a one-component smooth diagram.

    The companion is replaced by its blackboard ``n``-copy; ``twists`` full
    twists (right handed when positive) are inserted next to the pattern.
    Pass ``twists = f - writhe(diagram)`` for the satellite with framing ``f``.
    """
    if diagram.components != 1:
        raise FrontError("smooth satellites need a one-component companion")
    n = pattern.arity
    if site is None:
        site = (1, diagram.events[0].level)
    gsite, psite = site
    out: list[Event] = []
    for g, (kind, i) in enumerate(diagram.events):
        if g == gsite:
            base = n * (psite - 1)
            out.extend(full_twist_word(base + 1, n, twists) if twists else [])
            out.extend(Event(k, j + base) for k, j in pattern.events)
        p = n * (i - 1) + 1
        if kind == "L":
            out.extend(Event("L", p + k) for k in range(n))
        elif kind == "R":
            out.extend(Event("R", p + k) for k in reversed(range(n)))
        else:
            out.extend(_block_swap(p, n, kind))
    if gsite == len(diagram.events):
        raise FrontError("satellite site lies outside the diagram")
    return KnotDiagram(tuple(out))
