"""Chekanov-Eliashberg DGA over Z/2 of a resolved front, and augmentations.

Generators are the crossings of the Lagrangian resolution: one per front
crossing (``a1, a2, ...`` left to right) and one per right cusp (``c1, c2,
...``).  The differential counts disks in the front plane bounded by an
upper and a lower x-monotone path that start together at a left cusp and end
together at the originating crossing or right cusp.  Paths may turn at a
crossing only at a convex corner; each turn contributes its crossing to the
word, read along the upper path from right to left and then along the lower
path from left to right.  A right cusp also gets the constant term ``1`` from
its resolution loop.

This disk description is complete only when all right cusps can sit at one
x-coordinate, so other fronts are first isotoped to end in ``R 1`` repeated
(see :func:`frontcalc.moves.simple_front`).  Generator names then refer to
the isotoped front, kept in ``ChekanovDGA.front``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .front import FrontDiagram, OrientedFront, maslov_labeling, orient
from .moves import simple_front
from .smooth import BudgetExceeded

__all__ = [
    "ChekanovDGA",
    "Augmentation",
    "build_dga",
    "check_d_squared",
    "find_augmentations",
    "parse_dga",
    "DGA_CROSSING_BUDGET",
    "AUGMENTATION_BUDGET",
    "DISK_BUDGET",
]

DGA_CROSSING_BUDGET = 16
AUGMENTATION_BUDGET = 25
DISK_BUDGET = 200_000

Word = tuple[str, ...]


@dataclass(frozen=True)
class ChekanovDGA:
    generators: tuple[tuple[str, int], ...]
    differential: Mapping[str, frozenset[Word]]
    modulus: int = 0
    source: str | None = None
    front: FrontDiagram | None = field(default=None, compare=False, repr=False)

    @property
    def degrees(self) -> dict[str, int]:
        return dict(self.generators)

    @property
    def names(self) -> list[str]:
        return [g for g, _ in self.generators]

    def reduce(self, d: int) -> int:
        return d % self.modulus if self.modulus else d

    def word_degree(self, word: Word) -> int:
        deg = self.degrees
        return self.reduce(sum(deg[x] for x in word))

    def degree_defects(self) -> list[tuple[str, Word]]:
        """Words whose degree is not one less than their generator's."""
        deg = self.degrees
        return [
            (g, w)
            for g, _ in self.generators
            for w in sorted(self.differential[g])
            if self.word_degree(w) != self.reduce(deg[g] - 1)
        ]

    def text(self) -> str:
        lines = [f"gen {g} deg {d}" for g, d in self.generators]
        for g, _ in self.generators:
            words = sorted(self.differential[g], key=lambda w: (len(w), w))
            rhs = " + ".join(" ".join(w) if w else "1" for w in words) or "0"
            lines.append(f"d {g} = {rhs}")
        return "\n".join(lines) + "\n"

    def relabeled(self, mapping: Mapping[str, str]) -> ChekanovDGA:
        gens = tuple((mapping[g], d) for g, d in self.generators)
        diff = {mapping[g]: frozenset(tuple(mapping[x] for x in w) for w in ws) for g, ws in self.differential.items()}
        return ChekanovDGA(gens, diff, self.modulus, self.source, self.front)


def parse_dga(text: str) -> ChekanovDGA:
    gens = []
    diff: dict = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gen "):
            _, g, _, d = line.split()
            gens.append((g, int(d)))
        elif line.startswith("d "):
            lhs, rhs = line[2:].split("=", 1)
            terms = [t.strip() for t in rhs.split("+")]
            words: Counter = Counter()
            for t in terms:
                if t == "0":
                    continue
                words[() if t == "1" else tuple(t.split())] += 1
            diff[lhs.strip()] = frozenset(w for w, c in words.items() if c % 2)
    return ChekanovDGA(tuple(gens), diff)


# ---------------------------------------------------------------------------
# disk enumeration


def _disks_from(events, start_gap: int, u0: int, l0: int, names: Mapping[int, str], budget: int) -> Counter:
    memo: dict = {}

    def walk(k: int, u: int, l: int) -> Counter:
        # paths at levels u < l in gap k, still to be continued leftwards
        key = (k, u, l)
        if key in memo:
            return memo[key]
        out: Counter = Counter()
        if k > 0:
            kind, j = events[k - 1]
            if kind == "L":
                if (u, l) == (j, j + 1):
                    out[((), ())] += 1
                elif u not in (j, j + 1) and l not in (j, j + 1):
                    sh = lambda p: p if p < j else p - 2  # noqa: E731
                    out = walk(k - 1, sh(u), sh(l))
            elif kind == "R":
                sh = lambda p: p if p < j else p + 2  # noqa: E731
                out = walk(k - 1, sh(u), sh(l))
            else:
                name = names[k - 1]
                if (u, l) != (j, j + 1):
                    swap = lambda p: j + 1 if p == j else j if p == j + 1 else p  # noqa: E731
                    u_opts = [(swap(u), None)]
                    if u == j + 1:
                        u_opts.append((u, name))
                    l_opts = [(swap(l), None)]
                    if l == j:
                        l_opts.append((l, name))
                    for nu, cu in u_opts:
                        for nl, cl in l_opts:
                            if nu >= nl:
                                continue
                            for (up, lo), c in walk(k - 1, nu, nl).items():
                                up2 = ((cu,) + up) if cu else up
                                lo2 = (lo + (cl,)) if cl else lo
                                out[(up2, lo2)] += c
                            if len(out) > budget:
                                raise BudgetExceeded(f"more than {budget} disks; raise the disk budget")
        memo[key] = out
        return out

    return walk(start_gap, u0, l0)


def build_dga(front: OrientedFront | FrontDiagram, max_crossings: int | None = DGA_CROSSING_BUDGET, disk_budget: int = DISK_BUDGET) -> ChekanovDGA:
    """Chekanov-Eliashberg DGA of the Lagrangian resolution of ``front``."""
    of = front if isinstance(front, OrientedFront) else orient(front)
    resolved = of.front.crossings + of.front.right_cusps
    if max_crossings is not None and resolved > max_crossings:
        raise BudgetExceeded(f"resolved diagram has {resolved} crossings, budget is {max_crossings}")
    fd = simple_front(of).front
    events = fd.events
    mu = maslov_labeling(fd)
    names: dict[int, str] = {}
    gens = []
    na = nc = 0
    for g, (kind, i) in enumerate(events):
        if kind == "X":
            na += 1
            names[g] = f"a{na}"
            gens.append((names[g], mu.crossing_degree(g, i)))
        elif kind == "R":
            nc += 1
            names[g] = f"c{nc}"
            gens.append((names[g], mu.reduce(1)))
    diff = {}
    for g, (kind, i) in enumerate(events):
        if kind not in ("X", "R"):
            continue
        disks = _disks_from(events, g, i, i + 1, names, disk_budget)
        words: Counter = Counter()
        for (up, lo), c in disks.items():
            words[up + lo] += c
        if kind == "R":
            words[()] += 1
        diff[names[g]] = frozenset(w for w, c in words.items() if c % 2)
    return ChekanovDGA(tuple(gens), diff, mu.modulus, of.name, fd)


# ---------------------------------------------------------------------------
# d^2 and augmentations


@dataclass(frozen=True)
class DSquaredVerdict:
    passed: bool
    generator: str | None = None
    word: Word | None = None

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return "PASS"
        return f"FAIL at {self.generator}: surviving word {' '.join(self.word) or '1'}"


def _d_word(dga: ChekanovDGA, word: Word) -> Counter:
    out: Counter = Counter()
    for k, x in enumerate(word):
        for w in dga.differential.get(x, ()):
            out[word[:k] + w + word[k + 1 :]] += 1
    return out


def check_d_squared(dga: ChekanovDGA) -> DSquaredVerdict:
    """PASS iff the differential squares to zero over Z/2."""
    for g, _ in dga.generators:
        total: Counter = Counter()
        for w in dga.differential[g]:
            total.update(_d_word(dga, w))
        bad = sorted(w for w, c in total.items() if c % 2)
        if bad:
            return DSquaredVerdict(False, g, bad[0])
    return DSquaredVerdict(True)


@dataclass(frozen=True)
class Augmentation:
    assignment: Mapping[str, int]
    graded: bool = False

    def support(self) -> tuple[str, ...]:
        return tuple(g for g, v in self.assignment.items() if v)


def find_augmentations(dga: ChekanovDGA, graded: bool = True, max_variables: int = AUGMENTATION_BUDGET) -> list[Augmentation]:
    """Every Z/2 assignment annihilating the differential.

    With ``graded`` only generators of degree 0 may be sent to 1.  The search
    is exhaustive, pruning an assignment as soon as one equation is fully
    determined and violated.  Results come in lexicographic order of the
    values on the free generators.
    """
    names = dga.names
    free = [g for g, d in dga.generators if not graded or dga.reduce(d) == 0]
    if len(free) > max_variables:
        raise BudgetExceeded(f"{len(free)} free generators exceed the budget of {max_variables}")
    pos = {g: k for k, g in enumerate(free)}
    equations = []
    for g in names:
        words = []
        for w in dga.differential[g]:
            if all(x in pos for x in w):
                words.append(tuple(pos[x] for x in w))
        ready = max((max(w) for w in words if w), default=-1)
        equations.append((ready, words))
    by_ready: dict[int, list] = {}
    for ready, words in equations:
        by_ready.setdefault(ready, []).append(words)

    def ok(eqs, values) -> bool:
        for words in eqs:
            s = 0
            for w in words:
                s ^= all(values[i] for i in w)
            if s:
                return False
        return True

    if not ok(by_ready.get(-1, []), []):
        return []
    found = []
    values: list[int] = []

    def extend(k: int):
        if k == len(free):
            assignment = {g: 0 for g in names}
            assignment.update({g: v for g, v in zip(free, values)})
            found.append(Augmentation(assignment, graded))
            return
        for v in (0, 1):
            values.append(v)
            if ok(by_ready.get(k, []), values):
                extend(k + 1)
            values.pop()

    extend(0)
    return found
