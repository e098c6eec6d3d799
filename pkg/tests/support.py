"""Helpers shared by the test modules."""

from __future__ import annotations

import random

from frontcalc.claims import (
    CONNECTSUM,
    DECOMPOSABLE,
    INVERSION,
    SATELLITE,
    ClaimError,
    ClaimGraph,
    InferenceError,
    Node,
    claim_edge,
    infer,
)
from frontcalc.corpus import get_trace
from frontcalc.moves import apply_move, applicable_moves
from frontcalc.ops import stabilize


def random_walk(front, rng: random.Random, steps: int, stab_rate: float = 0.0):
    """Random isotopy moves with occasional stabilisations.

    Returns the final front and the list of signs used for stabilisation.
    """
    signs = []
    for _ in range(steps):
        if rng.random() < stab_rate:
            sign = rng.choice("+-")
            g = rng.randrange(len(front.front.counts))
            p = rng.randint(1, front.front.counts[g]) if front.front.counts[g] else None
            if p is None:
                continue
            front = stabilize(front, sign, (g, p))
            signs.append(sign)
            continue
        moves = list(applicable_moves(front))
        if not moves:
            continue
        front = apply_move(front, rng.choice(moves))
    return front, signs


def random_claim_graph(rng: random.Random, n_base: int = 5, tries: int = 40) -> ClaimGraph:
    """A random graph whose edges all pass :func:`claim_edge` and whose
    inference is consistent."""
    cyl = get_trace("unknot-cylinder")
    while True:
        g = ClaimGraph()
        hashes = ["h0", "h1", "h2", None]
        base = [f"K{i}" for i in range(n_base)]
        for name in base:
            g = g.with_node(Node(name, 1, 0, rng.choice(hashes)))
        for name in base:
            for op, tag in (("stab", "S1"), ("satellite", "W0"), ("connectsum", "T")):
                g = g.with_node(Node(f"{op}-{name}", 1, 0, rng.choice(hashes), (op, name, tag)))
        derived = {"stab": (INVERSION, SATELLITE), "satellite": (SATELLITE,), "connectsum": (CONNECTSUM,)}
        for _ in range(tries):
            if rng.random() < 0.4:
                a, b = rng.sample(base, 2)
                prov, kw = DECOMPOSABLE, {"trace": cyl}
            else:
                op = rng.choice(list(derived))
                a, b = (f"{op}-{x}" for x in rng.sample(base, 2))
                prov, kw = rng.choice(derived[op]), {}
            if g.find(a, b, prov) is not None:
                continue
            try:
                g = claim_edge(g, a, b, prov, **kw)
            except ClaimError:
                continue
        try:
            infer(g)
        except InferenceError:
            continue
        return g
