"""Named knots, patterns and move scripts shipped with the package.

The corpus file holds ``front``, ``pattern`` and ``trace`` blocks.  Single
lines ``note <name> <text>`` and ``expect <name> <key> <value> ...`` attach
provenance and expected invariants to the block called ``<name>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator

from .cobordism import CobordismTrace, parse_documents
from .dga import DGA_CROSSING_BUDGET, build_dga, find_augmentations
from .front import OrientedFront, classical_invariants, orient
from .ops import Pattern, parse_pattern
from .claims import jones_hash
from .smooth import jones, resolve

__all__ = ["CorpusEntry", "Check", "load_corpus", "corpus_text", "verify_entry", "verify_corpus", "get_front", "get_trace", "get_pattern"]

_INT_KEYS = {"tb", "rot", "components", "augmentations", "chi", "genus", "births", "pinches", "arity", "crossings", "cycles"}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    item: object
    source: str
    note: str = ""
    expected: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    entry: str
    key: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.entry} {self.key} expected {self.expected} got {self.actual}"


def corpus_text() -> str:
    return resources.files("frontcalc").joinpath("data/corpus.txt").read_text()


def _blocks(text: str) -> Iterator[tuple[str, str, str]]:
    lines = text.split("\n")
    k = 0
    while k < len(lines):
        head = lines[k].split("#", 1)[0].split()
        if head and head[0] in ("front", "pattern", "trace"):
            j = k
            while lines[j].split("#", 1)[0].strip() != "end":
                j += 1
            yield head[0], head[1], "\n".join(lines[k : j + 1]) + "\n"
            k = j + 1
        else:
            k += 1


def load_corpus(text: str | None = None) -> dict[str, CorpusEntry]:
    text = corpus_text() if text is None else text
    notes: dict[str, str] = {}
    expected: dict[str, dict] = {}
    body = []
    for line in text.split("\n"):
        parts = line.split("#", 1)[0].split()
        if parts and parts[0] == "note":
            notes[parts[1]] = " ".join(parts[2:])
            body.append("")
        elif parts and parts[0] == "expect":
            d = expected.setdefault(parts[1], {})
            for key, value in zip(parts[2::2], parts[3::2]):
                d[key] = int(value) if key in _INT_KEYS else value
            body.append("")
        else:
            body.append(line)
    clean = "\n".join(body)
    docs = parse_documents(clean)
    out = {}
    for kind, name, src in _blocks(clean):
        item = docs[name]
        if kind == "pattern":
            item = parse_pattern(item)
        elif kind == "front":
            item = orient(item)
        out[name] = CorpusEntry(name, kind, item, src, notes.get(name, ""), expected.get(name, {}))
    return out


def get_front(name: str) -> OrientedFront:
    e = load_corpus()[name]
    if e.kind != "front":
        raise KeyError(f"{name} is a {e.kind}, not a front")
    return e.item


def get_trace(name: str) -> CobordismTrace:
    e = load_corpus()[name]
    if e.kind != "trace":
        raise KeyError(f"{name} is a {e.kind}, not a trace")
    return e.item


def get_pattern(name: str) -> Pattern:
    e = load_corpus()[name]
    if e.kind != "pattern":
        raise KeyError(f"{name} is a {e.kind}, not a pattern")
    return e.item


def _derive(entry: CorpusEntry, key: str):
    item = entry.item
    if entry.kind == "front":
        inv = classical_invariants(item)
        if key in ("tb", "rot", "components", "crossings"):
            return getattr(inv, key)
        if key == "jones":
            return jones_hash(jones(resolve(item), None))
        if key == "augmentations":
            return len(find_augmentations(build_dga(item, DGA_CROSSING_BUDGET), graded=True))
    if entry.kind == "trace":
        s = item.summary
        if key in ("chi", "genus", "births", "pinches"):
            return getattr(s, key)
        if key in ("filling", "concordance"):
            return str(getattr(s, "is_" + key)).lower()
        if key == "start":
            return item.start.name
        if key == "end":
            return item.end.name
    if entry.kind == "pattern":
        if key == "arity":
            return item.arity
        if key == "crossings":
            return item.crossings
        if key == "cycles":
            return item.closure_cycles()
    raise KeyError(f"cannot derive {key!r} for {entry.kind} {entry.name}")


def verify_entry(entry: CorpusEntry) -> list[Check]:
    out = []
    for key, want in entry.expected.items():
        try:
            got = _derive(entry, key)
        except Exception as exc:  # reported as a failed check
            got = f"error: {exc}"
        out.append(Check(entry.name, key, want, got))
    return out


def verify_corpus(text: str | None = None) -> list[Check]:
    checks = []
    for entry in load_corpus(text).values():
        checks += verify_entry(entry)
    return checks
