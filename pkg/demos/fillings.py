"""Replay the shipped move scripts and compare the surfaces they trace out.

    python3 demos/fillings.py
"""

from frontcalc import corpus
from frontcalc.cobordism import TraceError, compose, connect_sum_trace, frames

entries = corpus.load_corpus()
for name, e in entries.items():
    if e.kind != "trace":
        continue
    s = e.item.summary
    genus = "-" if s.genus is None else s.genus
    print(f"{name:18s} chi {s.chi:3d} genus {genus}  filling {s.is_filling!s:5s} concordance {s.is_concordance}")

# the slice disk of m(9_46), one frame per move
disk = corpus.get_trace("m946-filling")
print(f"\n{disk.name}")
for k, frame in enumerate(frames(disk)):
    print(f"  {k:2d}  {len(frame.events):2d} events  tb {frame.tb:3d}")

# stacking a disk on a concordance gives a filling; the other order fails
both = compose(corpus.get_trace("unknot-disk"), corpus.get_trace("unknot-to-m946"))
print(f"\ndisk then concordance: chi {both.summary.chi}, filling {both.summary.is_filling}")
try:
    compose(corpus.get_trace("unknot-to-m946"), corpus.get_trace("unknot-disk")).summary
except TraceError as exc:
    print(f"concordance then disk: rejected ({exc})")

# genus adds under cusp connected sum of fillings
tref = corpus.get_trace("trefoil-filling")
surface = tref
for g in (2, 3):
    surface = connect_sum_trace(tref, surface)
    print(f"{g} trefoils: genus {surface.summary.genus}, end tb {surface.end.tb}")
