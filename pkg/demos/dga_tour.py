"""Differentials, d^2 and augmentations for a few small fronts.

The trefoil is fillable and has graded augmentations; a stabilised knot
has none, which is how the demo certifies non-fillability.

    python3 demos/dga_tour.py
"""

from frontcalc import corpus
from frontcalc.dga import build_dga, check_d_squared, find_augmentations
from frontcalc.ops import satellite, stabilize, whitehead_pattern

knots = {
    "unknot": corpus.get_front("unknot"),
    "trefoil": corpus.get_front("trefoil"),
    "T2_5": corpus.get_front("T2_5"),
    "S+(trefoil)": stabilize(corpus.get_front("trefoil"), "+"),
    "Wh(unknot)": satellite(corpus.get_front("unknot"), whitehead_pattern()).front,
}

for name, front in knots.items():
    dga = build_dga(front)
    augs = find_augmentations(dga, graded=True)
    print(f"== {name}: tb {front.tb} rot {front.rot}, {len(dga.names)} generators, d^2 {check_d_squared(dga)}")
    if len(dga.names) <= 6:
        print(dga.text().rstrip())
    print(f"graded augmentations {len(augs)}")
    for aug in augs[:5]:
        print("   eps = 1 on", " ".join(aug.support()) or "nothing")
    print()
