import xml.etree.ElementTree as ET

import pytest

from frontcalc.corpus import get_front, get_pattern
from frontcalc.render import render_svg

NS = "{http://www.w3.org/2000/svg}"


def _classes(svg):
    root = ET.fromstring(svg)
    return [p.get("class") for p in root.iter(NS + "path")]


def test_unknot():
    svg = render_svg(get_front("unknot"))
    assert _classes(svg) == ["cusp", "cusp"]
    assert "<title>unknot</title>" in svg


def test_trefoil_counts():
    cls = _classes(render_svg(get_front("trefoil")))
    assert cls.count("cusp") == 4 and cls.count("over") == 3 and cls.count("under") == 3


def test_pattern():
    cls = _classes(render_svg(get_pattern("W0")))
    assert cls.count("cusp") == 2 and cls.count("over") == 2


def test_deterministic():
    k = get_front("m946")
    assert render_svg(k) == render_svg(k)
    assert render_svg(k, title="x") != render_svg(k)


def test_rejects_other_types():
    with pytest.raises(TypeError):
        render_svg("L 1")
