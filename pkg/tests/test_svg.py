import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from hypants.horoball import CuspLattice, Horoball, orbit_enumerate, rigid_group
from hypants.svg import render_diagram

GOLDEN = Path(__file__).parent / "golden" / "rigid_orbit.svg"
NS = "{http://www.w3.org/2000/svg}"


def structure(text):
    """(tag, sorted attributes, text) for every element, in document order."""
    root = ET.fromstring(text)
    return [(el.tag, sorted(el.attrib.items()), (el.text or "").strip()) for el in root.iter()]


def rigid_svg():
    G = rigid_group()
    return render_diagram(orbit_enumerate(G, 0.05, 8), G.lattice)


def test_golden_structure():
    assert structure(rigid_svg()) == structure(GOLDEN.read_text())


def test_deterministic():
    assert rigid_svg() == rigid_svg()


def test_circles_match_balls():
    G = rigid_group()
    balls = [B for B in orbit_enumerate(G, 0.05, 8) if not B.infinite]
    root = ET.fromstring(render_diagram(balls, G.lattice))
    circles = root.findall(f"{NS}g/{NS}circle")
    assert [c.get("id") for c in circles] == [f"ball-{i:04d}" for i in range(len(balls))]
    for c, B in zip(circles, balls):
        assert float(c.get("r")) == pytest.approx(B.size / 2, abs=1e-6)
        assert float(c.get("cx")) == pytest.approx(B.center.re, abs=1e-6)


def test_single_top_ball(tmp_path):
    out = tmp_path / "top.svg"
    text = render_diagram([Horoball.at_infinity()], CuspLattice(1, 1j), out)
    assert out.read_text() == text
    root = ET.fromstring(text)
    assert root.find(f"{NS}polygon").get("id") == "lattice"
    assert root.findall(f"{NS}g/{NS}circle") == []
    assert "height 1" in root.find(f"{NS}text").text


def test_empty():
    with pytest.raises(ValueError):
        render_diagram([], CuspLattice(1, 1j))


def test_unwritable(tmp_path):
    with pytest.raises(OSError):
        render_diagram([Horoball.at_infinity()], CuspLattice(1, 1j), tmp_path / "no" / "x.svg")
