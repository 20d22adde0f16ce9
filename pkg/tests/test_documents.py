import io
import math
import re
import xml.etree.ElementTree as ET

import pytest

from fricke_hexagon.decomposition import OutsideV, make_vpoint
from fricke_hexagon.documents import (
    SWEEP_HEADER,
    HexagonDocument,
    csv_text,
    hexagon_svg,
    read_csv,
    sweep_grid,
    write_csv,
)
from fricke_hexagon.hexagon import build_hexagon
from fricke_hexagon.hplane import to_disk

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def hex2():
    return build_hexagon(make_vpoint(0.8, -1.2))


def test_json_round_trip(hex2):
    doc = HexagonDocument.from_result(hex2)
    back = HexagonDocument.from_json(doc.to_json())
    assert back == doc
    assert back.region == "II"
    assert len(back.vertices) == 6
    assert all(math.hypot(*p) < 1 for p in back.vertices)
    assert back.total == pytest.approx(2 * back.a + back.c + back.d)


def test_csv_round_trip():
    rows = sweep_grid(0.55, 0.95, 10, 10)
    assert len(rows) == 100
    assert all(r.total > 5.7745 for r in rows)
    text = csv_text(rows)
    assert text.splitlines()[0] == ",".join(SWEEP_HEADER)
    assert read_csv(io.StringIO(text)) == rows


def test_csv_small_grid():
    assert len(sweep_grid(0.6, 0.9, 2, 2)) == 4
    with pytest.raises(ValueError):
        sweep_grid(0.6, 0.9, 1, 2)


def test_csv_rejects_bad_rows():
    bad = ",".join(SWEEP_HEADER) + "\n0.6,1.0,I,1,1,1,4\n"
    with pytest.raises(OutsideV):
        read_csv(io.StringIO(bad))
    with pytest.raises(ValueError):
        read_csv(io.StringIO("t,s\n0.6,0\n"))


def test_csv_writer_stream():
    buf = io.StringIO()
    write_csv(sweep_grid(0.6, 0.9, 2, 3), buf)
    assert len(buf.getvalue().splitlines()) == 7


def test_svg_well_formed(hex2):
    root = ET.fromstring(hexagon_svg(hex2).split("\n", 1)[1])
    assert root.tag == SVG + "svg"
    sides = [p for p in root.iter(SVG + "path") if p.get("class") == "side"]
    assert [p.get("data-side") for p in sides] == ["a", "c", "d", "b", "c'", "d'"]
    assert any(c.get("class") == "boundary" for c in root.iter(SVG + "circle"))
    assert sum(c.get("class") == "vertex" for c in root.iter(SVG + "circle")) == 6


def test_svg_arcs_are_geodesics(hex2):
    # each arc's circle meets the unit circle at right angles and passes
    # through both vertices it joins
    root = ET.fromstring(hexagon_svg(hex2).split("\n", 1)[1])
    sides = [p for p in root.iter(SVG + "path") if p.get("class") == "side"]
    vs = [to_disk(p) for p in hex2.vertices]
    for k, path in enumerate(sides):
        nums = [float(x) for x in re.findall(r"-?[\d.]+(?:e-?\d+)?", path.get("d"))]
        if "A" not in path.get("d"):
            continue
        px, py, r, _, _, _, sweep, qx, qy = nums
        assert sweep in (0, 1)
        p, q = complex(px, -py), complex(qx, -qy)
        assert p == pytest.approx(vs[k - 1], abs=1e-8)
        assert q == pytest.approx(vs[k], abs=1e-8)
        # recover the centre from the two points and the radius
        mid, half = 0.5 * (p + q), 0.5 * abs(q - p)
        h = math.sqrt(max(r * r - half * half, 0.0))
        n = 1j * (q - p) / abs(q - p)
        centres = [mid + h * n, mid - h * n]
        assert any(abs(abs(c) ** 2 - (r * r + 1)) < 1e-6 for c in centres)
