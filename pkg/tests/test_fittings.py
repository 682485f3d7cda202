import io
import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pipefit import (
    Catalog,
    CatalogError,
    ElbowFitting,
    EmptyCatalogError,
    HubFitting,
    dump_catalog,
    load_catalog,
    standard_catalog,
)


def test_standard_hubs():
    cat = standard_catalog()
    assert [h.name for h in cat.hubs] == ["true-wye", "four-way-plus", "five-way-planar", "cube-corner"]
    assert math.degrees(cat.hub("true-wye").alpha) == 90.0
    assert cat.hub("true-wye").is_planar
    assert cat.hub("four-way-plus").arm_count == 4
    assert cat.hub("five-way-planar").arm_count == 5
    assert math.degrees(cat.hub("cube-corner").alpha) == pytest.approx(54.735610317245346, abs=1e-12)
    assert not cat.hub("cube-corner").is_planar
    for h in cat.hubs:
        assert h.arm_length == 2.5
        assert h.socket_depth == 0.0


def test_standard_elbows():
    cat = standard_catalog()
    assert sorted(math.degrees(e.bend_angle) for e in cat.elbows) == pytest.approx([11.25, 22.5, 45.0, 90.0])
    assert all(e.takeoff == 0 and e.socket_depth == 0 for e in cat.elbows)


def test_standard_catalog_is_referentially_transparent():
    assert standard_catalog() == standard_catalog()


def test_cube_corner_arms_mutually_perpendicular():
    # arms at alpha to a common axis, 120 deg apart around it
    a = standard_catalog().hub("cube-corner").alpha
    u = [(math.sin(a) * math.cos(t), math.sin(a) * math.sin(t), math.cos(a))
         for t in (0, 2 * math.pi / 3)]
    assert sum(x * y for x, y in zip(*u)) == pytest.approx(0.0, abs=1e-12)


def test_load_minimal():
    doc = {
        "hubs": [{"name": "wye", "arm_count": 3, "arm_axis_angle_deg": 90, "arm_length": 2.5, "socket_depth": 0}],
        "elbows": [{"name": "e22", "bend_angle_deg": 22.5, "takeoff": 0, "socket_depth": 0}],
    }
    cat = load_catalog(io.BytesIO(json.dumps(doc).encode()))
    assert len(cat.hubs) == 1 and len(cat.elbows) == 1
    assert cat.hub("wye").alpha == math.pi / 2
    assert cat.elbow("e22").bend_angle == pytest.approx(math.radians(22.5))


def test_load_accepts_text_and_defaults():
    cat = load_catalog('{"hubs": [{"name": "w", "arm_count": 3, "arm_axis_angle_deg": 90}],'
                       ' "elbows": [{"name": "e", "bend_angle_deg": 45}]}')
    assert cat.hub("w").arm_length == 2.5
    assert cat.elbow("e").takeoff == 0.0


def _doc(**over):
    doc = {
        "hubs": [{"name": "wye", "arm_count": 3, "arm_axis_angle_deg": 90}],
        "elbows": [{"name": "e22", "bend_angle_deg": 22.5}],
    }
    doc.update(over)
    return json.dumps(doc)


@pytest.mark.parametrize(
    "text, fragment",
    [
        (_doc(hubs=[{"name": "wye", "arm_count": 3, "arm_axis_angle_deg": 90},
                    {"name": "wye", "arm_count": 4, "arm_axis_angle_deg": 90}]), "'wye'"),
        (_doc(elbows=[{"name": "e", "bend_angle_deg": 22.5}, {"name": "e", "bend_angle_deg": 45}]), "'e'"),
        (_doc(hubs=[{"name": "wide", "arm_count": 3, "arm_axis_angle_deg": 120}]), "'wide'"),
        (_doc(hubs=[{"name": "flat", "arm_count": 3, "arm_axis_angle_deg": 0}]), "'flat'"),
        (_doc(hubs=[{"name": "two", "arm_count": 2, "arm_axis_angle_deg": 90}]), "'two'"),
        (_doc(hubs=[{"name": "x", "arm_count": 3, "arm_axis_angle_deg": 90, "color": "white"}]), "'x'"),
        (_doc(elbows=[{"name": "neg", "bend_angle_deg": -5}]), "'neg'"),
        (_doc(elbows=[{"name": "short", "bend_angle_deg": 5, "takeoff": -1}]), "'short'"),
        (_doc(hubs=[{"name": "s", "arm_count": 3.5, "arm_axis_angle_deg": 90}]), "'s'"),
        (_doc(hubs=[{"name": "z", "arm_count": 3, "arm_axis_angle_deg": 90, "arm_length": 0}]), "'z'"),
        (_doc(elbows=[]), "no elbows"),
        (_doc(extra=1), "unknown"),
        ('{"hubs": [], "elbows": [{"name": "e", "bend_angle_deg": NaN}]}', "non-finite"),
        ('{"hubs": [], "elbows": [{"name": "e", "bend_angle_deg": Infinity}]}', "non-finite"),
        ('{"hubs": [', "malformed"),
        ("[1, 2]", "object"),
        (b"\xff\xfe", "malformed"),
    ],
)
def test_load_rejects(text, fragment):
    with pytest.raises(CatalogError) as info:
        load_catalog(text)
    assert fragment in str(info.value)


def test_empty_elbow_list_error_type():
    with pytest.raises(EmptyCatalogError):
        load_catalog(_doc(elbows=[]))


def test_lookup_missing_name():
    with pytest.raises(CatalogError, match="no hub named"):
        standard_catalog().hub("nope")
    with pytest.raises(CatalogError, match="no elbow named"):
        standard_catalog().elbow("nope")


def test_constructor_validation():
    with pytest.raises(CatalogError):
        HubFitting("h", 3, math.radians(91))
    with pytest.raises(CatalogError):
        ElbowFitting("e", math.pi)
    with pytest.raises(CatalogError):
        Catalog(hubs=(HubFitting("h", 3, 1.0), HubFitting("h", 3, 1.0)))


names = st.text(alphabet="abcdefghij-0123456789", min_size=1, max_size=8)
hubs = st.builds(
    HubFitting,
    name=names,
    arm_count=st.integers(3, 8),
    alpha=st.floats(min_value=1e-3, max_value=math.pi / 2),
    arm_length=st.floats(min_value=0.01, max_value=100),
    socket_depth=st.floats(min_value=0, max_value=10),
)
elbows = st.builds(
    ElbowFitting,
    name=names,
    bend_angle=st.floats(min_value=0, max_value=math.pi * 0.999),
    takeoff=st.floats(min_value=0, max_value=10),
    socket_depth=st.floats(min_value=0, max_value=10),
)
catalogs = st.builds(
    Catalog,
    hubs=st.lists(hubs, max_size=5, unique_by=lambda h: h.name).map(tuple),
    elbows=st.lists(elbows, min_size=1, max_size=5, unique_by=lambda e: e.name).map(tuple),
)


@given(catalogs)
def test_round_trip(cat):
    back = load_catalog(dump_catalog(cat).encode())
    assert [h.name for h in back.hubs] == [h.name for h in cat.hubs]
    assert [e.name for e in back.elbows] == [e.name for e in cat.elbows]
    for a, b in zip(cat.hubs, back.hubs):
        assert b.arm_count == a.arm_count
        assert b.alpha == pytest.approx(a.alpha, abs=1e-12)
        assert b.arm_length == a.arm_length
        assert b.socket_depth == a.socket_depth
    for a, b in zip(cat.elbows, back.elbows):
        assert b.bend_angle == pytest.approx(a.bend_angle, abs=1e-12)
        assert b.takeoff == a.takeoff
        assert b.socket_depth == a.socket_depth


def test_standard_round_trip_exact_names():
    cat = standard_catalog()
    back = load_catalog(dump_catalog(cat))
    assert back.hub("true-wye").alpha == math.pi / 2
