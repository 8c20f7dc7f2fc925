import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbsurf import (
    MultibranchedSurface,
    Sector,
    SurfaceFormatError,
    XgFamily,
    is_regular,
    make_xg,
    parse_surface,
    serialize_surface,
)

X035_DOC = """
{
  "branches": ["b1", "b2", "b3"],
  "sectors": [
    {"genus": 0,
     "boundary": [{"branch": "b1", "degree": 2},
                  {"branch": "b2", "degree": 3},
                  {"branch": "b3", "degree": 5}]}
  ]
}
"""


def test_parse_family_document():
    assert parse_surface(X035_DOC) == make_xg(0, [2, 3, 5])


def test_parse_unknown_branch():
    doc = json.dumps({
        "branches": ["b1"],
        "sectors": [{"genus": 0, "boundary": [{"branch": "b9", "degree": 2}]}],
    })
    with pytest.raises(SurfaceFormatError, match="unknown branch"):
        parse_surface(doc)


def test_parse_zero_degree():
    doc = json.dumps({
        "branches": ["b1"],
        "sectors": [{"genus": 0, "boundary": [{"branch": "b1", "degree": 0}]}],
    })
    with pytest.raises(SurfaceFormatError, match="zero covering degree"):
        parse_surface(doc)


def test_parse_error_carries_location():
    doc = json.dumps({
        "branches": ["b1"],
        "sectors": [
            {"genus": 0, "boundary": []},
            {"genus": 1, "boundary": [{"branch": "b1", "degree": 1},
                                      {"branch": "nope", "degree": 2}]},
        ],
    })
    with pytest.raises(SurfaceFormatError, match=r"sectors\[1\].boundary\[1\].branch"):
        parse_surface(doc)


@pytest.mark.parametrize("text", [
    "not json at all",
    "[1, 2, 3]",
    '{"branches": ["b1"]}',
    '{"branches": [], "sectors": [{"genus": 0, "boundary": []}]}',
    '{"branches": ["b1"], "sectors": []}',
    '{"branches": ["b1", "b1"], "sectors": [{"genus": 0, "boundary": []}]}',
    '{"branches": ["b1"], "sectors": [{"genus": -1, "boundary": []}]}',
    '{"branches": ["b1"], "sectors": [{"genus": 0, "boundary": [{"branch": "b1", "degree": 1.5}]}]}',
])
def test_parse_rejects_invalid_documents(text):
    with pytest.raises(SurfaceFormatError):
        parse_surface(text)


def test_make_xg_shape():
    surface = make_xg(0, [2, 3, 5])
    assert surface.branches == ("b1", "b2", "b3")
    assert len(surface.sectors) == 1
    assert surface.sectors[0].genus == 0
    assert surface.sectors[0].boundary == (("b1", 2), ("b2", 3), ("b3", 5))

    high = make_xg(2, [7])
    assert high.sectors[0].genus == 2
    assert high.branches == ("b1",)
    assert high.sectors[0].boundary == (("b1", 7),)


def test_make_xg_rejects_low_degrees():
    with pytest.raises(ValueError):
        make_xg(0, [1, 2])
    with pytest.raises(ValueError):
        make_xg(0, [])
    with pytest.raises(ValueError):
        make_xg(-1, [2])


def test_xg_family_type():
    fam = XgFamily(1, (2, 3))
    assert fam.surface() == make_xg(1, [2, 3])
    with pytest.raises(ValueError):
        XgFamily(0, (2, 1))


def test_sector_validation():
    with pytest.raises(ValueError, match="zero covering degree"):
        Sector(0, (("b1", 0),))
    with pytest.raises(ValueError):
        Sector(-1, ())


def test_surface_validation():
    with pytest.raises(ValueError, match="unknown branch"):
        MultibranchedSurface(("b1",), (Sector(0, (("b2", 2),)),))
    with pytest.raises(ValueError):
        MultibranchedSurface((), (Sector(0, ()),))
    with pytest.raises(ValueError):
        MultibranchedSurface(("b1",), ())


def _two_sector_surface(d1, d2):
    return MultibranchedSurface(
        ("b1",),
        (Sector(0, (("b1", d1),)), Sector(0, (("b1", d2),))),
    )


@pytest.mark.parametrize("g,degrees", [(0, [2, 3, 5]), (3, [7]), (1, [2, 2]), (5, [9, 9, 9])])
def test_family_always_regular(g, degrees):
    assert is_regular(make_xg(g, degrees))


def test_regularity_by_attachment_enumeration():
    # cross-check against the definition: collect the incident degrees of
    # every branch by hand and compare their absolute values
    for d1 in range(-4, 5):
        for d2 in range(-4, 5):
            if d1 == 0 or d2 == 0:
                continue
            surface = _two_sector_surface(d1, d2)
            incident = [d for sector in surface.sectors for b, d in sector.boundary if b == "b1"]
            assert incident == [d1, d2]
            assert is_regular(surface) == (abs(d1) == abs(d2))
    assert not is_regular(_two_sector_surface(2, 3))
    assert is_regular(_two_sector_surface(2, -2))


_IDS = st.text(alphabet="abcdefghijklmnopqrstuvwxyz0123456789_", min_size=1, max_size=6)


@st.composite
def _surfaces(draw):
    branches = tuple(sorted(draw(st.lists(_IDS, min_size=1, max_size=8, unique=True))))
    degrees = st.integers(-9, 9).filter(lambda d: d != 0)
    sector = st.builds(
        Sector,
        st.integers(0, 3),
        st.lists(st.tuples(st.sampled_from(branches), degrees), max_size=6).map(tuple),
    )
    sectors = tuple(draw(st.lists(sector, min_size=1, max_size=8)))
    return MultibranchedSurface(branches, sectors)


@settings(max_examples=150, deadline=None)
@given(_surfaces())
def test_roundtrip(surface):
    text = serialize_surface(surface)
    assert parse_surface(text) == surface
    # byte-equivalent once normalized
    assert serialize_surface(parse_surface(text)) == text


@settings(max_examples=60, deadline=None)
@given(_surfaces())
def test_serialized_branches_sorted(surface):
    doc = json.loads(serialize_surface(surface))
    assert doc["branches"] == sorted(doc["branches"])
    assert list(doc) == ["branches", "sectors"]
