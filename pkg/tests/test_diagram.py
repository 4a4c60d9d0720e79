import pytest

from boscohom import catalog
from boscohom.diagram import (
    UNKNOT,
    LinkDiagram,
    from_braid,
    mirror,
    parse_pd,
    read_catalog,
    relabel,
    resolve_crossing,
)
from boscohom.errors import ArcMultiplicity, Disconnected, MalformedCode
from boscohom.invariants import determinant_goeritz
from conftest import SMALL

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_parse_formats_agree():
    a = parse_pd(TREFOIL)
    b = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    c = parse_pd("1 4 2 5 3 6 4 1 5 2 6 3")
    assert a == b == c
    assert a.n_crossings == 3 and a.arcs == (1, 2, 3, 4, 5, 6)


def test_unknot_keyword():
    assert parse_pd("unknot") is UNKNOT
    assert UNKNOT.n_crossings == 0 and UNKNOT.n_components == 1


@pytest.mark.parametrize(
    "text, err",
    [
        ("", MalformedCode),
        ("X(1,2,3)", MalformedCode),
        ("X(1,1,2,3)", ArcMultiplicity),
        ("X(1,2,3,4) hello", MalformedCode),
        ("X(1,4,2,3)", ArcMultiplicity),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_pd(text)


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        parse_pd("X(1,1,2,2) X(3,3,4,4)")


def test_trefoil_signs_and_mirror():
    d = parse_pd(TREFOIL)
    assert d.signs == (-1, -1, -1)
    m = mirror(d)
    assert m.signs == (1, 1, 1)
    assert (m.n_plus, m.n_minus) == (d.n_minus, d.n_plus)
    assert mirror(m) == d


@pytest.mark.parametrize("name", SMALL)
def test_mirror_is_involution(name):
    d = catalog.get(name)
    m = mirror(d)
    assert mirror(m) == d
    assert m.signs == tuple(-s for s in d.signs)
    assert determinant_goeritz(m) == determinant_goeritz(d)


def test_unknot_mirror():
    assert mirror(UNKNOT) == UNKNOT


def test_kinks_have_opposite_signs():
    assert catalog.get("unknot_kink_pos").signs == (1,)
    assert catalog.get("unknot_kink_neg").signs == (-1,)


def test_resolutions_of_trefoil():
    d = parse_pd(TREFOIL)
    d0, d1 = resolve_crossing(d, 0, 0), resolve_crossing(d, 0, 1)
    assert d0.n_crossings == d1.n_crossings == 2
    assert {d0.n_components, d1.n_components} == {1, 2}
    hopf, unknot = (d0, d1) if d0.n_components == 2 else (d1, d0)
    assert determinant_goeritz(hopf) == 2
    assert determinant_goeritz(unknot) == 1
    # the skein relation for the determinant: 3 = 2 + 1
    assert determinant_goeritz(d) == determinant_goeritz(hopf) + determinant_goeritz(unknot)


def test_braid_closure():
    t = from_braid([1, 1, 1])
    assert t.signs == (1, 1, 1) and t.n_components == 1
    assert determinant_goeritz(t) == 3
    assert from_braid([-1, -1, -1]).signs == (-1, -1, -1)
    assert from_braid([1, 1]).n_components == 2
    fig8 = from_braid([1, -2, 1, -2])
    assert determinant_goeritz(fig8) == 5 and not any(s == 0 for s in fig8.signs)


def test_relabel_keeps_diagram():
    d = parse_pd(TREFOIL)
    r = relabel(d, 2)
    assert r.crossings[0] == d.crossings[2]
    assert sorted(r.crossings) == sorted(d.crossings)


def test_pd_text_roundtrip():
    for name in SMALL:
        d = catalog.get(name)
        if d.n_crossings:
            assert parse_pd(d.pd_text()) == d


def test_catalog_parse_and_comments():
    text = "# header\ntref: " + TREFOIL + "  # trailing\n\nu: UNKNOT\n"
    cat = read_catalog(text)
    assert set(cat) == {"tref", "u"}
    assert cat["tref"].name == "tref"
    with pytest.raises(MalformedCode):
        read_catalog("no colon here")


def test_components_of_catalog_links():
    assert catalog.get("hopf").n_components == 2
    assert catalog.get("split_clasp").n_components == 2
    assert catalog.get("knot_8_19").n_components == 1


def test_alternating_flags():
    assert catalog.get("trefoil").is_alternating()
    assert catalog.get("figure_eight").is_alternating()
    assert not catalog.get("knot_8_19").is_alternating()


def test_name_not_part_of_equality():
    d = parse_pd(TREFOIL)
    assert LinkDiagram(d.crossings, name="x") == d
