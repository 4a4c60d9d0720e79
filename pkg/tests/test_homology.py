import json

import pytest

from boscohom import catalog
from boscohom.algebra import LaurentMonomial, RationalFunction
from boscohom.homology import (
    CANCELLED,
    CERT_EQUAL,
    CERT_EXACT,
    CERT_UPPER,
    EXACT,
    SPECIALIZED,
    HomologyReport,
    cancellation_reduce,
    certify,
    cohomology,
    degree_label,
    diagram_cohomology,
    euler_characteristic,
    rank_bareiss,
    rank_exact,
    sign_of,
)
from conftest import SMALL, UP_TO_7
from oracles import generic_rank

ONE = RationalFunction.one()


def var(i):
    return RationalFunction.from_monomial(LaurentMonomial({i: 1}))


def inv1p(x):
    return (ONE + x).inverse()


def test_degree_labels_and_signs():
    assert degree_label(0) == "0"
    assert degree_label(-4) == "-2"
    assert degree_label(3) == "3/2"
    assert degree_label(-1) == "-1/2"
    assert [sign_of(D) for D in (-2, 0, 2, 4)] == [-1, 1, -1, 1]
    assert sign_of(1) == 1 and sign_of(-1) == sign_of(3) == -1


def test_rank_of_singular_two_by_two():
    a, b, c = var(0), var(1), inv1p(var(2))
    m = {(0, 0): a, (0, 1): b, (1, 0): a * c, (1, 1): b * c}
    assert rank_exact(m) == 1
    assert rank_bareiss(m) == 1
    m[(1, 1)] = b * c + ONE
    assert rank_exact(m) == 2 == rank_bareiss(m)


def test_rank_empty_and_zero():
    assert rank_exact({}) == 0
    assert rank_exact({(0, 0): RationalFunction.zero()}) == 0


@pytest.mark.parametrize("name", UP_TO_7)
def test_field_and_bareiss_agree(name, complexes):
    c = complexes(name)
    for m in c.differentials.values():
        assert rank_exact(m) == rank_exact(m, method="bareiss")


@pytest.mark.parametrize("name", UP_TO_7 + ["knot_8_20"])
def test_rank_matches_evaluation_oracle(name, complexes):
    c = complexes(name)
    for D, m in c.differentials.items():
        assert rank_exact(m) == generic_rank(m, c.shape(D), len(c.variables))


@pytest.mark.parametrize("name", SMALL)
def test_modes_agree(name, complexes):
    c = complexes(name)
    exact = cohomology(c, EXACT)
    cancelled = cohomology(c, CANCELLED)
    assert exact.ranks == cancelled.ranks
    for by in ("cancellation", "elimination"):
        spec = cohomology(c, SPECIALIZED, specialized_by=by)
        assert all(spec.ranks[D] >= exact.ranks[D] for D in exact.ranks)


@pytest.mark.parametrize("name", SMALL)
def test_ranks_alternate_to_euler(name, complexes):
    c = complexes(name)
    r = cohomology(c, CANCELLED)
    assert sum(sign_of(D) * k for D, k in r.ranks.items()) == euler_characteristic(c)


def test_cancellation_shrinks_to_homology(complexes):
    c = complexes("knot_8_19")
    reduced = cancellation_reduce(c)
    assert reduced.counts() == {6: 3}
    assert not any(reduced.differentials.values())


def test_cancellation_keeps_d_squared(complexes):
    from boscohom.complex import verify_d_squared

    c = complexes("figure_eight")
    assert verify_d_squared(cancellation_reduce(c))


def _report(ranks, chi, mode=SPECIALIZED, cert=CERT_UPPER):
    return HomologyReport(ranks, mode, cert, chi, dict(ranks))


@pytest.mark.parametrize(
    "ranks, chi, expected",
    [
        ({0: 3}, 3, CERT_EQUAL),
        ({0: 3}, -3, CERT_EQUAL),
        ({-1: 3}, 3, CERT_EQUAL),
        ({0: 2, 2: 1}, 1, CERT_UPPER),
        ({0: 2, 2: 1}, -1, CERT_UPPER),
        ({0: 2, 4: 1}, 3, CERT_EQUAL),
        ({0: 0}, 0, CERT_EQUAL),
        ({0: 5}, 3, CERT_UPPER),
    ],
)
def test_certify(ranks, chi, expected):
    assert certify(_report(ranks, chi), chi).certification == expected


def test_certify_rejects_exact_reports():
    with pytest.raises(ValueError):
        certify(_report({0: 1}, 1, EXACT, CERT_EXACT), 1)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("unknot", {"0": 1}),
        ("trefoil", {"-1": 3}),
        ("trefoil_mirror", {"1": 3}),
        ("figure_eight", {"0": 5}),
        ("hopf", {"1/2": 2}),
        ("split_clasp", {}),
        ("knot_8_19", {"3": 3}),
    ],
)
def test_known_ranks(name, expected):
    assert diagram_cohomology(catalog.get(name), "exact").nonzero_by_label() == expected


def test_auto_is_certified_for_8_19():
    r = diagram_cohomology(catalog.get("knot_8_19"))
    assert r.mode == SPECIALIZED and r.certification == CERT_EQUAL
    assert r.nonzero_by_label() == {"3": 3}


def test_threads_do_not_change_ranks():
    d = catalog.get("knot_6_2")
    assert diagram_cohomology(d, "exact", threads=3).ranks == diagram_cohomology(d, "exact").ranks


def test_json_is_stable():
    d = catalog.get("trefoil")
    a = diagram_cohomology(d, "specialized").to_json()
    b = diagram_cohomology(d, "specialized").to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["schema"] == "boscohom.report/1"
    assert doc["ranks"] == {"-1": 3} and doc["abs_chi"] == 3


def test_report_helpers():
    r = _report({-2: 0, 0: 2, 2: 1}, 1, EXACT, CERT_EXACT)
    assert r.support == [0, 2] and r.total_rank == 3
    assert r.ranks_by_label() == {"-1": 0, "0": 2, "1": 1}
    assert str(list(r.degrees())[0]) == "-1"


def test_unknown_mode(complexes):
    with pytest.raises(ValueError):
        cohomology(complexes("trefoil"), "bogus")
    with pytest.raises(ValueError):
        cohomology(complexes("trefoil"), SPECIALIZED, specialized_by="bogus")


def test_psi_one_by_one():
    from boscohom.algebra import psi_coeff

    assert rank_exact({(0, 0): psi_coeff(LaurentMonomial({0: 1}), LaurentMonomial({1: 1}))}) == 1


@pytest.mark.parametrize("last", ["y", "v"])
def test_r3_minor_is_nonsingular(last):
    # the 2x2 block from the third Reidemeister move, with v1 = v2 = v; the
    # final factor names a variable y used nowhere else, so both a fresh y
    # and y = v are checked
    a, b, c, v = var(0), var(1), var(2), var(3)
    y = var(4) if last == "y" else v
    A = (inv1p(a * b) + inv1p(v)) * (inv1p(b.inverse()) + inv1p(v))
    D = (inv1p(b * c) + inv1p(v)) * (inv1p((a * b * c).inverse()) + inv1p(v))
    B = (inv1p(a * b * c) + inv1p(v)) * (inv1p((a * b).inverse()) + inv1p(v))
    C = (inv1p(b) + inv1p(v)) * (inv1p((b * c).inverse()) + inv1p(y))
    m = {(0, 0): A, (0, 1): B, (1, 0): C, (1, 1): D}
    assert not (A * D + B * C).is_zero()
    assert rank_exact(m) == 2 == rank_bareiss(m)


def test_specialized_rank_of_zero():
    from boscohom.homology import rank_specialized

    assert rank_specialized({}, {0: 3}) == 0
    assert rank_specialized({(0, 0): RationalFunction.zero()}, {0: 3}) == 0


def test_cancellation_trivial_cases(complexes):
    c = complexes("trefoil")
    assert cancellation_reduce(c).counts() == c.counts()
    # two states joined by one nonzero entry cancel completely
    split = complexes("split_clasp")
    assert split.counts() == {-1: 1, 1: 1}
    assert cancellation_reduce(split).n_states() == 0


def test_trefoil_concentration_degree(complexes):
    c = complexes("trefoil")
    t = c.tait
    b = len(t.black.vertices)
    # rank concentrated in degree (b - 1 - n_minus) / 2, doubled here
    assert cohomology(c).support == [b - 1 - t.n_minus]


@pytest.mark.parametrize("name", SMALL)
def test_rank_nullity(name, complexes):
    c = complexes(name)
    r = cohomology(c, EXACT)
    drank = sum(rank_exact(m) for m in c.differentials.values())
    assert c.n_states() == r.total_rank + 2 * drank
