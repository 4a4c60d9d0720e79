"""Independent oracles and packaged consistency checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .complex import assemble, enumerate_states
from .diagram import LinkDiagram, mirror, resolve_crossing
from .homology import HomologyReport, diagram_cohomology, euler_characteristic
from .tait import Graph, build_tait

PASS = "pass"
FAIL = "fail"
VACUOUS = "pass-vacuous"
SKIPPED = "skipped"

Compute = Callable[[LinkDiagram], HomologyReport]


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str
    details: dict = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return self.status in (PASS, VACUOUS, SKIPPED)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "passed": self.passed, "details": self.details}


def _det(rows: list[list[int]]) -> int:
    """Integer determinant by elimination over the rationals."""
    n = len(rows)
    m = [[Fraction(v) for v in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] / m[k][k]
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    assert det.denominator == 1
    return int(det)


def _reduced_laplacian(g: Graph, weights) -> list[list[int]]:
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = len(idx)
    lap = [[0] * n for _ in range(n)]
    for e, (s, t) in enumerate(g.edges):
        if s == t:
            continue
        w = weights[e]
        a, b = idx[s], idx[t]
        lap[a][a] += w
        lap[b][b] += w
        lap[a][b] -= w
        lap[b][a] -= w
    return [row[1:] for row in lap[1:]]


def spanning_tree_count(g: Graph) -> int:
    """Kirchhoff: any cofactor of the graph Laplacian."""
    return _det(_reduced_laplacian(g, [1] * len(g.edges)))


def goeritz_matrix(d: LinkDiagram) -> list[list[int]]:
    """Reduced Goeritz form on the black regions.

    Each crossing links its two black regions with weight +1 or -1
    according to which pair of opposite corners is black, i.e. the
    crossing type relative to the colouring.
    """
    t = build_tait(d)
    return _reduced_laplacian(t.black, [1 if h else -1 for h in t.heights])


def determinant_goeritz(d: LinkDiagram) -> int:
    if not d.crossings:
        return 1 if d.free_loops <= 1 else 0
    return abs(_det(goeritz_matrix(d)))


# ---------------------------------------------------------------------------


def check_thin(report: HomologyReport, det: int, signature: int | None = None) -> CheckOutcome:
    """Ranks concentrated in one degree with total ``det``.

    An all-zero report against ``det == 0`` passes vacuously.  A reference
    signature, when given, is compared with twice the support degree for
    information only.
    """
    support = report.support
    details = {"ranks": report.nonzero_by_label(), "total": report.total_rank, "det": det}
    if signature is not None and len(support) == 1:
        details["signature_degree_match"] = abs(signature) == abs(support[0])
    if not support:
        return CheckOutcome("thin", VACUOUS if det == 0 else FAIL, details)
    ok = len(support) == 1 and report.total_rank == det
    return CheckOutcome("thin", PASS if ok else FAIL, details)


def check_reidemeister_pair(
    d1: LinkDiagram, d2: LinkDiagram, compute: Compute | None = None
) -> CheckOutcome:
    compute = compute or diagram_cohomology
    r1, r2 = compute(d1), compute(d2)
    a, b = r1.nonzero_by_label(), r2.nonzero_by_label()
    return CheckOutcome(
        "reidemeister",
        PASS if a == b else FAIL,
        {"first": d1.name or d1.pd_text(), "second": d2.name or d2.pd_text(), "ranks_first": a, "ranks_second": b},
    )


def check_mirror(d: LinkDiagram, compute: Compute | None = None) -> CheckOutcome:
    """Ranks of the mirror image are the degree-reflected ranks."""
    compute = compute or diagram_cohomology
    a = compute(d)
    b = compute(mirror(d))
    reflected = {-D: r for D, r in a.ranks.items() if r}
    actual = {D: r for D, r in b.ranks.items() if r}
    return CheckOutcome(
        "mirror",
        PASS if reflected == actual else FAIL,
        {"ranks": a.nonzero_by_label(), "mirror_ranks": b.nonzero_by_label()},
    )


def check_base_points(d: LinkDiagram) -> CheckOutcome:
    """Assembled differentials agree entry-wise for every base arc."""
    ref = assemble(build_tait(d))
    bad = []
    for arc in d.arcs[1:]:
        other = assemble(build_tait(d, base_arc=arc))
        if other.counts() != ref.counts():
            bad.append(arc)
            continue
        for D, m in ref.differentials.items():
            m2 = other.differentials[D]
            if set(m) != set(m2) or any(m[k] != m2[k] for k in m):
                bad.append(arc)
                break
    return CheckOutcome("base-point", FAIL if bad else PASS, {"arcs": list(d.arcs), "mismatched": bad})


def check_euler(d: LinkDiagram) -> CheckOutcome:
    c = assemble(build_tait(d))
    chi = euler_characteristic(c)
    det = determinant_goeritz(d)
    return CheckOutcome("euler-determinant", PASS if abs(chi) == det else FAIL, {"chi": chi, "det": det})


def check_state_count(d: LinkDiagram) -> CheckOutcome:
    t = build_tait(d)
    n = len(enumerate_states(t))
    k = spanning_tree_count(t.black)
    return CheckOutcome("kirchhoff", PASS if n == k else FAIL, {"states": n, "trees": k})


# ---------------------------------------------------------------------------


def _heights(report: HomologyReport, n_minus: int, of: str = "ranks") -> Counter:
    src = report.ranks if of == "ranks" else report.state_counts
    return Counter({D + n_minus: r for D, r in src.items() if r})


def skein_consistency(d: LinkDiagram, c: int, compute: Compute | None = None) -> CheckOutcome:
    """Compare d with its two resolutions at crossing ``c``.

    Work in the height grading ``h = D + n_minus``.  States whose edge at
    ``c`` contributes 1 to the height form a subcomplex matching the
    resolution ``r = 1`` shifted up by one; the rest match ``r = 0``.
    Exactness then bounds every rank of ``d`` by the sum of the two
    resolved ranks, and Euler characteristics add with a sign.
    """
    compute = compute or diagram_cohomology
    d0, d1 = resolve_crossing(d, c, 0), resolve_crossing(d, c, 1)
    if not (d0.is_connected() and d1.is_connected()):
        return CheckOutcome(
            "skein", SKIPPED, {"crossing": c, "reason": "skipped: assumption (A), a resolution is disconnected"}
        )
    t = build_tait(d)
    states = enumerate_states(t)

    def contributes(T) -> bool:
        return (c in T.edges) == bool(t.heights[c])

    split1 = Counter(T.height - 1 for T in states if contributes(T))
    split0 = Counter(T.height for T in states if not contributes(T))
    h0 = Counter(T.height for T in enumerate_states(build_tait(d0)))
    h1 = Counter(T.height for T in enumerate_states(build_tait(d1)))
    split_ok = split0 == h0 and split1 == h1

    r, r0, r1 = compute(d), compute(d0), compute(d1)
    H = _heights(r, d.n_minus)
    H0 = _heights(r0, d0.n_minus)
    H1 = Counter({h + 1: v for h, v in _heights(r1, d1.n_minus).items()})
    ineq_ok = all(H[h] <= H0[h] + H1[h] for h in H)

    def chi(cnt: Counter) -> int:
        return sum((-1) ** (h // 2) * v for h, v in cnt.items())

    euler_ok = chi(H) == chi(H0) + chi(H1)
    ok = split_ok and ineq_ok and euler_ok
    details = {
        "crossing": c,
        "states": [len(states), sum(h0.values()), sum(h1.values())],
        "state_split": split_ok,
        "rank_inequality": ineq_ok,
        "euler_additive": euler_ok,
        "ranks": {"L": r.nonzero_by_label(), "L0": r0.nonzero_by_label(), "L1": r1.nonzero_by_label()},
    }
    return CheckOutcome("skein", PASS if ok else FAIL, details)
