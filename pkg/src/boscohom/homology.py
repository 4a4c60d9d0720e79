"""Cohomology ranks of a :class:`GradedComplex`.

Three routes:

* ``exact``: every differential's rank over the fraction field, by
  elimination on factored rational functions (a fraction-free Bareiss
  route over GF(2)[variables] is kept for cross-checks);
* ``cancelled``: repeated cancellation of invertible entries until no
  differential is left, over the same field;
* ``specialized``: all variables replaced by powers of one variable ``t``.
  Per degree this can only over-count, so the result is an upper bound
  unless :func:`certify` can pin it with the Euler characteristic.
"""

from __future__ import annotations

import json
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import (
    ONE_TERMS,
    RationalFunction,
    UnivariateRationalFunction,
    _expand,
    draw_specialization,
    specialize,
)
from .complex import GradedComplex, Matrix
from .errors import CertificationFallbackTooLarge, InternalArithmeticError, SpecializationSingular
from .poly import ExactDivisionError, pack, poly_divexact, poly_mul, poly_shift

log = logging.getLogger(__name__)

MAX_SPECIALIZATION_TRIES = 32
DEFAULT_SEED = 20100913
REPORT_SCHEMA = "boscohom.report/1"

EXACT = "exact"
SPECIALIZED = "specialized"
CANCELLED = "cancelled"
CERT_EXACT = "exact"
CERT_EQUAL = "certified-equal-to-exact"
CERT_UPPER = "upper-bound-only"


def degree_label(doubled: int) -> str:
    return str(doubled // 2) if doubled % 2 == 0 else f"{doubled}/2"


def sign_of(doubled: int) -> int:
    """(-1)**degree, with half-integer degrees measured from 1/2."""
    offset = doubled if doubled % 2 == 0 else doubled - 1
    return -1 if (offset // 2) % 2 else 1


# ---------------------------------------------------------------------------
# exact rank


def _clear_row(entries: dict[int, RationalFunction]) -> dict[int, frozenset]:
    """Multiply a row by a common denominator; returns polynomial entries."""
    den = Counter()
    common = None
    for v in entries.values():
        den |= v.den
        common = Counter(v.num) if common is None else common & v.num
    common = common or Counter()
    lo: dict[int, int] = {}
    for v in entries.values():
        for var in set(lo) | set(v.mono):
            lo[var] = min(lo.get(var, 0), v.mono.get(var, 0))
    out = {}
    for j, v in entries.items():
        shift = pack((var, v.mono.get(var, 0) - lo.get(var, 0)) for var in set(v.mono) | set(lo))
        p = poly_mul(_expand(v.num - common), _expand(den - v.den))
        out[j] = poly_shift(p, shift)
    return out


def _pick(rows: Mapping[int, Mapping[int, object]], size: Callable) -> tuple[int, int] | None:
    """Pivot with the least fill-in, then the smallest entry, then row-major."""
    best = None
    best_key = None
    col_count = Counter(j for r in rows.values() for j in r)
    for i in sorted(rows):
        for j in sorted(rows[i]):
            key = ((len(rows[i]) - 1) * (col_count[j] - 1), size(rows[i][j]), i, j)
            if best_key is None or key < best_key:
                best_key, best = key, (i, j)
    return best


def rank_exact(m: Matrix, method: str = "field") -> int:
    """Rank over GF(2)(variables).

    ``method="field"`` eliminates directly on factored rational functions,
    whose denominators stay as products of binomials.  ``"bareiss"`` clears
    each row's denominators and runs fraction-free elimination over the
    polynomial ring; it is exact too but its minors swell quickly once a
    matrix has more than a handful of rows.
    """
    if method == "field":
        return _field_rank(m, RationalFunction.size)
    if method != "bareiss":
        raise ValueError(f"unknown method {method!r}")
    return rank_bareiss(m)


def rank_bareiss(m: Matrix) -> int:
    """Rank by denominator clearing and fraction-free (Bareiss) elimination."""
    rows: dict[int, dict[int, frozenset]] = defaultdict(dict)
    for (i, j), v in m.items():
        if v:
            rows[i][j] = v
    prows = {i: _clear_row(r) for i, r in rows.items()}
    prows = {i: {j: p for j, p in r.items() if p} for i, r in prows.items()}
    prows = {i: r for i, r in prows.items() if r}
    prev = ONE_TERMS
    rank = 0
    while prows:
        r, c = _pick(prows, len)
        pivot_row = prows.pop(r)
        p = pivot_row[c]
        rank += 1
        for i in list(prows):
            row = prows[i]
            a = row.get(c)
            new = {}
            for j in set(row) | set(pivot_row):
                if j == c:
                    continue
                val = poly_mul(p, row[j]) if j in row else frozenset()
                if a is not None and j in pivot_row:
                    val = val ^ poly_mul(a, pivot_row[j])
                if val and prev != ONE_TERMS:
                    try:
                        val = poly_divexact(val, prev)
                    except ExactDivisionError as exc:
                        raise InternalArithmeticError("Bareiss division left a remainder") from exc
                if val:
                    new[j] = val
            if new:
                prows[i] = new
            else:
                del prows[i]
        prev = p
    return rank


# ---------------------------------------------------------------------------
# specialized rank


def specialize_matrix(m: Matrix, spec: Mapping[int, int]) -> dict:
    return {k: specialize(v, spec) for k, v in m.items() if v}


def _field_rank(entries: Mapping[tuple[int, int], object], size: Callable) -> int:
    rows: dict[int, dict[int, object]] = defaultdict(dict)
    for (i, j), v in entries.items():
        if v:
            rows[i][j] = v
    rank = 0
    while rows:
        r, c = _pick(rows, size)
        pivot_row = rows.pop(r)
        inv = pivot_row[c].inverse()
        rank += 1
        for i in list(rows):
            row = rows[i]
            a = row.get(c)
            if a is None:
                continue
            factor = a * inv
            for j, v in pivot_row.items():
                if j == c:
                    continue
                nv = row[j] + factor * v if j in row else factor * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            del row[c]
            if not row:
                del rows[i]
    return rank


def rank_specialized(m: Matrix, spec: Mapping[int, int]) -> int:
    """Rank over GF(2)(t) after substituting ``x_i -> t**spec[i]``."""
    return _field_rank(specialize_matrix(m, spec), UnivariateRationalFunction.size)


# ---------------------------------------------------------------------------
# cancellation


def cancellation_reduce(c: GradedComplex, entries: dict[int, dict] | None = None) -> GradedComplex:
    """Cancel invertible entries until every differential vanishes.

    Cancelling the entry x -> y removes both generators and replaces each
    entry z -> t by ``c(z,t) - c(z,y) c(x,y)^-1 c(x,t)``.  The result has
    the same cohomology; once no entry is left its state counts are the
    ranks.  ``entries`` may replace the differentials (e.g. specialized
    copies); they are reduced in place of ``c.differentials``.
    """
    diffs = entries if entries is not None else c.differentials
    alive = {D: set(range(len(s))) for D, s in c.states_by_degree.items()}
    work = {D: {k: v for k, v in m.items() if v} for D, m in diffs.items()}

    def size(v):
        return v.size()

    while True:
        best = None
        for D in sorted(work):
            m = work[D]
            rc, cc = Counter(i for i, _ in m), Counter(j for _, j in m)
            for (i, j), v in sorted(m.items()):
                key = ((rc[i] - 1) * (cc[j] - 1), size(v), D, i, j)
                if best is None or key < best[0]:
                    best = (key, D, i, j)
        if best is None:
            break
        _, D, x, y = best
        m = work[D]
        inv = m[(x, y)].inverse()
        into_y = [(z, v) for (z, t), v in m.items() if t == y and z != x]
        from_x = [(t, v) for (z, t), v in m.items() if z == x and t != y]
        for z, zy in into_y:
            coeff = zy * inv
            for t, xt in from_x:
                upd = coeff * xt
                old = m.get((z, t))
                val = upd if old is None else old + upd
                if val:
                    m[(z, t)] = val
                else:
                    m.pop((z, t), None)
        for k in [k for k in m if k[0] == x or k[1] == y]:
            del m[k]
        if D - 2 in work:
            prev = work[D - 2]
            for k in [k for k in prev if k[1] == x]:
                del prev[k]
        if D + 2 in work:
            nxt = work[D + 2]
            for k in [k for k in nxt if k[0] == y]:
                del nxt[k]
        alive[D].discard(x)
        alive[D + 2].discard(y)
    states = {}
    reindex = {}
    for D, lst in c.states_by_degree.items():
        keep = sorted(alive[D])
        reindex[D] = {old: new for new, old in enumerate(keep)}
        if keep:
            states[D] = [lst[i] for i in keep]
    new_diffs = {}
    for D, m in work.items():
        if D in states and D + 2 in states:
            new_diffs[D] = {(reindex[D][i], reindex[D + 2][j]): v for (i, j), v in m.items()}
    return GradedComplex(c.tait, c.variables, states, new_diffs)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class HomologyReport:
    ranks: dict[int, int]  # doubled degree -> rank, every degree carrying states
    mode: str
    certification: str
    euler_characteristic: int
    state_counts: dict[int, int]
    seed: int | None = None
    specialization: dict[int, int] | None = field(default=None, compare=False)

    @property
    def total_rank(self) -> int:
        return sum(self.ranks.values())

    @property
    def support(self) -> list[int]:
        return [D for D, r in sorted(self.ranks.items()) if r]

    def ranks_by_label(self) -> dict[str, int]:
        return {degree_label(D): r for D, r in sorted(self.ranks.items())}

    def nonzero_by_label(self) -> dict[str, int]:
        return {degree_label(D): r for D, r in sorted(self.ranks.items()) if r}

    def degrees(self) -> dict[Fraction, int]:
        return {Fraction(D, 2): r for D, r in sorted(self.ranks.items())}

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "ranks": self.nonzero_by_label(),
            "mode": self.mode,
            "certification": self.certification,
            "chi": self.euler_characteristic,
            "abs_chi": abs(self.euler_characteristic),
            "total_rank": self.total_rank,
            "states": {degree_label(D): n for D, n in sorted(self.state_counts.items())},
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def euler_characteristic(c: GradedComplex) -> int:
    return sum(sign_of(D) * len(s) for D, s in c.states_by_degree.items())


def _ranks_from_differentials(
    c: GradedComplex, rank_of: Callable[[int], int], threads: int = 1
) -> dict[int, int]:
    todo = sorted(c.differentials)
    if threads > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            dr = dict(zip(todo, pool.map(rank_of, todo)))
    else:
        dr = {D: rank_of(D) for D in todo}
    ranks = {}
    for D, s in c.states_by_degree.items():
        ranks[D] = len(s) - dr.get(D, 0) - dr.get(D - 2, 0)
        if ranks[D] < 0:
            raise InternalArithmeticError(f"negative rank in degree {degree_label(D)}")
    return dict(sorted(ranks.items()))


def cohomology(
    c: GradedComplex,
    mode: str = EXACT,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
    specialized_by: str = "cancellation",
) -> HomologyReport:
    """Per-degree ranks of ``c``.

    In specialized mode the specialized complex is either cancelled down
    (``specialized_by="cancellation"``, much faster on large complexes) or
    each specialized differential is eliminated on its own
    (``"elimination"``); both give the cohomology of the same complex over
    GF(2)(t).
    """
    chi = euler_characteristic(c)
    counts = c.counts()
    if mode == EXACT:
        ranks = _ranks_from_differentials(c, lambda D: rank_exact(c.differentials[D]), threads)
        return HomologyReport(ranks, EXACT, CERT_EXACT, chi, counts)
    if mode == CANCELLED:
        reduced = cancellation_reduce(c)
        ranks = {D: len(reduced.states_by_degree.get(D, [])) for D in c.states_by_degree}
        return HomologyReport(dict(sorted(ranks.items())), CANCELLED, CERT_EXACT, chi, counts)
    if mode == SPECIALIZED:
        rng = random.Random(seed)
        nvars = len(c.variables)
        for attempt in range(MAX_SPECIALIZATION_TRIES):
            spec = draw_specialization(nvars, rng)
            try:
                mats = {D: specialize_matrix(m, spec) for D, m in c.differentials.items()}
            except SpecializationSingular:
                log.info("specialization %d singular, redrawing", attempt)
                continue
            if specialized_by == "cancellation":
                reduced = cancellation_reduce(c, mats)
                ranks = {D: len(reduced.states_by_degree.get(D, [])) for D in c.states_by_degree}
            elif specialized_by == "elimination":
                ranks = _ranks_from_differentials(
                    c, lambda D: _field_rank(mats[D], UnivariateRationalFunction.size), threads
                )
            else:
                raise ValueError(f"unknown specialized_by {specialized_by!r}")
            return HomologyReport(ranks, SPECIALIZED, CERT_UPPER, chi, counts, seed, spec)
        raise SpecializationSingular(f"no usable specialization in {MAX_SPECIALIZATION_TRIES} draws")
    raise ValueError(f"unknown mode {mode!r}")


def certify(report: HomologyReport, chi: int) -> HomologyReport:
    """Upgrade a specialized report when the Euler characteristic leaves no slack.

    Exact ranks are bounded by the specialized ones degree by degree and
    have the same alternating sum.  If the specialized ranks sit in degrees
    of a single parity class and their total equals ``|chi|``, every bound
    is attained.
    """
    if report.mode != SPECIALIZED:
        raise ValueError("certify expects a specialized report")
    support = report.support
    one_parity = len({sign_of(D) for D in support}) <= 1
    if one_parity and report.total_rank == abs(chi):
        return replace(report, certification=CERT_EQUAL)
    return replace(report, certification=CERT_UPPER)


def auto_cohomology(
    c: GradedComplex, seed: int = DEFAULT_SEED, max_states: int = 400, threads: int = 1
) -> HomologyReport:
    """Specialize and certify; fall back to exact cancellation if that fails.

    Complexes with more than ``max_states`` states are not attempted
    exactly and raise :class:`CertificationFallbackTooLarge` instead.
    """
    spec_report = certify(cohomology(c, SPECIALIZED, seed, threads), euler_characteristic(c))
    if spec_report.certification == CERT_EQUAL:
        return spec_report
    if c.n_states() > max_states:
        raise CertificationFallbackTooLarge(
            f"specialized ranks not certified and the complex has {c.n_states()} states (limit {max_states})"
        )
    log.info("specialized ranks not certified; computing exactly")
    return cohomology(c, CANCELLED, seed)


def diagram_cohomology(
    d, mode: str = "auto", seed: int = DEFAULT_SEED, base_arc: int | None = None, threads: int = 1
) -> HomologyReport:
    """Build the complex of a diagram and compute its ranks."""
    from .complex import assemble
    from .tait import build_tait

    c = assemble(build_tait(d, base_arc=base_arc))
    if mode == "auto":
        return auto_cohomology(c, seed, threads=threads)
    return cohomology(c, mode, seed, threads)
