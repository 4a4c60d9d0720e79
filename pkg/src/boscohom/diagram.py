"""Oriented link diagrams as planar-diagram (PD) codes.

Each crossing is a 4-tuple of arc labels listed counter-clockwise starting
from the incoming under-strand, so slots 0 and 2 carry the under-strand
(in at 0, out at 2) and slots 1 and 3 the over-strand.  A crossing is
positive when the over-strand enters at slot 3.

Besides :func:`parse_pd`, diagrams can be built from a braid word
(:func:`from_braid`) or as the medial diagram of a plane graph with edge
heights (:func:`from_plane_graph`); both are used to produce the bundled
catalog.
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import ArcMultiplicity, Disconnected, MalformedCode

Slot = tuple[int, int]  # (crossing index, position 0..3)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(c) for c in self.crossings))
        if not self.crossings and self.free_loops < 1:
            raise MalformedCode("empty diagram")
        counts: dict[int, int] = defaultdict(int)
        for c in self.crossings:
            for a in c:
                counts[a] += 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise ArcMultiplicity(f"arc(s) {bad} do not appear exactly twice")
        self._orientation  # validates consistency

    # basic structure --------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def arcs(self) -> tuple[int, ...]:
        return tuple(sorted({a for c in self.crossings for a in c}))

    @cached_property
    def arc_slots(self) -> dict[int, tuple[Slot, Slot]]:
        out: dict[int, list[Slot]] = defaultdict(list)
        for x, c in enumerate(self.crossings):
            for s, a in enumerate(c):
                out[a].append((x, s))
        return {a: (p[0], p[1]) for a, p in out.items()}

    def other_slot(self, slot: Slot) -> Slot:
        a = self.crossings[slot[0]][slot[1]]
        p, q = self.arc_slots[a]
        return q if p == slot else p

    @cached_property
    def _orientation(self) -> tuple[dict[int, Slot], list[list[int]]]:
        """(head slot of each arc, components as cyclic arc lists)."""
        heads: dict[int, Slot] = {}
        comps: list[list[int]] = []
        seen: set[int] = set()

        def walk(tail: Slot) -> list[int]:
            comp = []
            slot = tail
            while True:
                a = self.crossings[slot[0]][slot[1]]
                if a in seen:
                    break
                seen.add(a)
                comp.append(a)
                head = self.other_slot(slot)
                if head[1] == 2:
                    raise MalformedCode(f"arc {a} leaves two crossings along the under-strand")
                heads[a] = head
                slot = (head[0], (head[1] + 2) % 4)
                if slot[1] == 0:
                    raise MalformedCode(f"arc entering crossing {head[0]} runs against the under-strand")
            return comp

        for x in range(len(self.crossings)):
            a = self.crossings[x][2]
            if a not in seen:
                comps.append(walk((x, 2)))
        # components that only ever pass over: orient from the first slot of the smallest arc
        for a in self.arcs:
            if a not in seen:
                comps.append(walk(self.arc_slots[a][0]))
        return heads, comps

    @property
    def heads(self) -> dict[int, Slot]:
        return self._orientation[0]

    @property
    def components(self) -> list[list[int]]:
        return self._orientation[1]

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_loops

    def over_enters_at(self, x: int) -> int:
        """Slot (1 or 3) where the over-strand enters crossing ``x``."""
        c = self.crossings[x]
        if self.heads[c[3]] == (x, 3):
            return 3
        return 1

    def sign(self, x: int) -> int:
        return 1 if self.over_enters_at(x) == 3 else -1

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(x) for x in range(len(self.crossings)))

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops == 1
        if self.free_loops:
            return False
        n = len(self.crossings)
        adj = defaultdict(set)
        for p, q in self.arc_slots.values():
            adj[p[0]].add(q[0])
            adj[q[0]].add(p[0])
        stack, seen = [0], {0}
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def is_alternating(self) -> bool:
        """Every arc runs from an over-slot to an under-slot or vice versa."""
        for p, q in self.arc_slots.values():
            if (p[1] % 2) == (q[1] % 2):
                return False
        return True

    def pd_text(self) -> str:
        if not self.crossings:
            return "UNKNOT"
        return " ".join("X(%d,%d,%d,%d)" % c for c in self.crossings)

    def __str__(self) -> str:
        return self.pd_text()


UNKNOT = LinkDiagram((), free_loops=1, name="unknot")

# ---------------------------------------------------------------------------
# parsing

_TUPLE = re.compile(r"X?\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]]")
_FILLER = re.compile(r"^[\s,;\[\]]*$")


def parse_pd(text: str, *, require_connected: bool = True) -> LinkDiagram:
    """Parse ``X(a,b,c,d) X(...)`` (also ``PD[X[...], ...]``) or ``UNKNOT``."""
    body = text.strip()
    if not body:
        raise MalformedCode("empty PD code")
    if body.upper() == "UNKNOT":
        return UNKNOT
    tuples = [tuple(int(g) for g in m.groups()) for m in _TUPLE.finditer(body)]
    rest = _TUPLE.sub(" ", body)
    rest = re.sub(r"^\s*PD\s*", "", rest)
    if not tuples:
        nums = re.split(r"[\s,;]+", body)
        try:
            values = [int(v) for v in nums if v]
        except ValueError:
            raise MalformedCode(f"cannot parse PD code: {text!r}") from None
        if not values or len(values) % 4:
            raise MalformedCode("expected a multiple of four arc labels")
        tuples = [tuple(values[i : i + 4]) for i in range(0, len(values), 4)]
    elif not _FILLER.match(rest):
        raise MalformedCode(f"unexpected text in PD code: {rest.strip()!r}")
    d = LinkDiagram(tuple(tuples))
    _check_planar(d)
    if require_connected and not d.is_connected():
        raise Disconnected("diagram is not connected; join the pieces with a Reidemeister II clasp")
    return d


def _check_planar(d: LinkDiagram) -> None:
    if not d.crossings or not d.is_connected():
        return
    from .tait import corner_regions

    nfaces = len(set(corner_regions(d).values()))
    if nfaces != d.n_crossings + 2:
        raise MalformedCode(f"PD code is not planar ({nfaces} faces for {d.n_crossings} crossings)")


def read_catalog(text: str) -> dict[str, LinkDiagram]:
    """``name: PD...`` lines; ``#`` starts a comment."""
    out: dict[str, LinkDiagram] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise MalformedCode(f"catalog line {lineno}: expected 'name: PD...'")
        name, pd = line.split(":", 1)
        d = parse_pd(pd)
        out[name.strip()] = LinkDiagram(d.crossings, d.free_loops, name=name.strip())
    return out


# ---------------------------------------------------------------------------
# rebuilding from a slot matching


def _rebuild(
    n: int,
    match: Mapping[Slot, Slot],
    hints: Mapping[Slot, bool] | None = None,
    free_loops: int = 0,
    name: str = "",
) -> LinkDiagram:
    """Build a diagram from crossings whose under-pair is slots {0, 2}.

    ``match`` pairs slots joined by an arc.  ``hints`` marks slots as heads
    (True) or tails (False); each component takes its direction from its
    first hinted slot.  Arcs are relabelled 1..N along the components.
    """
    hints = hints or {}
    if not n:
        return LinkDiagram((), free_loops=max(free_loops, 1), name=name)
    label: dict[Slot, int] = {}
    head_of: dict[int, Slot] = {}
    next_label = 1
    for x in range(n):
        for s in range(4):
            if (x, s) in label:
                continue
            # trace the component containing this slot, as a sequence of tail slots
            seq = []
            slot = (x, s)
            while True:
                seq.append(slot)
                h = match[slot]
                slot = (h[0], (h[1] + 2) % 4)
                if slot == (x, s):
                    break
            forward = True
            for t in seq:
                if t in hints:
                    forward = not hints[t]
                    break
                h = match[t]
                if h in hints:
                    forward = hints[h]
                    break
            if not forward:
                seq = [match[t] for t in reversed(seq)]
            for t in seq:
                h = match[t]
                label[t] = label[h] = next_label
                head_of[next_label] = h
                next_label += 1
    tuples = []
    for x in range(n):
        a = [label[(x, s)] for s in range(4)]
        if head_of[a[0]] == (x, 0):
            tuples.append(tuple(a))
        else:
            tuples.append((a[2], a[3], a[0], a[1]))
    return LinkDiagram(tuple(tuples), free_loops=free_loops, name=name)


def _match_and_hints(d: LinkDiagram) -> tuple[dict[Slot, Slot], dict[Slot, bool]]:
    match = {}
    hints = {}
    for a, (p, q) in d.arc_slots.items():
        match[p] = q
        match[q] = p
        h = d.heads[a]
        hints[h] = True
        hints[q if h == p else p] = False
    return match, hints


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Exchange over- and under-strands at every crossing."""
    if not d.crossings:
        return d
    out = []
    for x, (a, b, c, e) in enumerate(d.crossings):
        if d.over_enters_at(x) == 3:
            out.append((e, a, b, c))
        else:
            out.append((b, c, e, a))
    return LinkDiagram(tuple(out), d.free_loops, name=f"mirror({d.name})" if d.name else "")


def resolve_crossing(d: LinkDiagram, c: int, r: int) -> LinkDiagram:
    """Smooth crossing ``c``.

    ``r=1`` joins slots 0-1 and 2-3, ``r=0`` joins 1-2 and 3-0.  With the
    height convention of :mod:`boscohom.tait`, resolution 1 keeps exactly
    the Kauffman states in which the black edge through ``c`` contributes 1
    to the height.  Orientation is kept wherever the smoothing allows and
    arcs are relabelled; the result may be disconnected.
    """
    if r not in (0, 1):
        raise ValueError("resolution must be 0 or 1")
    if not 0 <= c < d.n_crossings:
        raise ValueError(f"no crossing {c}")
    smooth = {0: 1, 1: 0, 2: 3, 3: 2} if r == 1 else {1: 2, 2: 1, 3: 0, 0: 3}
    match, hints = _match_and_hints(d)
    renum = {x: i for i, x in enumerate(x for x in range(d.n_crossings) if x != c)}

    def at_c(slot):
        return slot[0] == c

    new_match: dict[Slot, Slot] = {}
    visited_c: set[Slot] = set()
    for slot, other in match.items():
        if at_c(slot):
            continue
        end = other
        while at_c(end):
            visited_c.add(end)
            s2 = (c, smooth[end[1]])
            visited_c.add(s2)
            end = match[s2]
        new_match[(renum[slot[0]], slot[1])] = (renum[end[0]], end[1])
    loops = 0
    for s in range(4):
        slot = (c, s)
        if slot in visited_c:
            continue
        loops += 1
        while slot not in visited_c:
            visited_c.add(slot)
            s2 = (c, smooth[slot[1]])
            visited_c.add(s2)
            slot = match[s2]
    new_hints = {(renum[s[0]], s[1]): v for s, v in hints.items() if not at_c(s)}
    return _rebuild(len(renum), new_match, new_hints, free_loops=d.free_loops + loops)


# ---------------------------------------------------------------------------
# constructors used for the catalog


def from_braid(word: Sequence[int], strands: int | None = None, name: str = "") -> LinkDiagram:
    """Closure of a braid; ``k`` is sigma_k (left strand over), ``-k`` its inverse.

    Strands run upward and the closure arcs pass to the right.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    open_end: list[Slot | None] = [None] * strands
    first: list[Slot | None] = [None] * strands
    match: dict[Slot, Slot] = {}
    hints: dict[Slot, bool] = {}

    def attach(p, slot):
        if open_end[p] is None:
            first[p] = slot
        else:
            match[open_end[p]] = slot
            match[slot] = open_end[p]

    for x, g in enumerate(word):
        i = abs(g) - 1
        if not 0 <= i < strands - 1:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        if g > 0:
            # slots CCW from SE: in-right(under), out-right, out-left(under), in-left
            in_l, in_r, out_l, out_r = (x, 3), (x, 0), (x, 2), (x, 1)
        else:
            # slots CCW from SW: in-left(under), in-right, out-right(under), out-left
            in_l, in_r, out_l, out_r = (x, 0), (x, 1), (x, 3), (x, 2)
        attach(i, in_l)
        attach(i + 1, in_r)
        hints[in_l] = hints[in_r] = True
        hints[out_l] = hints[out_r] = False
        open_end[i], open_end[i + 1] = out_l, out_r
    loops = 0
    for p in range(strands):
        if open_end[p] is None:
            loops += 1
        else:
            match[open_end[p]] = first[p]
            match[first[p]] = open_end[p]
    return _rebuild(len(word), match, hints, free_loops=loops, name=name)


def from_plane_graph(
    rotation: Mapping[int, Sequence[int]],
    edges: Sequence[tuple[int, int]],
    heights: Sequence[int],
    name: str = "",
) -> LinkDiagram:
    """Medial diagram of a plane multigraph.

    ``rotation[v]`` lists the edge ends at ``v`` counter-clockwise, each as
    ``2*e`` (source end of edge ``e``) or ``2*e+1`` (target end).  The
    vertices become the black regions of the result and edge ``e`` becomes
    a crossing whose black edge has height ``heights[e]``.
    """
    # slots of edge e in the frame source=west, target=east
    NE, NW, SW, SE = 0, 1, 2, 3
    frame: dict[tuple[int, int], Slot] = {}
    for e in range(len(edges)):
        if heights[e] == 1:
            order = [NE, NW, SW, SE]  # under-strand NE-SW
        else:
            order = [NW, SW, SE, NE]  # under-strand NW-SE
        for pos, corner in enumerate(order):
            frame[(e, corner)] = (e, pos)
    match: dict[Slot, Slot] = {}
    for v, ends in rotation.items():
        k = len(ends)
        for j in range(k):
            a, b = ends[j], ends[(j + 1) % k]
            left = (a // 2, NW if a % 2 == 0 else SE)
            right = (b // 2, SW if b % 2 == 0 else NE)
            p, q = frame[left], frame[right]
            match[p] = q
            match[q] = p
    if not edges:
        return LinkDiagram((), free_loops=1, name=name)
    return _rebuild(len(edges), match, {}, name=name)


def rotation_from_coordinates(
    coords: Mapping[int, tuple[float, float]], edges: Sequence[tuple[int, int]]
) -> dict[int, list[int]]:
    """Counter-clockwise edge ends at each vertex of a straight-line drawing."""
    ends: dict[int, list[tuple[float, int]]] = defaultdict(list)
    for e, (u, v) in enumerate(edges):
        (x0, y0), (x1, y1) = coords[u], coords[v]
        ends[u].append((math.atan2(y1 - y0, x1 - x0), 2 * e))
        ends[v].append((math.atan2(y0 - y1, x0 - x1), 2 * e + 1))
    return {v: [he for _, he in sorted(lst)] for v, lst in ends.items()}


def relabel(d: LinkDiagram, first_crossing: int) -> LinkDiagram:
    """Same diagram with crossing ``first_crossing`` listed first."""
    order = [first_crossing] + [x for x in range(d.n_crossings) if x != first_crossing]
    return LinkDiagram(tuple(d.crossings[x] for x in order), d.free_loops, name=d.name)


def arcs_of(diagrams: Iterable[LinkDiagram]) -> list[tuple[int, ...]]:
    return [d.arcs for d in diagrams]
