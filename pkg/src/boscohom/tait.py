"""Checkerboard colouring and the black/white Tait graphs of a diagram.

Corner ``k`` of crossing ``x`` is the region between slots ``k`` and
``k+1``.  Opposite corners (``k`` and ``k+2``) share a colour, and the black
edge through ``x`` joins its two black corners.  The edge has height 0 when
the black corners are 0 and 2 (the over-strand sits 45 degrees
counter-clockwise from the edge) and height 1 when they are 1 and 3.

Black edge ``x`` is oriented from its corner ``k`` to corner ``k+2``
(``k`` in {0, 1}); the white edge tau(x) is that orientation turned a
quarter-turn counter-clockwise, i.e. from corner ``k+1`` to ``k+3``.
Walking along the black edge in its orientation, corner ``k+3`` is on the
left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .diagram import LinkDiagram
from .errors import ColoringFailure

Corner = tuple[int, int]


def corner_regions(d: LinkDiagram) -> dict[Corner, int]:
    """Region id of every corner; ids follow first appearance in corner order."""
    parent: dict[Corner, Corner] = {}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    corners = [(x, k) for x in range(d.n_crossings) for k in range(4)]
    for c in corners:
        parent[c] = c
    for x, k in corners:
        # the arc leaving through slot k+1 has corner k on its right; at its
        # other end (y, j) the same region is corner j
        y, j = d.other_slot((x, (k + 1) % 4))
        ra, rb = find((x, k)), find((y, j))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    ids: dict[Corner, int] = {}
    out: dict[Corner, int] = {}
    for c in corners:
        r = find(c)
        if r not in ids:
            ids[r] = len(ids)
        out[c] = ids[r]
    return out


@dataclass(frozen=True)
class Graph:
    """A multigraph with explicit source/target maps (edge id = crossing)."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def other_end(self, e: int, v: int) -> int:
        s, t = self.edges[e]
        return t if v == s else s

    def is_loop(self, e: int) -> bool:
        s, t = self.edges[e]
        return s == t


@dataclass(frozen=True)
class TaitStructure:
    diagram: LinkDiagram
    region_of: dict  # corner -> region
    faces: tuple[tuple[Corner, ...], ...]  # corners of each region, in boundary order
    colors: tuple[str, ...]  # "B" / "W" per region
    black: Graph
    white: Graph
    black_parity: tuple[int, ...]  # k in {0,1}: black corners of crossing x are k, k+2
    heights: tuple[int, ...]  # height of the black edge through each crossing
    signs: tuple[int, ...]
    base_arc: int
    black_base: int
    white_base: int
    unbounded_face: int  # a white region; its face variable is the omitted one
    omitted_vertex: int

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def n_edges(self) -> int:
        return len(self.heights)

    def tau(self, e: int) -> int:
        """The white edge through the same crossing (edges share crossing ids)."""
        return e

    def white_height(self, e: int) -> int:
        return 1 - self.heights[e]

    def left_face(self, e: int, forward: bool) -> int:
        """White region on the left of black edge ``e`` walked forward or backward."""
        k = self.black_parity[e]
        return self.region_of[(e, (k + 3) % 4 if forward else (k + 1) % 4)]

    def to_report(self) -> dict:
        """Deterministic debugging view; key order is fixed."""
        return {
            "crossings": self.diagram.n_crossings,
            "faces": [[list(c) for c in f] for f in self.faces],
            "coloring": list(self.colors),
            "black_vertices": list(self.black.vertices),
            "black_edges": [list(e) for e in self.black.edges],
            "white_vertices": list(self.white.vertices),
            "white_edges": [list(e) for e in self.white.edges],
            "heights": list(self.heights),
            "signs": ["+" if s > 0 else "-" for s in self.signs],
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "base_arc": self.base_arc,
            "black_base": self.black_base,
            "white_base": self.white_base,
            "unbounded_face": self.unbounded_face,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_report(), indent=None, separators=(",", ":"))


def _boundary_order(d: LinkDiagram, region_corners: Sequence[Corner]) -> tuple[Corner, ...]:
    members = set(region_corners)
    start = min(region_corners)
    out = [start]
    x, k = start
    while True:
        y, j = d.other_slot((x, (k + 1) % 4))
        if (y, j) == start or (y, j) not in members:
            break
        out.append((y, j))
        x, k = y, j
    return tuple(out)


def build_tait(d: LinkDiagram, base_arc: int | None = None, swap_colors: bool = False) -> TaitStructure:
    """Faces, colouring, Tait graphs, heights and base points of ``d``.

    The region holding corner 0 of crossing 0 is coloured white (black when
    ``swap_colors``).  The omitted face and vertex are the lowest-numbered
    white and black regions.
    """
    if not d.crossings:
        # round unknot: one black disc, one white disc
        colors = ("W", "B") if not swap_colors else ("B", "W")
        wb, bb = (0, 1) if not swap_colors else (1, 0)
        return TaitStructure(
            diagram=d,
            region_of={},
            faces=((), ()),
            colors=colors,
            black=Graph((bb,), ()),
            white=Graph((wb,), ()),
            black_parity=(),
            heights=(),
            signs=(),
            base_arc=0,
            black_base=bb,
            white_base=wb,
            unbounded_face=wb,
            omitted_vertex=bb,
        )
    region_of = corner_regions(d)
    nreg = max(region_of.values()) + 1
    # 2-colour: opposite corners share a colour, adjacent corners differ
    color: list[str | None] = [None] * nreg
    color[region_of[(0, 0)]] = "B" if swap_colors else "W"
    flip = {"B": "W", "W": "B"}
    changed = True
    while changed:
        changed = False
        for x in range(d.n_crossings):
            for k in range(4):
                r, s = region_of[(x, k)], region_of[(x, (k + 1) % 4)]
                if color[r] is not None and color[s] is None:
                    color[s] = flip[color[r]]
                    changed = True
                elif color[s] is not None and color[r] is None:
                    color[r] = flip[color[s]]
                    changed = True
                elif color[r] is not None and color[r] == color[s]:
                    raise ColoringFailure(f"regions {r} and {s} share an arc and a colour")
    if any(c is None for c in color):
        raise ColoringFailure("some region was never coloured")
    by_region: dict[int, list[Corner]] = {r: [] for r in range(nreg)}
    for c, r in sorted(region_of.items()):
        by_region[r].append(c)
    faces = tuple(_boundary_order(d, by_region[r]) for r in range(nreg))

    parity, heights, black_edges, white_edges = [], [], [], []
    for x in range(d.n_crossings):
        k = 0 if color[region_of[(x, 0)]] == "B" else 1
        parity.append(k)
        heights.append(0 if k == 0 else 1)
        black_edges.append((region_of[(x, k)], region_of[(x, k + 2)]))
        white_edges.append((region_of[(x, k + 1)], region_of[(x, (k + 3) % 4)]))
    blacks = tuple(r for r in range(nreg) if color[r] == "B")
    whites = tuple(r for r in range(nreg) if color[r] == "W")

    if base_arc is None:
        base_arc = d.arcs[0]
    if base_arc not in d.arc_slots:
        raise ValueError(f"base arc {base_arc} is not an arc of the diagram")
    x, s = d.arc_slots[base_arc][0]
    r1, r2 = region_of[(x, (s - 1) % 4)], region_of[(x, s)]
    black_base, white_base = (r1, r2) if color[r1] == "B" else (r2, r1)

    return TaitStructure(
        diagram=d,
        region_of=region_of,
        faces=faces,
        colors=tuple(color),
        black=Graph(blacks, tuple(black_edges)),
        white=Graph(whites, tuple(white_edges)),
        black_parity=tuple(parity),
        heights=tuple(heights),
        signs=d.signs,
        base_arc=base_arc,
        black_base=black_base,
        white_base=white_base,
        unbounded_face=whites[0],
        omitted_vertex=blacks[0],
    )
