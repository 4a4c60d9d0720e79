"""Kauffman states and the spanning-tree cochain complex.

States are spanning trees of the black graph.  The differential sends a
tree ``T`` to every ``T' = T - e + f`` with ``h(e) = 0`` and ``h(f) = 1``,
with coefficient ``1/(1 + alpha) + 1/(1 + beta)``: ``alpha`` is the product
of face variables over the region to the left of the circuit in ``T + f``
(oriented so that ``f`` runs from the side of ``T - e`` away from the black
base point towards it) and ``beta`` the product of vertex variables over
that far side.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .algebra import LaurentMonomial, RationalFunction, VariableTable, psi_coeff
from .tait import TaitStructure


@dataclass(frozen=True, order=True)
class KauffmanState:
    edges: frozenset = field(compare=False)
    height: int = field(compare=False)
    doubled_degree: int = field(compare=False)
    key: tuple = field(default=(), repr=False)

    @classmethod
    def make(cls, edges: Iterable[int], t: TaitStructure) -> "KauffmanState":
        edges = frozenset(edges)
        h = sum(t.heights[e] if e in edges else 1 - t.heights[e] for e in range(t.n_edges))
        return cls(edges, h, h - t.n_minus, (h, tuple(sorted(edges))))

    @property
    def degree(self) -> float:
        return self.doubled_degree / 2


class _UnionFind:
    def __init__(self, items):
        self.parent = {v: v for v in items}

    def find(self, v):
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def spanning_trees(vertices, edges) -> Iterator[frozenset]:
    """All spanning trees of a multigraph by include/exclude on each edge.

    Loops are skipped.  Parallel edges give distinct trees.  Order: edges in
    index order, inclusion branch first.
    """
    vertices = list(vertices)
    need = len(vertices) - 1
    live = [e for e, (s, t) in enumerate(edges) if s != t]

    def connected_with(chosen_parent: dict, start: int) -> bool:
        # can the forest plus edges live[start:] still connect everything?
        uf = _UnionFind(vertices)
        for v, p in chosen_parent.items():
            uf.union(v, p)
        comps = len({uf.find(v) for v in vertices})
        for e in live[start:]:
            s, t = edges[e]
            if uf.union(s, t):
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int, chosen: list[int], uf_parent: dict):
        if len(chosen) == need:
            yield frozenset(chosen)
            return
        if i == len(live):
            return
        e = live[i]
        s, t = edges[e]
        uf = _UnionFind(vertices)
        uf.parent = dict(uf_parent)
        if uf.union(s, t):
            chosen.append(e)
            yield from rec(i + 1, chosen, uf.parent)
            chosen.pop()
        links = {v: p for v, p in uf_parent.items() if v != p}
        if connected_with(links, i + 1):
            yield from rec(i + 1, chosen, uf_parent)

    if need == 0:
        yield frozenset()
        return
    if connected_with({}, 0):
        yield from rec(0, [], {v: v for v in vertices})


def enumerate_states(t: TaitStructure) -> list[KauffmanState]:
    states = [KauffmanState.make(T, t) for T in spanning_trees(t.black.vertices, t.black.edges)]
    states.sort()
    return states


def _tree_adjacency(t: TaitStructure, edges: Iterable[int]) -> dict[int, list[tuple[int, int]]]:
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in edges:
        s, d = t.black.edges[e]
        adj[s].append((e, d))
        adj[d].append((e, s))
    return adj


def _component(adj, start: int, banned: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e, w in adj[v]:
            if e != banned and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _split(t: TaitStructure, T: KauffmanState, e: int) -> tuple[set[int], set[int]]:
    """(C, C'): the two sides of T - e, C' holding the black base point."""
    adj = _tree_adjacency(t, T.edges)
    near = _component(adj, t.black_base, e)
    far = set(t.black.vertices) - near
    return far, near


def state_neighbors(T: KauffmanState, t: TaitStructure) -> list[tuple[KauffmanState, int, int]]:
    """All (T', e, f) with T' = T - e + f, h(e) = 0, h(f) = 1."""
    out = []
    for e in sorted(T.edges):
        if t.heights[e] != 0:
            continue
        far, _ = _split(t, T, e)
        for f in range(t.n_edges):
            if f in T.edges or t.heights[f] != 1:
                continue
            s, d = t.black.edges[f]
            if (s in far) != (d in far):
                out.append((KauffmanState.make((T.edges - {e}) | {f}, t), e, f))
    return out


def _tree_path(t: TaitStructure, edges, a: int, b: int) -> list[tuple[int, bool]]:
    """Edges of the tree path from a to b, each with its traversal direction."""
    adj = _tree_adjacency(t, edges)
    prev: dict[int, tuple[int, int] | None] = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            break
        for e, w in adj[v]:
            if w not in prev:
                prev[w] = (e, v)
                stack.append(w)
    path = []
    v = b
    while prev[v] is not None:
        e, u = prev[v]
        path.append((e, t.black.edges[e][0] == u))
        v = u
    path.reverse()
    return path


def black_circuit_monomial(
    T: KauffmanState, e: int, f: int, t: TaitStructure, variables: VariableTable | None = None
) -> LaurentMonomial:
    """alpha(T, T'): face variables over the region left of the oriented circuit."""
    variables = variables or variable_table(t)
    far, _ = _split(t, T, e)
    s, d = t.black.edges[f]
    forward = s in far
    a, b = (s, d) if forward else (d, s)
    circuit = {f} | {g for g, _ in _tree_path(t, T.edges, b, a)}
    start = t.left_face(f, forward)
    # regions reachable without crossing the circuit
    adj: dict[int, list[int]] = defaultdict(list)
    for g, (p, q) in enumerate(t.white.edges):
        if g in circuit:
            continue
        adj[p].append(q)
        adj[q].append(p)
    side = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in side:
                side.add(w)
                stack.append(w)
    return variables.face_product(side)


def white_circuit_monomial(
    T: KauffmanState, e: int, t: TaitStructure, variables: VariableTable | None = None
) -> LaurentMonomial:
    """beta(T, T'): vertex variables over the side of T - e away from the base point."""
    variables = variables or variable_table(t)
    far, _ = _split(t, T, e)
    return variables.vertex_product(far)


def variable_table(t: TaitStructure) -> VariableTable:
    return VariableTable(
        faces=t.white.vertices,
        vertices=t.black.vertices,
        omitted_face=t.unbounded_face,
        omitted_vertex=t.omitted_vertex,
    )


Matrix = dict  # {(row, col): RationalFunction}, rows index the source degree


@dataclass
class GradedComplex:
    tait: TaitStructure
    variables: VariableTable
    states_by_degree: dict[int, list[KauffmanState]]
    differentials: dict[int, Matrix]  # doubled degree D -> matrix D -> D + 2

    @property
    def degrees(self) -> list[int]:
        return sorted(self.states_by_degree)

    def counts(self) -> dict[int, int]:
        return {D: len(s) for D, s in sorted(self.states_by_degree.items())}

    def n_states(self) -> int:
        return sum(len(s) for s in self.states_by_degree.values())

    def shape(self, D: int) -> tuple[int, int]:
        return len(self.states_by_degree.get(D, [])), len(self.states_by_degree.get(D + 2, []))

    def nonzero_entries(self) -> int:
        return sum(1 for m in self.differentials.values() for v in m.values() if v)

    def dump(self) -> dict:
        """Per degree: states as edge lists and sparse ``(row, col, text)`` entries."""
        names = self.variables.names()
        out = {"variables": names, "degrees": []}
        for D in self.degrees:
            m = self.differentials.get(D, {})
            out["degrees"].append(
                {
                    "doubled_degree": D,
                    "states": [sorted(s.edges) for s in self.states_by_degree[D]],
                    "entries": [[i, j, v.render(names)] for (i, j), v in sorted(m.items()) if v],
                }
            )
        return out

    def dump_json(self) -> str:
        return json.dumps(self.dump(), indent=1)


def assemble(t: TaitStructure) -> GradedComplex:
    variables = variable_table(t)
    states = enumerate_states(t)
    by_degree: dict[int, list[KauffmanState]] = defaultdict(list)
    for s in states:
        by_degree[s.doubled_degree].append(s)
    index = {D: {s.edges: i for i, s in enumerate(lst)} for D, lst in by_degree.items()}
    diffs: dict[int, Matrix] = {}
    for D, lst in sorted(by_degree.items()):
        m: Matrix = {}
        for i, T in enumerate(lst):
            for T2, e, f in state_neighbors(T, t):
                alpha = black_circuit_monomial(T, e, f, t, variables)
                beta = white_circuit_monomial(T, e, t, variables)
                m[(i, index[D + 2][T2.edges])] = psi_coeff(alpha, beta)
        if D + 2 in by_degree:
            diffs[D] = m
    return GradedComplex(t, variables, dict(sorted(by_degree.items())), diffs)


def compose(a: Matrix, b: Matrix) -> Matrix:
    """Matrix of b after a (rows of ``a`` index the source)."""
    by_row: dict[int, list[tuple[int, RationalFunction]]] = defaultdict(list)
    for (j, k), v in b.items():
        by_row[j].append((k, v))
    out: dict[tuple[int, int], RationalFunction] = {}
    for (i, j), v in a.items():
        for k, w in by_row.get(j, ()):
            key = (i, k)
            out[key] = out[key] + v * w if key in out else v * w
    return {k: v for k, v in out.items() if v}


def verify_d_squared(c: GradedComplex) -> bool:
    for D, m in c.differentials.items():
        nxt = c.differentials.get(D + 2)
        if nxt is None:
            continue
        if compose(m, nxt):
            return False
    return True
