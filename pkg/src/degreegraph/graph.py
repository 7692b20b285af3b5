"""Degree graphs and the invariants computed on them.

Two representations share one read interface (``vertices``, ``has_edge``,
``neighbors``, ``edges``):

* :class:`DegreeGraph` stores adjacency explicitly and is what every small
  construction produces.
* :class:`JoinGraph` stores only the *complement* edges. The degree graph of
  a direct product with thousands of factors is almost complete, so the
  complement is the sparse side.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .arith import prime_divisors
from .chardeg import degree_set

Edge = tuple[int, int]


@dataclass(frozen=True)
class DegreeGraph:
    vertices: tuple[int, ...]
    adjacency: Mapping[int, frozenset[int]] = field(repr=False)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Sequence[int]] = ()) -> DegreeGraph:
        verts = tuple(sorted(set(vertices)))
        adj: dict[int, set[int]] = {v: set() for v in verts}
        for p, q in edges:
            if p == q:
                raise ValueError(f"loop at vertex {p}")
            if p not in adj or q not in adj:
                raise ValueError(f"edge {p}-{q} has an endpoint outside the vertex set")
            adj[p].add(q)
            adj[q].add(p)
        return cls(verts, {v: frozenset(n) for v, n in adj.items()})

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, p: int, q: int) -> bool:
        return q in self.adjacency.get(p, ())

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def edges(self) -> Iterator[Edge]:
        for p in self.vertices:
            for q in sorted(self.adjacency[p]):
                if p < q:
                    yield p, q

    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency.values()) // 2

    def induced(self, keep: Iterable[int]) -> DegreeGraph:
        keep = frozenset(keep)
        verts = tuple(sorted(keep))
        return DegreeGraph(verts, {v: self.adjacency[v] & keep for v in verts})


@dataclass(frozen=True)
class JoinGraph:
    """A graph given by its vertex set and its (sparse) complement edges."""

    vertices: tuple[int, ...]
    co_adjacency: Mapping[int, frozenset[int]] = field(repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, p: int, q: int) -> bool:
        return p != q and p in self.co_adjacency and q not in self.co_adjacency[p]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.vertices) - self.co_adjacency[v] - {v}

    def edges(self) -> Iterator[Edge]:
        for i, p in enumerate(self.vertices):
            missing = self.co_adjacency[p]
            for q in self.vertices[i + 1 :]:
                if q not in missing:
                    yield p, q

    def edge_count(self) -> int:
        n = len(self.vertices)
        co = sum(len(m) for m in self.co_adjacency.values()) // 2
        return n * (n - 1) // 2 - co

    def to_explicit(self) -> DegreeGraph:
        return DegreeGraph.from_edges(self.vertices, self.edges())


AnyGraph = DegreeGraph | JoinGraph


def build_graph(degrees: Iterable[int]) -> DegreeGraph:
    """Degree graph of a degree set: primes ``p != q`` adjacent iff ``pq`` divides a degree."""
    adj: dict[int, set[int]] = {}
    for d in degree_set(degrees):
        ps = prime_divisors(d)
        for p in ps:
            adj.setdefault(p, set()).update(ps)
    return DegreeGraph(
        tuple(sorted(adj)), {p: frozenset(n - {p}) for p, n in adj.items()}
    )


def complement(g: AnyGraph) -> DegreeGraph:
    """Same vertices, adjacency negated. Always returns an explicit graph."""
    if isinstance(g, JoinGraph):
        return DegreeGraph(g.vertices, dict(g.co_adjacency))
    everything = frozenset(g.vertices)
    return DegreeGraph(
        g.vertices, {v: everything - g.adjacency[v] - {v} for v in g.vertices}
    )


def join_product(g1: AnyGraph, g2: AnyGraph) -> DegreeGraph:
    """Degree graph of a direct product: union of both graphs plus every cross pair."""
    v1, v2 = frozenset(g1.vertices), frozenset(g2.vertices)
    adj: dict[int, frozenset[int]] = {}
    for v in v1 | v2:
        nbrs = set()
        if v in v1:
            nbrs |= g1.neighbors(v) | v2
        if v in v2:
            nbrs |= g2.neighbors(v) | v1
        nbrs.discard(v)
        adj[v] = frozenset(nbrs)
    return DegreeGraph(tuple(sorted(adj)), adj)


def join_many(graphs: Sequence[AnyGraph]) -> JoinGraph:
    """Join of several graphs, kept in complement form.

    A pair is a non-edge of the join only when both ends belong to exactly
    one factor, the same one, and are non-adjacent there.
    """
    seen: dict[int, int] = {}
    for g in graphs:
        for v in g.vertices:
            seen[v] = seen.get(v, 0) + 1
    co: dict[int, frozenset[int]] = {v: frozenset() for v in seen}
    for g in graphs:
        private = frozenset(v for v in g.vertices if seen[v] == 1)
        for v in private:
            co[v] = private - g.neighbors(v) - {v}
    return JoinGraph(tuple(sorted(seen)), co)


# ---------------------------------------------------------------------------
# connectivity and bipartiteness


def connected_components(g: AnyGraph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by least vertex."""
    if isinstance(g, JoinGraph):
        return _join_components(g)
    seen: set[int] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _join_components(g: JoinGraph) -> list[frozenset[int]]:
    # BFS through complement: neighbours are the unvisited vertices not in co_adjacency.
    unvisited = set(g.vertices)
    comps = []
    for root in g.vertices:
        if root not in unvisited:
            continue
        unvisited.discard(root)
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            reach = unvisited - g.co_adjacency[v]
            unvisited -= reach
            comp.extend(reach)
            queue.extend(reach)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


@dataclass(frozen=True)
class Bipartition:
    part_a: frozenset[int]
    part_b: frozenset[int]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class OddCycle:
    """Closed walk ``cycle[0] - cycle[1] - ... - cycle[-1] - cycle[0]`` of odd length."""

    cycle: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


def is_bipartite(g: AnyGraph) -> Bipartition | OddCycle:
    """Two-colour ``g`` by BFS; return the colour classes or an odd cycle.

    The result is truthy exactly when ``g`` is bipartite.
    """
    if isinstance(g, JoinGraph):
        g = g.to_explicit()
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddCycle(_tree_cycle(v, w, parent, depth))
    part_a = frozenset(v for v, c in color.items() if c == 0)
    return Bipartition(part_a, frozenset(g.vertices) - part_a)


def _tree_cycle(v: int, w: int, parent: dict, depth: dict) -> tuple[int, ...]:
    left, right = [v], [w]
    a, b = v, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


@dataclass(frozen=True)
class TwoCliqueCover:
    part_a: frozenset[int]
    part_b: frozenset[int]


def two_clique_cover(g: AnyGraph) -> TwoCliqueCover | None:
    """Cover the vertices by two cliques, if the complement is bipartite."""
    split = is_bipartite(complement(g))
    if not split:
        return None
    return TwoCliqueCover(split.part_a, split.part_b)


def is_clique(g: AnyGraph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(p, q) for i, p in enumerate(vs) for q in vs[i + 1 :])


# ---------------------------------------------------------------------------
# maximum clique


def max_clique_bits(nbrs: Sequence[int]) -> int:
    """Maximum clique of the graph on ``0..n-1`` with neighbour bitmasks ``nbrs``.

    Branch and bound in the style of Tomita's MCQ: candidates are greedily
    coloured, and a branch is cut once the current size plus the colour
    count cannot beat the incumbent. Returns the clique as a bitmask.
    """
    n = len(nbrs)
    best = [0, 0]  # size, mask

    def color_sort(cand: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        while cand:
            color += 1
            avail = cand
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~nbrs[v] & ~low
                cand &= ~low
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(size: int, cand: int, clique: int) -> None:
        order, bounds = color_sort(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            new = cand & nbrs[v]
            if new:
                expand(size + 1, new, clique | bit)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, clique | bit
            cand &= ~bit

    if n:
        expand(0, (1 << n) - 1, 0)
    return best[1]


def _indexed(g: DegreeGraph, verts: Sequence[int]) -> list[int]:
    # high-degree vertices get the low bits, so colouring starts from them
    index = {v: i for i, v in enumerate(verts)}
    return [sum(1 << index[w] for w in g.adjacency[v] if w in index) for v in verts]


def _explicit_max_clique(g: DegreeGraph) -> frozenset[int]:
    verts = sorted(g.vertices, key=lambda v: (-len(g.adjacency[v]), v))
    mask = max_clique_bits(_indexed(g, verts))
    return frozenset(v for i, v in enumerate(verts) if mask >> i & 1)


def maximum_independent_set(g: DegreeGraph) -> frozenset[int]:
    """Exact maximum independent set, solved separately on each component."""
    out: set[int] = set()
    for comp in connected_components(g):
        if len(comp) == 1:
            out |= comp
            continue
        out |= _explicit_max_clique(complement(g.induced(comp)))
    return frozenset(out)


def max_clique(g: AnyGraph) -> tuple[int, frozenset[int]]:
    """Clique number and one maximum clique.

    For a :class:`JoinGraph` this is a maximum independent set of the sparse
    complement, taken component by component.
    """
    if isinstance(g, JoinGraph):
        witness = maximum_independent_set(complement(g))
    else:
        witness = _explicit_max_clique(g)
    return len(witness), witness


# ---------------------------------------------------------------------------
# serialization


def to_dict(g: AnyGraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges()]}


def to_json(g: AnyGraph) -> str:
    return json.dumps(to_dict(g), separators=(",", ":"))


def from_dict(data: Mapping) -> DegreeGraph:
    try:
        vertices = [int(v) for v in data["vertices"]]
        edges = [(int(p), int(q)) for p, q in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc
    return DegreeGraph.from_edges(vertices, edges)


def from_json(text: str) -> DegreeGraph:
    return from_dict(json.loads(text))


def to_dot(g: AnyGraph, name: str = "degree_graph") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {p} -- {q};" for p, q in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
