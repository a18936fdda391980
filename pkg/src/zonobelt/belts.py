"""Belts, the belt graph on facet classes, and belt distances.

Opposite facets are identified (they share a facet class), so the graph
built here is the Venkov graph and distances on it are belt distances with
the convention that opposite facets are at distance 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import Disconnected, InternalInconsistency, NotAFlat
from .exactlin import Subspace, closure, direction_classes, quotient_project
from .zonotope import (
    FacetClass,
    Flat,
    GeneratorSet,
    RidgeClass,
    facet_by_indices,
    facet_classes,
    ridge_by_indices,
    ridge_classes,
)


@dataclass(frozen=True)
class Belt:
    ridge: RidgeClass
    members: tuple[FacetClass, ...]

    @property
    def length(self) -> int:
        """Number of facets (each member class contributes two)."""
        return 2 * len(self.members)


@dataclass(frozen=True)
class BeltGraph:
    vertices: tuple[FacetClass, ...]
    edges: dict  # (i, j) with i < j -> tuple of witnessing ridge ids
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]


@dataclass(frozen=True)
class BeltPath:
    """``facets[0], belts[0], facets[1], ..., belts[n-1], facets[n]``."""

    facets: tuple[FacetClass, ...]
    belts: tuple[Belt, ...]

    @property
    def length(self) -> int:
        return len(self.belts)

    def is_valid(self) -> bool:
        if len(self.facets) != len(self.belts) + 1:
            return False
        for i, belt in enumerate(self.belts):
            ids = {m.id for m in belt.members}
            a, b = self.facets[i], self.facets[i + 1]
            if a.id == b.id or a.id not in ids or b.id not in ids:
                return False
        return True


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def belt_of(V: GeneratorSet, ridge: RidgeClass) -> Belt:
    """All facet classes parallel to ``ridge``.

    The member count is cross-checked against the number of directions the
    remaining generators take in the 2-dimensional quotient.
    """
    key = ("belt", ridge.id)
    if key in V._memo:
        return V._memo[key]
    rmask = _mask(ridge.indices)
    members = tuple(fc for fc in facet_classes(V) if _mask(fc.indices) & rmask == rmask)
    outside = [i for i in range(V.n) if not rmask >> i & 1]
    count = len(direction_classes(quotient_project(V, ridge.flat.space, outside)))
    if count != len(members):
        raise InternalInconsistency(
            f"ridge {ridge.indices}: {len(members)} facet classes but {count} quotient directions"
        )
    belt = Belt(ridge, members)
    V._memo[key] = belt
    return belt


def belts(V: GeneratorSet) -> tuple[Belt, ...]:
    return tuple(belt_of(V, r) for r in ridge_classes(V))


def belt_graph(V: GeneratorSet) -> BeltGraph:
    """Facet classes joined when some ridge flat lies in both."""
    if "graph" in V._memo:
        return V._memo["graph"]
    verts = facet_classes(V)
    edges: dict[tuple[int, int], list[int]] = {}
    for belt in belts(V):
        ids = [m.id for m in belt.members]
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.setdefault((ids[a], ids[b]), []).append(belt.ridge.id)
    adj: list[list[int]] = [[] for _ in verts]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    graph = BeltGraph(
        verts,
        {e: tuple(sorted(r)) for e, r in sorted(edges.items())},
        tuple(tuple(sorted(a)) for a in adj),
    )
    V._memo["graph"] = graph
    return graph


def _bfs(graph: BeltGraph, source: int) -> tuple[list[int], list[int]]:
    dist = [-1] * len(graph.vertices)
    parent = [-1] * len(graph.vertices)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def _as_id(x) -> int:
    return x if isinstance(x, int) else x.id


def belt_distance(V: GeneratorSet, F, G) -> int:
    """Belt distance between two facet classes (ids or FacetClass)."""
    f, g = _as_id(F), _as_id(G)
    if f == g:
        return 0
    dist, _ = _bfs(belt_graph(V), f)
    if dist[g] < 0:
        raise Disconnected(f, g)
    return dist[g]


def distance_matrix(V: GeneratorSet) -> list[list[int]]:
    if "distances" in V._memo:
        return V._memo["distances"]
    graph = belt_graph(V)
    rows = [_bfs(graph, s)[0] for s in range(len(graph.vertices))]
    V._memo["distances"] = rows
    return rows


def belt_diameter(V: GeneratorSet) -> int:
    """Largest belt distance over all pairs of facet classes."""
    if V.dim <= 1:
        return 0
    best = 0
    for s, row in enumerate(distance_matrix(V)):
        for t, x in enumerate(row):
            if x < 0:
                raise Disconnected(s, t)
            best = max(best, x)
    return best


def diameter_pair(V: GeneratorSet) -> tuple[int, int]:
    """Lexicographically first pair of class ids attaining the diameter."""
    target = belt_diameter(V)
    for s, row in enumerate(distance_matrix(V)):
        for t, x in enumerate(row):
            if x == target:
                return s, t
    return 0, 0


def shortest_belt_path(V: GeneratorSet, F, G) -> BeltPath:
    """A shortest belt path; BFS visits neighbours by ascending id and each
    step uses the lowest witnessing ridge."""
    graph = belt_graph(V)
    f, g = _as_id(F), _as_id(G)
    if f == g:
        return BeltPath((graph.vertices[f],), ())
    dist, parent = _bfs(graph, f)
    if dist[g] < 0:
        raise Disconnected(f, g)
    chain = [g]
    while chain[-1] != f:
        chain.append(parent[chain[-1]])
    chain.reverse()
    ridges = ridge_classes(V)
    steps = []
    for a, b in zip(chain, chain[1:]):
        rid = graph.edges[(min(a, b), max(a, b))][0]
        steps.append(belt_of(V, ridges[rid]))
    return BeltPath(tuple(graph.vertices[i] for i in chain), tuple(steps))


@dataclass(frozen=True)
class Projection:
    """``Z(V)`` projected along the flat ``along``; image index ``i`` comes
    from source index ``index_map[i]``."""

    source: GeneratorSet
    along: Flat
    image: GeneratorSet
    index_map: tuple[int, ...]


def project_along(V: GeneratorSet, W: Flat) -> Projection:
    keep = tuple(i for i in range(V.n) if i not in set(W.indices))
    gens = quotient_project(V, W.space, keep)
    labels = tuple(V.label(i) for i in keep)
    image = GeneratorSet(V.dim - W.k, tuple(gens), labels)
    return Projection(V, W, image, keep)


def lift_flat(V: GeneratorSet, W: Flat, flat_u: Flat) -> Flat:
    """The flat of ``V`` that projects onto ``flat_u`` (same codimension)."""
    proj = project_along(V, W)
    try:
        pre = {proj.index_map[i] for i in flat_u.indices}
    except IndexError:
        raise NotAFlat(f"{flat_u.indices} is not an index set of the projection") from None
    pre |= set(W.indices)
    closed = closure(V, pre)
    if closed != pre:
        raise NotAFlat(f"preimage of {flat_u.indices} is not closed")
    space = Subspace.span([V.gens[i] for i in sorted(pre)], V.dim) if pre else Subspace(V.dim, (), ())
    if space.dim != flat_u.k + W.k:
        raise NotAFlat(f"lift of {flat_u.indices} has dimension {space.dim}, expected {flat_u.k + W.k}")
    return Flat(tuple(sorted(pre)), space)


def lift_path(V: GeneratorSet, W: Flat, path: BeltPath) -> BeltPath:
    """Carry a belt path of the projection along ``W`` back to ``Z(V)``."""
    facets = tuple(facet_by_indices(V, lift_flat(V, W, f.flat).indices) for f in path.facets)
    steps = []
    for belt in path.belts:
        lifted = lift_flat(V, W, belt.ridge.flat)
        steps.append(belt_of(V, ridge_by_indices(V, lifted.indices)))
    out = BeltPath(facets, tuple(steps))
    if not out.is_valid():
        raise InternalInconsistency("lifted belt path is not a belt path")
    return out


def path_in_projection(V: GeneratorSet, W: Flat, F: FacetClass, G: FacetClass) -> tuple[Projection, FacetClass, FacetClass]:
    """Facet classes of the projection whose lifts are ``F`` and ``G``.

    Both facets must contain ``W``.
    """
    proj = project_along(V, W)
    inv = {src: i for i, src in enumerate(proj.index_map)}
    out = []
    for fc in (F, G):
        if not set(W.indices) <= set(fc.indices):
            raise NotAFlat(f"facet {fc.indices} does not contain {W.indices}")
        out.append(facet_by_indices(proj.image, [inv[i] for i in fc.indices if i in inv]))
    return proj, out[0], out[1]
