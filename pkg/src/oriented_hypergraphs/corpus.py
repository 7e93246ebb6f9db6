"""Deterministic test corpora.

Everything here is reproducible from fixed seeds, so test runs and the
acceptance suite see byte-identical inputs every time.  Structures are
deliberately lopsided: empty pieces, parallel incidences, single-edge
blobs, plain graphs, and seeded random fill.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from .bidirected import BidirectedGraph, as_bidirected
from .core import IncidenceHypergraph, OrientedHypergraph
from .matrices import graph_orientation

_SEED = 812204


def all_hypergraphs(
    max_vertices: int, max_edges: int, max_incidences: int
) -> list[IncidenceHypergraph]:
    """Every incidence structure up to the given sizes, one per cell multiset."""
    out: list[IncidenceHypergraph] = []
    for nv in range(max_vertices + 1):
        vertices = [f"v{k}" for k in range(1, nv + 1)]
        for ne in range(max_edges + 1):
            edges = [f"e{k}" for k in range(1, ne + 1)]
            cells = [(v, e) for v in vertices for e in edges]
            for ni in range(max_incidences + 1):
                for combo in itertools.combinations_with_replacement(range(len(cells)), ni):
                    incs = [
                        (f"i{k}", cells[c][0], cells[c][1])
                        for k, c in enumerate(combo, 1)
                    ]
                    out.append(IncidenceHypergraph.build(vertices, edges, incs))
    return out


def signings_for(g: IncidenceHypergraph) -> list[dict[str, int]]:
    """All plus/minus sign assignments, in binary counting order."""
    ids = [i.id for i in g.incidences]
    return [dict(zip(ids, combo)) for combo in itertools.product((1, -1), repeat=len(ids))]


def _cell_key(g: IncidenceHypergraph) -> tuple:
    counts: dict[tuple[str, str], int] = {}
    for i in g.incidences:
        counts[(i.vertex, i.edge)] = counts.get((i.vertex, i.edge), 0) + 1
    return (len(g.vertices), len(g.edges), tuple(sorted(counts.items())))


def structure_corpus(minimum: int = 300) -> list[IncidenceHypergraph]:
    """At least ``minimum`` structures within 4 vertices, 3 edges, 8 incidences.

    An exhaustive small block first, then seeded random fill with at
    most 5 incidences per edge to keep family enumeration affordable.
    """
    out = list(all_hypergraphs(2, 2, 4))
    seen = {_cell_key(g) for g in out}
    rng = random.Random(_SEED)
    while len(out) < minimum:
        nv = rng.randint(2, 4)
        ne = rng.randint(1, 3)
        ni = rng.randint(3, 8)
        vertices = [f"v{k}" for k in range(1, nv + 1)]
        edges = [f"e{k}" for k in range(1, ne + 1)]
        per_edge = {e: 0 for e in edges}
        incs = []
        for k in range(1, ni + 1):
            open_edges = [e for e in edges if per_edge[e] < 5]
            if not open_edges:
                break
            e = rng.choice(open_edges)
            v = rng.choice(vertices)
            per_edge[e] += 1
            incs.append((f"i{k}", v, e))
        g = IncidenceHypergraph.build(vertices, edges, incs)
        key = _cell_key(g)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


def graph_structure(
    vertices: Sequence[str], pairs: Iterable[tuple[str, str]]
) -> IncidenceHypergraph:
    """A two-incidence-per-edge structure over explicit endpoint pairs."""
    edges = []
    incs = []
    for k, (a, b) in enumerate(pairs, 1):
        e = f"e{k}"
        edges.append(e)
        incs.append((f"{e}a", a, e))
        incs.append((f"{e}b", b, e))
    return IncidenceHypergraph.build(vertices, edges, incs)


def _connected(vertices: Sequence[str], pairs: Sequence[tuple[str, str]]) -> bool:
    if not vertices:
        return True
    reach = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        v = frontier.pop()
        for a, b in pairs:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in reach:
                    reach.add(y)
                    frontier.append(y)
    return len(reach) == len(vertices)


def connected_graph_corpus() -> list[IncidenceHypergraph]:
    """Connected simple graphs: all of them up to 4 vertices, then a
    five-vertex selection (complete, cycle, path, star, seeded sample)."""
    out: list[IncidenceHypergraph] = []
    for nv in range(1, 5):
        vertices = [f"v{k}" for k in range(1, nv + 1)]
        all_pairs = list(itertools.combinations(vertices, 2))
        for r in range(len(all_pairs) + 1):
            for chosen in itertools.combinations(all_pairs, r):
                if _connected(vertices, chosen):
                    out.append(graph_structure(vertices, chosen))
    five = [f"v{k}" for k in range(1, 6)]
    pairs5 = list(itertools.combinations(five, 2))
    picks = [
        tuple(pairs5),                                            # complete
        (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1")),
        (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")),  # path
        (("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v1", "v5")),  # star
    ]
    seen = {frozenset(p) for p in picks}
    rng = random.Random(_SEED + 1)
    while len(picks) < 16:
        r = rng.randint(4, 8)
        chosen = tuple(sorted(rng.sample(pairs5, r)))
        if frozenset(chosen) in seen or not _connected(five, chosen):
            continue
        seen.add(frozenset(chosen))
        picks.append(chosen)
    out.extend(graph_structure(five, p) for p in picks)
    return out


_BIDIRECTED_SHAPES: tuple[tuple[tuple[str, ...], tuple[tuple[str, str], ...]], ...] = (
    (("v1",), ()),
    (("v1",), (("v1", "v1"),)),
    (("v1", "v2"), (("v1", "v2"),)),
    (("v1", "v2"), (("v1", "v2"), ("v1", "v2"))),
    (("v1", "v2"), (("v1", "v2"), ("v1", "v1"))),
    (("v1", "v2", "v3"), (("v1", "v2"), ("v2", "v3"))),
    (("v1", "v2", "v3"), (("v1", "v2"), ("v1", "v3"), ("v2", "v3"))),
    (("v1", "v2", "v3"), (("v1", "v2"), ("v1", "v2"), ("v2", "v3"))),
    (("v1", "v2", "v3"), (("v1", "v2"), ("v2", "v3"), ("v3", "v3"))),
    (("v1", "v2", "v3", "v4"), (("v1", "v2"), ("v2", "v3"), ("v3", "v4"))),
    (("v1", "v2", "v3", "v4"), (("v1", "v2"), ("v3", "v4"))),
    (("v1", "v2", "v3", "v4"), (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"))),
    (("v1", "v2", "v3", "v4"), (("v1", "v2"), ("v1", "v3"), ("v1", "v4"))),
    (
        ("v1", "v2", "v3", "v4"),
        (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"), ("v1", "v3")),
    ),
    (
        ("v1", "v2", "v3", "v4"),
        (("v1", "v2"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v2")),
    ),
)


def bidirected_corpus() -> list[BidirectedGraph]:
    """Bidirected graphs on at most 4 vertices and 5 edges, varied signs."""
    rng = random.Random(_SEED + 2)
    out = []
    for vertices, pairs in _BIDIRECTED_SHAPES:
        g = graph_structure(vertices, pairs)
        ids = [i.id for i in g.incidences]
        sign_maps = [graph_orientation(g).signs, {i: 1 for i in ids}]
        for _ in range(2):
            sign_maps.append({i: rng.choice((1, -1)) for i in ids})
        for signs in sign_maps:
            out.append(as_bidirected(OrientedHypergraph.build(g, signs)))
    return out


def random_hypergraphs(count: int = 50, seed: int = _SEED + 3) -> list[IncidenceHypergraph]:
    """Seeded random structures, degenerate shapes first."""
    out = [
        IncidenceHypergraph.build([], [], []),
        IncidenceHypergraph.build(["v1"], [], []),
        IncidenceHypergraph.build([], ["e1"], []),
        IncidenceHypergraph.build(["v1"], ["e1"], []),
    ]
    rng = random.Random(seed)
    while len(out) < count:
        nv = rng.randint(1, 5)
        ne = rng.randint(1, 4)
        ni = rng.randint(0, 10)
        vertices = [f"v{k}" for k in range(1, nv + 1)]
        edges = [f"e{k}" for k in range(1, ne + 1)]
        incs = [
            (f"i{k}", rng.choice(vertices), rng.choice(edges))
            for k in range(1, ni + 1)
        ]
        out.append(IncidenceHypergraph.build(vertices, edges, incs))
    return out
