"""Finite incidence hypergraphs and their structure-preserving maps.

An incidence hypergraph is a triple of finite sets (vertices, edges,
incidences) where every incidence is attached to exactly one vertex and
one edge. Incidences are first-class: two incidences may join the same
vertex/edge pair and are never merged. An oriented hypergraph adds a
sign in {-1, 0, +1} to every incidence.

All element identifiers are opaque strings. Insertion order is the
canonical order and every enumeration in the package iterates in it, so
repeated runs produce identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ResourceLimitError
from . import limits

__all__ = [
    "Incidence",
    "IncidenceHypergraph",
    "OrientedHypergraph",
    "ValidationReport",
    "Homomorphism",
    "Subhypergraph",
    "ProductResult",
    "UnionResult",
    "validate",
    "validate_homomorphism",
    "identity_homomorphism",
    "compose",
    "is_monic",
    "subhypergraph",
    "generated_subhypergraph",
    "product",
    "disjoint_union",
    "enumerate_homomorphisms",
    "pair_id",
]


@dataclass(frozen=True)
class Incidence:
    """One attachment of a vertex to an edge."""

    id: str
    vertex: str
    edge: str


@dataclass(frozen=True)
class IncidenceHypergraph:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    incidences: tuple[Incidence, ...]

    @staticmethod
    def build(
        vertices: Iterable[str],
        edges: Iterable[str],
        incidences: Iterable[tuple[str, str, str]],
    ) -> "IncidenceHypergraph":
        """Construct from plain (id, vertex, edge) triples."""
        return IncidenceHypergraph(
            tuple(vertices),
            tuple(edges),
            tuple(Incidence(i, v, e) for i, v, e in incidences),
        )

    # Lookup tables are cached per instance; they assume the structure is
    # valid (see validate), which every public entry point checks first.

    @cached_property
    def vertex_pos(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def edge_pos(self) -> dict[str, int]:
        return {e: k for k, e in enumerate(self.edges)}

    @cached_property
    def incidence_pos(self) -> dict[str, int]:
        return {i.id: k for k, i in enumerate(self.incidences)}

    @cached_property
    def incidence_by_id(self) -> dict[str, Incidence]:
        return {i.id: i for i in self.incidences}

    @cached_property
    def _inc_table(self) -> dict[tuple[str, str], tuple[str, ...]]:
        table: dict[tuple[str, str], list[str]] = {}
        for i in self.incidences:
            table.setdefault((i.vertex, i.edge), []).append(i.id)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def incidences_at_vertex(self) -> dict[str, tuple[str, ...]]:
        table: dict[str, list[str]] = {v: [] for v in self.vertices}
        for i in self.incidences:
            table[i.vertex].append(i.id)
        return {k: tuple(v) for k, v in table.items()}

    @cached_property
    def incidences_on_edge(self) -> dict[str, tuple[str, ...]]:
        table: dict[str, list[str]] = {e: [] for e in self.edges}
        for i in self.incidences:
            table[i.edge].append(i.id)
        return {k: tuple(v) for k, v in table.items()}

    def inc(self, vertex: str, edge: str) -> tuple[str, ...]:
        """Ids of the incidences joining vertex and edge (possibly empty)."""
        if vertex not in self.vertex_pos:
            raise DomainError(f"unknown vertex {vertex!r}")
        if edge not in self.edge_pos:
            raise DomainError(f"unknown edge {edge!r}")
        return self._inc_table.get((vertex, edge), ())

    def vertex_of(self, incidence_id: str) -> str:
        return self.incidence_by_id[incidence_id].vertex

    def edge_of(self, incidence_id: str) -> str:
        return self.incidence_by_id[incidence_id].edge


@dataclass(frozen=True)
class OrientedHypergraph:
    """An incidence hypergraph plus a sign per incidence.

    ``loaded`` records which incidences were introduced by zero-loading
    (as opposed to supplied by the user); the algebra treats a 0 sign the
    same way either way, the flag is provenance only.
    """

    structure: IncidenceHypergraph
    signs: Mapping[str, int]
    loaded: frozenset[str] = frozenset()

    @staticmethod
    def build(
        structure: IncidenceHypergraph,
        signs: Mapping[str, int] | None = None,
        loaded: Iterable[str] = (),
    ) -> "OrientedHypergraph":
        sign_map = {} if signs is None else dict(signs)
        for i in structure.incidences:
            s = sign_map.setdefault(i.id, 1)
            if s not in (-1, 0, 1):
                raise DomainError(f"sign of incidence {i.id!r} must be -1, 0, or +1, got {s!r}")
        unknown = set(sign_map) - set(structure.incidence_pos)
        if unknown:
            raise DomainError(f"signs given for unknown incidences: {sorted(unknown)}")
        return OrientedHypergraph(structure, sign_map, frozenset(loaded))

    def sigma(self, incidence_id: str) -> int:
        return self.signs[incidence_id]

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.structure.vertices

    @property
    def edges(self) -> tuple[str, ...]:
        return self.structure.edges

    @property
    def incidences(self) -> tuple[Incidence, ...]:
        return self.structure.incidences


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None


def _duplicates(items: Sequence[str]) -> list[str]:
    seen: set[str] = set()
    dups: list[str] = []
    for x in items:
        if x in seen and x not in dups:
            dups.append(x)
        seen.add(x)
    return dups


def validate(g: IncidenceHypergraph) -> ValidationReport:
    """Check the structural invariants, reporting every violation found."""
    problems: list[str] = []
    for v in _duplicates(g.vertices):
        problems.append(f"duplicate vertex id {v!r}")
    for e in _duplicates(g.edges):
        problems.append(f"duplicate edge id {e!r}")
    for i in _duplicates([i.id for i in g.incidences]):
        problems.append(f"duplicate incidence id {i!r}")
    vset, eset = set(g.vertices), set(g.edges)
    for i in g.incidences:
        if i.vertex not in vset:
            problems.append(f"incidence {i.id!r} references unknown vertex {i.vertex!r}")
        if i.edge not in eset:
            problems.append(f"incidence {i.id!r} references unknown edge {i.edge!r}")
    return ValidationReport(tuple(problems))


def require_valid(g: IncidenceHypergraph) -> None:
    report = validate(g)
    if not report.ok:
        raise DomainError(report.first)


@dataclass(frozen=True)
class Homomorphism:
    """A triple of componentwise maps commuting with both attachments."""

    source: IncidenceHypergraph
    target: IncidenceHypergraph
    vertex_map: dict[str, str]
    edge_map: dict[str, str]
    incidence_map: dict[str, str]

    def apply_vertex(self, v: str) -> str:
        return self.vertex_map[v]

    def apply_edge(self, e: str) -> str:
        return self.edge_map[e]

    def apply_incidence(self, i: str) -> str:
        return self.incidence_map[i]


def validate_homomorphism(h: Homomorphism) -> ValidationReport:
    problems: list[str] = []
    src, dst = h.source, h.target
    for v in src.vertices:
        if v not in h.vertex_map:
            problems.append(f"vertex map undefined on {v!r}")
        elif h.vertex_map[v] not in dst.vertex_pos:
            problems.append(f"vertex map sends {v!r} outside the target")
    for e in src.edges:
        if e not in h.edge_map:
            problems.append(f"edge map undefined on {e!r}")
        elif h.edge_map[e] not in dst.edge_pos:
            problems.append(f"edge map sends {e!r} outside the target")
    for i in src.incidences:
        if i.id not in h.incidence_map:
            problems.append(f"incidence map undefined on {i.id!r}")
            continue
        ti = h.incidence_map[i.id]
        if ti not in dst.incidence_pos:
            problems.append(f"incidence map sends {i.id!r} outside the target")
            continue
        image = dst.incidence_by_id[ti]
        if i.vertex in h.vertex_map and image.vertex != h.vertex_map[i.vertex]:
            problems.append(f"incidence {i.id!r} breaks the vertex attachment square")
        if i.edge in h.edge_map and image.edge != h.edge_map[i.edge]:
            problems.append(f"incidence {i.id!r} breaks the edge attachment square")
    return ValidationReport(tuple(problems))


def require_valid_homomorphism(h: Homomorphism) -> None:
    report = validate_homomorphism(h)
    if not report.ok:
        raise DomainError(report.first)


def identity_homomorphism(g: IncidenceHypergraph) -> Homomorphism:
    return Homomorphism(
        g,
        g,
        {v: v for v in g.vertices},
        {e: e for e in g.edges},
        {i.id: i.id for i in g.incidences},
    )


def compose(second: Homomorphism, first: Homomorphism) -> Homomorphism:
    """second after first."""
    if first.target != second.source:
        raise DomainError("composition mismatch: first.target differs from second.source")
    return Homomorphism(
        first.source,
        second.target,
        {v: second.vertex_map[w] for v, w in first.vertex_map.items()},
        {e: second.edge_map[f] for e, f in first.edge_map.items()},
        {i: second.incidence_map[j] for i, j in first.incidence_map.items()},
    )


def is_monic(h: Homomorphism) -> bool:
    """True when all three component maps are injective."""
    for m in (h.vertex_map, h.edge_map, h.incidence_map):
        if len(set(m.values())) != len(m):
            return False
    return True


@dataclass(frozen=True)
class Subhypergraph:
    """A view onto a parent hypergraph given by three subsets.

    The incidence subset must be closed: attachments of every chosen
    incidence belong to the chosen vertex/edge subsets.
    """

    parent: IncidenceHypergraph
    vertex_ids: frozenset[str]
    edge_ids: frozenset[str]
    incidence_ids: frozenset[str]

    def materialize(self) -> IncidenceHypergraph:
        """A standalone hypergraph in the parent's canonical order."""
        p = self.parent
        return IncidenceHypergraph(
            tuple(v for v in p.vertices if v in self.vertex_ids),
            tuple(e for e in p.edges if e in self.edge_ids),
            tuple(i for i in p.incidences if i.id in self.incidence_ids),
        )

    def inclusion(self) -> Homomorphism:
        sub = self.materialize()
        return Homomorphism(
            sub,
            self.parent,
            {v: v for v in sub.vertices},
            {e: e for e in sub.edges},
            {i.id: i.id for i in sub.incidences},
        )


def subhypergraph(
    parent: IncidenceHypergraph,
    vertex_ids: Iterable[str],
    edge_ids: Iterable[str],
    incidence_ids: Iterable[str],
) -> Subhypergraph:
    vs, es, is_ = frozenset(vertex_ids), frozenset(edge_ids), frozenset(incidence_ids)
    for v in vs:
        if v not in parent.vertex_pos:
            raise DomainError(f"unknown vertex {v!r}")
    for e in es:
        if e not in parent.edge_pos:
            raise DomainError(f"unknown edge {e!r}")
    for i in is_:
        if i not in parent.incidence_pos:
            raise DomainError(f"unknown incidence {i!r}")
        inc = parent.incidence_by_id[i]
        if inc.vertex not in vs:
            raise DomainError(f"incidence {i!r} attaches to vertex {inc.vertex!r} outside the subset")
        if inc.edge not in es:
            raise DomainError(f"incidence {i!r} attaches to edge {inc.edge!r} outside the subset")
    return Subhypergraph(parent, vs, es, is_)


def generated_subhypergraph(
    parent: IncidenceHypergraph,
    vertex_ids: Iterable[str],
    edge_ids: Iterable[str],
    incidence_ids: Iterable[str],
) -> Subhypergraph:
    """Smallest subhypergraph containing the three seed subsets.

    The vertex and edge subsets grow by the attachments of the seeded
    incidences; the incidence subset is taken as given.
    """
    vs, es, is_ = set(vertex_ids), set(edge_ids), set(incidence_ids)
    for v in vs:
        if v not in parent.vertex_pos:
            raise DomainError(f"unknown vertex {v!r}")
    for e in es:
        if e not in parent.edge_pos:
            raise DomainError(f"unknown edge {e!r}")
    for i in is_:
        if i not in parent.incidence_pos:
            raise DomainError(f"unknown incidence {i!r}")
        inc = parent.incidence_by_id[i]
        vs.add(inc.vertex)
        es.add(inc.edge)
    return Subhypergraph(parent, frozenset(vs), frozenset(es), frozenset(is_))


def pair_id(a: str, b: str) -> str:
    """Unambiguous id for an ordered pair of existing ids."""
    return f"({a!r},{b!r})"


@dataclass(frozen=True)
class ProductResult:
    hypergraph: IncidenceHypergraph
    left: IncidenceHypergraph
    right: IncidenceHypergraph
    projection_left: Homomorphism
    projection_right: Homomorphism
    vertex_pairs: dict[tuple[str, str], str]
    edge_pairs: dict[tuple[str, str], str]
    incidence_pairs: dict[tuple[str, str], str]


def product(g: IncidenceHypergraph, h: IncidenceHypergraph) -> ProductResult:
    """Categorical product: everything is built coordinatewise.

    Incidence pairs attach to the pair of their coordinate attachments,
    so |I| of the product is |I(g)| * |I(h)|.
    """
    vertex_pairs = {(a, b): pair_id(a, b) for a in g.vertices for b in h.vertices}
    edge_pairs = {(a, b): pair_id(a, b) for a in g.edges for b in h.edges}
    incidence_pairs = {
        (i.id, j.id): pair_id(i.id, j.id) for i in g.incidences for j in h.incidences
    }
    incidences = tuple(
        Incidence(
            incidence_pairs[(i.id, j.id)],
            vertex_pairs[(i.vertex, j.vertex)],
            edge_pairs[(i.edge, j.edge)],
        )
        for i in g.incidences
        for j in h.incidences
    )
    prod = IncidenceHypergraph(
        tuple(vertex_pairs.values()), tuple(edge_pairs.values()), incidences
    )
    proj_l = Homomorphism(
        prod,
        g,
        {pid: a for (a, _b), pid in vertex_pairs.items()},
        {pid: a for (a, _b), pid in edge_pairs.items()},
        {pid: a for (a, _b), pid in incidence_pairs.items()},
    )
    proj_r = Homomorphism(
        prod,
        h,
        {pid: b for (_a, b), pid in vertex_pairs.items()},
        {pid: b for (_a, b), pid in edge_pairs.items()},
        {pid: b for (_a, b), pid in incidence_pairs.items()},
    )
    return ProductResult(prod, g, h, proj_l, proj_r, vertex_pairs, edge_pairs, incidence_pairs)


@dataclass(frozen=True)
class UnionResult:
    hypergraph: IncidenceHypergraph
    injections: tuple[Homomorphism, ...]


def disjoint_union(parts: Sequence[IncidenceHypergraph]) -> UnionResult:
    """Tagged disjoint union; the k-th summand's ids get prefix 'k:'."""
    vertices: list[str] = []
    edges: list[str] = []
    incidences: list[Incidence] = []
    injections: list[Homomorphism] = []
    merged = None  # filled after the loop
    maps = []
    for k, part in enumerate(parts):
        vmap = {v: f"{k}:{v}" for v in part.vertices}
        emap = {e: f"{k}:{e}" for e in part.edges}
        imap = {i.id: f"{k}:{i.id}" for i in part.incidences}
        vertices.extend(vmap[v] for v in part.vertices)
        edges.extend(emap[e] for e in part.edges)
        incidences.extend(
            Incidence(imap[i.id], vmap[i.vertex], emap[i.edge]) for i in part.incidences
        )
        maps.append((part, vmap, emap, imap))
    merged = IncidenceHypergraph(tuple(vertices), tuple(edges), tuple(incidences))
    for part, vmap, emap, imap in maps:
        injections.append(Homomorphism(part, merged, vmap, emap, imap))
    return UnionResult(merged, tuple(injections))


def _hom_search_bound(g: IncidenceHypergraph, h: IncidenceHypergraph) -> int:
    return (
        len(h.vertices) ** len(g.vertices)
        * len(h.edges) ** len(g.edges)
        * len(h.incidences) ** len(g.incidences)
    )


def enumerate_homomorphisms(
    g: IncidenceHypergraph,
    h: IncidenceHypergraph,
    *,
    max_candidates: int = limits.MAX_HOM_CANDIDATES,
) -> list[Homomorphism]:
    """All homomorphisms g -> h in deterministic lexicographic order.

    The search assigns incidences first (each assignment pins the images
    of its two attachments), then sweeps the remaining unconstrained
    vertices and edges. A naive product bound guards the search space.
    """
    bound = _hom_search_bound(g, h)
    if bound > max_candidates:
        raise ResourceLimitError(
            f"homomorphism search space {bound} exceeds cap {max_candidates}"
        )
    results: list[Homomorphism] = []
    v_assign: dict[str, str] = {}
    e_assign: dict[str, str] = {}
    i_assign: dict[str, str] = {}
    incs = g.incidences

    def emit() -> None:
        free_vs = [v for v in g.vertices if v not in v_assign]
        free_es = [e for e in g.edges if e not in e_assign]
        for v_choice in itertools.product(h.vertices, repeat=len(free_vs)):
            for e_choice in itertools.product(h.edges, repeat=len(free_es)):
                vm = dict(v_assign)
                vm.update(zip(free_vs, v_choice))
                em = dict(e_assign)
                em.update(zip(free_es, e_choice))
                results.append(Homomorphism(g, h, vm, em, dict(i_assign)))

    def backtrack(k: int) -> None:
        if k == len(incs):
            emit()
            return
        i = incs[k]
        pinned_v = v_assign.get(i.vertex)
        pinned_e = e_assign.get(i.edge)
        for j in h.incidences:
            if pinned_v is not None and j.vertex != pinned_v:
                continue
            if pinned_e is not None and j.edge != pinned_e:
                continue
            i_assign[i.id] = j.id
            if pinned_v is None:
                v_assign[i.vertex] = j.vertex
            if pinned_e is None:
                e_assign[i.edge] = j.edge
            backtrack(k + 1)
            del i_assign[i.id]
            if pinned_v is None:
                del v_assign[i.vertex]
            if pinned_e is None:
                del e_assign[i.edge]

    backtrack(0)
    return results
