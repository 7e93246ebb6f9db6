"""Injectivity machinery for incidence hypergraphs.

Everything here extends a hypergraph by explicitly tagged "false"
elements. The extension ``tilde`` adds one false vertex, one false edge
and a false incidence for every (vertex, edge) pair of the extension;
applying it to the one-incidence terminal object yields the truth-value
object used by ``classify``. ``loading`` is the thrifty variant that
only fills the gaps, producing the minimal fully-incident extension.

Id scheme: a surviving original element x becomes "1:x", the false
vertex and false edge are both named "0", and false incidences are
"0:k" with k the row-major index of their (vertex, edge) pair in the
extended hypergraph. ``loading`` keeps original ids untouched and names
the filler incidences "0:a,b" by coordinate positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import limits
from .core import (
    Homomorphism,
    IncidenceHypergraph,
    OrientedHypergraph,
    ProductResult,
    Subhypergraph,
    generated_subhypergraph,
    identity_homomorphism,
    is_monic,
    product,
)
from .errors import DomainError, ResourceLimitError

__all__ = [
    "TaggedElement",
    "TildeResult",
    "SubobjectClassifier",
    "PowerResult",
    "LoadingResult",
    "initial",
    "terminal",
    "tilde",
    "tilde_map",
    "represent_partial",
    "partial_square_is_pullback",
    "subobject_classifier",
    "classify",
    "subobject_from_map",
    "count_subhypergraphs",
    "enumerate_subhypergraphs",
    "power",
    "elem_map",
    "power_transpose",
    "power_map",
    "is_injective",
    "is_essential_mono",
    "loading",
    "zero_loading",
]

TRUE_PREFIX = "1:"
FALSE_ID = "0"


@dataclass(frozen=True)
class TaggedElement:
    """Provenance of one element of an extended hypergraph.

    ``kind`` is one of "true", "false_vertex", "false_edge",
    "false_incidence". True elements carry the original id in
    ``payload``; false incidences carry the (vertex, edge) ids of the
    extended hypergraph they connect.
    """

    kind: str
    payload: str | None = None
    vertex: str | None = None
    edge: str | None = None


def true_id(original: str) -> str:
    return TRUE_PREFIX + original


def initial() -> IncidenceHypergraph:
    return IncidenceHypergraph.build([], [], [])


def terminal() -> IncidenceHypergraph:
    return IncidenceHypergraph.build(["v"], ["e"], [("i", "v", "e")])


@dataclass(frozen=True)
class TildeResult:
    """Extension of a hypergraph by one false vertex/edge and a false
    incidence on every (vertex, edge) pair of the extension."""

    hypergraph: IncidenceHypergraph
    eta: Homomorphism
    false_incidence: dict[tuple[str, str], str]
    tags: dict[str, TaggedElement]


def tilde(g: IncidenceHypergraph) -> TildeResult:
    vertices = [true_id(v) for v in g.vertices] + [FALSE_ID]
    edges = [true_id(e) for e in g.edges] + [FALSE_ID]
    tags: dict[str, TaggedElement] = {}
    for v in g.vertices:
        tags[true_id(v)] = TaggedElement("true", payload=v)
    incidences: list[tuple[str, str, str]] = []
    for i in g.incidences:
        iid = true_id(i.id)
        incidences.append((iid, true_id(i.vertex), true_id(i.edge)))
        tags[iid] = TaggedElement("true", payload=i.id)
    false_incidence: dict[tuple[str, str], str] = {}
    k = 0
    for v in vertices:
        for e in edges:
            iid = f"0:{k}"
            false_incidence[(v, e)] = iid
            incidences.append((iid, v, e))
            tags[iid] = TaggedElement("false_incidence", vertex=v, edge=e)
            k += 1
    ext = IncidenceHypergraph.build(vertices, edges, incidences)
    eta = Homomorphism(
        g,
        ext,
        {v: true_id(v) for v in g.vertices},
        {e: true_id(e) for e in g.edges},
        {i.id: true_id(i.id) for i in g.incidences},
    )
    return TildeResult(ext, eta, false_incidence, tags)


def tilde_map(phi: Homomorphism) -> Homomorphism:
    """Extension of phi acting on the extended hypergraphs.

    True elements travel through phi; false vertices and edges stay
    false; a false incidence lands on the false incidence over the
    images of its attachments.
    """
    src = tilde(phi.source)
    dst = tilde(phi.target)
    vmap = {true_id(v): true_id(phi.vertex_map[v]) for v in phi.source.vertices}
    vmap[FALSE_ID] = FALSE_ID
    emap = {true_id(e): true_id(phi.edge_map[e]) for e in phi.source.edges}
    emap[FALSE_ID] = FALSE_ID
    imap = {true_id(i.id): true_id(phi.incidence_map[i.id]) for i in phi.source.incidences}
    for (v, e), iid in src.false_incidence.items():
        imap[iid] = dst.false_incidence[(vmap[v], emap[e])]
    return Homomorphism(src.hypergraph, dst.hypergraph, vmap, emap, imap)


def represent_partial(phi: Homomorphism, psi: Homomorphism) -> Homomorphism:
    """Total extension of the partial map (phi, psi) into the target.

    ``phi`` must be monic into the ambient hypergraph K; ``psi`` maps
    the shared source into G. The result sends elements of K inside the
    image of phi through psi as true elements and everything else to
    false elements, landing in tilde(G).
    """
    if phi.source is not psi.source and phi.source != psi.source:
        raise DomainError("phi and psi must share a source")
    if not is_monic(phi):
        raise DomainError("phi must be monic")
    k = phi.target
    dst = tilde(psi.target)
    v_pre = {phi.vertex_map[w]: w for w in phi.source.vertices}
    e_pre = {phi.edge_map[f]: f for f in phi.source.edges}
    i_pre = {phi.incidence_map[j.id]: j.id for j in phi.source.incidences}
    vmap = {
        v: true_id(psi.vertex_map[v_pre[v]]) if v in v_pre else FALSE_ID for v in k.vertices
    }
    emap = {e: true_id(psi.edge_map[e_pre[e]]) if e in e_pre else FALSE_ID for e in k.edges}
    imap: dict[str, str] = {}
    for i in k.incidences:
        if i.id in i_pre:
            imap[i.id] = true_id(psi.incidence_map[i_pre[i.id]])
        else:
            imap[i.id] = dst.false_incidence[(vmap[i.vertex], emap[i.edge])]
    return Homomorphism(k, dst.hypergraph, vmap, emap, imap)


def partial_square_is_pullback(
    phi: Homomorphism, psi: Homomorphism, psihat: Homomorphism
) -> bool:
    """Element chase: (K <- H -> G) is a pullback of (K -> ext <- G).

    The concrete pullback of psihat against the true-part embedding is
    the preimage of the true elements, each paired with the stripped
    image. The square commutes and is a pullback exactly when phi hits
    that preimage bijectively and psi matches the stripped image.
    """
    k = phi.target
    true_v = {v for v in k.vertices if psihat.vertex_map[v] != FALSE_ID}
    true_e = {e for e in k.edges if psihat.edge_map[e] != FALSE_ID}
    true_i = {
        i.id for i in k.incidences if psihat.incidence_map[i.id].startswith(TRUE_PREFIX)
    }
    if {phi.vertex_map[w] for w in phi.source.vertices} != true_v:
        return False
    if {phi.edge_map[f] for f in phi.source.edges} != true_e:
        return False
    if {phi.incidence_map[j.id] for j in phi.source.incidences} != true_i:
        return False
    strip = len(TRUE_PREFIX)
    for w in phi.source.vertices:
        if psihat.vertex_map[phi.vertex_map[w]][strip:] != psi.vertex_map[w]:
            return False
    for f in phi.source.edges:
        if psihat.edge_map[phi.edge_map[f]][strip:] != psi.edge_map[f]:
            return False
    for j in phi.source.incidences:
        if psihat.incidence_map[phi.incidence_map[j.id]][strip:] != psi.incidence_map[j.id]:
            return False
    return True


@dataclass(frozen=True)
class SubobjectClassifier:
    """Truth-value hypergraph: one true incidence, four false ones."""

    omega: IncidenceHypergraph
    truth_map: Homomorphism
    false_incidence: dict[tuple[str, str], str]

    @property
    def true_vertex(self) -> str:
        return self.truth_map.vertex_map["v"]

    @property
    def true_edge(self) -> str:
        return self.truth_map.edge_map["e"]

    @property
    def true_incidence(self) -> str:
        return self.truth_map.incidence_map["i"]


def subobject_classifier() -> SubobjectClassifier:
    ext = tilde(terminal())
    return SubobjectClassifier(ext.hypergraph, ext.eta, ext.false_incidence)


def classify(k: Subhypergraph) -> Homomorphism:
    """Characteristic map of a subhypergraph into the truth-value object.

    Members map to true elements; everything else lands on the false
    element matching the truth of its attachments.
    """
    sub = k.materialize()
    bang = Homomorphism(
        sub,
        terminal(),
        {v: "v" for v in sub.vertices},
        {e: "e" for e in sub.edges},
        {i.id: "i" for i in sub.incidences},
    )
    return represent_partial(k.inclusion(), bang)


def subobject_from_map(chi: Homomorphism) -> Subhypergraph:
    """Subhypergraph generated by the preimages of the true elements."""
    omega = subobject_classifier()
    if chi.target != omega.omega:
        raise DomainError("map must land in the truth-value hypergraph")
    g = chi.source
    return generated_subhypergraph(
        g,
        [v for v in g.vertices if chi.vertex_map[v] == omega.true_vertex],
        [e for e in g.edges if chi.edge_map[e] == omega.true_edge],
        [i.id for i in g.incidences if chi.incidence_map[i.id] == omega.true_incidence],
    )


def _mask_subsets(items: tuple[str, ...]) -> list[tuple[str, ...]]:
    out = []
    for mask in range(1 << len(items)):
        out.append(tuple(x for k, x in enumerate(items) if mask >> k & 1))
    return out


def count_subhypergraphs(g: IncidenceHypergraph) -> int:
    """Number of subhypergraphs, computed without materializing them."""
    n, m = len(g.vertices), len(g.edges)
    total = 0
    for mask in range(1 << len(g.incidences)):
        vs = {g.incidences[k].vertex for k in range(len(g.incidences)) if mask >> k & 1}
        es = {g.incidences[k].edge for k in range(len(g.incidences)) if mask >> k & 1}
        total += 2 ** (n - len(vs)) * 2 ** (m - len(es))
    return total


def enumerate_subhypergraphs(
    g: IncidenceHypergraph,
    *,
    max_count: int = limits.MAX_SUBHYPERGRAPHS,
) -> list[Subhypergraph]:
    """All subhypergraphs: incidence subsets first, then free choices of
    extra vertices and edges. Deterministic bitmask order throughout."""
    total = count_subhypergraphs(g)
    if total > max_count:
        raise ResourceLimitError(f"{total} subhypergraphs exceed the cap of {max_count}")
    out: list[Subhypergraph] = []
    for mask in range(1 << len(g.incidences)):
        chosen = [g.incidences[k] for k in range(len(g.incidences)) if mask >> k & 1]
        base_v = {i.vertex for i in chosen}
        base_e = {i.edge for i in chosen}
        free_v = tuple(v for v in g.vertices if v not in base_v)
        free_e = tuple(e for e in g.edges if e not in base_e)
        iids = frozenset(i.id for i in chosen)
        for extra_v in _mask_subsets(free_v):
            vs = frozenset(base_v) | frozenset(extra_v)
            for extra_e in _mask_subsets(free_e):
                out.append(
                    Subhypergraph(g, vs, frozenset(base_e) | frozenset(extra_e), iids)
                )
    return out


def subset_id(g_order: tuple[str, ...], chosen: Iterable[str]) -> str:
    """Canonical set id: members in the ambient order, repr-quoted."""
    members = set(chosen)
    return "{" + ",".join(repr(x) for x in g_order if x in members) + "}"


def member_id(k: Subhypergraph) -> str:
    p = k.parent
    return (
        subset_id(p.vertices, k.vertex_ids)
        + subset_id(p.edges, k.edge_ids)
        + subset_id(tuple(i.id for i in p.incidences), k.incidence_ids)
    )


@dataclass(frozen=True)
class PowerResult:
    """Hypergraph of all subsets and subhypergraphs of a parent.

    Vertices are vertex subsets, edges are edge subsets, and incidences
    are whole subhypergraphs attached to their own vertex and edge sets.
    """

    hypergraph: IncidenceHypergraph
    parent: IncidenceHypergraph
    vertex_subset_ids: dict[frozenset, str]
    edge_subset_ids: dict[frozenset, str]
    members: dict[str, Subhypergraph]

    def member_id_of(self, k: Subhypergraph) -> str:
        mid = member_id(k)
        if mid not in self.members:
            raise DomainError("not a subhypergraph of the parent")
        return mid


def power(
    g: IncidenceHypergraph,
    *,
    max_count: int = limits.MAX_SUBHYPERGRAPHS,
) -> PowerResult:
    vertex_subset_ids = {
        frozenset(s): subset_id(g.vertices, s) for s in _mask_subsets(g.vertices)
    }
    edge_subset_ids = {frozenset(s): subset_id(g.edges, s) for s in _mask_subsets(g.edges)}
    members: dict[str, Subhypergraph] = {}
    incidences: list[tuple[str, str, str]] = []
    for k in enumerate_subhypergraphs(g, max_count=max_count):
        mid = member_id(k)
        members[mid] = k
        incidences.append(
            (mid, vertex_subset_ids[k.vertex_ids], edge_subset_ids[k.edge_ids])
        )
    ext = IncidenceHypergraph.build(
        [subset_id(g.vertices, s) for s in _mask_subsets(g.vertices)],
        [subset_id(g.edges, s) for s in _mask_subsets(g.edges)],
        incidences,
    )
    return PowerResult(ext, g, vertex_subset_ids, edge_subset_ids, members)


def elem_map(
    g: IncidenceHypergraph,
    pwr: PowerResult | None = None,
) -> tuple[ProductResult, Homomorphism]:
    """Membership map from the product of g with its power hypergraph.

    A pair (element, collection) maps to a true element exactly when
    the element belongs to the collection; otherwise it lands on the
    false element recording which attachments did belong.
    """
    if pwr is None:
        pwr = power(g)
    omega = subobject_classifier()
    prod = product(g, pwr.hypergraph)
    v_subsets = _invert(pwr.vertex_subset_ids)
    e_subsets = _invert(pwr.edge_subset_ids)
    vmap = {}
    for (v, sid), pid in prod.vertex_pairs.items():
        vmap[pid] = omega.true_vertex if v in v_subsets[sid] else FALSE_ID
    emap = {}
    for (e, tid), pid in prod.edge_pairs.items():
        emap[pid] = omega.true_edge if e in e_subsets[tid] else FALSE_ID
    imap = {}
    for (iid, mid), pid in prod.incidence_pairs.items():
        k = pwr.members[mid]
        if iid in k.incidence_ids:
            imap[pid] = omega.true_incidence
        else:
            inc = g.incidence_by_id[iid]
            vpart = omega.true_vertex if inc.vertex in k.vertex_ids else FALSE_ID
            epart = omega.true_edge if inc.edge in k.edge_ids else FALSE_ID
            imap[pid] = omega.false_incidence[(vpart, epart)]
    return prod, Homomorphism(prod.hypergraph, omega.omega, vmap, emap, imap)


def _invert(subset_ids: dict[frozenset, str]) -> dict[str, frozenset]:
    return {sid: s for s, sid in subset_ids.items()}


def power_transpose(prod: ProductResult, phi: Homomorphism) -> Homomorphism:
    """The unique map into the power hypergraph matching a truth-valued
    map off the product: each element collects its true partners."""
    omega = subobject_classifier()
    if phi.target != omega.omega:
        raise DomainError("transpose needs a map into the truth-value hypergraph")
    if phi.source != prod.hypergraph:
        raise DomainError("phi must be defined on the given product")
    g, k = prod.left, prod.right
    pwr = power(g)
    vmap = {}
    v_true: dict[str, frozenset] = {}
    for v in k.vertices:
        s = frozenset(
            w
            for w in g.vertices
            if phi.vertex_map[prod.vertex_pairs[(w, v)]] == omega.true_vertex
        )
        v_true[v] = s
        vmap[v] = pwr.vertex_subset_ids[s]
    emap = {}
    e_true: dict[str, frozenset] = {}
    for e in k.edges:
        t = frozenset(
            f
            for f in g.edges
            if phi.edge_map[prod.edge_pairs[(f, e)]] == omega.true_edge
        )
        e_true[e] = t
        emap[e] = pwr.edge_subset_ids[t]
    imap = {}
    for i in k.incidences:
        t_i = [
            j.id
            for j in g.incidences
            if phi.incidence_map[prod.incidence_pairs[(j.id, i.id)]]
            == omega.true_incidence
        ]
        gen = generated_subhypergraph(g, v_true[i.vertex], e_true[i.edge], t_i)
        imap[i.id] = pwr.member_id_of(gen)
    return Homomorphism(k, pwr.hypergraph, vmap, emap, imap)


def power_map(phi: Homomorphism) -> Homomorphism:
    """Contravariant action on power hypergraphs by preimages."""
    g, h = phi.source, phi.target
    pwr_h = power(h)
    pwr_g = power(g)
    vmap = {}
    for s, sid in pwr_h.vertex_subset_ids.items():
        pre = frozenset(v for v in g.vertices if phi.vertex_map[v] in s)
        vmap[sid] = pwr_g.vertex_subset_ids[pre]
    emap = {}
    for t, tid in pwr_h.edge_subset_ids.items():
        pre = frozenset(e for e in g.edges if phi.edge_map[e] in t)
        emap[tid] = pwr_g.edge_subset_ids[pre]
    imap = {}
    for mid, k in pwr_h.members.items():
        pre_v = [v for v in g.vertices if phi.vertex_map[v] in k.vertex_ids]
        pre_e = [e for e in g.edges if phi.edge_map[e] in k.edge_ids]
        pre_i = [i.id for i in g.incidences if phi.incidence_map[i.id] in k.incidence_ids]
        imap[mid] = pwr_g.member_id_of(generated_subhypergraph(g, pre_v, pre_e, pre_i))
    return Homomorphism(pwr_h.hypergraph, pwr_g.hypergraph, vmap, emap, imap)


def is_injective(g: IncidenceHypergraph) -> bool:
    """Nonempty on both sides and every (vertex, edge) pair incident."""
    if not g.vertices or not g.edges:
        return False
    return all(g.inc(v, e) for v in g.vertices for e in g.edges)


def is_essential_mono(phi: Homomorphism) -> bool:
    """Monomorphism that appends an element only where none existed.

    Checks the six characterizing conditions one by one: bijectivity on
    vertices (or a target with at most one vertex when the source has
    none), the same for edges, exact incidence images over source
    pairs, and at-most-one incidences over unreached target pairs.
    """
    if not is_monic(phi):
        raise DomainError("essential monomorphism test needs a monic map")
    g, h = phi.source, phi.target
    if g.vertices:
        if set(phi.vertex_map.values()) != set(h.vertices):
            return False
    elif len(h.vertices) > 1:
        return False
    if g.edges:
        if set(phi.edge_map.values()) != set(h.edges):
            return False
    elif len(h.edges) > 1:
        return False
    for v in g.vertices:
        for e in g.edges:
            source_inc = g.inc(v, e)
            if not source_inc:
                continue
            image = {phi.incidence_map[i] for i in source_inc}
            target_inc = set(h.inc(phi.vertex_map[v], phi.edge_map[e]))
            if image != target_inc:
                return False
    reached = {
        (h.vertex_of(phi.incidence_map[i.id]), h.edge_of(phi.incidence_map[i.id]))
        for i in g.incidences
    }
    for x in h.vertices:
        for y in h.edges:
            if (x, y) not in reached and len(h.inc(x, y)) > 1:
                return False
    return True


@dataclass(frozen=True)
class LoadingResult:
    """Original hypergraph padded to full incidence, with the inclusion."""

    hypergraph: IncidenceHypergraph
    j: Homomorphism
    added_incidences: frozenset[str]


def loading(g: IncidenceHypergraph) -> LoadingResult:
    """Pad with one incidence per vacant (vertex, edge) pair.

    A vertex or edge named "0" is added only when the respective set is
    empty. Original ids are kept, so an already fully-incident input
    comes back unchanged with the identity map.
    """
    vertices = g.vertices if g.vertices else (FALSE_ID,)
    edges = g.edges if g.edges else (FALSE_ID,)
    taken = set(g.incidence_pos)
    incidences = [(i.id, i.vertex, i.edge) for i in g.incidences]
    added = []
    for a, v in enumerate(vertices):
        for b, e in enumerate(edges):
            if v in g.vertex_pos and e in g.edge_pos and g.inc(v, e):
                continue
            iid = f"0:{a},{b}"
            while iid in taken:
                iid = "_" + iid
            taken.add(iid)
            incidences.append((iid, v, e))
            added.append(iid)
    if not added and vertices == g.vertices and edges == g.edges:
        return LoadingResult(g, identity_homomorphism(g), frozenset())
    ext = IncidenceHypergraph.build(vertices, edges, incidences)
    j = Homomorphism(
        g,
        ext,
        {v: v for v in g.vertices},
        {e: e for e in g.edges},
        {i.id: i.id for i in g.incidences},
    )
    return LoadingResult(ext, j, frozenset(added))


def zero_loading(og: OrientedHypergraph) -> OrientedHypergraph:
    """Load the structure and sign every filler incidence with 0."""
    padded = loading(og.structure)
    signs = {i.id: og.sigma(i.id) for i in og.structure.incidences}
    for iid in padded.added_incidences:
        signs[iid] = 0
    return OrientedHypergraph.build(
        padded.hypergraph, signs, loaded=og.loaded | padded.added_incidences
    )
