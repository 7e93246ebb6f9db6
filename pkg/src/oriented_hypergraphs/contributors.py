"""Permutation-shaped step families and the minor polynomials they carry.

A contributor selects one length-1 step at every vertex so that the step
heads sweep out the whole vertex set bijectively.  Grouped by which rows
they fix and summed with the right signs, reduced contributors recover
every coefficient of the det- and perm-style minor polynomials of the
adjacency and Laplacian matrices.  Everything here is cross-checked
against the Leibniz oracle in :mod:`.matrices`.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import limits
from .core import IncidenceHypergraph, OrientedHypergraph
from .errors import DomainError, InvariantError, ResourceLimitError
from .matrices import (
    adjacency_matrix,
    char_poly_univariate,
    laplacian_matrix,
    permutation_sign,
    symbolic_minor_poly,
)
from .polynomial import IntPolynomial, MultivariatePolynomial
from .topos import zero_loading

COMBOS: tuple[tuple[str, str], ...] = (
    ("adjacency", "det"),
    ("adjacency", "perm"),
    ("laplacian", "det"),
    ("laplacian", "perm"),
)


def _require_combo(target: str, mode: str) -> None:
    if target not in ("adjacency", "laplacian"):
        raise DomainError(f"target must be 'adjacency' or 'laplacian', got {target!r}")
    if mode not in ("det", "perm"):
        raise DomainError(f"mode must be 'det' or 'perm', got {mode!r}")


@dataclass(frozen=True)
class OneStep:
    """A length-1 weak walk: tail vertex, two incidences on one edge, head."""

    tail: str
    tail_incidence: str
    edge: str
    head_incidence: str
    head: str

    @property
    def is_backstep(self) -> bool:
        return self.tail_incidence == self.head_incidence

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head and not self.is_backstep


@dataclass(frozen=True)
class Contributor:
    """One step per vertex, heads forming a permutation of the vertex set."""

    steps: tuple[OneStep, ...]

    @property
    def heads(self) -> tuple[str, ...]:
        return tuple(s.head for s in self.steps)

    def head_map(self) -> dict[str, str]:
        return {s.tail: s.head for s in self.steps}

    def step_at(self, vertex: str) -> OneStep:
        for s in self.steps:
            if s.tail == vertex:
                return s
        raise DomainError(f"no step tailed at {vertex!r}")


def is_strong(c: Contributor) -> bool:
    """Backstep-free; the cycle-cover analog."""
    return all(not s.is_backstep for s in c.steps)


@dataclass(frozen=True)
class ComponentProfile:
    """Component census of a contributor (or of a reduced remnant).

    Non-backstep steps always close up into disjoint circles, so the
    census is backsteps plus circles sorted by length parity and by the
    sign of their step-sign product.  ``permutation`` is the head map,
    frozen as (tail, head) pairs in step order.
    """

    backsteps: int
    loops: int
    odd_circles: int
    even_circles: int
    positive_circles: int
    negative_circles: int
    zero_circles: int
    permutation: tuple[tuple[str, str], ...]

    @property
    def circles(self) -> int:
        return self.odd_circles + self.even_circles


def vertex_steps(
    g: IncidenceHypergraph, vertex: str, *, strong_only: bool = False
) -> tuple[OneStep, ...]:
    """All steps tailed at ``vertex``, in a fixed deterministic order.

    A backstep reuses its tail incidence; an adjacency step pairs the
    tail incidence with any other incidence on the same edge, loops
    included.  ``strong_only`` drops the backsteps.
    """
    out: list[OneStep] = []
    for edge in g.edges:
        tails = g.inc(vertex, edge)
        if not tails:
            continue
        on_edge = g.incidences_on_edge[edge]
        for t in tails:
            if not strong_only:
                out.append(OneStep(vertex, t, edge, t, vertex))
            for h in on_edge:
                if h != t:
                    out.append(OneStep(vertex, t, edge, h, g.vertex_of(h)))
    return tuple(out)


def _saturates(head_sets: Sequence[frozenset[str]], start: int, used: set[str]) -> bool:
    # Kuhn's matching: can every vertex from ``start`` on still get a
    # distinct unused head?  Cheap insurance against dead-end branches.
    match: dict[str, int] = {}

    def assign(idx: int, seen: set[str]) -> bool:
        for h in head_sets[idx]:
            if h in used or h in seen:
                continue
            seen.add(h)
            if h not in match or assign(match[h], seen):
                match[h] = idx
                return True
        return False

    return all(assign(idx, set()) for idx in range(start, len(head_sets)))


def enumerate_contributors(
    og: OrientedHypergraph,
    *,
    strong_only: bool = False,
    max_vertices: int = limits.MAX_CONTRIBUTOR_VERTICES,
) -> list[Contributor]:
    """Every contributor of ``og``, in a deterministic backtracking order."""
    g = og.structure
    n = len(g.vertices)
    if n > max_vertices:
        raise ResourceLimitError(
            f"contributor enumeration limited to {max_vertices} vertices, got {n}"
        )
    options = [vertex_steps(g, v, strong_only=strong_only) for v in g.vertices]
    head_sets = [frozenset(s.head for s in opts) for opts in options]
    out: list[Contributor] = []
    chosen: list[OneStep] = []
    used: set[str] = set()

    def backtrack(k: int) -> None:
        if k == n:
            out.append(Contributor(tuple(chosen)))
            return
        if not _saturates(head_sets, k, used):
            return
        for s in options[k]:
            if s.head in used:
                continue
            used.add(s.head)
            chosen.append(s)
            backtrack(k + 1)
            chosen.pop()
            used.discard(s.head)

    backtrack(0)
    return out


def contributor_sign(og: OrientedHypergraph, c: Contributor) -> int:
    """Product of incidence signs along all steps, backstep incidence twice.

    Zero exactly when some traversed incidence carries a 0 sign; only the
    zero/nonzero distinction feeds the polynomial sums.
    """
    sign = 1
    for s in c.steps:
        sign *= og.sigma(s.tail_incidence) * og.sigma(s.head_incidence)
    return sign


def component_profile(og: OrientedHypergraph, c: Contributor) -> ComponentProfile:
    """Census of backsteps and circles, with per-circle parity and sign.

    The steps must close up (every non-backstep head is some step's
    tail), which holds for contributors and for anything produced by
    :func:`reduce_contributor` or backstep deletion.
    """
    by_tail = {s.tail: s for s in c.steps}
    if len(by_tail) != len(c.steps):
        raise DomainError("two steps share a tail vertex")
    backsteps = loops = odd = even = pos = neg = zero = 0
    seen: set[str] = set()
    for s in c.steps:
        if s.is_backstep:
            backsteps += 1
            continue
        if s.tail in seen:
            continue
        length = 0
        circle_sign = 1
        v = s.tail
        while v not in seen:
            seen.add(v)
            step = by_tail.get(v)
            if step is None or step.is_backstep:
                raise DomainError(f"steps do not close into circles at {v!r}")
            length += 1
            circle_sign *= -og.sigma(step.tail_incidence) * og.sigma(step.head_incidence)
            v = step.head
        if v != s.tail:
            raise DomainError(f"steps do not close into circles at {s.tail!r}")
        loops += length == 1
        if length % 2:
            odd += 1
        else:
            even += 1
        if circle_sign > 0:
            pos += 1
        elif circle_sign < 0:
            neg += 1
        else:
            zero += 1
    permutation = tuple((s.tail, s.head) for s in c.steps)
    return ComponentProfile(backsteps, loops, odd, even, pos, neg, zero, permutation)


def tail_profile(c: Contributor) -> tuple[tuple[str, str], ...]:
    """Tail-incidence/edge signature; equal signatures mean tail-equivalent."""
    return tuple((s.tail_incidence, s.edge) for s in c.steps)


@dataclass(frozen=True)
class MinorClass:
    """Ordered row vertices paired with ordered column vertices."""

    u: tuple[str, ...]
    w: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.u) != len(self.w):
            raise DomainError("row and column tuples must have equal length")
        if len(set(self.u)) != len(self.u):
            raise DomainError("row vertices repeat")
        if len(set(self.w)) != len(self.w):
            raise DomainError("column vertices repeat")

    @staticmethod
    def build(og: OrientedHypergraph, u: Iterable[str], w: Iterable[str]) -> "MinorClass":
        cls = MinorClass(tuple(u), tuple(w))
        known = set(og.vertices)
        for v in (*cls.u, *cls.w):
            if v not in known:
                raise DomainError(f"unknown vertex {v!r} in class")
        return cls

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(zip(self.u, self.w))


@dataclass(frozen=True)
class ReducedContributor:
    """What is left of a contributor after deleting the class rows' steps."""

    minor_class: MinorClass
    steps: tuple[OneStep, ...]


def class_contributors(
    og: OrientedHypergraph,
    cls: MinorClass,
    *,
    strong_only: bool = False,
    max_vertices: int = limits.MAX_CONTRIBUTOR_VERTICES,
) -> list[Contributor]:
    """Contributors whose step at each u_i heads to the matching w_i."""
    wanted = dict(zip(cls.u, cls.w))
    kept = []
    for c in enumerate_contributors(og, strong_only=strong_only, max_vertices=max_vertices):
        if all(c.step_at(u).head == w for u, w in wanted.items()):
            kept.append(c)
    return kept


def reduce_contributor(c: Contributor, cls: MinorClass) -> ReducedContributor:
    removed = dict(cls.pairs())
    for u, w in removed.items():
        step = c.step_at(u)
        if step.head != w:
            raise DomainError(f"contributor sends {u!r} to {step.head!r}, class wants {w!r}")
    steps = tuple(s for s in c.steps if s.tail not in removed)
    return ReducedContributor(cls, steps)


def class_permutation(reduced: ReducedContributor) -> dict[str, str]:
    """Head map of any extension: surviving heads plus the class pairs."""
    perm = {s.tail: s.head for s in reduced.steps}
    perm.update(reduced.minor_class.pairs())
    return perm


def class_extensions(
    og: OrientedHypergraph, reduced: ReducedContributor, *, strong_only: bool = False
) -> list[Contributor]:
    """All contributors of ``og`` that reduce to ``reduced``."""
    g = og.structure
    kept = {s.tail: s for s in reduced.steps}
    cls = reduced.minor_class
    overlap = set(kept) & set(cls.u)
    if overlap:
        raise DomainError(f"reduced steps already cover class rows {sorted(overlap)}")
    if set(kept) | set(cls.u) != set(g.vertices):
        raise DomainError("reduced steps plus class rows do not cover the vertex set")
    rows = []
    for u, w in cls.pairs():
        cands = [s for s in vertex_steps(g, u, strong_only=strong_only) if s.head == w]
        if not cands:
            return []
        rows.append(cands)
    out = []
    for combo in itertools.product(*rows):
        by_tail = dict(kept)
        for s in combo:
            by_tail[s.tail] = s
        c = Contributor(tuple(by_tail[v] for v in g.vertices))
        if set(c.heads) != set(g.vertices):
            raise DomainError("extension heads do not cover the vertex set")
        out.append(c)
    return out


@dataclass(frozen=True)
class StepFamily:
    """Steps on a subset of tail vertices with pairwise-distinct heads."""

    steps: tuple[OneStep, ...]
    strong: bool


@dataclass(frozen=True)
class MinorCatalog:
    """Signing-independent family enumeration, shared by all four polynomials.

    Families through incidences missing from the evaluation signs score
    zero and drop out, which is exactly the zero-loading convention, so
    the catalog of a raw structure evaluates a zero-loaded orientation
    correctly without materializing the padding.
    """

    structure: IncidenceHypergraph
    families: tuple[StepFamily, ...]


def minor_catalog(
    structure: IncidenceHypergraph, *, max_vertices: int = limits.MAX_MINOR_VERTICES
) -> MinorCatalog:
    n = len(structure.vertices)
    if n > max_vertices:
        raise ResourceLimitError(
            f"minor catalog limited to {max_vertices} vertices, got {n}"
        )
    options = [vertex_steps(structure, v) for v in structure.vertices]
    families: list[StepFamily] = []
    chosen: list[OneStep] = []
    used: set[str] = set()

    def backtrack(k: int) -> None:
        if k == n:
            steps = tuple(chosen)
            families.append(StepFamily(steps, all(not s.is_backstep for s in steps)))
            return
        backtrack(k + 1)
        for s in options[k]:
            if s.head in used:
                continue
            used.add(s.head)
            chosen.append(s)
            backtrack(k + 1)
            chosen.pop()
            used.discard(s.head)

    backtrack(0)
    return MinorCatalog(structure, tuple(families))


def minor_polys_from_catalog(
    catalog: MinorCatalog, signs: Mapping[str, int]
) -> dict[tuple[str, str], MultivariatePolynomial]:
    """Evaluate all four (target, mode) minor polynomials in one sweep.

    Each family fixes the rows outside its tail set; every bijection from
    those open rows onto the open columns completes the family into a
    permutation and stamps one monomial.  Signs per combination:
    plain step-sign product for adjacency/perm, times the completed
    permutation's sign for det, times (-1)^steps for the Laplacian.
    """
    g = catalog.structure
    order = g.vertices
    pos = g.vertex_pos
    acc: dict[tuple[str, str], dict] = {combo: defaultdict(int) for combo in COMBOS}
    for fam in catalog.families:
        weight = 1
        for s in fam.steps:
            weight *= signs.get(s.tail_incidence, 0) * signs.get(s.head_incidence, 0)
            if weight == 0:
                break
        if weight == 0:
            continue
        tails = {s.tail for s in fam.steps}
        heads = {s.head for s in fam.steps}
        open_rows = [v for v in order if v not in tails]
        open_cols = [v for v in order if v not in heads]
        lap_weight = -weight if len(fam.steps) % 2 else weight
        base = {s.tail: s.head for s in fam.steps}
        for assignment in itertools.permutations(open_cols):
            mono = frozenset(zip(open_rows, assignment))
            images = dict(base)
            images.update(zip(open_rows, assignment))
            eps = permutation_sign([pos[images[v]] for v in order])
            acc[("laplacian", "perm")][mono] += lap_weight
            acc[("laplacian", "det")][mono] += eps * lap_weight
            if fam.strong:
                acc[("adjacency", "perm")][mono] += weight
                acc[("adjacency", "det")][mono] += eps * weight
    return {combo: MultivariatePolynomial(acc[combo]) for combo in COMBOS}


def total_minor_poly(
    og: OrientedHypergraph,
    target: str,
    mode: str,
    *,
    max_vertices: int = limits.MAX_MINOR_VERTICES,
) -> MultivariatePolynomial:
    """Minor polynomial of the chosen matrix and mode, from step families.

    Must match :func:`matrices.symbolic_minor_poly` of the same matrix
    term for term; that equality is this module's central contract and
    is what :func:`oracle_equivalence` checks.
    """
    _require_combo(target, mode)
    catalog = minor_catalog(og.structure, max_vertices=max_vertices)
    return minor_polys_from_catalog(catalog, og.signs)[(target, mode)]


def _step_weight(og: OrientedHypergraph, steps: Iterable[OneStep]) -> int:
    weight = 1
    for s in steps:
        weight *= og.sigma(s.tail_incidence) * og.sigma(s.head_incidence)
        if weight == 0:
            return 0
    return weight


def _univariate_direct(og: OrientedHypergraph, target: str, mode: str) -> IntPolynomial:
    # Enumerate full contributors of the zero-loaded orientation, strip
    # backsteps (all of them for adjacency, every subset for the
    # Laplacian), de-duplicate the remnants, and sum literal component
    # signs.  The padding matters: it is what gives an isolated vertex
    # its backstep, hence the Laplacian its x-coefficient.
    loaded = zero_loading(og)
    n = len(og.vertices)
    coeffs = [0] * (n + 1)
    if n == 0:
        return IntPolynomial([1])
    seen: set[tuple[OneStep, ...]] = set()
    for c in enumerate_contributors(loaded):
        if target == "adjacency":
            remnants = [tuple(s for s in c.steps if not s.is_backstep)]
        else:
            back = [idx for idx, s in enumerate(c.steps) if s.is_backstep]
            remnants = []
            for size in range(len(back) + 1):
                for removed in itertools.combinations(back, size):
                    drop = set(removed)
                    remnants.append(
                        tuple(s for idx, s in enumerate(c.steps) if idx not in drop)
                    )
        for remaining in remnants:
            if remaining in seen:
                continue
            seen.add(remaining)
            if _step_weight(loaded, remaining) == 0:
                continue
            prof = component_profile(loaded, Contributor(remaining))
            if target == "adjacency":
                if mode == "perm":
                    sign = (-1) ** (prof.odd_circles + prof.negative_circles)
                else:
                    sign = (-1) ** prof.positive_circles
            else:
                if mode == "perm":
                    sign = (-1) ** (prof.negative_circles + prof.backsteps)
                else:
                    sign = (-1) ** (
                        prof.even_circles + prof.negative_circles + prof.backsteps
                    )
            coeffs[n - len(remaining)] += sign
    return IntPolynomial(coeffs)


def univariate_from_contributors(
    og: OrientedHypergraph,
    target: str,
    mode: str,
    *,
    max_vertices: int = limits.MAX_MINOR_VERTICES,
) -> IntPolynomial:
    """Characteristic polynomial by two contributor routes, cross-asserted.

    Route one substitutes the diagonal into :func:`total_minor_poly`;
    route two counts de-duplicated backstep-stripped contributors
    directly.  Both must agree with the matrix expansion, else the
    whole theory is broken and an invariant error says so.
    """
    _require_combo(target, mode)
    n = len(og.vertices)
    if n > max_vertices:
        raise ResourceLimitError(
            f"univariate contributor route limited to {max_vertices} vertices, got {n}"
        )
    via_minor = total_minor_poly(og, target, mode, max_vertices=max_vertices)
    diagonal = via_minor.substitute_diagonal()
    direct = _univariate_direct(og, target, mode)
    m = adjacency_matrix(og) if target == "adjacency" else laplacian_matrix(og)
    reference = char_poly_univariate(m, mode)
    if diagonal != reference or direct != reference:
        raise InvariantError(
            f"contributor routes disagree for {target}/{mode}: "
            f"diagonal {diagonal!r}, direct {direct!r}, matrix {reference!r}"
        )
    return reference


def oracle_equivalence(
    og: OrientedHypergraph, *, max_vertices: int = limits.MAX_MINOR_VERTICES
) -> dict[tuple[str, str], bool]:
    """Compare every (target, mode) polynomial against the Leibniz oracle."""
    catalog = minor_catalog(og.structure, max_vertices=max_vertices)
    polys = minor_polys_from_catalog(catalog, og.signs)
    out: dict[tuple[str, str], bool] = {}
    for target, mode in COMBOS:
        m = adjacency_matrix(og) if target == "adjacency" else laplacian_matrix(og)
        out[(target, mode)] = polys[(target, mode)] == symbolic_minor_poly(m, mode)
    return out
