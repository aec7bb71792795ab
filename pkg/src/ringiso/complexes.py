"""Simplicial complexes, graphs, their monomial ideals, and isomorphism checks.

A complex is stored by its facets only; the face predicate "subset of some
facet" is computed on demand.  Exhaustive enumerations (minimal non-faces,
maximal ideal-free sets) carry an explicit vertex guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import GuardError, MismatchError, ValidationError
from .polynomials import Monomial, MonomialIdeal, grlex_key

MAX_ENUM_VERTICES = 25
MAX_BRUTE_FORCE_VERTICES = 10

VertexSet = FrozenSet[int]


def _check_names(names: Sequence[str], count: int) -> None:
    if len(names) != count:
        raise MismatchError(f"expected {count} vertex names, got {len(names)}")
    if len(set(names)) != len(names):
        raise ValidationError("vertex names must be unique")


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by vertex names and its facet set.

    Facets form an antichain and every vertex lies in some facet (every
    singleton is a face).  The empty complex (no vertices, no facets) is
    permitted only as the degenerate result of stripping singleton facets.
    """

    names: Tuple[str, ...]
    facets: FrozenSet[VertexSet]

    def __post_init__(self):
        _check_names(self.names, len(self.names))
        n = len(self.names)
        if n == 0:
            if self.facets:
                raise ValidationError("empty vertex set cannot carry facets")
            return
        if not self.facets:
            raise ValidationError("a nonempty complex needs at least one facet")
        covered = set()
        for facet in self.facets:
            if not facet:
                raise ValidationError("empty facet")
            for v in facet:
                if not 0 <= v < n:
                    raise ValidationError(f"facet vertex {v} out of range")
            covered.update(facet)
        if covered != set(range(n)):
            missing = sorted(set(range(n)) - covered)
            raise ValidationError(
                f"vertices in no facet: {[self.names[v] for v in missing]}"
            )
        for a in self.facets:
            for b in self.facets:
                if a is not b and a < b:
                    raise ValidationError("facets must form an antichain")

    @property
    def n(self) -> int:
        return len(self.names)

    def is_face(self, vertices) -> bool:
        s = frozenset(vertices)
        return any(s <= facet for facet in self.facets)

    def apply(self, bij: "Bijection", new_names: Sequence[str]) -> "SimplicialComplex":
        """The image complex under a vertex bijection."""
        if bij.size != self.n:
            raise MismatchError("bijection size does not match vertex count")
        facets = frozenset(frozenset(bij.forward[v] for v in f) for f in self.facets)
        return SimplicialComplex(tuple(new_names), facets)

    def sorted_facets(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph; isolated vertices are allowed."""

    names: Tuple[str, ...]
    edges: FrozenSet[VertexSet]

    def __post_init__(self):
        _check_names(self.names, len(self.names))
        n = len(self.names)
        for edge in self.edges:
            if len(edge) != 2:
                raise ValidationError(f"edge {sorted(edge)} must join two distinct vertices")
            for v in edge:
                if not 0 <= v < n:
                    raise ValidationError(f"edge vertex {v} out of range")

    @property
    def n(self) -> int:
        return len(self.names)

    def isolated_vertices(self) -> List[int]:
        touched = set().union(*self.edges) if self.edges else set()
        return [v for v in range(self.n) if v not in touched]

    def apply(self, bij: "Bijection", new_names: Sequence[str]) -> "Graph":
        if bij.size != self.n:
            raise MismatchError("bijection size does not match vertex count")
        edges = frozenset(frozenset(bij.forward[v] for v in e) for e in self.edges)
        return Graph(tuple(new_names), edges)

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class Bijection:
    """A permutation sending source vertex i to target vertex forward[i]."""

    forward: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.forward)
        if sorted(self.forward) != list(range(n)):
            raise ValidationError("not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Bijection":
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.forward)

    def inverse(self) -> "Bijection":
        inv = [0] * self.size
        for i, j in enumerate(self.forward):
            inv[j] = i
        return Bijection(tuple(inv))

    def compose(self, then: "Bijection") -> "Bijection":
        """The bijection i -> then(self(i))."""
        if then.size != self.size:
            raise MismatchError("cannot compose bijections of different sizes")
        return Bijection(tuple(then.forward[j] for j in self.forward))

    def apply_set(self, vertices) -> VertexSet:
        return frozenset(self.forward[v] for v in vertices)


def _guard_enum(n: int) -> None:
    if n > MAX_ENUM_VERTICES:
        raise GuardError(f"{n} vertices exceeds the enumeration guard ({MAX_ENUM_VERTICES})")


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces of the complex.

    Level-wise search: a set is a candidate at size k+1 only if it extends a
    face of size k, and it is a minimal non-face iff all its k-subsets are
    faces.  All generators have degree >= 2 since singletons are faces.
    """
    n = complex_.n
    _guard_enum(n)
    gens = []
    faces = {frozenset((v,)) for v in range(n)}
    while faces:
        next_faces = set()
        for face in faces:
            for v in range(max(face) + 1, n):
                candidate = face | {v}
                if complex_.is_face(candidate):
                    next_faces.add(candidate)
                elif all(
                    complex_.is_face(candidate - {u}) for u in candidate
                ):
                    gens.append(Monomial.squarefree(candidate))
        faces = next_faces
    return MonomialIdeal(n, gens)


def facet_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the facet supports (degree-1 generators allowed)."""
    return MonomialIdeal(complex_.n, (Monomial.squarefree(f) for f in complex_.facets))


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """Ideal generated by the products over the graph's edges."""
    return MonomialIdeal(graph.n, (Monomial.squarefree(e) for e in graph.edges))


def _maximal_ideal_free_sets(n: int, supports: List[VertexSet]) -> FrozenSet[VertexSet]:
    """All maximal vertex sets containing no generator support.

    Branch-and-prune: while the current set still contains some support,
    branch on deleting each of that support's vertices.  Memoized on the
    current set; exponential worst case, acceptable at the guarded scale.
    """
    results = set()
    seen = set()

    def recurse(current: VertexSet) -> None:
        if current in seen:
            return
        seen.add(current)
        for sup in supports:
            if sup <= current:
                for v in sorted(sup):
                    recurse(current - {v})
                return
        results.add(current)

    recurse(frozenset(range(n)))
    return frozenset(
        s for s in results if not any(s < t for t in results)
    )


def reconstruct_sr_complex(ideal: MonomialIdeal, names: Sequence[str]) -> SimplicialComplex:
    """The complex whose faces are the monomials outside the ideal.

    Facets are the maximal subsets of the vertex set containing no
    generator's support.  Inverse of stanley_reisner_ideal.
    """
    _check_names(names, ideal.nvars)
    _guard_enum(ideal.nvars)
    for gen in ideal.generators:
        if gen.degree < 2:
            raise ValidationError(
                f"degree-1 generator {gen!r}: not a Stanley-Reisner presentation"
            )
    facets = _maximal_ideal_free_sets(ideal.nvars, [g.support for g in ideal.generators])
    return SimplicialComplex(tuple(names), facets)


def reconstruct_facet_complex(ideal: MonomialIdeal, names: Sequence[str]) -> SimplicialComplex:
    """The complex whose facets are the generator supports."""
    _check_names(names, ideal.nvars)
    covered = set()
    for gen in ideal.generators:
        covered.update(gen.support)
    missing = sorted(set(range(ideal.nvars)) - covered)
    if missing:
        raise ValidationError(
            f"variables in no generator: {[names[v] for v in missing]}; "
            "not a facet-ring presentation"
        )
    return SimplicialComplex(
        tuple(names), frozenset(g.support for g in ideal.generators)
    )


def reconstruct_graph(ideal: MonomialIdeal, names: Sequence[str]) -> Graph:
    """The graph whose edges are the supports of the degree-2 generators.

    Variables outside every generator become isolated vertices.
    """
    _check_names(names, ideal.nvars)
    for gen in ideal.generators:
        if gen.degree != 2:
            raise ValidationError(
                f"generator of degree {gen.degree}: not an edge-ring presentation"
            )
    return Graph(tuple(names), frozenset(g.support for g in ideal.generators))


def strip_zero_dim_facets(complex_: SimplicialComplex) -> Tuple[SimplicialComplex, int]:
    """Remove singleton facets and their vertices; return (reduced, count).

    Facets form an antichain, so a vertex in a singleton facet appears in no
    other facet and can be dropped cleanly.  Stripping everything yields the
    empty complex.
    """
    singles = {f for f in complex_.facets if len(f) == 1}
    if not singles:
        return complex_, 0
    dropped = set().union(*singles)
    survivors = [v for v in range(complex_.n) if v not in dropped]
    index = {v: i for i, v in enumerate(survivors)}
    facets = frozenset(
        frozenset(index[v] for v in f) for f in complex_.facets if len(f) > 1
    )
    names = tuple(complex_.names[v] for v in survivors)
    return SimplicialComplex(names, facets), len(singles)


def _family_maps(n: int, fam1, fam2, bij: Bijection) -> bool:
    if bij.size != n:
        raise MismatchError("bijection size does not match vertex count")
    return frozenset(bij.apply_set(s) for s in fam1) == fam2


def is_isomorphism(a: SimplicialComplex, b: SimplicialComplex, bij: Bijection) -> bool:
    """True iff the bijection carries the facet set of a onto that of b."""
    if a.n != b.n:
        raise MismatchError(f"vertex-count mismatch: {a.n} vs {b.n}")
    return _family_maps(a.n, a.facets, b.facets, bij)


def is_graph_isomorphism(a: Graph, b: Graph, bij: Bijection) -> bool:
    """True iff the bijection carries the edge set of a onto that of b."""
    if a.n != b.n:
        raise MismatchError(f"vertex-count mismatch: {a.n} vs {b.n}")
    return _family_maps(a.n, a.edges, b.edges, bij)


def _vertex_profile(n: int, family) -> List[Tuple[int, ...]]:
    profiles: List[List[int]] = [[] for _ in range(n)]
    for s in family:
        for v in s:
            profiles[v].append(len(s))
    return [tuple(sorted(p)) for p in profiles]


def brute_force_iso(a, b) -> Optional[Bijection]:
    """Exhaustive isomorphism search; the cross-validation oracle.

    Accepts two complexes or two graphs.  Returns the lexicographically
    first vertex bijection mapping the facet (edge) family of a onto that
    of b, or None.  Backtracks vertex by vertex, trying targets in
    increasing order, so the answer is deterministic.
    """
    if type(a) is not type(b):
        raise MismatchError("cannot compare a complex with a graph")
    if a.n != b.n:
        raise MismatchError(f"vertex-count mismatch: {a.n} vs {b.n}")
    n = a.n
    if n > MAX_BRUTE_FORCE_VERTICES:
        raise GuardError(
            f"{n} vertices exceeds the brute-force guard ({MAX_BRUTE_FORCE_VERTICES})"
        )
    fam1 = a.facets if isinstance(a, SimplicialComplex) else a.edges
    fam2 = b.facets if isinstance(b, SimplicialComplex) else b.edges
    if n == 0:
        return Bijection(())
    if len(fam1) != len(fam2):
        return None
    if sorted(len(s) for s in fam1) != sorted(len(s) for s in fam2):
        return None
    prof1 = _vertex_profile(n, fam1)
    prof2 = _vertex_profile(n, fam2)
    if sorted(prof1) != sorted(prof2):
        return None

    # Sets of fam1 become fully assigned once their largest vertex is mapped.
    by_max: List[List[VertexSet]] = [[] for _ in range(n)]
    for s in fam1:
        by_max[max(s)].append(s)

    mapping = [-1] * n
    used = [False] * n

    def dfs(u: int) -> bool:
        if u == n:
            return True
        for t in range(n):
            if used[t] or prof1[u] != prof2[t]:
                continue
            mapping[u] = t
            used[t] = True
            ok = all(
                frozenset(mapping[v] for v in s) in fam2 for s in by_max[u]
            )
            if ok and dfs(u + 1):
                return True
            mapping[u] = -1
            used[t] = False
        return False

    if dfs(0):
        return Bijection(tuple(mapping))
    return None


def ideal_from_facet_family(n: int, family) -> MonomialIdeal:
    """Square-free ideal generated by the supports of a set family."""
    return MonomialIdeal(n, (Monomial.squarefree(s) for s in family))
