"""Independent oracles and builders shared by the test modules.

Everything here recomputes expected values by exhaustive enumeration or
first principles, deliberately avoiding the library's own algorithms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Set, Tuple

from ringiso import (
    QQ,
    Bijection,
    Monomial,
    MonomialIdeal,
    Polynomial,
    PrimeField,
    SimplicialComplex,
)
from ringiso.rng import SplitMix64

GF101 = PrimeField(101)


def subsets(items) -> List[FrozenSet[int]]:
    items = sorted(items)
    out = []
    for r in range(len(items) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(items, r))
    return out


def oracle_faces(complex_: SimplicialComplex) -> Set[FrozenSet[int]]:
    """All faces, by checking every subset of every facet."""
    faces = set()
    for facet in complex_.facets:
        faces.update(subsets(facet))
    faces.discard(frozenset())
    return faces


def oracle_minimal_nonfaces(complex_: SimplicialComplex) -> Set[FrozenSet[int]]:
    """Minimal non-faces by full 2^n enumeration."""
    n = complex_.n
    faces = oracle_faces(complex_)
    nonfaces = [
        s for s in subsets(range(n)) if s and s not in faces
    ]
    return {
        s
        for s in nonfaces
        if all(s - {v} in faces or not (s - {v}) for v in s)
    }


def oracle_maximal_free_sets(n: int, supports: Sequence[FrozenSet[int]]) -> Set[FrozenSet[int]]:
    """Maximal support-free subsets by full 2^n enumeration."""
    free = [
        s for s in subsets(range(n)) if not any(sup <= s for sup in supports)
    ]
    return {s for s in free if not any(s < t for t in free)}


def oracle_all_isomorphisms(fam1, fam2, n: int) -> List[Tuple[int, ...]]:
    """Every vertex bijection carrying fam1 onto fam2, by full permutation scan."""
    found = []
    for perm in itertools.permutations(range(n)):
        image = {frozenset(perm[v] for v in s) for s in fam1}
        if image == set(fam2):
            found.append(perm)
    return found


def family(obj):
    return obj.facets if isinstance(obj, SimplicialComplex) else obj.edges


def random_monomial(rng: SplitMix64, nvars: int, max_degree: int = 3) -> Monomial:
    degree = rng.below(max_degree + 1)
    exps = {}
    for _ in range(degree):
        v = rng.below(nvars)
        exps[v] = exps.get(v, 0) + 1
    return Monomial(exps.items())


def random_coeff(rng: SplitMix64, field):
    if field == QQ:
        num = rng.nonzero_int(9)
        den = 1 + rng.below(4)
        return Fraction(num, den)
    return field.from_int(1 + rng.below(field.p - 1))


def random_polynomial(
    rng: SplitMix64, field, nvars: int, max_terms: int = 5, max_degree: int = 3
) -> Polynomial:
    terms = []
    for _ in range(rng.below(max_terms + 1)):
        terms.append((random_monomial(rng, nvars, max_degree), random_coeff(rng, field)))
    return Polynomial.from_terms(field, nvars, terms)


def random_squarefree_ideal(rng: SplitMix64, nvars: int, max_gens: int = 3) -> MonomialIdeal:
    gens = []
    for _ in range(rng.below(max_gens + 1)):
        size = 1 + rng.below(min(3, nvars))
        members = set()
        while len(members) < size:
            members.add(rng.below(nvars))
        gens.append(Monomial.squarefree(members))
    return MonomialIdeal(nvars, gens)


def identity_pair_on(complex_or_graph, kind, field=QQ):
    """The trivial isomorphism pair induced by the identity relabeling."""
    from ringiso import scrambled_iso

    return scrambled_iso(
        complex_or_graph, Bijection.identity(complex_or_graph.n), [], kind, field=field
    ).pair
