"""Seeded generation of test instances: random complexes and graphs,
scrambled isomorphism pairs with exactly known inverses, stress pairs for
the matching step, and canned negative examples.

Scrambler operations are source-side ring automorphisms whose inverses are
exact by construction, so the composed pair is an identity at the raw
polynomial level and needs no ideal reduction to invert.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .complexes import (
    Bijection,
    Graph,
    SimplicialComplex,
    edge_ideal,
    facet_ideal,
    is_graph_isomorphism,
    is_isomorphism,
    stanley_reisner_ideal,
)
from .errors import ValidationError
from .extraction import KINDS
from .fields import Field, QQ
from .polynomials import Monomial, MonomialIdeal, Polynomial
from .ringmaps import (
    AlgebraMap,
    IsoPair,
    QuotientPresentation,
    check_well_defined,
    compose_maps,
)
from .rng import SplitMix64

ComplexOrGraph = Union[SimplicialComplex, Graph]


@dataclass(frozen=True)
class Scale:
    """x_i -> c * x_i with c nonzero; inverse scales by 1/c."""

    var: int
    value: object

    def describe(self, names: Sequence[str]) -> str:
        return f"scale {names[self.var]} by {self.value}"


@dataclass(frozen=True)
class Permute:
    """Relabel by an automorphism of the underlying complex or graph."""

    perm: Bijection

    def describe(self, names: Sequence[str]) -> str:
        images = ",".join(names[j] for j in self.perm.forward)
        return f"permute variables to ({images})"


@dataclass(frozen=True)
class ElemAdd:
    """x_i -> x_i + c*m for a monomial m of degree >= 1 avoiding x_i.

    Because m does not involve x_i, the inverse is the exact one-term
    negation x_i -> x_i - c*m.
    """

    var: int
    value: object
    monomial: Monomial

    def describe(self, names: Sequence[str]) -> str:
        from .parsing import format_monomial

        return (
            f"add {self.value}*{format_monomial(self.monomial, names)} "
            f"to {names[self.var]}"
        )


ScramblerOp = Union[Scale, Permute, ElemAdd]


@dataclass(frozen=True)
class InstanceBundle:
    kind: str
    field: Field
    source: ComplexOrGraph
    target: ComplexOrGraph
    sigma: Bijection
    pair: IsoPair
    ops: Tuple[ScramblerOp, ...]
    seed: Optional[int] = None


def ideal_for_kind(obj: ComplexOrGraph, kind: str) -> MonomialIdeal:
    if kind == "sr":
        return stanley_reisner_ideal(obj)
    if kind == "facet":
        return facet_ideal(obj)
    if kind == "edge":
        return edge_ideal(obj)
    raise ValidationError(f"unknown ring kind {kind!r}; expected one of {KINDS}")


def _object_isomorphism(a: ComplexOrGraph, b: ComplexOrGraph, bij: Bijection) -> bool:
    if isinstance(a, Graph):
        return is_graph_isomorphism(a, b, bij)
    return is_isomorphism(a, b, bij)


def _op_images(
    op: ScramblerOp, pres: QuotientPresentation
) -> Tuple[Tuple[Polynomial, ...], Tuple[Polynomial, ...]]:
    """Variable images of the automorphism and of its exact inverse."""
    field, n = pres.field, pres.n
    fwd = [pres.variable(i) for i in range(n)]
    bwd = [pres.variable(i) for i in range(n)]
    if isinstance(op, Scale):
        if not op.value:
            raise ValidationError("scale factor must be nonzero")
        fwd[op.var] = fwd[op.var].scaled(op.value)
        bwd[op.var] = bwd[op.var].scaled(field.one / op.value)
    elif isinstance(op, Permute):
        fwd = [pres.variable(op.perm.forward[i]) for i in range(n)]
        inv = op.perm.inverse()
        bwd = [pres.variable(inv.forward[i]) for i in range(n)]
    elif isinstance(op, ElemAdd):
        if op.monomial.degree < 1:
            raise ValidationError("ElemAdd monomial must have degree >= 1")
        if op.var in op.monomial.support:
            raise ValidationError(
                "ElemAdd monomial must not involve the modified variable"
            )
        bump = Polynomial(field, n, {op.monomial: op.value}) if op.value else None
        if bump is None:
            raise ValidationError("ElemAdd coefficient must be nonzero")
        fwd[op.var] = fwd[op.var] + bump
        bwd[op.var] = bwd[op.var] - bump
    else:
        raise ValidationError(f"unknown scrambler op {op!r}")
    return tuple(fwd), tuple(bwd)


def _op_as_maps(op: ScramblerOp, pres: QuotientPresentation) -> Tuple[AlgebraMap, AlgebraMap]:
    fwd_images, bwd_images = _op_images(op, pres)
    return (
        AlgebraMap(source=pres, target=pres, images=fwd_images),
        AlgebraMap(source=pres, target=pres, images=bwd_images),
    )


def op_is_admissible(op: ScramblerOp, pres: QuotientPresentation) -> bool:
    """Both the op and its inverse must be well-defined on the presentation."""
    try:
        fwd, bwd = _op_as_maps(op, pres)
    except ValidationError:
        return False
    return check_well_defined(fwd).passed and check_well_defined(bwd).passed


def scrambled_iso(
    source: ComplexOrGraph,
    sigma: Bijection,
    ops: Sequence[ScramblerOp],
    kind: str,
    field: Field = QQ,
    seed: Optional[int] = None,
) -> InstanceBundle:
    """Build an isomorphism pair from a ground-truth relabeling plus source-
    side scrambler automorphisms, with the backward map composed in reverse
    from the exact op inverses."""
    n = source.n
    if sigma.size != n:
        raise ValidationError("ground-truth bijection size does not match the complex")
    target_names = tuple(f"y{i + 1}" for i in range(n))
    target = source.apply(sigma, target_names)
    src_pres = QuotientPresentation(
        field=field, names=source.names, ideal=ideal_for_kind(source, kind)
    )
    tgt_pres = QuotientPresentation(
        field=field, names=target_names, ideal=ideal_for_kind(target, kind)
    )

    forward = AlgebraMap(
        source=src_pres,
        target=tgt_pres,
        images=tuple(tgt_pres.variable(sigma.forward[i]) for i in range(n)),
    )
    inv = sigma.inverse()
    backward = AlgebraMap(
        source=tgt_pres,
        target=src_pres,
        images=tuple(src_pres.variable(inv.forward[j]) for j in range(n)),
    )

    for op in ops:
        if isinstance(op, Permute) and not _object_isomorphism(source, source, op.perm):
            raise ValidationError("Permute op is not an automorphism of the complex")
        op_fwd, op_bwd = _op_as_maps(op, src_pres)
        rep = check_well_defined(op_fwd)
        if not rep.passed:
            first = rep.violations[0]
            raise ValidationError(
                f"inadmissible scrambler op ({op.describe(src_pres.names)}): "
                f"generator {first.where} {first.message}"
            )
        rep = check_well_defined(op_bwd)
        if not rep.passed:
            first = rep.violations[0]
            raise ValidationError(
                f"inadmissible scrambler op inverse ({op.describe(src_pres.names)}): "
                f"generator {first.where} {first.message}"
            )
        # Raw composition keeps the pair exactly invertible at the
        # polynomial level; reduction happens in the downstream checks.
        forward = compose_maps(op_fwd, forward, reduce=False)
        backward = compose_maps(backward, op_bwd, reduce=False)

    pair = IsoPair(forward=forward, backward=backward)
    return InstanceBundle(
        kind=kind,
        field=field,
        source=source,
        target=target,
        sigma=sigma,
        pair=pair,
        ops=tuple(ops),
        seed=seed,
    )


def random_complex(
    n: int, density: float, seed: int, names: Optional[Sequence[str]] = None
) -> SimplicialComplex:
    """Seeded random complex: n candidate facets each taking every vertex
    with probability `density`, singletons added for uncovered vertices,
    then maximalized.  density = 1.0 always yields the full simplex."""
    if not 1 <= n <= 25:
        raise ValidationError(f"vertex count {n} outside the range 1..25")
    if not 0 < density <= 1:
        raise ValidationError(f"density {density} outside (0, 1]")
    rng = SplitMix64(seed)
    candidates = []
    for _ in range(n):
        members = frozenset(v for v in range(n) if rng.chance(density))
        if members:
            candidates.append(members)
    covered = set().union(*candidates) if candidates else set()
    for v in range(n):
        if v not in covered:
            candidates.append(frozenset((v,)))
    facets = frozenset(
        c for c in candidates if not any(c < other for other in candidates)
    )
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    return SimplicialComplex(tuple(names), facets)


def random_graph(
    n: int, density: float, seed: int, names: Optional[Sequence[str]] = None
) -> Graph:
    """Seeded Erdos-Renyi-style graph; isolated vertices are allowed."""
    if not 1 <= n <= 25:
        raise ValidationError(f"vertex count {n} outside the range 1..25")
    if not 0 < density <= 1:
        raise ValidationError(f"density {density} outside (0, 1]")
    rng = SplitMix64(seed)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.chance(density):
                edges.add(frozenset((u, v)))
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(n))
    return Graph(tuple(names), frozenset(edges))


def _random_coefficient(field: Field, rng: SplitMix64):
    if field == QQ:
        return Fraction(rng.nonzero_int(9))
    return field.from_int(1 + rng.below(field.p - 1))


def _random_automorphism(obj: ComplexOrGraph, rng: SplitMix64, tries: int = 8) -> Bijection:
    n = obj.n
    for _ in range(tries):
        perm = list(range(n))
        rng.shuffle(perm)
        bij = Bijection(tuple(perm))
        if _object_isomorphism(obj, obj, bij):
            return bij
    return Bijection.identity(n)


def random_ops(
    obj: ComplexOrGraph,
    pres: QuotientPresentation,
    count: int,
    rng: SplitMix64,
) -> List[ScramblerOp]:
    """Draw admissible scrambler ops; inadmissible draws fall back to Scale,
    which is admissible on every presentation, so the count is exact."""
    n = pres.n
    ops: List[ScramblerOp] = []
    for _ in range(count):
        choice = rng.below(4)
        op: Optional[ScramblerOp] = None
        if choice == 3 and n > 1:
            op = Permute(_random_automorphism(obj, rng))
        elif choice in (1, 2) and n > 1:
            for _attempt in range(20):
                var = rng.below(n)
                others = [v for v in range(n) if v != var]
                if rng.chance(0.6) or len(others) < 2:
                    mon = Monomial.variable(rng.choice(others))
                else:
                    a = rng.choice(others)
                    b = rng.choice(others)
                    mon = (
                        Monomial.variable(a) * Monomial.variable(b)
                        if a != b
                        else Monomial.variable(a)
                    )
                candidate = ElemAdd(
                    var=var, value=_random_coefficient(pres.field, rng), monomial=mon
                )
                if op_is_admissible(candidate, pres):
                    op = candidate
                    break
        if op is None:
            op = Scale(var=rng.below(n), value=_random_coefficient(pres.field, rng))
        ops.append(op)
    return ops


def generate_bundle(
    n: int,
    kind: str,
    num_ops: int,
    seed: int,
    density: float = 0.5,
    field: Field = QQ,
) -> InstanceBundle:
    """One-stop seeded bundle: random complex or graph, ground-truth
    relabeling, and `num_ops` admissible scrambler operations."""
    if kind not in KINDS:
        raise ValidationError(f"unknown ring kind {kind!r}; expected one of {KINDS}")
    rng = SplitMix64(seed)
    shape_seed = rng.next_u64()
    if kind == "edge":
        source: ComplexOrGraph = random_graph(n, density, shape_seed)
    else:
        source = random_complex(n, density, shape_seed)
    perm = list(range(n))
    rng.shuffle(perm)
    sigma = Bijection(tuple(perm))
    pres = QuotientPresentation(
        field=field, names=source.names, ideal=ideal_for_kind(source, kind)
    )
    ops = random_ops(source, pres, num_ops, rng)
    bundle = scrambled_iso(source, sigma, ops, kind, field=field, seed=seed)
    return bundle


def random_gl_pair(n: int, seed: int) -> IsoPair:
    """A random linear automorphism pair of a free polynomial ring over the
    rationals: A = L * D * U with unit-triangular L, U and a nonzero integer
    diagonal D, so the inverse U^-1 * D^-1 * L^-1 is exact."""
    if n < 1:
        raise ValidationError("need at least one variable")
    rng = SplitMix64(seed)
    lower: Dict[int, Dict[int, Fraction]] = {i: {} for i in range(n)}
    upper: Dict[int, Dict[int, Fraction]] = {i: {} for i in range(n)}
    for i in range(1, n):
        if rng.chance(0.85):
            lower[i][rng.below(i)] = Fraction(rng.nonzero_int(3))
    for i in range(n - 1):
        if rng.chance(0.85):
            upper[i][i + 1 + rng.below(n - i - 1)] = Fraction(rng.nonzero_int(3))
    diag = [Fraction(rng.nonzero_int(3)) for _ in range(n)]

    def unit_rows(data: Dict[int, Dict[int, Fraction]]) -> List[Dict[int, Fraction]]:
        rows = []
        for i in range(n):
            row = dict(data[i])
            row[i] = Fraction(1)
            rows.append(row)
        return rows

    def sparse_mul(x: List[Dict[int, Fraction]], y: List[Dict[int, Fraction]]):
        out: List[Dict[int, Fraction]] = []
        for i in range(n):
            acc: Dict[int, Fraction] = {}
            for k, xv in x[i].items():
                for j, yv in y[k].items():
                    val = acc.get(j, Fraction(0)) + xv * yv
                    if val:
                        acc[j] = val
                    elif j in acc:
                        del acc[j]
            out.append(acc)
        return out

    def unit_lower_inverse(rows: List[Dict[int, Fraction]]):
        inv: List[Dict[int, Fraction]] = []
        for i in range(n):
            acc = {i: Fraction(1)}
            for j, val in rows[i].items():
                if j == i:
                    continue
                for k, prev in inv[j].items():
                    new = acc.get(k, Fraction(0)) - val * prev
                    if new:
                        acc[k] = new
                    elif k in acc:
                        del acc[k]
            inv.append(acc)
        return inv

    def transpose(rows: List[Dict[int, Fraction]]):
        out: List[Dict[int, Fraction]] = [{} for _ in range(n)]
        for i, row in enumerate(rows):
            for j, val in row.items():
                out[j][i] = val
        return out

    l_rows = unit_rows(lower)
    u_rows = unit_rows(upper)
    d_rows = [{i: diag[i]} for i in range(n)]
    d_inv = [{i: Fraction(1) / diag[i]} for i in range(n)]
    a_rows = sparse_mul(sparse_mul(l_rows, d_rows), u_rows)
    # U^-1 is the transpose of the inverse of the unit lower matrix U^T.
    u_inv = transpose(unit_lower_inverse(transpose(u_rows)))
    l_inv = unit_lower_inverse(l_rows)
    b_rows = sparse_mul(sparse_mul(u_inv, d_inv), l_inv)

    source = QuotientPresentation(
        field=QQ,
        names=tuple(f"x{i + 1}" for i in range(n)),
        ideal=MonomialIdeal.empty(n),
    )
    target = QuotientPresentation(
        field=QQ,
        names=tuple(f"y{i + 1}" for i in range(n)),
        ideal=MonomialIdeal.empty(n),
    )

    def row_poly(row: Dict[int, Fraction], nvars: int) -> Polynomial:
        return Polynomial(
            QQ, nvars, {Monomial.variable(j): val for j, val in row.items() if val}
        )

    forward = AlgebraMap(
        source=source,
        target=target,
        images=tuple(row_poly(a_rows[i], n) for i in range(n)),
    )
    backward = AlgebraMap(
        source=target,
        target=source,
        images=tuple(row_poly(b_rows[j], n) for j in range(n)),
    )
    return IsoPair(forward=forward, backward=backward)


@dataclass(frozen=True)
class CannedPair:
    name: str
    left: ComplexOrGraph
    right: ComplexOrGraph
    kind: str
    isomorphic: bool


def negative_instances() -> Tuple[CannedPair, ...]:
    """Canned pairs for oracle cross-checks: non-isomorphic pairs per ring
    kind, plus one near-miss positive control for the zero-dimensional
    facet handling."""
    names4 = ("x1", "x2", "x3", "x4")
    names3 = ("x1", "x2", "x3")
    path4 = Graph(
        names4, frozenset({frozenset((0, 1)), frozenset((1, 2)), frozenset((2, 3))})
    )
    star4 = Graph(
        names4, frozenset({frozenset((0, 1)), frozenset((0, 2)), frozenset((0, 3))})
    )
    hollow = SimplicialComplex(
        names3, frozenset({frozenset((0, 1)), frozenset((1, 2)), frozenset((0, 2))})
    )
    path_complex = SimplicialComplex(
        names3, frozenset({frozenset((0, 1)), frozenset((1, 2))})
    )
    full = SimplicialComplex(names3, frozenset({frozenset((0, 1, 2))}))
    two_singles = SimplicialComplex(
        names4,
        frozenset({frozenset((0,)), frozenset((1,)), frozenset((2, 3))}),
    )
    one_single = SimplicialComplex(
        names4,
        frozenset({frozenset((0,)), frozenset((1, 2)), frozenset((2, 3))}),
    )
    near_miss_left = SimplicialComplex(
        names3, frozenset({frozenset((0,)), frozenset((1, 2))})
    )
    near_miss_right = SimplicialComplex(
        names3, frozenset({frozenset((0, 1)), frozenset((2,))})
    )
    return (
        CannedPair("path4-vs-star4", path4, star4, "edge", False),
        CannedPair("hollow-vs-path", hollow, path_complex, "sr", False),
        CannedPair("hollow-vs-full", hollow, full, "sr", False),
        CannedPair("singleton-counts", two_singles, one_single, "facet", False),
        CannedPair("near-miss-positive", near_miss_left, near_miss_right, "facet", True),
    )
