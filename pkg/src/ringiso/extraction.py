"""Extraction of a vertex bijection from a validated quotient-ring
isomorphism pair.

Pipeline stages, in order: well-defined (both directions), lemma1,
constants, inverse-pair, reconstruct (+ strip for facet presentations),
lemma2, matrix, transversal, verification.  The first failing stage aborts
with an ExtractionFailure naming it; verification always runs on success
candidates and a verification failure is reported as a contradiction, since
it cannot happen for genuinely valid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .complexes import (
    Bijection,
    Graph,
    SimplicialComplex,
    is_graph_isomorphism,
    is_isomorphism,
    reconstruct_facet_complex,
    reconstruct_graph,
    reconstruct_sr_complex,
    strip_zero_dim_facets,
)
from .errors import (
    ExtractionFailure,
    InternalContradictionError,
    MismatchError,
    ValidationError,
)
from .fields import Coeff, Field
from .matching import maximum_bipartite_matching
from .polynomials import Monomial, MonomialIdeal, Polynomial
from .ringmaps import (
    AlgebraMap,
    CheckReport,
    IsoPair,
    LinearPartData,
    QuotientPresentation,
    Violation,
    check_inverse_pair,
    check_well_defined,
    constant_free_check,
    lemma1_check,
    lemma2_check,
    linear_parts,
)

KINDS = ("sr", "facet", "edge")

Matrix = Tuple[Tuple[Coeff, ...], ...]


@dataclass(frozen=True)
class TransversalMatrix:
    """The n x n matrix with entry (i, j) = A[j][i] * B[i][j].

    For a valid pair every row and every column sums to the field's one:
    the sums are exactly the diagonal entries of B.A and A.B.
    """

    field: Field
    entries: Matrix

    @property
    def n(self) -> int:
        return len(self.entries)


def build_M(lp: LinearPartData) -> TransversalMatrix:
    """Assemble the transversal matrix and verify all 2n sum conditions."""
    n = lp.n
    field = lp.field
    entries = tuple(
        tuple(lp.A[j][i] * lp.B[i][j] for j in range(n)) for i in range(n)
    )
    one = field.one
    for i, row in enumerate(entries):
        total = field.zero
        for value in row:
            total = total + value
        if total != one:
            raise InternalContradictionError(
                f"row {i + 1} of the transversal matrix sums to {total}, not 1; "
                "the pair violates the isomorphism hypotheses"
            )
    for j in range(n):
        total = field.zero
        for i in range(n):
            total = total + entries[i][j]
        if total != one:
            raise InternalContradictionError(
                f"column {j + 1} of the transversal matrix sums to {total}, not 1; "
                "the pair violates the isomorphism hypotheses"
            )
    return TransversalMatrix(field=field, entries=entries)


def find_nonzero_transversal(M: TransversalMatrix) -> Tuple[int, ...]:
    """A column per row with all selected entries nonzero.

    Maximum bipartite matching on the support graph; a perfect matching is
    guaranteed for matrices built from valid pairs, so anything less is an
    internal contradiction and is surfaced, never ignored.
    """
    n = M.n
    adjacency = [
        [j for j in range(n) if M.entries[i][j]] for i in range(n)
    ]
    match_left = maximum_bipartite_matching(adjacency, n)
    if any(v == -1 for v in match_left):
        matched = sum(1 for v in match_left if v != -1)
        raise InternalContradictionError(
            f"no nonzero transversal: best matching covers {matched} of {n} rows; "
            "the input was not a valid isomorphism pair"
        )
    return tuple(match_left)


@dataclass(frozen=True)
class ExtractionResult:
    bijection: Bijection
    transversal: Tuple[Tuple[int, int], ...]  # (row, column), 0-based
    verified: bool
    kind: str
    source_names: Tuple[str, ...]
    target_names: Tuple[str, ...]
    diagnostics: Tuple[str, ...]


def _require(stage: str, report: CheckReport) -> None:
    if not report.passed:
        first = report.violations[0]
        raise ExtractionFailure(stage, f"{first.where}: {first.message}", report)


def verify_theorem2_minimality(
    ideal1: MonomialIdeal, ideal2: MonomialIdeal, bij: Bijection
) -> CheckReport:
    """Check the bijection maps minimal generator supports onto minimal
    generator supports, bijectively (facet and edge presentations)."""
    violations: List[Violation] = []
    supports2 = {g.support for g in ideal2.generators}
    if len(ideal1.generators) != len(supports2):
        violations.append(
            Violation(
                where="generator count",
                message=f"{len(ideal1.generators)} vs {len(supports2)}",
            )
        )
    for gen in ideal1.generators:
        image = bij.apply_set(gen.support)
        if image not in supports2:
            violations.append(
                Violation(
                    where="{" + ",".join(str(v) for v in sorted(gen.support)) + "}",
                    message="maps outside the minimal generating set",
                )
            )
    return CheckReport("minimality", tuple(violations))


def _drop_variables(
    p: Polynomial, keep: Sequence[int], new_nvars: int
) -> Polynomial:
    """Delete terms touching non-kept variables and reindex the rest."""
    index = {old: new for new, old in enumerate(keep)}
    terms = {}
    for mon, coeff in p.terms.items():
        if all(v in index for v in mon.support):
            terms[Monomial((index[v], e) for v, e in mon.exps)] = coeff
    return Polynomial(p.field, new_nvars, terms)


def _reduced_pair(
    pair: IsoPair, keep_source: Sequence[int], keep_target: Sequence[int]
) -> IsoPair:
    """Restrict a facet-ring pair to the vertices surviving the strip.

    Dropped variables are degree-1 generators, hence zero in the quotient;
    deleting every term that touches one preserves residue classes.
    """
    fwd, field = pair.forward, pair.forward.source.field
    src_index = {old: new for new, old in enumerate(keep_source)}
    tgt_index = {old: new for new, old in enumerate(keep_target)}
    ns, nt = len(keep_source), len(keep_target)
    src_ideal = MonomialIdeal(
        ns,
        (
            g.permuted([src_index.get(v, 0) for v in range(fwd.source.n)])
            for g in fwd.source.ideal.generators
            if g.degree > 1
        ),
    )
    tgt_ideal = MonomialIdeal(
        nt,
        (
            g.permuted([tgt_index.get(v, 0) for v in range(fwd.target.n)])
            for g in fwd.target.ideal.generators
            if g.degree > 1
        ),
    )
    source = QuotientPresentation(
        field=field,
        names=tuple(fwd.source.names[v] for v in keep_source),
        ideal=src_ideal,
    )
    target = QuotientPresentation(
        field=field,
        names=tuple(fwd.target.names[v] for v in keep_target),
        ideal=tgt_ideal,
    )
    f_images = tuple(
        _drop_variables(fwd.images[v], keep_target, nt) for v in keep_source
    )
    g_images = tuple(
        _drop_variables(pair.backward.images[v], keep_source, ns)
        for v in keep_target
    )
    return IsoPair(
        forward=AlgebraMap(source=source, target=target, images=f_images),
        backward=AlgebraMap(source=target, target=source, images=g_images),
    )


def _bijection_from_transversal(
    match: Sequence[int], n: int
) -> Tuple[Bijection, Tuple[Tuple[int, int], ...]]:
    """Transversal entry (row i, column j) pairs source variable j with
    target variable i, since it asserts that target i appears in the image
    of source j and source j appears in the inverse image of target i."""
    forward = [-1] * n
    transversal = []
    for i, j in enumerate(match):
        forward[j] = i
        transversal.append((i, j))
    return Bijection(tuple(forward)), tuple(transversal)


def extract_isomorphism(pair: IsoPair, kind: str) -> ExtractionResult:
    """Run the full pipeline and return the verified vertex bijection."""
    if kind not in KINDS:
        raise ValidationError(f"unknown ring kind {kind!r}; expected one of {KINDS}")
    diagnostics: List[str] = []

    rep = check_well_defined(pair.forward)
    if not rep.passed:
        first = rep.violations[0]
        raise ExtractionFailure(
            "well-defined", f"forward map: {first.where} {first.message}", rep
        )
    rep = check_well_defined(pair.backward)
    if not rep.passed:
        first = rep.violations[0]
        raise ExtractionFailure(
            "well-defined", f"backward map: {first.where} {first.message}", rep
        )
    _require("lemma1", lemma1_check(pair))
    _require("constants", constant_free_check(pair))
    _require("inverse-pair", check_inverse_pair(pair))

    source_names = pair.forward.source.names
    target_names = pair.forward.target.names
    src_ideal = pair.forward.source.ideal
    tgt_ideal = pair.forward.target.ideal

    try:
        if kind == "sr":
            left = reconstruct_sr_complex(src_ideal, source_names)
            right = reconstruct_sr_complex(tgt_ideal, target_names)
        elif kind == "facet":
            left = reconstruct_facet_complex(src_ideal, source_names)
            right = reconstruct_facet_complex(tgt_ideal, target_names)
        else:
            left = reconstruct_graph(src_ideal, source_names)
            right = reconstruct_graph(tgt_ideal, target_names)
    except ValidationError as exc:
        raise ExtractionFailure("reconstruct", str(exc)) from exc

    if pair.forward.source.n != pair.forward.target.n:
        raise ExtractionFailure(
            "lemma2",
            f"source has {pair.forward.source.n} variables but target has "
            f"{pair.forward.target.n}",
        )
    n = pair.forward.source.n

    if kind == "facet":
        _, count_left = strip_zero_dim_facets(left)
        _, count_right = strip_zero_dim_facets(right)
        if count_left != count_right:
            raise ExtractionFailure(
                "strip",
                f"zero-dimensional facet counts differ: {count_left} vs {count_right}",
            )
        stripped_src = sorted(
            g.support.__iter__().__next__()
            for g in src_ideal.generators
            if g.degree == 1
        )
        stripped_tgt = sorted(
            g.support.__iter__().__next__()
            for g in tgt_ideal.generators
            if g.degree == 1
        )
        keep_source = [v for v in range(n) if v not in set(stripped_src)]
        keep_target = [v for v in range(n) if v not in set(stripped_tgt)]
        working = _reduced_pair(pair, keep_source, keep_target)
        if count_left:
            diagnostics.append(
                f"stripped {count_left} zero-dimensional facet(s) per side"
            )
    else:
        keep_source = list(range(n))
        keep_target = list(range(n))
        working = pair

    m = working.forward.source.n
    if m > 0:
        _require("lemma2", lemma2_check(working))
        try:
            matrix = build_M(linear_parts(working))
        except InternalContradictionError as exc:
            raise ExtractionFailure("matrix", str(exc)) from exc
        try:
            match = find_nonzero_transversal(matrix)
        except InternalContradictionError as exc:
            raise ExtractionFailure("transversal", str(exc)) from exc
        reduced_bij, reduced_transversal = _bijection_from_transversal(match, m)
    else:
        reduced_bij, reduced_transversal = Bijection(()), ()

    forward = [-1] * n
    for rj, ri in enumerate(reduced_bij.forward):
        forward[keep_source[rj]] = keep_target[ri]
    stripped_source = [v for v in range(n) if v not in set(keep_source)]
    stripped_target = [v for v in range(n) if v not in set(keep_target)]
    for s, t in zip(stripped_source, stripped_target):
        forward[s] = t
    bijection = Bijection(tuple(forward))
    transversal = tuple(
        (keep_target[i], keep_source[j]) for i, j in reduced_transversal
    )

    if kind == "edge":
        verified = is_graph_isomorphism(left, right, bijection)
    else:
        verified = is_isomorphism(left, right, bijection)
    if verified and kind in ("facet", "edge"):
        minimality = verify_theorem2_minimality(src_ideal, tgt_ideal, bijection)
        if not minimality.passed:
            verified = False
            diagnostics.extend(
                f"minimality: {v.where} {v.message}" for v in minimality.violations
            )
    if not verified:
        diagnostics.append(
            "verification failed although all hypothesis checks passed: the input "
            "contradicts the guaranteed conclusion, so it is invalid or the "
            "implementation is wrong"
        )
    return ExtractionResult(
        bijection=bijection,
        transversal=transversal,
        verified=verified,
        kind=kind,
        source_names=source_names,
        target_names=target_names,
        diagnostics=tuple(diagnostics),
    )
