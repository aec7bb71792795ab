"""Transversal matrix, matching, and the end-to-end extraction pipeline."""

from fractions import Fraction

import pytest

from ringiso import (
    QQ,
    Bijection,
    ElemAdd,
    ExtractionFailure,
    Graph,
    InternalContradictionError,
    IsoPair,
    Monomial,
    MonomialIdeal,
    Permute,
    PrimeField,
    Scale,
    SimplicialComplex,
    brute_force_iso,
    build_M,
    extract_isomorphism,
    facet_ideal,
    find_nonzero_transversal,
    is_graph_isomorphism,
    is_isomorphism,
    linear_parts,
    random_gl_pair,
    scrambled_iso,
    verify_theorem2_minimality,
)
from ringiso.extraction import TransversalMatrix
from ringiso.instances import generate_bundle
from ringiso.matching import maximum_bipartite_matching
from ringiso.ringmaps import LinearPartData

from helpers import identity_pair_on


def F(x):
    return Fraction(x)


def lp(a_rows, b_rows):
    return LinearPartData(
        field=QQ,
        A=tuple(tuple(F(x) for x in row) for row in a_rows),
        B=tuple(tuple(F(x) for x in row) for row in b_rows),
    )


class TestBuildM:
    def test_identity(self):
        data = lp([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        M = build_M(data)
        assert M.entries == data.A

    def test_swap(self):
        anti = [[0, 1], [1, 0]]
        M = build_M(lp(anti, anti))
        assert M.entries == ((F(0), F(1)), (F(1), F(0)))

    def test_unit_triangular(self):
        M = build_M(lp([[1, 1], [0, 1]], [[1, -1], [0, 1]]))
        assert M.entries == ((F(1), F(0)), (F(0), F(1)))

    def test_sum_violation_raises(self):
        # diagonal of A*B is (2, 1), so a column sum of M comes out 2
        with pytest.raises(InternalContradictionError):
            build_M(lp([[2, 0], [0, 1]], [[1, 0], [0, 1]]))


class TestTransversal:
    def test_identity_diagonal(self):
        M = build_M(lp([[1, 0], [0, 1]], [[1, 0], [0, 1]]))
        assert find_nonzero_transversal(M) == (0, 1)

    def test_dense_matrix_takes_diagonal(self):
        M = TransversalMatrix(
            field=QQ, entries=((F(2), F(-1)), (F(-1), F(2)))
        )
        perm = find_nonzero_transversal(M)
        assert sorted(perm) == [0, 1]
        assert all(M.entries[i][perm[i]] for i in range(2))

    def test_no_transversal_is_contradiction(self):
        # Row/column sums are 1 but the support has no perfect matching.
        entries = (
            (F(0), F(0), F(1)),
            (F(0), F(0), F(1)),
            (F(1), F(1), F(-1)),
        )
        M = TransversalMatrix(field=QQ, entries=entries)
        with pytest.raises(InternalContradictionError):
            find_nonzero_transversal(M)

    def test_gl_stress(self):
        pair = random_gl_pair(200, seed=3)
        M = build_M(linear_parts(pair))
        perm = find_nonzero_transversal(M)
        assert sorted(perm) == list(range(200))
        assert all(M.entries[i][perm[i]] for i in range(200))


class TestMatching:
    def test_maximum_on_small_graphs(self):
        assert maximum_bipartite_matching([[0], [0]], 1) in ([0, -1], [-1, 0])
        match = maximum_bipartite_matching([[0, 1], [0], [1]], 2)
        assert sum(1 for v in match if v != -1) == 2

    def test_deterministic(self):
        adj = [[0, 1, 2], [0, 2], [0]]
        assert maximum_bipartite_matching(adj, 3) == maximum_bipartite_matching(adj, 3)


def names(prefix, n):
    return tuple(f"{prefix}{i + 1}" for i in range(n))


class TestExtract:
    def test_identity_on_hollow_triangle(self):
        hollow = SimplicialComplex(
            names("x", 3),
            frozenset({frozenset((0, 1)), frozenset((1, 2)), frozenset((0, 2))}),
        )
        pair = identity_pair_on(hollow, "sr")
        result = extract_isomorphism(pair, "sr")
        assert result.verified
        assert result.bijection == Bijection.identity(3)

    def test_swap_on_single_edge(self):
        g = Graph(names("x", 2), frozenset({frozenset((0, 1))}))
        bundle = scrambled_iso(g, Bijection((1, 0)), [], "edge")
        result = extract_isomorphism(bundle.pair, "edge")
        assert result.verified
        assert result.bijection == Bijection((1, 0))

    def test_scrambled_instances_verify(self):
        for kind in ("sr", "facet", "edge"):
            for seed in (5, 6, 7, 8):
                bundle = generate_bundle(n=6, kind=kind, num_ops=5, seed=seed)
                result = extract_isomorphism(bundle.pair, kind)
                assert result.verified, (kind, seed)
                obj1, obj2 = bundle.source, bundle.target
                if kind == "edge":
                    assert is_graph_isomorphism(obj1, obj2, result.bijection)
                else:
                    assert is_isomorphism(obj1, obj2, result.bijection)

    def test_transversal_entries_reported(self):
        bundle = generate_bundle(n=5, kind="sr", num_ops=3, seed=11)
        result = extract_isomorphism(bundle.pair, "sr")
        lpd = linear_parts(bundle.pair)
        M = build_M(lpd)
        for i, j in result.transversal:
            assert M.entries[i][j]
        # transversal entry (row i, col j) pairs source j with target i
        for i, j in result.transversal:
            assert result.bijection.forward[j] == i

    def test_facet_kind_with_singletons(self):
        c = SimplicialComplex(
            names("x", 5),
            frozenset(
                {
                    frozenset((0,)),
                    frozenset((1,)),
                    frozenset((2, 3)),
                    frozenset((3, 4)),
                }
            ),
        )
        sigma = Bijection((4, 0, 1, 2, 3))
        bundle = scrambled_iso(
            c, sigma, [Scale(2, F(3)), ElemAdd(2, F(2), Monomial.variable(4))], "facet"
        )
        result = extract_isomorphism(bundle.pair, "facet")
        assert result.verified
        assert is_isomorphism(c, bundle.target, result.bijection)

    def test_singleton_count_mismatch_fails_at_strip(self):
        left = SimplicialComplex(
            names("x", 3), frozenset({frozenset((0,)), frozenset((1, 2))})
        )
        right = SimplicialComplex(
            names("y", 3), frozenset({frozenset((0, 1, 2))})
        )
        pair = IsoPair(
            forward=_relabel_map(left, right, "facet"),
            backward=_relabel_map(right, left, "facet"),
        )
        with pytest.raises(ExtractionFailure) as err:
            extract_isomorphism(pair, "facet")
        assert err.value.stage in ("well-defined", "strip")

    def test_all_singletons(self):
        c = SimplicialComplex(
            names("x", 3),
            frozenset({frozenset((0,)), frozenset((1,)), frozenset((2,))}),
        )
        bundle = scrambled_iso(c, Bijection((2, 0, 1)), [], "facet")
        result = extract_isomorphism(bundle.pair, "facet")
        assert result.verified

    def test_gf101_instances(self):
        gf = PrimeField(101)
        bundle = generate_bundle(n=7, kind="edge", num_ops=4, seed=21, field=gf)
        result = extract_isomorphism(bundle.pair, "edge")
        assert result.verified

    def test_stage_well_defined_comes_first(self):
        p4 = Graph(names("x", 4), frozenset(
            {frozenset((0, 1)), frozenset((1, 2)), frozenset((2, 3))}
        ))
        star = Graph(names("y", 4), frozenset(
            {frozenset((0, 1)), frozenset((0, 2)), frozenset((0, 3))}
        ))
        pair = IsoPair(
            forward=_relabel_map(p4, star, "edge"),
            backward=_relabel_map(star, p4, "edge"),
        )
        with pytest.raises(ExtractionFailure) as err:
            extract_isomorphism(pair, "edge")
        assert err.value.stage == "well-defined"

    def test_oracle_agreement_small(self):
        for kind in ("sr", "facet", "edge"):
            for seed in range(31, 37):
                bundle = generate_bundle(n=5, kind=kind, num_ops=3, seed=seed)
                assert brute_force_iso(bundle.source, bundle.target) is not None
                assert extract_isomorphism(bundle.pair, kind).verified

    def test_permutation_invariance_of_target_labels(self):
        from ringiso.ringmaps import AlgebraMap, QuotientPresentation
        from ringiso.polynomials import substitute, Polynomial, MonomialIdeal

        bundle = generate_bundle(n=6, kind="sr", num_ops=4, seed=77)
        pair = bundle.pair
        n = 6
        tau = Bijection((3, 5, 0, 1, 4, 2))
        tgt = pair.forward.target
        new_names = tuple(tgt.names[tau.inverse().forward[i]] for i in range(n))
        new_target = QuotientPresentation(
            field=tgt.field,
            names=new_names,
            ideal=tgt.ideal.permuted(tau.forward),
        )
        relabel = [Polynomial.variable(tgt.field, n, tau.forward[j]) for j in range(n)]
        fwd_images = tuple(
            substitute(img, relabel, MonomialIdeal.empty(n)) for img in pair.forward.images
        )
        bwd_images = tuple(
            pair.backward.images[tau.inverse().forward[j]] for j in range(n)
        )
        relabeled = IsoPair(
            forward=AlgebraMap(pair.forward.source, new_target, fwd_images),
            backward=AlgebraMap(new_target, pair.forward.source, bwd_images),
        )
        result = extract_isomorphism(relabeled, "sr")
        assert result.verified
        relabeled_complex = bundle.target.apply(tau, new_names)
        assert is_isomorphism(bundle.source, relabeled_complex, result.bijection)


def _relabel_map(a, b, kind):
    """Identity-images candidate map between the rings of two objects."""
    from ringiso.instances import ideal_for_kind
    from ringiso.ringmaps import AlgebraMap, QuotientPresentation

    src = QuotientPresentation(field=QQ, names=a.names, ideal=ideal_for_kind(a, kind))
    tgt = QuotientPresentation(field=QQ, names=b.names, ideal=ideal_for_kind(b, kind))
    images = tuple(tgt.variable(i) for i in range(src.n))
    return AlgebraMap(source=src, target=tgt, images=images)


class TestMinimality:
    def test_identity_passes(self):
        c = SimplicialComplex(
            names("x", 3), frozenset({frozenset((0, 1)), frozenset((1, 2))})
        )
        ideal = facet_ideal(c)
        assert verify_theorem2_minimality(ideal, ideal, Bijection.identity(3)).passed

    def test_extracted_maps_pass(self):
        bundle = generate_bundle(n=6, kind="facet", num_ops=4, seed=41)
        result = extract_isomorphism(bundle.pair, "facet")
        ideal1 = bundle.pair.forward.source.ideal
        ideal2 = bundle.pair.forward.target.ideal
        assert verify_theorem2_minimality(ideal1, ideal2, result.bijection).passed

    def test_corrupted_bijection_flagged(self):
        c = SimplicialComplex(
            names("x", 3), frozenset({frozenset((0, 1)), frozenset((1, 2))})
        )
        ideal = facet_ideal(c)
        report = verify_theorem2_minimality(ideal, ideal, Bijection((1, 0, 2)))
        assert not report.passed
        assert any("maps outside" in v.message for v in report.violations)
