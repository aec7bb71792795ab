"""JSON schemas for complexes, graphs, ideals, maps, bundles, and results.

All files use polynomial-expression strings in the package grammar, so they
are reproducible across implementations.  Writers are deterministic
(sorted keys, fixed layout).
"""

from __future__ import annotations

import json
from typing import Dict, Tuple, Union

from .complexes import Bijection, Graph, SimplicialComplex
from .errors import ValidationError
from .extraction import ExtractionResult
from .fields import Field, field_descriptor, field_from_descriptor
from .instances import ElemAdd, InstanceBundle, Permute, Scale, ScramblerOp
from .parsing import format_monomial, format_polynomial, parse_polynomial
from .polynomials import MonomialIdeal, Polynomial
from .ringmaps import AlgebraMap, IsoPair, QuotientPresentation


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _expect_keys(data: dict, keys: set, what: str) -> None:
    if not isinstance(data, dict) or set(data) != keys:
        raise ValidationError(
            f"{what} must be an object with keys {sorted(keys)}"
        )


def _name_index(names) -> Dict[str, int]:
    index = {}
    for i, name in enumerate(names):
        if not isinstance(name, str) or not name:
            raise ValidationError(f"bad variable name {name!r}")
        if name in index:
            raise ValidationError(f"duplicate variable name {name!r}")
        index[name] = i
    return index


def complex_to_json(complex_: SimplicialComplex) -> dict:
    return {
        "vertices": list(complex_.names),
        "facets": [[complex_.names[v] for v in f] for f in complex_.sorted_facets()],
    }


def complex_from_json(data: dict) -> SimplicialComplex:
    _expect_keys(data, {"vertices", "facets"}, "complex file")
    names = tuple(data["vertices"])
    index = _name_index(names)
    facets = []
    for facet in data["facets"]:
        try:
            facets.append(frozenset(index[name] for name in facet))
        except KeyError as exc:
            raise ValidationError(f"unknown vertex {exc.args[0]!r} in facet") from None
    return SimplicialComplex(names, frozenset(facets))


def graph_to_json(graph: Graph) -> dict:
    return {
        "vertices": list(graph.names),
        "edges": [[graph.names[u], graph.names[v]] for u, v in graph.sorted_edges()],
    }


def graph_from_json(data: dict) -> Graph:
    _expect_keys(data, {"vertices", "edges"}, "graph file")
    names = tuple(data["vertices"])
    index = _name_index(names)
    edges = []
    for edge in data["edges"]:
        try:
            members = frozenset(index[name] for name in edge)
        except KeyError as exc:
            raise ValidationError(f"unknown vertex {exc.args[0]!r} in edge") from None
        edges.append(members)
    return Graph(names, frozenset(edges))


def load_complex_or_graph(data: dict) -> Union[SimplicialComplex, Graph]:
    if isinstance(data, dict) and "facets" in data:
        return complex_from_json(data)
    if isinstance(data, dict) and "edges" in data:
        return graph_from_json(data)
    raise ValidationError("expected a complex file (facets) or graph file (edges)")


def ideal_to_json(ideal: MonomialIdeal, names) -> dict:
    if len(names) != ideal.nvars:
        raise ValidationError("name count does not match the ideal's variable count")
    return {
        "variables": list(names),
        "generators": [format_monomial(g, names) for g in ideal.generators],
    }


def ideal_from_json(data: dict) -> Tuple[MonomialIdeal, Tuple[str, ...]]:
    _expect_keys(data, {"variables", "generators"}, "ideal file")
    names = tuple(data["variables"])
    _name_index(names)
    gens = []
    from .fields import QQ

    for text in data["generators"]:
        poly = parse_polynomial(text, names, QQ)
        terms = list(poly.terms.items())
        if len(terms) != 1 or terms[0][1] != QQ.one:
            raise ValidationError(f"generator {text!r} is not a monic monomial")
        gens.append(terms[0][0])
    return MonomialIdeal(len(names), gens), names


def presentation_to_json(pres: QuotientPresentation) -> dict:
    return ideal_to_json(pres.ideal, pres.names)


def presentation_from_json(data: dict, field: Field) -> QuotientPresentation:
    ideal, names = ideal_from_json(data)
    return QuotientPresentation(field=field, names=names, ideal=ideal)


def map_to_json(pair: IsoPair) -> dict:
    fwd = pair.forward
    return {
        "field": field_descriptor(fwd.source.field),
        "source": presentation_to_json(fwd.source),
        "target": presentation_to_json(fwd.target),
        "images": {
            fwd.source.names[i]: format_polynomial(img, fwd.target.names)
            for i, img in enumerate(fwd.images)
        },
        "inverse_images": {
            fwd.target.names[j]: format_polynomial(img, fwd.source.names)
            for j, img in enumerate(pair.backward.images)
        },
    }


def _images_from_json(
    data: dict, source: QuotientPresentation, target: QuotientPresentation
) -> Tuple[Polynomial, ...]:
    given = set(data)
    wanted = set(source.names)
    if given != wanted:
        missing = sorted(wanted - given)
        extra = sorted(given - wanted)
        raise ValidationError(
            f"image keys do not match the variables (missing {missing}, extra {extra})"
        )
    return tuple(
        parse_polynomial(data[name], target.names, target.field)
        for name in source.names
    )


def map_from_json(data: dict) -> IsoPair:
    _expect_keys(
        data, {"field", "source", "target", "images", "inverse_images"}, "map file"
    )
    field = field_from_descriptor(data["field"])
    source = presentation_from_json(data["source"], field)
    target = presentation_from_json(data["target"], field)
    forward = AlgebraMap(
        source=source,
        target=target,
        images=_images_from_json(data["images"], source, target),
    )
    backward = AlgebraMap(
        source=target,
        target=source,
        images=_images_from_json(data["inverse_images"], target, source),
    )
    return IsoPair(forward=forward, backward=backward)


def bijection_to_json(bij: Bijection, source_names, target_names) -> dict:
    return {
        source_names[i]: target_names[j] for i, j in enumerate(bij.forward)
    }


def _op_to_json(op: ScramblerOp, names) -> dict:
    if isinstance(op, Scale):
        return {"op": "scale", "var": names[op.var], "value": str(op.value)}
    if isinstance(op, Permute):
        return {
            "op": "permute",
            "images": {names[i]: names[j] for i, j in enumerate(op.perm.forward)},
        }
    return {
        "op": "elem-add",
        "var": names[op.var],
        "value": str(op.value),
        "monomial": format_monomial(op.monomial, names),
    }


def bundle_to_json(bundle: InstanceBundle) -> dict:
    shape_key = "complex" if isinstance(bundle.source, SimplicialComplex) else "graph"
    to_shape = complex_to_json if shape_key == "complex" else graph_to_json
    return {
        "kind": bundle.kind,
        "field": field_descriptor(bundle.field),
        "seed": bundle.seed,
        f"source_{shape_key}": to_shape(bundle.source),
        f"target_{shape_key}": to_shape(bundle.target),
        "ground_truth": bijection_to_json(
            bundle.sigma, bundle.source.names, bundle.target.names
        ),
        "map": map_to_json(bundle.pair),
        "scramble_trace": [
            _op_to_json(op, bundle.source.names) for op in bundle.ops
        ],
    }


def result_to_json(result: ExtractionResult) -> dict:
    return {
        "kind": result.kind,
        "verified": result.verified,
        "bijection": bijection_to_json(
            result.bijection, result.source_names, result.target_names
        ),
        "transversal": [[i + 1, j + 1] for i, j in result.transversal],
        "diagnostics": list(result.diagnostics),
    }
