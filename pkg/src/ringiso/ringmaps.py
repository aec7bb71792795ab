"""Quotient-ring presentations, algebra maps given by variable images, and
the hypothesis checks an isomorphism pair must pass before extraction.

Checks return structured reports rather than booleans so callers can
explain failures; they never raise on a mathematical violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import MismatchError, ValidationError
from .fields import Coeff, Field
from .polynomials import Monomial, MonomialIdeal, Polynomial, normal_form, substitute

Matrix = Tuple[Tuple[Coeff, ...], ...]


@dataclass(frozen=True)
class QuotientPresentation:
    """A quotient of a polynomial ring by a square-free monomial ideal."""

    field: Field
    names: Tuple[str, ...]
    ideal: MonomialIdeal

    def __post_init__(self):
        if len(self.names) != self.ideal.nvars:
            raise MismatchError(
                f"{len(self.names)} variable names but ideal lives in "
                f"{self.ideal.nvars} variables"
            )
        if len(set(self.names)) != len(self.names):
            raise ValidationError("variable names must be unique")

    @property
    def n(self) -> int:
        return len(self.names)

    def variable(self, i: int) -> Polynomial:
        return Polynomial.variable(self.field, self.n, i)


@dataclass(frozen=True)
class AlgebraMap:
    """A K-algebra map between quotient presentations, given by images of
    the source variables (polynomials in the target variables)."""

    source: QuotientPresentation
    target: QuotientPresentation
    images: Tuple[Polynomial, ...]

    def __post_init__(self):
        if self.source.field != self.target.field:
            raise MismatchError(
                f"field mismatch: {self.source.field!r} vs {self.target.field!r}"
            )
        if len(self.images) != self.source.n:
            raise MismatchError(
                f"{self.source.n} source variables but {len(self.images)} images"
            )
        for img in self.images:
            if img.nvars != self.target.n:
                raise MismatchError(
                    f"image has {img.nvars} variables, target has {self.target.n}"
                )
            if img.field != self.source.field:
                raise MismatchError("image coefficients in the wrong field")

    def apply(self, p: Polynomial) -> Polynomial:
        """Image of a source polynomial, reduced modulo the target ideal."""
        return substitute(p, self.images, self.target.ideal)


@dataclass(frozen=True)
class IsoPair:
    """A claimed K-algebra isomorphism together with its claimed inverse.

    The compositions are verified by check_inverse_pair, never assumed.
    """

    forward: AlgebraMap
    backward: AlgebraMap

    def __post_init__(self):
        if (
            self.backward.source != self.forward.target
            or self.backward.target != self.forward.source
        ):
            raise MismatchError("backward map does not run between the same rings")


@dataclass(frozen=True)
class LinearPartData:
    """Dense matrices of the degree-1 coefficients of both image families.

    Row i of A holds the linear coefficients of the i-th forward image; row
    j of B those of the j-th backward image.
    """

    field: Field
    A: Matrix
    B: Matrix

    @property
    def n(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class Violation:
    where: str
    message: str


@dataclass(frozen=True)
class CheckReport:
    stage: str
    violations: Tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.passed:
            return f"{self.stage}: pass"
        lines = [f"{self.stage}: FAIL"]
        lines.extend(f"  {v.where}: {v.message}" for v in self.violations)
        return "\n".join(lines)


def _format_local(p: Polynomial, names: Sequence[str]) -> str:
    from .parsing import format_polynomial

    return format_polynomial(p, names)


def check_well_defined(m: AlgebraMap) -> CheckReport:
    """Every generator of the source ideal must map to zero in the target."""
    violations = []
    field = m.source.field
    for gen in m.source.ideal.generators:
        gen_poly = Polynomial(field, m.source.n, {gen: field.one})
        residue = m.apply(gen_poly)
        if not residue.is_zero:
            violations.append(
                Violation(
                    where=_format_local(gen_poly, m.source.names),
                    message="maps to nonzero residue "
                    + _format_local(residue, m.target.names),
                )
            )
    return CheckReport("well-defined", tuple(violations))


def check_inverse_pair(pair: IsoPair) -> CheckReport:
    """Both compositions must be the identity on the variable classes."""
    violations: List[Violation] = []
    for direction, m in (("forward", pair.forward), ("backward", pair.backward)):
        rep = check_well_defined(m)
        if not rep.passed:
            violations.append(
                Violation(
                    where=f"{direction} map",
                    message="not well-defined; "
                    + "; ".join(f"{v.where} {v.message}" for v in rep.violations),
                )
            )
    if violations:
        return CheckReport("inverse-pair", tuple(violations))

    fwd, bwd = pair.forward, pair.backward
    for j in range(fwd.target.n):
        got = substitute(bwd.images[j], fwd.images, fwd.target.ideal)
        want = normal_form(fwd.target.variable(j), fwd.target.ideal)
        if got != want:
            violations.append(
                Violation(
                    where=fwd.target.names[j],
                    message="forward o backward sends it to "
                    + _format_local(got, fwd.target.names),
                )
            )
    for i in range(fwd.source.n):
        got = substitute(fwd.images[i], bwd.images, fwd.source.ideal)
        want = normal_form(fwd.source.variable(i), fwd.source.ideal)
        if got != want:
            violations.append(
                Violation(
                    where=fwd.source.names[i],
                    message="backward o forward sends it to "
                    + _format_local(got, fwd.source.names),
                )
            )
    return CheckReport("inverse-pair", tuple(violations))


def _zero_divisor_variables(ideal: MonomialIdeal) -> List[int]:
    out = set()
    for gen in ideal.generators:
        out.update(gen.support)
    return sorted(out)


def lemma1_check(pair: IsoPair) -> CheckReport:
    """Images of variables dividing an ideal generator need zero constant term."""
    violations = []
    for m, label in ((pair.forward, "forward"), (pair.backward, "backward")):
        for i in _zero_divisor_variables(m.source.ideal):
            constant = m.images[i].constant_term()
            if constant:
                violations.append(
                    Violation(
                        where=f"{label} image of {m.source.names[i]}",
                        message=f"zero-divisor variable has constant term {constant}",
                    )
                )
    return CheckReport("lemma1", tuple(violations))


def constant_free_check(pair: IsoPair) -> CheckReport:
    """Policy check: no image may carry a constant term at all.

    Stricter than lemma1: the transversal-matrix argument assumes every
    image is constant-free, including images of variables that divide no
    generator, so such inputs are rejected rather than extended.
    """
    violations = []
    for m, label in ((pair.forward, "forward"), (pair.backward, "backward")):
        for i, img in enumerate(m.images):
            constant = img.constant_term()
            if constant:
                violations.append(
                    Violation(
                        where=f"{label} image of {m.source.names[i]}",
                        message=f"nonzero constant term {constant}",
                    )
                )
    return CheckReport("constants", tuple(violations))


def identity_matrix(field: Field, n: int) -> Matrix:
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def mat_mul(field: Field, x: Matrix, y: Matrix) -> Matrix:
    """Exact matrix product, skipping zero entries of the left factor."""
    n = len(x)
    m = len(y[0]) if y else 0
    rows = []
    for i in range(n):
        acc = [field.zero] * m
        for k, xik in enumerate(x[i]):
            if not xik:
                continue
            yk = y[k]
            for j in range(m):
                ykj = yk[j]
                if ykj:
                    acc[j] = acc[j] + xik * ykj
        rows.append(tuple(acc))
    return tuple(rows)


def lemma2_check(pair: IsoPair) -> CheckReport:
    """Dimension equality, nonzero linear parts, and the exact identity
    A.B = B.A = I on the linear-part matrices."""
    violations = []
    n = pair.forward.source.n
    m = pair.forward.target.n
    if n != m:
        violations.append(
            Violation(
                where="dimension",
                message=f"source has {n} variables but target has {m}",
            )
        )
        return CheckReport("lemma2", tuple(violations))
    for mp, label in ((pair.forward, "forward"), (pair.backward, "backward")):
        for i, img in enumerate(mp.images):
            if not any(img.linear_part()):
                violations.append(
                    Violation(
                        where=f"{label} image of {mp.source.names[i]}",
                        message="linear part is zero",
                    )
                )
    if violations:
        return CheckReport("lemma2", tuple(violations))
    lp = linear_parts(pair)
    ident = identity_matrix(lp.field, n)
    if mat_mul(lp.field, lp.A, lp.B) != ident:
        violations.append(Violation(where="A*B", message="is not the identity matrix"))
    if mat_mul(lp.field, lp.B, lp.A) != ident:
        violations.append(Violation(where="B*A", message="is not the identity matrix"))
    return CheckReport("lemma2", tuple(violations))


def linear_parts(pair: IsoPair) -> LinearPartData:
    """Extract the exact linear-coefficient matrices of both image families."""
    n = pair.forward.source.n
    if pair.forward.target.n != n:
        raise MismatchError(
            f"linear parts need equal dimensions, got {n} and {pair.forward.target.n}"
        )
    a_rows = tuple(tuple(img.linear_part()) for img in pair.forward.images)
    b_rows = tuple(tuple(img.linear_part()) for img in pair.backward.images)
    return LinearPartData(field=pair.forward.source.field, A=a_rows, B=b_rows)


def compose_maps(first: AlgebraMap, second: AlgebraMap, *, reduce: bool = True) -> AlgebraMap:
    """The composite second o first.

    With reduce=False the substitution happens over the free target ring, so
    exactly invertible building blocks compose to exactly invertible maps.
    """
    if first.target != second.source:
        raise MismatchError("maps do not chain: first.target != second.source")
    ideal = (
        second.target.ideal
        if reduce
        else MonomialIdeal.empty(second.target.n)
    )
    images = tuple(substitute(img, second.images, ideal) for img in first.images)
    return AlgebraMap(source=first.source, target=second.target, images=images)


def compose_pairs(p1: IsoPair, p2: IsoPair) -> IsoPair:
    """Chain two isomorphism pairs: (p2 o p1, inverse composed in reverse)."""
    return IsoPair(
        forward=compose_maps(p1.forward, p2.forward),
        backward=compose_maps(p2.backward, p1.backward),
    )
