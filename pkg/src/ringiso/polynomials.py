"""Sparse multivariate polynomials and square-free monomial ideals.

Variables are positional (0-based indices); display names live with the
presentations, not here.  Coefficients are exact field elements.  Every
value is immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import MismatchError, ValidationError
from .fields import Coeff, Field


class Monomial:
    """A product of variables with positive integer exponents, stored sparsely.

    The empty monomial is 1.  Instances are immutable and hashable.
    """

    __slots__ = ("_exps",)

    def __init__(self, exps: Iterable[Tuple[int, int]] = ()):
        pairs = []
        for var, exp in exps:
            if var < 0:
                raise ValidationError(f"negative variable index {var}")
            if exp < 0:
                raise ValidationError(f"negative exponent {exp} on variable {var}")
            if exp > 0:
                pairs.append((var, exp))
        pairs.sort()
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            if a == b:
                raise ValidationError(f"duplicate variable index {a}")
        self._exps = tuple(pairs)

    @classmethod
    def one(cls) -> "Monomial":
        return cls(())

    @classmethod
    def variable(cls, i: int) -> "Monomial":
        return cls(((i, 1),))

    @classmethod
    def squarefree(cls, variables: Iterable[int]) -> "Monomial":
        return cls((v, 1) for v in variables)

    @property
    def exps(self) -> Tuple[Tuple[int, int], ...]:
        return self._exps

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self._exps)

    @property
    def max_var(self) -> int:
        return self._exps[-1][0] if self._exps else -1

    def exponent(self, var: int) -> int:
        for v, e in self._exps:
            if v == var:
                return e
        return 0

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._exps)

    def divides(self, other: "Monomial") -> bool:
        """True when every exponent of self is covered by other."""
        it = iter(other._exps)
        for var, exp in self._exps:
            for ovar, oexp in it:
                if ovar == var:
                    if oexp < exp:
                        return False
                    break
                if ovar > var:
                    return False
            else:
                return False
        return True

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged = dict(self._exps)
        for v, e in other._exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged.items())

    def permuted(self, perm: Sequence[int]) -> "Monomial":
        return Monomial((perm[v], e) for v, e in self._exps)

    def dense(self, nvars: int) -> Tuple[int, ...]:
        out = [0] * nvars
        for v, e in self._exps:
            out[v] = e
        return tuple(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __repr__(self) -> str:
        if not self._exps:
            return "Monomial(1)"
        body = "*".join(f"v{v}" + (f"^{e}" if e > 1 else "") for v, e in self._exps)
        return f"Monomial({body})"


def grlex_key(mon: Monomial, nvars: int):
    """Canonical term-order key: total degree, then earlier variables first."""
    return (mon.degree, tuple(-e for e in mon.dense(nvars)))


class Polynomial:
    """A sparse polynomial over an exact field, in ``nvars`` ambient variables."""

    __slots__ = ("field", "nvars", "_terms")

    def __init__(self, field: Field, nvars: int, terms: Dict[Monomial, Coeff]):
        if nvars < 0:
            raise ValidationError("ambient variable count must be >= 0")
        for mon, coeff in terms.items():
            if mon.max_var >= nvars:
                raise MismatchError(
                    f"monomial uses variable {mon.max_var} but ring has {nvars}"
                )
            if not field.contains(coeff):
                raise ValidationError(f"coefficient {coeff!r} is not in {field!r}")
            if not coeff:
                raise ValidationError("explicit zero coefficient stored")
        self.field = field
        self.nvars = nvars
        self._terms = dict(terms)

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, value: Coeff) -> "Polynomial":
        if not value:
            return cls.zero(field, nvars)
        return cls(field, nvars, {Monomial.one(): value})

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise MismatchError(f"variable index {i} out of range for {nvars} variables")
        return cls(field, nvars, {Monomial.variable(i): field.one})

    @classmethod
    def from_terms(
        cls, field: Field, nvars: int, terms: Iterable[Tuple[Monomial, Coeff]]
    ) -> "Polynomial":
        """Build a polynomial, collecting like terms and dropping zeros."""
        acc: Dict[Monomial, Coeff] = {}
        for mon, coeff in terms:
            cur = acc.get(mon)
            acc[mon] = coeff if cur is None else cur + coeff
        return cls(field, nvars, {m: c for m, c in acc.items() if c})

    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        """The term map; treat as read-only."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> List[Tuple[Monomial, Coeff]]:
        return sorted(self._terms.items(), key=lambda mc: grlex_key(mc[0], self.nvars))

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise MismatchError(f"field mismatch: {self.field!r} vs {other.field!r}")
        if self.nvars != other.nvars:
            raise MismatchError(
                f"variable-count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc = dict(self._terms)
        for mon, coeff in other._terms.items():
            cur = acc.get(mon)
            new = coeff if cur is None else cur + coeff
            if new:
                acc[mon] = new
            elif cur is not None:
                del acc[mon]
        return Polynomial(self.field, self.nvars, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        acc: Dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mon = m1 * m2
                prod = c1 * c2
                cur = acc.get(mon)
                new = prod if cur is None else cur + prod
                if new:
                    acc[mon] = new
                elif cur is not None:
                    del acc[mon]
        return Polynomial(self.field, self.nvars, acc)

    def scaled(self, value: Coeff) -> "Polynomial":
        if not value:
            return Polynomial.zero(self.field, self.nvars)
        return Polynomial(
            self.field, self.nvars, {m: c * value for m, c in self._terms.items()}
        )

    def constant_term(self) -> Coeff:
        return self._terms.get(Monomial.one(), self.field.zero)

    def linear_part(self) -> List[Coeff]:
        """Coefficients of the degree-1 monomials, as a dense vector."""
        out = [self.field.zero] * self.nvars
        for mon, coeff in self._terms.items():
            if mon.degree == 1:
                out[mon.exps[0][0]] = coeff
        return out

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial(
            self.field,
            self.nvars,
            {m: c for m, c in self._terms.items() if m.degree == d},
        )

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars} vars, {len(self._terms)} terms)"


class MonomialIdeal:
    """A square-free monomial ideal, stored by its minimal generating set.

    Generators are minimalized on construction: any generator divisible by
    another is dropped, so the stored set is an antichain under divisibility.
    """

    __slots__ = ("nvars", "_gens")

    def __init__(self, nvars: int, generators: Iterable[Monomial] = ()):
        if nvars < 0:
            raise ValidationError("ambient variable count must be >= 0")
        unique = set()
        for gen in generators:
            if not gen.is_squarefree():
                raise ValidationError(f"generator {gen!r} is not square-free")
            if gen.degree == 0:
                raise ValidationError("the unit monomial cannot generate a proper ideal")
            if gen.max_var >= nvars:
                raise MismatchError(
                    f"generator uses variable {gen.max_var} but ring has {nvars}"
                )
            unique.add(gen)
        minimal = [
            g
            for g in unique
            if not any(h is not g and h.divides(g) for h in unique)
        ]
        minimal.sort(key=lambda g: grlex_key(g, nvars))
        self.nvars = nvars
        self._gens = tuple(minimal)

    @classmethod
    def empty(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @property
    def generators(self) -> Tuple[Monomial, ...]:
        return self._gens

    @property
    def is_zero_ideal(self) -> bool:
        return not self._gens

    def contains_monomial(self, mon: Monomial) -> bool:
        return any(g.divides(mon) for g in self._gens)

    def permuted(self, perm: Sequence[int]) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, (g.permuted(perm) for g in self._gens))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self._gens == other._gens
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self._gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.nvars} vars, {len(self._gens)} generators)"


def normal_form(p: Polynomial, ideal: MonomialIdeal) -> Polynomial:
    """Canonical representative of p modulo a monomial ideal.

    A term survives iff its monomial is divisible by no generator; this is
    the unique normal form because the ideal is generated by monomials.
    """
    if p.nvars != ideal.nvars:
        raise MismatchError(
            f"variable-count mismatch: polynomial has {p.nvars}, ideal has {ideal.nvars}"
        )
    if ideal.is_zero_ideal or p.is_zero:
        return p
    kept = {m: c for m, c in p.terms.items() if not ideal.contains_monomial(m)}
    return Polynomial(p.field, p.nvars, kept)


def substitute(
    p: Polynomial, images: Sequence[Polynomial], target_ideal: MonomialIdeal
) -> Polynomial:
    """Evaluate p at the given variable images, reduced modulo target_ideal.

    Partial products are reduced as they grow; this is sound for monomial
    ideals since any multiple of a reducible monomial is reducible.
    """
    if len(images) != p.nvars:
        raise MismatchError(
            f"arity mismatch: {p.nvars} source variables but {len(images)} images"
        )
    for img in images:
        if img.nvars != target_ideal.nvars:
            raise MismatchError(
                f"image has {img.nvars} variables, target ring has {target_ideal.nvars}"
            )
        if img.field != p.field:
            raise MismatchError(f"field mismatch: {p.field!r} vs {img.field!r}")
    field = p.field
    result = Polynomial.zero(field, target_ideal.nvars)
    powers: Dict[Tuple[int, int], Polynomial] = {}
    for mon, coeff in p.terms.items():
        part = Polynomial.constant(field, target_ideal.nvars, coeff)
        for var, exp in mon.exps:
            key = (var, exp)
            img_pow = powers.get(key)
            if img_pow is None:
                img_pow = images[var]
                for _ in range(exp - 1):
                    img_pow = normal_form(img_pow * images[var], target_ideal)
                powers[key] = img_pow
            part = normal_form(part * img_pow, target_ideal)
        result = result + part
    return normal_form(result, target_ideal)
