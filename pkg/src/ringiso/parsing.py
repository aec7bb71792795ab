"""Polynomial expression grammar: parser and matching pretty-printer.

Grammar (whitespace insignificant)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := coeff | var | var '^' nat
    coeff  := int | int '/' posint
    var    := identifier from the declared variable list

Over the rationals, ``int '/' posint`` is an exact fraction.  Over GF(p),
integer literals are reduced mod p and '/' is field division; a denominator
divisible by p is rejected.  The pretty-printer emits this same grammar, in
the canonical term order, so print-then-parse is the identity.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Sequence

from .errors import MismatchError, ParseError, ValidationError
from .fields import Coeff, Field
from .polynomials import Monomial, Polynomial

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))"
)


class _Token(NamedTuple):
    kind: str  # "int" | "ident" | one of "+-*/^" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if match.lastgroup == "op":
            tokens.append(_Token(match.group("op"), match.group("op"), match.start("op")))
        else:
            kind = match.lastgroup
            tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], var_index: dict, field: Field):
        self.tokens = tokens
        self.i = 0
        self.var_index = var_index
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self):
        terms = []
        negate = False
        if self.peek().kind == "-":
            self.take()
            negate = True
        terms.append(self.term(negate))
        while self.peek().kind in ("+", "-"):
            sign = self.take()
            terms.append(self.term(sign.kind == "-"))
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return terms

    def term(self, negate: bool):
        coeff = self.field.one
        exps: dict = {}
        while True:
            coeff = self.factor(coeff, exps)
            if self.peek().kind == "*":
                self.take()
                continue
            break
        if negate:
            coeff = -coeff
        return Monomial(exps.items()), coeff

    def factor(self, coeff: Coeff, exps: dict) -> Coeff:
        tok = self.take()
        if tok.kind == "int":
            num = int(tok.text)
            if self.peek().kind == "/":
                self.take()
                den_tok = self.take()
                if den_tok.kind != "int":
                    raise ParseError("expected a positive integer denominator", den_tok.pos)
                try:
                    value = self.field.ratio(num, int(den_tok.text))
                except ValidationError as exc:
                    raise ParseError(str(exc), den_tok.pos) from None
            else:
                value = self.field.from_int(num)
            return coeff * value
        if tok.kind == "ident":
            var = self.var_index.get(tok.text)
            if var is None:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            exp = 1
            if self.peek().kind == "^":
                self.take()
                exp_tok = self.take()
                if exp_tok.kind != "int":
                    raise ParseError("expected an integer exponent after '^'", exp_tok.pos)
                exp = int(exp_tok.text)
            exps[var] = exps.get(var, 0) + exp
            return coeff
        raise ParseError(f"expected a coefficient or variable, got {tok.text!r}", tok.pos)


def parse_polynomial(text: str, names: Sequence[str], field: Field) -> Polynomial:
    """Parse an expression over the named variables into a Polynomial."""
    var_index = {}
    for i, name in enumerate(names):
        if name in var_index:
            raise ValidationError(f"duplicate variable name {name!r}")
        var_index[name] = i
    parser = _Parser(_tokenize(text), var_index, field)
    terms = parser.expr()
    return Polynomial.from_terms(field, len(names), terms)


def format_coefficient(value: Coeff) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return str(value.value)


def format_monomial(mon: Monomial, names: Sequence[str]) -> str:
    if mon.degree == 0:
        return "1"
    parts = []
    for var, exp in mon.exps:
        parts.append(names[var] if exp == 1 else f"{names[var]}^{exp}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, names: Sequence[str]) -> str:
    """Deterministic rendering in the input grammar; parses back to p."""
    if len(names) != p.nvars:
        raise MismatchError(f"{p.nvars} variables but {len(names)} names")
    if p.is_zero:
        return "0"
    pieces = []
    for mon, coeff in p.sorted_terms():
        if isinstance(coeff, Fraction) and coeff < 0:
            sign, mag = "-", -coeff
        else:
            sign, mag = "+", coeff
        if mon.degree == 0:
            body = format_coefficient(mag)
        elif mag == p.field.one:
            body = format_monomial(mon, names)
        else:
            body = f"{format_coefficient(mag)}*{format_monomial(mon, names)}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
