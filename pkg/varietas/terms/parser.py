"""
parser.py — Identity-expression language.

    equation := expr [ "=" expr ]            LHS = RHS becomes LHS - RHS
    expr     := [sign] term (sign term)*
    term     := [coeff] product              coeff is n or n/m
    product  := primary (OP primary)*        associative ambient: OP may be omitted
    primary  := letter | "(" expr ")" | "[" expr "," expr "]" | "{" expr "," expr "}" | "R(" expr ")"
    letter   := [a-z] "'"*

In the nonassociative ambient a product is a single binary step; chains
such as a*b*c must be parenthesized. Products are bilinear, so parentheses
may hold sums: a<=(b<=c + b>=c) is accepted.

One grammar is built per signature and cached.
"""

import re
from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from varietas.core.config import get_settings
from varietas.core.errors import DegreeCapError, ParseError, UnknownOperationError
from varietas.terms.polynomial import Polynomial, apply_atom, check_multilinear, product
from varietas.terms.signature import GLYPH_NAMES, Signature

MAX_DERIVATION_ORDER = 9

_GLYPH_SCAN = re.compile(r">=|<=|[<>*]|\[|\{|R\(")
_INFIX_ORDER = (">=", "<=", ">", "<", "*")


def _scan_glyphs(text: str, sig: Signature):
    known = {op.glyph for op in sig.ops}
    for match in _GLYPH_SCAN.finditer(text):
        g = match.group()
        if g == "R(":
            if not sig.atoms:
                raise UnknownOperationError(
                    f"operator atoms R(...) are not enabled (at position {match.start()})"
                )
            continue
        glyph = {"[": "[,]", "{": "{,}"}.get(g, g)
        if glyph not in known:
            if glyph in GLYPH_NAMES:
                raise UnknownOperationError(
                    f"operation {glyph!r} is not in the signature (at position {match.start()})"
                )
            raise UnknownOperationError(f"unknown operation symbol {glyph!r}")


def _bracket_action(name: str):
    def action(toks):
        return product(name, toks[0], toks[1])
    return action


@lru_cache(maxsize=None)
def _grammar(sig: Signature) -> pp.ParserElement:
    expr = pp.Forward()

    def on_letter(s, loc, toks):
        text = toks[0]
        order = len(text) - 1
        if order and not sig.derivations:
            raise ParseError("derivation marks need a signature with derivations", loc, s)
        if order > MAX_DERIVATION_ORDER:
            raise ParseError(f"derivation order above {MAX_DERIVATION_ORDER}", loc, s)
        return Polynomial.variable(text[0], sig, order)

    letter = pp.Regex(r"[a-z]'*").set_parse_action(on_letter)
    paren = pp.Suppress("(") + expr + pp.Suppress(")")
    primary_alts = []

    if sig.atoms:
        atom = pp.Suppress(pp.Literal("R") + pp.Literal("(")) + expr + pp.Suppress(")")
        atom.set_parse_action(lambda toks: apply_atom(toks[0]))
        primary_alts.append(atom)

    for op in sig.ops:
        if not op.bracket:
            continue
        bracket = (
            pp.Suppress(op.glyph[0]) + expr + pp.Suppress(",") + expr + pp.Suppress(op.glyph[2])
        )
        bracket.set_parse_action(_bracket_action(op.name))
        primary_alts.append(bracket)

    primary = pp.MatchFirst(primary_alts + [paren, letter])

    infix = [g for g in _INFIX_ORDER if g in {op.glyph for op in sig.ops}]
    if sig.is_word:
        name = sig.ops[0].name
        glyph = pp.Suppress(sig.ops[0].glyph)
        chain = primary + pp.ZeroOrMore(pp.Opt(glyph) + primary)

        def on_word(toks):
            out = toks[0]
            for q in toks[1:]:
                out = product(name, out, q)
            return out

        chain.set_parse_action(on_word)
    elif infix:
        opsym = pp.one_of(infix)
        chain = primary + pp.ZeroOrMore(opsym + primary)

        def on_chain(s, loc, toks):
            if len(toks) == 1:
                return toks[0]
            if len(toks) > 3:
                raise ParseError("parenthesize chains of binary operations", loc, s)
            return product(sig.op_by_glyph(toks[1]).name, toks[0], toks[2])

        chain.set_parse_action(on_chain)
    else:
        chain = primary

    def on_coeff(s, loc, toks):
        _, _, den = toks[0].partition("/")
        if den and int(den) == 0:
            raise ParseError("coefficient with a zero denominator", loc, s)
        return Fraction(toks[0])

    coeff = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(on_coeff)
    term = pp.Opt(coeff) + chain

    def on_term(toks):
        if len(toks) == 2:
            return toks[1].scale(toks[0])
        return toks[0]

    term.set_parse_action(on_term)
    sign = pp.one_of("+ -")
    expr <<= pp.Opt(sign) + term + pp.ZeroOrMore(sign + term)

    def on_expr(toks):
        items = list(toks)
        if not isinstance(items[0], str):
            items.insert(0, "+")
        out = Polynomial.zero(sig)
        for s, t in zip(items[::2], items[1::2]):
            out = out + t if s == "+" else out - t
        return out

    expr.set_parse_action(on_expr)

    zero = pp.Literal("0").set_parse_action(lambda: Polynomial.zero(sig))
    side = (zero + pp.FollowedBy(pp.Literal("=") | pp.StringEnd())) | expr
    equation = side + pp.Opt(pp.Suppress("=") + side)
    equation.set_parse_action(lambda toks: toks[0] - toks[1] if len(toks) == 2 else toks[0])
    return equation


def parse(text: str, sig: Signature, degree_cap: int | None = None) -> Polynomial:
    """Parse an identity (or LHS = RHS equation) into a multilinear Polynomial."""
    _scan_glyphs(text, sig)
    try:
        result = _grammar(sig).parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(f"syntax error: {exc.msg}", exc.loc, text) from None
    p = check_multilinear(result[0])
    cap = get_settings().degree_cap if degree_cap is None else degree_cap
    if p.degree > cap:
        raise DegreeCapError(p.degree, cap)
    return p


def parse_many(texts, sig: Signature) -> list[Polynomial]:
    return [parse(t, sig) for t in texts]
