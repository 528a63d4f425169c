from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from varietas.core.errors import DegreeCapError, InputError, NotMultilinearError, ParseError, UnknownOperationError
from varietas.engine.basis import multilinear_basis
from varietas.terms import monomials as mono
from varietas.terms.monomials import Node
from varietas.terms.parser import parse
from varietas.terms.polynomial import (
    Polynomial, integral_form, mirror, permute, product, rename, standardize, substitute,
)
from varietas.terms.printer import format_coefficients, format_polynomial, print_canonical
from varietas.terms.signature import (
    DENDRIFORM, DIFF_WORDS, JORDAN, LIE, MAGMA, NOVIKOV, POLAR, RB_WORDS, WORDS, Operation, Signature,
)


# ── Parser ───────────────────────────────────────────────────────────────────

def test_word_juxtaposition_and_glyph_agree():
    assert parse("abc - bac", WORDS) == parse("a*b*c - b*a*c", WORDS)


def test_equation_moves_rhs_left():
    assert parse("(a*b)*c = a*(b*c)", MAGMA) == parse("(a*b)*c - a*(b*c)", MAGMA)


def test_coefficients_are_exact():
    p = parse("3/2{[a,c],b} - 1/2{{a,b},c}", POLAR)
    assert sorted(p.terms.values()) == [Fraction(-1, 2), Fraction(3, 2)]


def test_sums_inside_parentheses_distribute():
    lhs = parse("a<=(b<=c + b>=c)", DENDRIFORM)
    rhs = parse("a<=(b<=c) + a<=(b>=c)", DENDRIFORM)
    assert lhs == rhs


def test_zero_side():
    p = parse("{a,{b,c}} + {{a,c},b} + {{a,b},c} = 0", JORDAN)
    assert len(p) == 3


def test_unparenthesized_chain_rejected():
    with pytest.raises(ParseError):
        parse("a*b*c", MAGMA)


def test_unknown_operation_rejected():
    with pytest.raises(UnknownOperationError):
        parse("[a,b]", MAGMA)
    with pytest.raises(UnknownOperationError):
        parse("a>=b", NOVIKOV)


def test_derivation_marks_need_the_feature():
    assert parse("a'b - ab'", DIFF_WORDS).degree == 2
    with pytest.raises(ParseError):
        parse("a'b", WORDS)


def test_operator_atoms():
    p = parse("R(a)b - aR(b)", RB_WORDS)
    assert all(mono.atom_weight(w) == 1 for w in p.terms)
    with pytest.raises(UnknownOperationError):
        parse("R(a)b", WORDS)


def test_not_multilinear():
    with pytest.raises(NotMultilinearError):
        parse("aab", WORDS)
    with pytest.raises(NotMultilinearError):
        parse("ab + c", WORDS)


def test_degree_cap():
    with pytest.raises(DegreeCapError):
        parse("abcd", WORDS, degree_cap=3)


def test_zero_denominator_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        parse("a*(b*c) - 1/0 (a*b)*c", MAGMA)
    assert "zero denominator" in str(info.value)
    assert parse("a*(b*c) - 1/10 (a*b)*c", MAGMA).degree == 3


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse("a*(b*c", MAGMA)
    assert info.value.position >= 0


# ── Printer ──────────────────────────────────────────────────────────────────

def test_printing():
    assert format_polynomial(parse("a*(b*c) - (a*b)*c", MAGMA)) == "a*(b*c) - (a*b)*c"
    assert format_polynomial(parse("[[a,b],c]", LIE)) == "[[a,b],c]"
    assert format_polynomial(Polynomial.zero(WORDS)) == "0"
    assert format_polynomial(parse("1/2 abc", WORDS)) == "1/2 abc"


def test_print_canonical_normalizes_scale_and_sign():
    assert print_canonical(parse("-2 abc + 4 bac", WORDS)) == "abc - 2 bac"


def test_format_coefficients():
    assert format_coefficients([0, Fraction(1, 60)]) == "0 1/60"


@st.composite
def identities(draw):
    sig = draw(st.sampled_from([MAGMA, WORDS, POLAR, NOVIKOV]))
    n = draw(st.integers(2, 4))
    monos = multilinear_basis(sig, n).monomials
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4, unique=True))
    coeffs = draw(st.lists(
        st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool),
        min_size=len(chosen), max_size=len(chosen),
    ))
    return Polynomial(dict(zip(chosen, coeffs)), sig)


@given(identities())
def test_print_parse_round_trip(p):
    assert parse(format_polynomial(p), p.sig) == p
    assert parse(print_canonical(p), p.sig) == integral_form(p)


# ── Polynomials ──────────────────────────────────────────────────────────────

def test_linear_structure():
    p = parse("abc", WORDS)
    q = parse("bac", WORDS)
    assert (p + q) - q == p
    assert (2 * p).coefficient(next(iter(p.terms))) == 2
    assert (p - p).is_zero()
    with pytest.raises(InputError):
        p + parse("(a*b)*c", MAGMA)


def test_product_in_both_ambients():
    a, b = Polynomial.variable("a", MAGMA), Polynomial.variable("b", MAGMA)
    assert product("mul", a, b) == parse("a*b", MAGMA)
    x, y = Polynomial.variable("x", WORDS), Polynomial.variable("y", WORDS)
    assert product("mul", x, y) == parse("xy", WORDS)


def test_permute_needs_a_bijection_on_the_variables():
    p = parse("abc - bac", WORDS)
    assert permute(p, {"a": "b", "b": "a", "c": "c"}) == parse("bac - abc", WORDS)
    with pytest.raises(InputError):
        permute(p, {"a": "b", "b": "a"})


def test_rename_and_standardize():
    p = parse("[y,[x,z]]", LIE)
    assert standardize(p) == parse("[b,[a,c]]", LIE)
    with pytest.raises(InputError):
        rename(p, {"x": "a", "y": "a"})


def test_substitute_detects_capture():
    p = parse("(a*b)*c", MAGMA)
    d = Node("mul", mono.letter("d"), mono.letter("e"))
    assert substitute(p, "c", d) == parse("(a*b)*(d*e)", MAGMA)
    with pytest.raises(InputError):
        substitute(p, "c", Node("mul", mono.letter("a"), mono.letter("e")))


def test_mirror():
    assert mirror(parse("(a*b)*c", MAGMA)) == parse("c*(b*a)", MAGMA)
    assert mirror(parse("abc + acb", WORDS)) == parse("cba + bca", WORDS)


perms = st.permutations("abc")


@given(perms, perms)
def test_permute_is_a_group_action(s, t):
    p = parse("(a*b)*c - a*(c*b)", MAGMA)
    sigma = dict(zip("abc", s))
    tau = dict(zip("abc", t))
    composed = {x: tau[sigma[x]] for x in "abc"}
    assert permute(permute(p, sigma), tau) == permute(p, composed)


# ── Signatures ───────────────────────────────────────────────────────────────

def test_word_signature_takes_one_infix_product():
    with pytest.raises(InputError):
        Signature((Operation.from_glyph("[,]"),), WORDS.ambient)
    with pytest.raises(UnknownOperationError):
        Operation.from_glyph("%")
