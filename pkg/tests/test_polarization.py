from fractions import Fraction

import pytest

from varietas.core.errors import InputError
from varietas.engine.presentation import named_variety
from varietas.expansions.polarization import (
    canonical_bracket, depolarizes_into, parse_polarized, polarize, polarized_space,
)
from varietas.terms.monomials import Node
from varietas.terms.parser import parse
from varietas.terms.polynomial import Polynomial
from varietas.terms.signature import LIE, MAGMA, POLAR

ASSOCIATIVE = [
    "[{a,c},b] = {[a,b],c} - {a,[b,c]}",
    "[y,[x,z]] = {{x,y},z} - {x,{y,z}}",
]
AS1 = ASSOCIATIVE + ["{a,{b,c}} + {{a,c},b} + {{a,b},c} = 0"]
AS2 = [
    "[{a,c},b] = {[a,b],c} - {a,[b,c]}",
    "[b,[a,c]] = {{a,b},c} - {a,{b,c}}",
    "{[a,b],c} + {[b,c],a} + {[c,a],b} = 0",
]
AS3_STANDARD = [
    "[{a,c},b] = {[a,b],c} - {a,[b,c]}",
    "[b,[a,c]] = {{a,b},c} - {a,{b,c}}",
    "{a,{b,c}} - 3/2{[a,c],b} - 3/2{[a,b],c} - 1/2{{a,c},b} - 1/2{{a,b},c} = 0",
    "{a,[b,c]} = -1/2{[a,c],b} + 1/2{[a,b],c} + 1/2{{a,c},b} - 1/2{{a,b},c}",
]
AS3_PAPER = [
    "[{a,c},b] = {[a,b],c} - {a,[b,c]}",
    "[b,[a,c]] = {{a,b},c} - {a,{b,c}}",
    "{a,{b,c}} + 3/2{[a,c],b} + 3/2{[a,b],c} - 1/2{{a,c},b} - 1/2{{a,b},c} = 0",
    "{a,[b,c]} = -1/2{[a,c],b} + 1/2{[a,b],c} - 1/2{{a,c},b} + 1/2{{a,b},c}",
]


def braces(t) -> int:
    if isinstance(t, Node):
        return (t.op == "jordan") + braces(t.left) + braces(t.right)
    return 0


def flip_mixed(p):
    """Negate the degree-3 terms with exactly one brace."""
    return Polynomial({m: -c if braces(m) == 1 else c for m, c in p.terms.items()}, POLAR)


def test_canonical_bracket_signs():
    assert canonical_bracket(parse("[b,a]", POLAR)) == -parse("[a,b]", POLAR)
    assert canonical_bracket(parse("{b,a}", POLAR)) == parse("{a,b}", POLAR)
    assert canonical_bracket(parse("[a,b] + [b,a]", POLAR)).is_zero()
    with pytest.raises(InputError):
        canonical_bracket(parse("[a,b]", LIE))


def test_commutativity_polarizes_to_a_vanishing_bracket():
    result = polarize(parse("a*b - b*a", MAGMA))
    assert result.degrees == (2,)
    assert result.space(2).rank == 1
    assert result.space(2).contains(parse("[a,b]", POLAR))


@pytest.mark.parametrize("name, expected", [
    ("associative", ASSOCIATIVE),
    ("as1", AS1),
    ("as2", AS2),
])
def test_polarized_identities_of_the_first_types(name, expected):
    result = polarize(named_variety(name), "paper")
    assert result.matches(parse_polarized(expected))
    assert depolarizes_into(result, named_variety(name))


def test_as3_coefficients_come_from_the_halved_split():
    result = polarize(named_variety("as3"), "standard")
    assert result.kappa_sym == result.kappa_alt == Fraction(1, 2)
    assert result.matches(parse_polarized(AS3_STANDARD))
    assert depolarizes_into(result, named_variety("as3"))


def test_as3_under_the_default_convention_flips_the_mixed_terms():
    result = polarize(named_variety("as3"), "paper")
    printed = parse_polarized(AS3_STANDARD)
    assert not result.matches(printed)
    assert result.matches([flip_mixed(p) for p in printed])
    assert result.matches(parse_polarized(AS3_PAPER))
    assert depolarizes_into(result, named_variety("as3"))


def test_types_one_and_two_do_not_see_the_flip():
    for name, expected in (("associative", ASSOCIATIVE), ("as1", AS1), ("as2", AS2)):
        printed = parse_polarized(expected)
        assert polarize(named_variety(name), "standard").matches(printed)
        assert all(flip_mixed(p) == p or flip_mixed(p) == -p for p in printed)


def test_relation_space_ignores_the_convention_scale():
    paper = polarize(named_variety("associative"), "paper")
    scaled = polarize(named_variety("associative"), kappa_sym=-2, kappa_alt=2)
    assert scaled.kappa_sym == -2
    assert paper.space(3).equals(scaled.space(3))


def test_matches_needs_the_same_degrees():
    result = polarize(named_variety("as1"), "paper")
    assert not result.matches(parse_polarized(["[a,b] + {a,b}"]))


def test_polarized_space_is_relabeling_closed():
    space = polarized_space(parse_polarized(["{a,[b,c]}"]), 3)
    assert space.contains(canonical_bracket(parse("{[a,b],c}", POLAR)))
    assert space.rank == 3


def test_to_dict():
    d = polarize(named_variety("associative")).to_dict()
    assert d["source"] == "associative"
    assert d["kappa_sym"] == "-1"
    assert d["identities"]


def test_inputs():
    with pytest.raises(InputError):
        polarize([])
    with pytest.raises(InputError):
        polarize(parse("[a,b]", LIE))
    with pytest.raises(InputError):
        polarize(named_variety("associative"), "other")
    with pytest.raises(InputError):
        depolarizes_into(polarize(named_variety("alternative")), named_variety("alternative"))
    with pytest.raises(InputError):
        polarize(named_variety("associative")).space(4)
