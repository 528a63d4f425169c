from fractions import Fraction

import pytest

from varietas.cli.checks import derived_check, derived_kernel, opposite_check
from varietas.core.errors import InputError
from varietas.engine.kernel import (
    Verdict, compare_spaces, generated_by, generator_closure, kernel_of_expansion,
)
from varietas.engine.presentation import load_identities, named_variety
from varietas.expansions.maps import ExpansionKind, ExpansionMap
from varietas.terms.parser import parse, parse_many
from varietas.terms.signature import JORDAN, LIE

ANTI = "[a,b] + [b,a]"
JACOBI = "[[a,b],c] + [[b,c],a] + [[c,a],b]"
NILP4 = "[[[a,b],c],d]"


def lie(*texts):
    return parse_many(texts, LIE)


def test_commutators_of_associative_algebras_are_lie():
    v = named_variety("associative")
    for n in (2, 3, 4):
        gens = [g for g in lie(ANTI, JACOBI) if g.degree <= n]
        assert generated_by(gens, derived_kernel(v, "minus", n)) is Verdict.EQUAL


def test_as3_commutator_algebra_is_nilpotent_of_index_four():
    v = named_variety("as3")
    kernel = derived_kernel(v, "minus", 4)
    assert kernel.contains(parse(NILP4, LIE))
    assert generated_by(lie(ANTI, JACOBI, NILP4), kernel) is Verdict.EQUAL
    assert generated_by(lie(ANTI, JACOBI), kernel) is Verdict.STRICTLY_CONTAINED


def test_anticommutator_kernels_in_degree_four(fixtures_dir):
    as2 = derived_kernel(named_variety("as2"), "plus", 4)
    as3 = derived_kernel(named_variety("as3"), "plus", 4)
    assert as2.dim == 6
    assert as3.dim == 1

    jordan2 = load_identities(fixtures_dir / "jordan-as2.ids", JORDAN)
    jordan3 = load_identities(fixtures_dir / "jordan-as3.ids", JORDAN)
    assert generator_closure(jordan2, JORDAN, 4).dim == 8
    assert generator_closure(jordan3, JORDAN, 4).dim == 4
    assert generated_by(jordan2, as2) is Verdict.STRICTLY_CONTAINED
    assert generated_by(jordan3, as3) is Verdict.STRICTLY_CONTAINED


def test_derived_check_against_an_expected_verdict(fixtures_dir):
    jordan3 = load_identities(fixtures_dir / "jordan-as3.ids", JORDAN)
    record = derived_check(named_variety("as3"), "plus", jordan3, 4, "strictly-contained")
    assert record.passed
    assert record.verdict == "strictly-contained"
    assert record.values["kernel_quotient"][-1] == 1
    assert not derived_check(named_variety("as3"), "plus", jordan3, 4).passed


def test_anticommutator_kernel_in_degree_two_is_commutativity():
    kernel = derived_kernel(named_variety("associative"), "plus", 2)
    assert kernel.rank == 1
    assert kernel.contains(parse("{a,b} - {b,a}", JORDAN))


def test_incomparable_when_a_generator_is_outside_the_kernel():
    kernel = derived_kernel(named_variety("associative"), "minus", 3)
    assert generated_by(lie(ANTI, "[[a,b],c]"), kernel) is Verdict.INCOMPARABLE


@pytest.mark.parametrize("scale", [Fraction(2), Fraction(-1, 3)])
def test_kernels_ignore_the_scale_of_the_product(scale):
    v = named_variety("as3")
    for sign in ("minus", "plus"):
        assert derived_kernel(v, sign, 4, scale).equals(derived_kernel(v, sign, 4))


def test_compare_spaces_directly():
    closure = generator_closure(lie(ANTI), LIE, 3)
    kernel = derived_kernel(named_variety("associative"), "minus", 3)
    assert compare_spaces(closure, kernel) is Verdict.STRICTLY_CONTAINED
    assert compare_spaces(kernel, kernel) is Verdict.EQUAL


def test_generator_checks():
    with pytest.raises(InputError):
        generator_closure(lie(NILP4), LIE, 3)
    with pytest.raises(InputError):
        generator_closure([parse("{a,b}", JORDAN)], LIE, 3)


def test_expansion_must_land_in_the_target():
    e = ExpansionMap(ExpansionKind.COMMUTATOR)
    with pytest.raises(InputError):
        kernel_of_expansion(LIE, 3, e, named_variety("alternative"))


def test_opposite_of_as3_is_as4():
    record = opposite_check(named_variety("as3"), named_variety("as4"), 3, 4, 3)
    assert record.passed
    assert record.verdict == "coincide"
