import pytest

from varietas.core.errors import DegreeCapError, InputError
from varietas.engine.consequences import (
    ConsequenceClosure, IdentitySpace, consequence_space, dimensions, identity_holds,
)
from varietas.engine.basis import multilinear_basis
from varietas.engine.presentation import named_variety, presentation, to_tree_presentation
from varietas.engine.symmetric import orbit, orbit_span, s3_decomposition
from varietas.terms.parser import parse
from varietas.terms.polynomial import linear_combination, standardize
from varietas.terms.signature import LIE, MAGMA, WORDS

AS_TYPES = ("as1", "as2", "as3", "as4")


# ── Dimensions ───────────────────────────────────────────────────────────────

def test_as3_dimensions():
    assert dimensions(named_variety("as3"), 5) == [1, 2, 4, 1, 1]


def test_associative_dimensions():
    assert dimensions(named_variety("associative"), 4) == [1, 2, 6, 24]


def test_free_lie_dimensions():
    lie = presentation("lie", LIE, "[a,b] + [b,a]", "[[a,b],c] + [[b,c],a] + [[c,a],b]")
    assert dimensions(lie, 4) == [1, 1, 2, 6]


@pytest.mark.parametrize("name", AS_TYPES)
def test_direct_and_iterative_agree(name):
    v = named_variety(name)
    for n in (3, 4):
        assert consequence_space(v, n, method="direct").equals(consequence_space(v, n))


@pytest.mark.parametrize("name", AS_TYPES)
def test_word_and_tree_ambients_agree(name):
    v = named_variety(name)
    tree = to_tree_presentation(v)
    assert dimensions(tree, 4) == dimensions(v, 4)


@pytest.mark.parametrize("name", AS_TYPES + ("alternative",))
def test_components_are_sn_stable(name):
    v = named_variety(name)
    for n in (3, 4):
        assert consequence_space(v, n).is_sn_stable()


def test_thread_count_does_not_change_the_space():
    v = named_variety("as2")
    one = ConsequenceClosure(v).space(4, threads=1)
    four = ConsequenceClosure(v).space(4, threads=4)
    assert one.equals(four)
    assert one.space.row_vectors() == four.space.row_vectors()


def test_opposite_ambient_space_is_mirrored():
    from varietas.operads.opposite import opposite
    for n in (3, 4, 5):
        assert consequence_space(opposite(named_variety("as3")), n).equals(
            consequence_space(named_variety("as4"), n)
        )


def test_unknown_method_and_degree_cap():
    v = named_variety("as3")
    with pytest.raises(InputError):
        consequence_space(v, 3, method="guess")
    with pytest.raises(DegreeCapError):
        consequence_space(v, 40)


def test_identity_space_column_check():
    small = IdentitySpace.from_polynomials(multilinear_basis(WORDS, 2), [parse("ab - ba", WORDS)])
    with pytest.raises(InputError):
        IdentitySpace(multilinear_basis(WORDS, 3), small.space)


# ── Membership ───────────────────────────────────────────────────────────────

def test_relabeled_identity_holds():
    v = named_variety("as3")
    assert identity_holds(v, parse("bac + abc - acb - cab", WORDS))
    assert not identity_holds(v, parse("abc - bac", WORDS))


def test_zero_candidate_always_holds():
    from varietas.terms.polynomial import Polynomial
    assert identity_holds(named_variety("as3"), Polynomial.zero(WORDS), certificate=True).certificate == ()


def test_degree_four_consequence_with_certificate():
    v = named_variety("as3")
    candidate = parse("dabc + dbac - dbca - dcba", WORDS)
    result = identity_holds(v, candidate, certificate=True)
    assert result.holds
    rebuilt = linear_combination(result.certificate, WORDS)
    assert rebuilt == standardize(candidate)


def test_tree_ambient_membership():
    alt = named_variety("alternative")
    relabeled = parse("(c*b)*a - c*(b*a) + (b*c)*a - b*(c*a)", MAGMA)
    assert identity_holds(alt, relabeled)
    assert not identity_holds(alt, parse("(a*b)*c - a*(b*c)", MAGMA))


def test_candidate_signature_must_match():
    with pytest.raises(InputError):
        identity_holds(named_variety("as3"), parse("[a,b]", LIE))


# ── Orbit decomposition ──────────────────────────────────────────────────────

def test_orbit_has_every_relabeling():
    f = parse("abc + bac - bca - cba", WORDS)
    assert len(orbit(f)) == 6
    assert orbit_span(f).rank == 2


def test_degree_three_word_component_decomposes():
    ids = [named_variety(name).identities[0] for name in AS_TYPES]
    result = s3_decomposition(ids)
    assert result.orbit_dims == (1, 1, 2, 2)
    assert result.total_rank == result.columns == 6
    assert result.direct_sum


def test_overlapping_orbits_are_not_a_direct_sum():
    ids = [parse("abc + bac - bca - cba", WORDS), parse("abc + acb - cba - cab", WORDS),
           parse("abc + bac - bca - cba", WORDS)]
    assert not s3_decomposition(ids).direct_sum


def test_decomposition_input_checks():
    with pytest.raises(InputError):
        s3_decomposition([])
    with pytest.raises(InputError):
        s3_decomposition([parse("abc - cba", WORDS), parse("ab - ba", WORDS)])
