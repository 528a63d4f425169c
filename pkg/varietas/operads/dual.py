"""
dual.py — Dual identities from the Lie-admissibility of a tensor product.

For a variety P with one binary product and the free magma U on one
product, the commutator algebra of P(a,b,c) ⊗ U(a,b,c) is Lie-admissible
exactly when the cyclic sum

    [[a⊗a, b⊗b], c⊗c] + [[b⊗b, c⊗c], a⊗a] + [[c⊗c, a⊗a], b⊗b]

vanishes, with [x⊗s, y⊗t] = xy⊗st - yx⊗ts. Rewriting each left factor in a
basis of the degree-3 component of P and collecting the right factors per
basis element gives polynomials in U; their S_3 closure is the degree-3
relation space of the dual variety.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from varietas.core.errors import BasisError, InputError
from varietas.core.logging import get_logger
from varietas.engine.basis import multilinear_basis
from varietas.engine.consequences import IdentitySpace, consequence_space
from varietas.engine.presentation import VarietyPresentation, to_tree_presentation
from varietas.engine.symmetric import orbit
from varietas.linalg.echelon import EchelonBasis, integer_vector
from varietas.terms import monomials as mono
from varietas.terms.monomials import Node
from varietas.terms.polynomial import Polynomial
from varietas.terms.printer import format_monomial
from varietas.terms.signature import MAGMA, Signature

logger = get_logger()


@dataclass(frozen=True)
class Degree3Presentation:
    variety: VarietyPresentation
    basis: tuple
    rewrite: Mapping

    def express(self, m) -> dict:
        """Coordinates of a degree-3 monomial over the chosen basis."""
        if m in self.rewrite:
            return self.rewrite[m]
        return {m: Fraction(1)}


def degree3_presentation(v: VarietyPresentation, basis: Optional[Sequence] = None) -> Degree3Presentation:
    """
    Rewrite rules for the degree-3 component of v. Without a basis the
    monomials off the pivot columns are used; a chosen basis must be
    independent modulo the identities and span the quotient.
    """
    if len(v.sig.ops) != 1:
        raise InputError("the Lie-admissibility criterion needs exactly one binary operation")
    space = consequence_space(v, 3)
    monos = space.basis.monomials
    if basis is None:
        pivots = set(space.space.pivot_columns)
        chosen = [m for i, m in enumerate(monos) if i not in pivots]
    else:
        chosen = list(basis)
        for m in chosen:
            if m not in space.basis.index:
                raise BasisError("not a degree-3 multilinear monomial", format_monomial(m, v.sig))

    # Non-basis monomials first, so each becomes a pivot solved in terms of the basis.
    chosen_set = set(chosen)
    order = [m for m in monos if m not in chosen_set] + chosen
    position = {m: i for i, m in enumerate(order)}
    echelon = EchelonBasis(len(order))
    for p in space.polynomials():
        echelon.add(integer_vector({position[m]: c for m, c in p.terms.items()}))
    rref = echelon.to_rref()
    head = len(order) - len(chosen)
    for i, m in enumerate(order):
        pivot = i in rref.pivot_rows
        if i < head and not pivot:
            raise BasisError("monomial is not expressible in the chosen basis", format_monomial(m, v.sig))
        if i >= head and pivot:
            raise BasisError("chosen basis is dependent modulo the identities", format_monomial(m, v.sig))

    rewrite = {}
    for p, row in rref.pivot_rows.items():
        rewrite[order[p]] = {order[c]: -x for c, x in row.items() if c != p}
    return Degree3Presentation(v, tuple(chosen), rewrite)


# ── Tensor arithmetic ────────────────────────────────────────────────────────
# An element is a list of (coeff, left monomial, right tree).

def _mul(x: list, y: list, left_word: bool, op: str, dual_op: str) -> list:
    out = []
    for c1, s1, t1 in x:
        for c2, s2, t2 in y:
            s = s1 + s2 if left_word else Node(op, s1, s2)
            out.append((c1 * c2, s, Node(dual_op, t1, t2)))
    return out


def _bracket(x: list, y: list, *args) -> list:
    return _mul(x, y, *args) + [(-c, s, t) for c, s, t in _mul(y, x, *args)]


def _generator(var: str, left_word: bool) -> list:
    x = mono.letter(var)
    return [(1, (x,) if left_word else x, x)]


def jacobi_sum(v: VarietyPresentation, dual_sig: Signature = MAGMA) -> list:
    word = v.sig.is_word
    args = (word, v.sig.ops[0].name, dual_sig.ops[0].name)
    a, b, c = (_generator(x, word) for x in "abc")
    out = []
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        out.extend(_bracket(_bracket(x, y, *args), z, *args))
    return out


@dataclass(frozen=True)
class DualResult:
    source: str
    basis: tuple
    identities: tuple
    space: IdentitySpace

    def presentation(self, name: str | None = None) -> VarietyPresentation:
        return VarietyPresentation(name or f"dual-{self.source}", self.space.sig, self.identities)


def lie_admissible_dual(p: Degree3Presentation, dual_sig: Signature = MAGMA) -> DualResult:
    collected: dict = {b: {} for b in p.basis}
    for c, s, t in jacobi_sum(p.variety, dual_sig):
        for b, r in p.express(s).items():
            if b not in collected:
                raise BasisError("rewrite leaves the basis", format_monomial(b, p.variety.sig))
            terms = collected[b]
            terms[t] = terms.get(t, 0) + c * r

    polys = [Polynomial(terms, dual_sig) for terms in collected.values()]
    polys = [q for q in polys if not q.is_zero()]
    basis3 = multilinear_basis(dual_sig, 3)
    space = IdentitySpace.from_polynomials(basis3, [o for q in polys for o in orbit(q)])
    identities = tuple(space.polynomials())
    logger.info(
        "dual_computed",
        variety=p.variety.name,
        basis_size=len(p.basis),
        relations=space.rank,
    )
    return DualResult(p.variety.name, p.basis, identities, space)


def dual_of(v: VarietyPresentation, basis=None) -> DualResult:
    return lie_admissible_dual(degree3_presentation(v, basis))


def dual_dual_recovers(v: VarietyPresentation) -> bool:
    """Whether dualizing twice gives back v's degree-3 relations (as a nonassociative presentation)."""
    first = dual_of(v).presentation()
    second = dual_of(first)
    original = consequence_space(to_tree_presentation(v), 3)
    return second.space.equals(original)
