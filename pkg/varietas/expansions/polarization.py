"""
polarization.py — Splitting one product into a bracket and a brace.

x*y = k_alt [x,y] + k_sym {x,y}. After substitution every [x,y] is put
in canonical child order with a sign flip and every {x,y} without one, so
relation spaces live in the quotient where [,] is antisymmetric and {,} is
commutative. The relation space of a set of identities is the S_n closure of
their canonical images at each degree.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.basis import multilinear_basis
from varietas.engine.consequences import IdentitySpace, consequence_space
from varietas.engine.presentation import VarietyPresentation, to_tree_presentation
from varietas.expansions.maps import ExpansionKind, ExpansionMap, expand
from varietas.terms import monomials as mono
from varietas.terms.monomials import Letter, Node
from varietas.terms.parser import parse
from varietas.terms.polynomial import Polynomial, standard_names, standardize
from varietas.terms.signature import MAGMA, POLAR, WORDS

logger = get_logger()

# sign picked up when the children of a node are swapped
_SWAP_SIGN = {"lie": -1, "jordan": 1}


# ── Canonical bracket form ───────────────────────────────────────────────────

def _canonical_tree(t) -> tuple:
    if isinstance(t, Letter):
        return t, 1
    left, s1 = _canonical_tree(t.left)
    right, s2 = _canonical_tree(t.right)
    sign = s1 * s2
    if mono.monomial_key(right) < mono.monomial_key(left):
        left, right = right, left
        sign *= _SWAP_SIGN[t.op]
    return Node(t.op, left, right), sign


def canonical_bracket(p: Polynomial) -> Polynomial:
    """Rewrite p using only canonically ordered [,] and {,} nodes."""
    if p.sig != POLAR:
        raise InputError("canonical bracket form needs the [,] {,} signature")
    out: dict = {}
    for m, c in p.terms.items():
        t, sign = _canonical_tree(m)
        out[t] = out.get(t, 0) + sign * c
    return Polynomial(out, POLAR)


def polarized_space(polys: Iterable[Polynomial], n: int) -> IdentitySpace:
    """S_n closure of the canonical forms of the degree-n members of polys."""
    basis = multilinear_basis(POLAR, n)
    names = standard_names(n)
    closure = []
    for p in polys:
        if p.is_zero() or p.degree != n:
            continue
        q = standardize(canonical_bracket(p))
        for perm in permutations(names):
            mapping = dict(zip(names, perm))
            closure.append(canonical_bracket(q.map_monomials(lambda m, s=mapping: mono.relabel(m, s))))
    return IdentitySpace.from_polynomials(basis, closure)


# ── Polarization ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class PolarizationResult:
    source: str
    kappa_sym: Fraction
    kappa_alt: Fraction
    spaces: tuple           # IdentitySpace per degree, ascending

    @property
    def degrees(self) -> tuple:
        return tuple(s.degree for s in self.spaces)

    @property
    def identities(self) -> tuple:
        """Reduced echelon rows of every degree."""
        return tuple(p for s in self.spaces for p in s.polynomials())

    def space(self, n: int) -> IdentitySpace:
        for s in self.spaces:
            if s.degree == n:
                return s
        raise InputError(f"no polarized identities of degree {n}")

    def matches(self, polys: Iterable[Polynomial]) -> bool:
        """Whether polys span the same relation space, degree by degree."""
        polys = list(polys)
        degrees = {p.degree for p in polys if not p.is_zero()}
        if degrees != set(self.degrees):
            return False
        return all(s.equals(polarized_space(polys, s.degree)) for s in self.spaces)

    def to_dict(self) -> dict:
        from varietas.terms.printer import print_canonical
        return {
            "source": self.source,
            "kappa_sym": str(self.kappa_sym),
            "kappa_alt": str(self.kappa_alt),
            "identities": [print_canonical(p) for p in self.identities],
        }


def _tree_identities(source) -> tuple:
    if isinstance(source, VarietyPresentation):
        v = source
    else:
        polys = [source] if isinstance(source, Polynomial) else list(source)
        if not polys:
            raise InputError("nothing to polarize")
        v = VarietyPresentation("input", polys[0].sig, polys)
    if v.sig == WORDS:
        v = to_tree_presentation(v)
    if v.sig != MAGMA:
        raise InputError("polarization needs a single-product variety")
    return v.name, v.identities


def polarize(
    source,
    convention: str = "paper",
    kappa_sym=None,
    kappa_alt=None,
) -> PolarizationResult:
    """
    Polarize identities given as a Polynomial, a list of them or a variety.
    Word-ambient input is first rewritten as nonassociative identities plus
    associativity. Explicit kappas override the named convention.
    """
    e = ExpansionMap.with_convention(ExpansionKind.POLARIZATION, convention)
    if kappa_sym is not None or kappa_alt is not None:
        e = ExpansionMap(
            ExpansionKind.POLARIZATION,
            kappa_sym=e.kappa_sym if kappa_sym is None else kappa_sym,
            kappa_alt=e.kappa_alt if kappa_alt is None else kappa_alt,
        )
    t0 = time.monotonic()
    name, identities = _tree_identities(source)
    images = [expand(e, f) for f in identities]
    spaces = tuple(polarized_space(images, n) for n in sorted({f.degree for f in identities}))
    result = PolarizationResult(name, e.kappa_sym, e.kappa_alt, spaces)
    logger.info(
        "polarized",
        source=name,
        kappa_sym=str(e.kappa_sym),
        kappa_alt=str(e.kappa_alt),
        ranks=[s.rank for s in spaces],
        elapsed_ms=round((time.monotonic() - t0) * 1000, 1),
    )
    return result


def parse_polarized(texts: Sequence[str]) -> list[Polynomial]:
    return [parse(t, POLAR) for t in texts]


def depolarizes_into(result: PolarizationResult, v: VarietyPresentation) -> bool:
    """
    Whether every polarized identity, mapped back to words with the inverse
    substitution, is a consequence of the word-ambient variety v.
    """
    if not v.sig.is_word:
        raise InputError("depolarization lands in the associative-word ambient")
    back = ExpansionMap(
        ExpansionKind.DEPOLARIZATION, kappa_sym=result.kappa_sym, kappa_alt=result.kappa_alt,
    )
    for s in result.spaces:
        target = consequence_space(v, s.degree)
        for p in s.polynomials():
            q = expand(back, p).with_sig(v.sig)
            if not q.is_zero() and not target.contains(q):
                return False
    return True
