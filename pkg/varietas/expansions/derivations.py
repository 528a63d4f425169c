"""
derivations.py — Identity checks in differential associative algebras.

The free differential algebra of a variety is, as an algebra, the free
algebra of the variety on the letters a, a', a'', ... so an expanded
identity splits by derivation multidegree (the order carried by each base
variable). Inside one component every base variable has a fixed order, and
dropping the marks is a relabeling into plain letters.
"""

from dataclasses import dataclass

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.consequences import identity_holds
from varietas.engine.presentation import VarietyPresentation
from varietas.expansions.maps import ExpansionKind, ExpansionMap, expand
from varietas.terms import monomials as mono
from varietas.terms.monomials import Letter
from varietas.terms.polynomial import Polynomial

logger = get_logger()


def multidegree(w) -> tuple:
    """(variable, order) pairs sorted by variable."""
    return tuple(sorted((x.var, x.order) for x in w))


def split_by_multidegree(p: Polynomial) -> dict:
    parts: dict = {}
    for w, c in p.terms.items():
        parts.setdefault(multidegree(w), {})[w] = c
    return {k: Polynomial(v, p.sig) for k, v in sorted(parts.items())}


def strip_orders(p: Polynomial, sig) -> Polynomial:
    return Polynomial(
        {tuple(Letter(x.var, 0, None) for x in w): c for w, c in p.terms.items()},
        sig,
    )


def format_multidegree(key: tuple) -> str:
    return ",".join(f"{var}{mono.MARK * order}" if order else var for var, order in key)


@dataclass(frozen=True)
class DerivationCheck:
    holds: bool
    components: tuple      # (multidegree, holds) per nonzero component
    failing: tuple         # multidegrees of failing components

    def __bool__(self) -> bool:
        return self.holds


def diff_identity_holds(v: VarietyPresentation, p: Polynomial, max_order: int | None = None) -> DerivationCheck:
    if not v.sig.is_word:
        raise InputError("derivation checks need an associative-word variety")
    e = ExpansionMap(ExpansionKind.DERIVATION)
    image = expand(e, p)
    bound = max(p.degree - 1, 0) if max_order is None else max_order
    # bound the expansion term by term; cancellation may hide high orders
    top = max(
        (mono.max_order(w) for m in p.terms for w in expand(e, Polynomial.monomial(m, p.sig)).terms),
        default=0,
    )
    if top > bound:
        raise InputError(f"derivation order {top} exceeds the bound {bound}")

    results = []
    for key, part in split_by_multidegree(image).items():
        plain = strip_orders(part, v.sig)
        results.append((key, bool(identity_holds(v, plain))))
    failing = tuple(format_multidegree(k) for k, ok in results if not ok)
    check = DerivationCheck(not failing, tuple((format_multidegree(k), ok) for k, ok in results), failing)
    logger.info(
        "derivation_checked",
        variety=v.name,
        degree=p.degree,
        components=len(results),
        failing=list(failing),
    )
    return check
