"""
kernel.py — Identities of derived structures and generator comparisons.

kernel_of_expansion finds every degree-n polynomial in the source signature
whose image under an expansion map is a consequence of the target variety.
The map is row-reduced as one augmented system [residual | unit] with the
target columns first; rows whose pivot lands in the unit block are exactly
the kernel, already in reduced echelon form.
"""

import time
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.basis import check_degree, multilinear_basis
from varietas.engine.consequences import IdentitySpace, consequence_space
from varietas.engine.presentation import VarietyPresentation
from varietas.linalg.echelon import EchelonBasis, integer_vector
from varietas.linalg.rational import RrefResult, reduce_vector
from varietas.terms.polynomial import Polynomial
from varietas.terms.signature import Signature

logger = get_logger()


class Verdict(str, Enum):
    EQUAL = "equal"
    STRICTLY_CONTAINED = "strictly-contained"
    INCOMPARABLE = "incomparable"


def kernel_of_expansion(
    src_sig: Signature,
    n: int,
    expand: Callable[[Polynomial], Polynomial],
    target: VarietyPresentation,
) -> IdentitySpace:
    check_degree(n)
    t0 = time.monotonic()
    src = multilinear_basis(src_sig, n)
    tgt = consequence_space(target, n)
    width = len(tgt.basis)
    echelon = EchelonBasis(width + len(src))

    for j, m in enumerate(src.monomials):
        image = expand(Polynomial.monomial(m, src_sig))
        if image.sig != target.sig:
            raise InputError("expansion lands outside the target signature")
        if not image.is_zero() and image.degree != n:
            raise InputError(f"expansion changed the degree from {n} to {image.degree}")
        residual = reduce_vector(tgt.space, tgt.basis.vector(image))
        residual[width + j] = Fraction(1)
        echelon.add(integer_vector(residual))

    full = echelon.to_rref()
    rows = [
        {c - width: x for c, x in r.items()}
        for p, r in full.pivot_rows.items()
        if p >= width
    ]
    kernel = IdentitySpace(src, RrefResult.from_sparse_rows(len(src), rows, source_rows=len(src)))
    logger.info(
        "kernel_computed",
        target=target.name,
        degree=n,
        columns=len(src),
        kernel_rank=kernel.rank,
        elapsed_ms=round((time.monotonic() - t0) * 1000, 1),
    )
    return kernel


def generator_closure(candidates: Iterable[Polynomial], sig: Signature, n: int) -> IdentitySpace:
    candidates = [c for c in candidates if not c.is_zero()]
    for c in candidates:
        if c.sig != sig:
            raise InputError("generator is over a different signature")
        if c.degree > n:
            raise InputError(f"generator of degree {c.degree} above the comparison degree {n}")
    return consequence_space(VarietyPresentation("generators", sig, tuple(candidates)), n)


def compare_spaces(closure: IdentitySpace, kernel: IdentitySpace) -> Verdict:
    if closure.equals(kernel):
        return Verdict.EQUAL
    if kernel.contains_space(closure):
        return Verdict.STRICTLY_CONTAINED
    return Verdict.INCOMPARABLE


def generated_by(candidates: Iterable[Polynomial], kernel: IdentitySpace) -> Verdict:
    """Compare the consequence closure of candidates with kernel at the kernel's degree."""
    closure = generator_closure(candidates, kernel.sig, kernel.degree)
    verdict = compare_spaces(closure, kernel)
    logger.info(
        "generated_by_compared",
        degree=kernel.degree,
        closure_rank=closure.rank,
        kernel_rank=kernel.rank,
        verdict=verdict.value,
    )
    return verdict
