"""
symmetric.py — Orbit spans of identities under relabeling of variables.
"""

from dataclasses import dataclass
from itertools import permutations

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.basis import multilinear_basis
from varietas.engine.consequences import IdentitySpace
from varietas.terms import monomials as mono
from varietas.terms.polynomial import Polynomial, standardize

logger = get_logger()


@dataclass(frozen=True)
class OrbitDecomposition:
    columns: int
    orbit_dims: tuple
    total_rank: int

    @property
    def independent(self) -> bool:
        return sum(self.orbit_dims) == self.total_rank

    @property
    def spans_component(self) -> bool:
        return self.total_rank == self.columns

    @property
    def direct_sum(self) -> bool:
        """The orbit spans are independent and together fill the component."""
        return self.independent and self.spans_component

    def to_dict(self) -> dict:
        return {
            "columns": self.columns,
            "orbit_dims": list(self.orbit_dims),
            "total_rank": self.total_rank,
            "direct_sum": self.direct_sum,
        }


def orbit(p: Polynomial) -> list[Polynomial]:
    q = standardize(p)
    names = q.variables
    return [
        q.map_monomials(lambda m, s=dict(zip(names, perm)): mono.relabel(m, s))
        for perm in permutations(names)
    ]


def orbit_span(p: Polynomial) -> IdentitySpace:
    basis = multilinear_basis(p.sig, p.degree)
    return IdentitySpace.from_polynomials(basis, orbit(p))


def s3_decomposition(ids) -> OrbitDecomposition:
    """Orbit-span dimensions of identities of one degree and whether they decompose the component."""
    ids = list(ids)
    if not ids:
        raise InputError("no identities to decompose")
    sig, n = ids[0].sig, ids[0].degree
    if any(f.sig != sig or f.degree != n for f in ids):
        raise InputError("identities must share one signature and one degree")
    spans = [orbit_span(f) for f in ids]
    basis = spans[0].basis
    combined = IdentitySpace.from_polynomials(basis, [q for s in spans for q in s.polynomials()])
    result = OrbitDecomposition(len(basis), tuple(s.rank for s in spans), combined.rank)
    logger.info("orbit_decomposition", degree=n, **result.to_dict())
    return result
