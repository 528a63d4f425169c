"""
basis.py — Canonical monomial bases of multilinear components.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from varietas.core.config import get_settings
from varietas.core.errors import BasisError, DegreeCapError, InputError
from varietas.terms import monomials as mono
from varietas.terms.polynomial import Polynomial, standard_names, standardize
from varietas.terms.signature import Signature


def check_degree(n: int, cap: int | None = None):
    cap = get_settings().degree_cap if cap is None else cap
    if n < 1:
        raise InputError(f"degree must be positive, got {n}")
    if n > cap:
        raise DegreeCapError(n, cap)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def expected_size(sig: Signature, n: int) -> int:
    if sig.is_word:
        return factorial(n)
    return catalan(n - 1) * factorial(n) * len(sig.ops) ** (n - 1)


@dataclass(frozen=True)
class MultilinearBasis:
    sig: Signature
    degree: int
    monomials: tuple
    index: dict = field(compare=False, repr=False)

    @property
    def variables(self) -> tuple:
        return standard_names(self.degree)

    def __len__(self) -> int:
        return len(self.monomials)

    def vector(self, p: Polynomial) -> dict:
        """Sparse coordinates of p (standardized to a, b, c, ...) in this basis."""
        if p.sig != self.sig:
            raise InputError("polynomial is over a different signature than the basis")
        if p.is_zero():
            return {}
        if p.degree != self.degree:
            raise InputError(f"degree {p.degree} polynomial against a degree {self.degree} basis")
        q = standardize(p)
        out = {}
        for m, c in q.terms.items():
            try:
                out[self.index[m]] = c
            except KeyError:
                from varietas.terms.printer import format_monomial
                raise BasisError("monomial outside the multilinear basis", format_monomial(m, self.sig)) from None
        return out

    def polynomial(self, vec) -> Polynomial:
        return Polynomial({self.monomials[c]: x for c, x in vec.items()}, self.sig)


@lru_cache(maxsize=None)
def _build(sig: Signature, n: int) -> MultilinearBasis:
    names = standard_names(n)
    if sig.is_word:
        monos = [tuple(mono.letter(x) for x in perm) for perm in permutations(names)]
    else:
        slots = [str(i) for i in range(n)]
        monos = []
        for shape in mono.tree_shapes(n, sig.op_names):
            for perm in permutations(names):
                monos.append(mono.relabel(shape, dict(zip(slots, perm))))
    monos.sort(key=mono.monomial_key)
    return MultilinearBasis(sig, n, tuple(monos), {m: i for i, m in enumerate(monos)})


def multilinear_basis(sig: Signature, n: int, cap: int | None = None) -> MultilinearBasis:
    """Every multilinear monomial of degree n over a, b, c, ... in canonical order."""
    check_degree(n, cap)
    if sig.derivations or sig.atoms:
        raise InputError("multilinear bases are built over plain letters only")
    return _build(sig, n)
