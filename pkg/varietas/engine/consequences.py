"""
consequences.py — Degree-by-degree consequence closure of a variety.

The degree-k component of the T-ideal generated by a set of multilinear
identities is spanned by
  - every S_k relabeling of the defining identities of degree k, and
  - the one-step lifts of a basis of the degree-(k-1) component, pushed
    through the coset representatives of S_{k-1} in S_k.
A one-step lift of f with the new variable x multiplies by x on either side
or replaces one variable y by a product of y and x (both orders, every
operation). Only the independent generators of each degree are lifted.

In the associative-word ambient the component can also be written down
directly as every bordered placement u * f(w1, ..., wm) * v; `method="direct"`
builds it that way.
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional

from varietas.core.config import get_settings
from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.basis import MultilinearBasis, check_degree, multilinear_basis
from varietas.engine.presentation import VarietyPresentation
from varietas.linalg.echelon import EchelonBasis
from varietas.linalg.rational import RrefResult, rowspace_contains, rowspace_contains_space, rowspace_equal
from varietas.terms import monomials as mono
from varietas.terms.monomials import Node
from varietas.terms.polynomial import Polynomial, integral_form, standard_names, standardize

logger = get_logger()


# ── Identity spaces ──────────────────────────────────────────────────────────

@dataclass(frozen=True)
class IdentitySpace:
    """A subspace of one multilinear component, kept in reduced echelon form."""
    basis: MultilinearBasis
    space: RrefResult

    def __post_init__(self):
        if self.space.cols != len(self.basis):
            raise InputError(f"space has {self.space.cols} columns, basis has {len(self.basis)}")

    @property
    def sig(self):
        return self.basis.sig

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def rank(self) -> int:
        return self.space.rank

    @property
    def dim(self) -> int:
        """Dimension of the quotient: basis size minus rank."""
        return len(self.basis) - self.space.rank

    def contains(self, p: Polynomial) -> bool:
        return rowspace_contains(self.space, self.basis.vector(p))

    def polynomials(self) -> list[Polynomial]:
        return [self.basis.polynomial(r) for r in self.space.row_vectors()]

    def equals(self, other: "IdentitySpace") -> bool:
        return rowspace_equal(self.space, other.space)

    def contains_space(self, other: "IdentitySpace") -> bool:
        return rowspace_contains_space(self.space, other.space)

    def is_sn_stable(self) -> bool:
        """Checked on adjacent transpositions, which generate S_n."""
        names = self.basis.variables
        swaps = [{names[i]: names[i + 1], names[i + 1]: names[i]} for i in range(len(names) - 1)]
        for p in self.polynomials():
            for swap in swaps:
                q = p.map_monomials(lambda m, s=swap: mono.relabel(m, s))
                if not self.contains(q):
                    return False
        return True

    @classmethod
    def from_polynomials(cls, basis: MultilinearBasis, polys: Iterable[Polynomial]) -> "IdentitySpace":
        from varietas.linalg.echelon import integer_vector
        echelon = EchelonBasis(len(basis))
        for p in polys:
            echelon.add(integer_vector(basis.vector(p)))
        return cls(basis, echelon.to_rref())


# ── Generation helpers ───────────────────────────────────────────────────────

def _integral_terms(f: Polynomial) -> dict:
    g = integral_form(standardize(f))
    return {m: int(c) for m, c in g.terms.items()}


def _relabel_terms(g: dict, mapping: dict) -> dict:
    return {mono.relabel(m, mapping): c for m, c in g.items()}


def _lifts(g: dict, names: tuple, new: str, sig) -> Iterator[dict]:
    x = mono.letter(new)
    if sig.is_word:
        w = (x,)
        yield {w + m: c for m, c in g.items()}
        yield {m + w: c for m, c in g.items()}
        for y in names:
            ly = mono.letter(y)
            yield {mono.graft(m, y, (ly, x)): c for m, c in g.items()}
            yield {mono.graft(m, y, (x, ly)): c for m, c in g.items()}
        return
    for op in sig.op_names:
        yield {Node(op, x, m): c for m, c in g.items()}
        yield {Node(op, m, x): c for m, c in g.items()}
        for y in names:
            ly = mono.letter(y)
            yield {mono.graft(m, y, Node(op, ly, x)): c for m, c in g.items()}
            yield {mono.graft(m, y, Node(op, x, ly)): c for m, c in g.items()}


def _lift_batch(g: dict, names: tuple, sig) -> list[dict]:
    """All one-step lifts of g and their images under the coset representatives."""
    new = standard_names(len(names) + 1)[-1]
    swaps = [{y: new, new: y} for y in names]
    out = []
    for h in _lifts(g, names, new, sig):
        out.append(h)
        for s in swaps:
            out.append(_relabel_terms(h, s))
    return out


def _relabelings(f: Polynomial, names: tuple) -> Iterator[dict]:
    g = _integral_terms(f)
    for perm in permutations(names):
        yield _relabel_terms(g, dict(zip(names, perm)))


class _DegreeBuilder:
    def __init__(self, basis: MultilinearBasis, track: bool):
        self.basis = basis
        self.echelon = EchelonBasis(len(basis), track=track)
        self.track = track
        self.seen: set = set()
        self.accepted: list[dict] = []
        self.witnesses: dict[int, dict] = {}

    def offer(self, g: dict):
        if not g or self.echelon.full:
            return
        key = frozenset(g.items())
        if key in self.seen:
            return
        self.seen.add(key)
        index = self.echelon.offered
        if self.echelon.add({self.basis.index[m]: c for m, c in g.items()}):
            self.accepted.append(g)
            if self.track:
                self.witnesses[index] = g


# ── Iterative closure ────────────────────────────────────────────────────────

class ConsequenceClosure:
    """Consequence spaces of one variety, built and kept degree by degree."""

    def __init__(self, v: VarietyPresentation, certificates: bool = False):
        if v.sig.derivations or v.sig.atoms:
            raise InputError("consequence closure runs over plain letters only")
        self.v = v
        self.certificates = certificates
        self._lock = threading.Lock()
        self._spaces: dict[int, IdentitySpace] = {}
        self._generators: dict[int, list[dict]] = {}
        self._witnesses: dict[int, dict[int, dict]] = {}
        self._echelons: dict[int, EchelonBasis] = {}

    def space(self, n: int, threads: int = 1) -> IdentitySpace:
        check_degree(n)
        with self._lock:
            for k in range(1, n + 1):
                if k not in self._spaces:
                    self._close_degree(k, threads)
            return self._spaces[n]

    def express(self, p: Polynomial, threads: int = 1) -> Optional[list[tuple]]:
        """p as a combination of independent generated consequences, or None."""
        if not self.certificates:
            raise InputError("certificates were not requested for this closure")
        space = self.space(p.degree, threads)
        vec = space.basis.vector(p)
        from varietas.linalg.echelon import integer_vector
        ivec = integer_vector(vec)
        if not ivec:
            return []
        scale = next(iter(vec.values())) / ivec[next(iter(vec))]
        combo = self._echelons[p.degree].express(ivec)
        if combo is None:
            return None
        witnesses = self._witnesses[p.degree]
        return [
            (scale * c, Polynomial(witnesses[k], space.sig))
            for k, c in sorted(combo.items())
        ]

    def _close_degree(self, k: int, threads: int):
        t0 = time.monotonic()
        sig = self.v.sig
        basis = multilinear_basis(sig, k)
        names = standard_names(k)
        builder = _DegreeBuilder(basis, self.certificates)

        for f in self.v.identities:
            if f.degree == k:
                for g in _relabelings(f, names):
                    builder.offer(g)

        previous = self._generators.get(k - 1, [])
        if previous:
            lower = standard_names(k - 1)
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    batches = pool.map(lambda g: _lift_batch(g, lower, sig), previous)
                    for batch in batches:
                        for h in batch:
                            builder.offer(h)
            else:
                for g in previous:
                    for h in _lift_batch(g, lower, sig):
                        builder.offer(h)
                    if builder.echelon.full:
                        break

        self._generators[k] = builder.accepted
        self._witnesses[k] = builder.witnesses
        self._echelons[k] = builder.echelon
        self._spaces[k] = IdentitySpace(basis, builder.echelon.to_rref())
        logger.info(
            "consequence_degree_closed",
            variety=self.v.name,
            degree=k,
            columns=len(basis),
            rank=builder.echelon.rank,
            offered=builder.echelon.offered,
            elapsed_ms=round((time.monotonic() - t0) * 1000, 1),
        )


@lru_cache(maxsize=64)
def closure_for(v: VarietyPresentation, certificates: bool = False) -> ConsequenceClosure:
    return ConsequenceClosure(v, certificates)


# ── Direct word-ambient form ─────────────────────────────────────────────────

def _placements(f: Polynomial, names: tuple) -> Iterator[dict]:
    g = _integral_terms(f)
    m = f.degree
    slots = standard_names(m)
    n = len(names)
    for perm in permutations(names):
        letters = tuple(mono.letter(x) for x in perm)
        for p in range(n - m + 1):
            for s in range(n - m - p + 1):
                u, middle, v = letters[:p], letters[p:n - s], letters[n - s:]
                for cuts in combinations(range(1, len(middle)), m - 1):
                    bounds = (0,) + cuts + (len(middle),)
                    blocks = {
                        slots[i]: middle[bounds[i]:bounds[i + 1]] for i in range(m)
                    }
                    yield {
                        u + tuple(x for y in w for x in blocks[y.var]) + v: c
                        for w, c in g.items()
                    }


def direct_consequence_space(v: VarietyPresentation, n: int) -> IdentitySpace:
    if not v.sig.is_word:
        raise InputError("the direct form needs the associative-word ambient")
    basis = multilinear_basis(v.sig, n)
    names = standard_names(n)
    builder = _DegreeBuilder(basis, False)
    for f in v.identities:
        if f.degree <= n:
            for g in _placements(f, names):
                builder.offer(g)
    return IdentitySpace(basis, builder.echelon.to_rref())


# ── Public operations ────────────────────────────────────────────────────────

def consequence_space(
    v: VarietyPresentation,
    n: int,
    method: str = "iterative",
    threads: int | None = None,
) -> IdentitySpace:
    """Degree-n multilinear component of the T-ideal generated by v's identities."""
    check_degree(n)
    if method == "direct":
        return direct_consequence_space(v, n)
    if method != "iterative":
        raise InputError(f"unknown closure method {method!r}")
    threads = get_settings().threads if threads is None else threads
    return closure_for(v).space(n, max(1, threads))


def dim_multilinear(v: VarietyPresentation, n: int) -> int:
    return consequence_space(v, n).dim


def dimensions(v: VarietyPresentation, max_degree: int) -> list[int]:
    return [dim_multilinear(v, n) for n in range(1, max_degree + 1)]


@dataclass(frozen=True)
class Membership:
    holds: bool
    certificate: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


def identity_holds(
    v: VarietyPresentation,
    candidate: Polynomial,
    certificate: bool = False,
) -> Membership:
    """Whether candidate lies in the consequence space of v at its own degree."""
    if candidate.sig != v.sig:
        raise InputError("candidate is over a different signature than the variety")
    if candidate.is_zero():
        return Membership(True, () if certificate else None)
    check_degree(candidate.degree)
    if not certificate:
        return Membership(consequence_space(v, candidate.degree).contains(candidate))
    combo = closure_for(v, True).express(candidate, get_settings().threads)
    if combo is None:
        return Membership(False)
    return Membership(True, tuple(combo))
