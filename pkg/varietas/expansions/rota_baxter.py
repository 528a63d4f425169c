"""
rota_baxter.py — Weight-zero Rota-Baxter normal forms and identity checks.

Operated words are words whose letters may be atoms R(w). A word is normal
when no two atoms are adjacent at any nesting level. Normalization rewrites
R(u)R(v) -> R(R(u)v) + R(uR(v)), innermost atoms first, then left to right.

To decide whether an expanded identity holds in the free Rota-Baxter algebra
over a variety v, every operated word with the identity's variables and
R-weight is enumerated (normal or not). At every nesting level of every such
word, each factorization u w1 .. wm v of the level's letters yields one
instance of each of v's identities; normalizing the instances spans the
relation space among normal words.
"""

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.presentation import VarietyPresentation
from varietas.expansions.maps import ExpansionKind, ExpansionMap, expand
from varietas.linalg.echelon import EchelonBasis, integer_vector
from varietas.terms import monomials as mono
from varietas.terms.monomials import Letter
from varietas.terms.polynomial import Polynomial, integral_form, standard_names, standardize

logger = get_logger()

MAX_RB_DEGREE = 3


# ── Normal forms ─────────────────────────────────────────────────────────────

def is_normal(w) -> bool:
    for i, x in enumerate(w):
        if x.atom is not None:
            if i and w[i - 1].atom is not None:
                return False
            if not is_normal(x.atom):
                return False
    return True


def _accumulate(out: dict, items, c):
    for w, x in items:
        y = out.get(w, 0) + c * x
        if y:
            out[w] = y
        else:
            out.pop(w, None)


@lru_cache(maxsize=None)
def _append(word: tuple, x: Letter) -> tuple:
    """word * x normalized, for a normal word and a normal letter."""
    if not (word and word[-1].atom is not None and x.atom is not None):
        return ((word + (x,), 1),)
    u, v = word[-1].atom, x.atom
    out: dict = {}
    for inner in ((mono.atom(u),) + v, u + (mono.atom(v),)):
        for w, c in normalize_word(inner):
            _accumulate(out, _append(word[:-1], mono.atom(w)), c)
    return tuple(out.items())


@lru_cache(maxsize=None)
def normalize_word(w: tuple) -> tuple:
    """Normal form of one operated word as (word, coefficient) pairs."""
    result: dict = {(): 1}
    for x in w:
        if x.atom is None:
            letters = ((x, 1),)
        else:
            letters = tuple((mono.atom(v), c) for v, c in normalize_word(x.atom))
        nxt: dict = {}
        for word, c in result.items():
            for letter, c2 in letters:
                _accumulate(nxt, _append(word, letter), c * c2)
        result = nxt
    return tuple(result.items())


def rb_normalize(p: Polynomial) -> Polynomial:
    if not p.sig.is_word:
        raise InputError("Rota-Baxter normalization works on operated words")
    out: dict = {}
    for w, c in p.terms.items():
        _accumulate(out, normalize_word(w), c)
    return Polynomial(out, p.sig)


# ── Operated word universe ───────────────────────────────────────────────────

@lru_cache(maxsize=None)
def operated_words(variables: frozenset, weight: int) -> tuple:
    """Every operated word using each variable once with exactly `weight` atoms."""
    if not variables:
        return ((),) if weight == 0 else ()
    out = []
    names = sorted(variables)
    for size in range(1, len(names) + 1):
        for head in combinations(names, size):
            rest = variables - set(head)
            for w_head in range(0, weight + 1):
                for letter in _letters(frozenset(head), w_head):
                    for tail in operated_words(rest, weight - w_head):
                        out.append((letter,) + tail)
    return tuple(out)


def _letters(variables: frozenset, weight: int):
    if weight == 0:
        if len(variables) == 1:
            yield mono.letter(next(iter(variables)))
        return
    for inner in operated_words(variables, weight - 1):
        yield mono.atom(inner)


def _levels(w: tuple, rebuild):
    """(letters of a level, function putting a new level back) for every nesting level."""
    yield w, rebuild
    for i, x in enumerate(w):
        if x.atom is not None:
            def inner_rebuild(new, i=i):
                return rebuild(w[:i] + (mono.atom(new),) + w[i + 1:])
            yield from _levels(x.atom, inner_rebuild)


def _instances(w: tuple, f: dict, m: int):
    slots = standard_names(m)
    for level, rebuild in _levels(w, lambda new: new):
        n = len(level)
        for p in range(n - m + 1):
            for s in range(n - m - p + 1):
                u, middle, v = level[:p], level[p:n - s], level[n - s:]
                for cuts in combinations(range(1, len(middle)), m - 1):
                    bounds = (0,) + cuts + (len(middle),)
                    blocks = {slots[i]: middle[bounds[i]:bounds[i + 1]] for i in range(m)}
                    yield {
                        rebuild(u + tuple(x for y in word for x in blocks[y.var]) + v): c
                        for word, c in f.items()
                    }


# ── Checks ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RotaBaxterCheck:
    holds: bool
    normal_form: Polynomial
    universe: int
    relations: int

    def __bool__(self) -> bool:
        return self.holds


def rb_identity_holds(v: VarietyPresentation, p: Polynomial, e: ExpansionMap) -> RotaBaxterCheck:
    if e.kind not in (ExpansionKind.ROTA_BAXTER, ExpansionKind.STAR):
        raise InputError("Rota-Baxter checks need the rota_baxter or star expansion")
    if not v.sig.is_word:
        raise InputError("Rota-Baxter checks need an associative-word variety")
    if p.degree > MAX_RB_DEGREE:
        raise InputError(f"Rota-Baxter checks are limited to degree {MAX_RB_DEGREE}")
    t0 = time.monotonic()
    target = rb_normalize(expand(e, standardize(p)))
    n = p.degree
    names = frozenset(standard_names(n))
    universe = operated_words(names, n - 1)
    normal = [w for w in universe if is_normal(w)]
    index = {w: i for i, w in enumerate(normal)}

    echelon = EchelonBasis(len(normal))
    for f in v.identities:
        terms = {w: int(c) for w, c in integral_form(standardize(f)).terms.items()}
        for w in universe:
            for inst in _instances(w, terms, f.degree):
                vec: dict = {}
                for word, c in inst.items():
                    for nw, x in normalize_word(word):
                        _accumulate(vec, ((index[nw], x),), c)
                echelon.add(integer_vector(vec))

    goal = integer_vector({index[w]: c for w, c in target.terms.items()})
    holds = echelon.contains(goal)
    logger.info(
        "rota_baxter_checked",
        variety=v.name,
        degree=n,
        universe=len(normal),
        relations=echelon.rank,
        holds=holds,
        elapsed_ms=round((time.monotonic() - t0) * 1000, 1),
    )
    return RotaBaxterCheck(holds, target, len(normal), echelon.rank)
