"""
maps.py — Expansion maps between signatures.

Each kind rewrites every product of a source signature as a combination of
products in a target signature, recursively and bilinearly:

  commutator        [x,y]  -> xy - yx
  anticommutator    {x,y}  -> xy + yx
  polarization      x*y    -> k_alt [x,y] + k_sym {x,y}
  depolarization    [x,y]  -> (xy - yx) / (2 k_alt),  {x,y} -> (xy + yx) / (2 k_sym)
  derivation        x>y    -> d(x) y,   x<y  -> x d(y)     (Leibniz rule on words)
  rota_baxter       x>=y   -> R(x) y,   x<=y -> x R(y)
  star              x*y    -> R(x) y + x R(y)

Every product application is additionally multiplied by `scale`.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from varietas.core.errors import InputError
from varietas.terms import monomials as mono
from varietas.terms.monomials import Letter, Node
from varietas.terms.polynomial import Polynomial
from varietas.terms.signature import (
    DENDRIFORM, DIFF_WORDS, JORDAN, LIE, MAGMA, NOVIKOV, POLAR, RB_WORDS, STAR, WORDS, Signature,
)


class ExpansionKind(str, Enum):
    COMMUTATOR = "commutator"
    ANTICOMMUTATOR = "anticommutator"
    POLARIZATION = "polarization"
    DEPOLARIZATION = "depolarization"
    DERIVATION = "derivation"
    ROTA_BAXTER = "rota_baxter"
    STAR = "star"


_SIGNATURES = {
    ExpansionKind.COMMUTATOR: (LIE, WORDS),
    ExpansionKind.ANTICOMMUTATOR: (JORDAN, WORDS),
    ExpansionKind.POLARIZATION: (MAGMA, POLAR),
    ExpansionKind.DEPOLARIZATION: (POLAR, WORDS),
    ExpansionKind.DERIVATION: (NOVIKOV, DIFF_WORDS),
    ExpansionKind.ROTA_BAXTER: (DENDRIFORM, RB_WORDS),
    ExpansionKind.STAR: (STAR, RB_WORDS),
}

# (kappa_sym, kappa_alt) for xy = kappa_alt [x,y] + kappa_sym {x,y}
CONVENTIONS = {
    "paper": (Fraction(-1), Fraction(1)),
    "standard": (Fraction(1, 2), Fraction(1, 2)),
}


@dataclass(frozen=True)
class ExpansionMap:
    kind: ExpansionKind
    scale: Fraction = Fraction(1)
    kappa_sym: Fraction = Fraction(-1)
    kappa_alt: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "kind", ExpansionKind(self.kind))
        for name in ("scale", "kappa_sym", "kappa_alt"):
            value = Fraction(getattr(self, name))
            if not value:
                raise InputError(f"{name} must be nonzero")
            object.__setattr__(self, name, value)

    @classmethod
    def with_convention(cls, kind, convention: str = "paper", scale=1) -> "ExpansionMap":
        try:
            k_sym, k_alt = CONVENTIONS[convention]
        except KeyError:
            raise InputError(f"unknown polarization convention {convention!r}") from None
        return cls(kind, Fraction(scale), k_sym, k_alt)

    @property
    def source(self) -> Signature:
        return _SIGNATURES[self.kind][0]

    @property
    def target(self) -> Signature:
        return _SIGNATURES[self.kind][1]

    def __call__(self, p: Polynomial) -> Polynomial:
        return expand(self, p)


# ── Word helpers ─────────────────────────────────────────────────────────────

def _add(out: dict, m, c):
    y = out.get(m, 0) + c
    if y:
        out[m] = y
    else:
        out.pop(m, None)


def _concat(x: dict, y: dict, k=1) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            _add(out, w1 + w2, k * c1 * c2)
    return out


def derive(x: dict) -> dict:
    """d applied to a combination of words by the Leibniz rule."""
    out: dict = {}
    for w, c in x.items():
        for i, letter in enumerate(w):
            if letter.atom is not None:
                raise InputError("derivations do not act on operator atoms")
            bumped = Letter(letter.var, letter.order + 1, None)
            _add(out, w[:i] + (bumped,) + w[i + 1:], c)
    return out


def wrap(x: dict) -> dict:
    """R applied to a combination of words: one atom letter each."""
    return {(mono.atom(w),): c for w, c in x.items()}


# ── Expansion ────────────────────────────────────────────────────────────────

def _node_image(e: ExpansionMap, op: str, left: dict, right: dict) -> dict:
    k = e.scale
    kind = e.kind
    if kind is ExpansionKind.COMMUTATOR or (kind is ExpansionKind.DEPOLARIZATION and op == "lie"):
        if kind is ExpansionKind.DEPOLARIZATION:
            k = k / (2 * e.kappa_alt)
        out = _concat(left, right, k)
        for w, c in _concat(right, left, k).items():
            _add(out, w, -c)
        return out
    if kind is ExpansionKind.ANTICOMMUTATOR or kind is ExpansionKind.DEPOLARIZATION:
        if kind is ExpansionKind.DEPOLARIZATION:
            k = k / (2 * e.kappa_sym)
        out = _concat(left, right, k)
        for w, c in _concat(right, left, k).items():
            _add(out, w, c)
        return out
    if kind is ExpansionKind.POLARIZATION:
        out: dict = {}
        for t1, c1 in left.items():
            for t2, c2 in right.items():
                _add(out, Node("lie", t1, t2), k * e.kappa_alt * c1 * c2)
                _add(out, Node("jordan", t1, t2), k * e.kappa_sym * c1 * c2)
        return out
    if kind is ExpansionKind.DERIVATION:
        if op == "succ":
            return _concat(derive(left), right, k)
        return _concat(left, derive(right), k)
    if kind is ExpansionKind.ROTA_BAXTER:
        if op == "succeq":
            return _concat(wrap(left), right, k)
        return _concat(left, wrap(right), k)
    # star: the sum of both Rota-Baxter products
    out = _concat(wrap(left), right, k)
    for w, c in _concat(left, wrap(right), k).items():
        _add(out, w, c)
    return out


@lru_cache(maxsize=200_000)
def _expand_tree(e: ExpansionMap, t) -> tuple:
    if isinstance(t, Letter):
        if e.kind is ExpansionKind.POLARIZATION:
            return ((t, Fraction(1)),)
        return (((t,), Fraction(1)),)
    left = dict(_expand_tree(e, t.left))
    right = dict(_expand_tree(e, t.right))
    return tuple(_node_image(e, t.op, left, right).items())


def expand(e: ExpansionMap, p: Polynomial) -> Polynomial:
    """Homomorphic image of p; Rota-Baxter images are left unnormalized."""
    if p.sig != e.source:
        raise InputError(f"{e.kind.value} expansion expects the {e.source.op_names} signature")
    out: dict = {}
    for m, c in p.terms.items():
        for w, x in _expand_tree(e, m):
            _add(out, w, c * x)
    return Polynomial(out, e.target)


def retarget(p: Polynomial, sig: Signature) -> Polynomial:
    """Rename a single-operation tree polynomial onto another single-operation signature."""
    if len(p.sig.ops) != 1 or len(sig.ops) != 1 or p.sig.is_word or sig.is_word:
        raise InputError("retargeting needs two single-operation tree signatures")
    src, dst = p.sig.ops[0].name, sig.ops[0].name

    def rename(t):
        if isinstance(t, Node):
            return Node(dst if t.op == src else t.op, rename(t.left), rename(t.right))
        return t

    return Polynomial({rename(m): c for m, c in p.terms.items()}, sig)
