"""
polynomial.py — Finite rational combinations of multilinear monomials.

A Polynomial is immutable by convention: every operation returns a new one.
Iteration (`items()`) follows the canonical monomial order.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from varietas.core.errors import InputError, NotMultilinearError
from varietas.terms import monomials as mono
from varietas.terms.monomials import Letter, Node
from varietas.terms.signature import Signature

STANDARD_VARIABLES = "abcdefghijklmnopqrstuvwxyz"


class Polynomial:
    __slots__ = ("terms", "sig")

    def __init__(self, terms: Mapping, sig: Signature):
        self.terms = {m: Fraction(c) for m, c in terms.items() if c}
        self.sig = sig

    # ── Constructors ─────────────────────────────────────────────────────────
    @classmethod
    def zero(cls, sig: Signature) -> "Polynomial":
        return cls({}, sig)

    @classmethod
    def monomial(cls, m, sig: Signature, coeff=1) -> "Polynomial":
        return cls({m: coeff}, sig)

    @classmethod
    def variable(cls, var: str, sig: Signature, order: int = 0) -> "Polynomial":
        x = mono.letter(var, order)
        return cls({(x,) if sig.is_word else x: 1}, sig)

    # ── Queries ──────────────────────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        if not self.terms:
            return 0
        return mono.degree(next(iter(self.terms)))

    @property
    def variables(self) -> tuple:
        """Sorted base variables (of the first monomial; multilinear polys share them)."""
        if not self.terms:
            return ()
        return tuple(sorted(mono.variables(next(iter(self.terms)))))

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: mono.monomial_key(kv[0]))

    def monomials(self) -> list:
        return sorted(self.terms, key=mono.monomial_key)

    def coefficient(self, m) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # ── Linear structure ─────────────────────────────────────────────────────
    def _check_sig(self, other: "Polynomial"):
        if self.sig != other.sig:
            raise InputError("polynomials over different signatures")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_sig(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self.sig)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_sig(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Polynomial(out, self.sig)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, self.sig)

    def scale(self, k) -> "Polynomial":
        k = Fraction(k)
        return Polynomial({m: k * c for m, c in self.terms.items()}, self.sig)

    def __rmul__(self, k) -> "Polynomial":
        return self.scale(k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from varietas.terms.printer import format_polynomial
        return f"Polynomial({format_polynomial(self)!r})"

    def map_monomials(self, fn) -> "Polynomial":
        out: dict = {}
        for m, c in self.terms.items():
            k = fn(m)
            out[k] = out.get(k, 0) + c
        return Polynomial(out, self.sig)

    def with_sig(self, sig: Signature) -> "Polynomial":
        return Polynomial(self.terms, sig)


def linear_combination(pairs: Iterable, sig: Signature) -> Polynomial:
    """sum of coeff * poly over (coeff, poly) pairs."""
    out: dict = {}
    for k, p in pairs:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + k * c
    return Polynomial(out, sig)


# ── Multiplication ───────────────────────────────────────────────────────────

def product(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    """Bilinear extension of one operation (concatenation in word ambient)."""
    p._check_sig(q)
    out: dict = {}
    word = p.sig.is_word
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = m1 + m2 if word else Node(op, m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return Polynomial(out, p.sig)


def apply_atom(p: Polynomial) -> Polynomial:
    """R(p) in the word ambient: each word w becomes the one-letter word R(w)."""
    if not p.sig.is_word or not p.sig.atoms:
        raise InputError("operator atoms need an associative-word signature with atoms enabled")
    return Polynomial({(mono.atom(m),): c for m, c in p.terms.items()}, p.sig)


# ── Multilinearity ───────────────────────────────────────────────────────────

def check_multilinear(p: Polynomial) -> Polynomial:
    """Raise NotMultilinearError unless every monomial uses one shared variable set once each."""
    shared = None
    for m in p.terms:
        vs = mono.variables(m)
        if len(vs) != len(set(vs)):
            raise NotMultilinearError(f"a variable repeats in a monomial of degree {len(vs)}")
        if shared is None:
            shared = set(vs)
        elif set(vs) != shared:
            raise NotMultilinearError("monomials use different variable sets")
    return p


# ── Relabeling and substitution ──────────────────────────────────────────────

def permute(p: Polynomial, perm: Mapping[str, str]) -> Polynomial:
    """Relabel variables by a bijection defined on exactly p's variables."""
    vs = set(p.variables)
    if set(perm) != vs or set(perm.values()) != vs:
        raise InputError(
            f"permutation domain {sorted(perm)} does not match the variables {sorted(vs)}"
        )
    return p.map_monomials(lambda m: mono.relabel(m, perm))


def rename(p: Polynomial, mapping: Mapping[str, str]) -> Polynomial:
    """Injective renaming to possibly fresh variables."""
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise InputError("renaming is not injective")
    return p.map_monomials(lambda m: mono.relabel(m, mapping))


def standard_names(n: int) -> tuple:
    if n > len(STANDARD_VARIABLES):
        raise InputError(f"at most {len(STANDARD_VARIABLES)} variables are supported")
    return tuple(STANDARD_VARIABLES[:n])


def standardize(p: Polynomial) -> Polynomial:
    """Rename variables, in sorted order, to a, b, c, ..."""
    vs = p.variables
    return rename(p, dict(zip(vs, standard_names(len(vs)))))


def substitute(p: Polynomial, var: str, m) -> Polynomial:
    """Replace every occurrence of `var` by the monomial m."""
    vs = set(p.variables)
    if var not in vs:
        raise InputError(f"variable {var!r} does not occur")
    incoming = set(mono.variables(m))
    clash = incoming & (vs - {var})
    if clash:
        raise InputError(f"substitution captures variables {sorted(clash)}")
    if p.sig.is_word and isinstance(m, (Letter, Node)):
        m = mono.to_word(m)
    return p.map_monomials(lambda t: mono.graft(t, var, m))


def mirror(p: Polynomial) -> Polynomial:
    return p.map_monomials(mono.mirror)


# ── Normal form for printing and comparisons ─────────────────────────────────

def integral_form(p: Polynomial) -> Polynomial:
    """Clear denominators, divide by the content, make the least monomial's coefficient positive."""
    if not p.terms:
        return p
    den = lcm(*(c.denominator for c in p.terms.values()))
    ints = {m: int(c * den) for m, c in p.terms.items()}
    g = gcd(*ints.values())
    first = min(ints, key=mono.monomial_key)
    if ints[first] < 0:
        g = -g
    return Polynomial({m: Fraction(c // g) for m, c in ints.items()}, p.sig)
