"""
presentation.py — Varieties given by multilinear identities.

Variety files hold one directive per line:

    variety as3
    ambient associative            # or nonassociative
    op *                           # repeatable
    features derivations atoms     # optional
    identity abc + bac - bca - cba
    identity (a*b)*c = a*(b*c)

Identity-list files (.ids) hold one identity per line in the same grammar.
Blank lines and '#' comments are ignored in both.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from varietas.core.errors import InputError, VarietasError, VarietyFileError
from varietas.core.logging import get_logger
from varietas.terms import monomials as mono
from varietas.terms.parser import parse
from varietas.terms.polynomial import Polynomial, check_multilinear
from varietas.terms.signature import MAGMA, NOVIKOV, DENDRIFORM, WORDS, Ambient, Operation, Signature

logger = get_logger()


@dataclass(frozen=True)
class VarietyPresentation:
    name: str
    sig: Signature
    identities: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))
        for f in self.identities:
            if f.is_zero():
                raise InputError(f"{self.name}: zero identity")
            if f.sig != self.sig:
                raise InputError(f"{self.name}: identity over a different signature")
            if f.degree < 2:
                raise InputError(f"{self.name}: identities must have degree at least 2")
            check_multilinear(f)

    @property
    def min_degree(self) -> int:
        return min((f.degree for f in self.identities), default=0)

    @property
    def max_degree(self) -> int:
        return max((f.degree for f in self.identities), default=0)

    def with_identities(self, extra, name: str | None = None) -> "VarietyPresentation":
        return VarietyPresentation(name or self.name, self.sig, self.identities + tuple(extra))

    def to_dict(self) -> dict:
        from varietas.terms.printer import print_canonical
        return {
            "name": self.name,
            "ambient": self.sig.ambient.value,
            "ops": [op.glyph for op in self.sig.ops],
            "identities": [print_canonical(f) for f in self.identities],
        }


def presentation(name: str, sig: Signature, *texts: str) -> VarietyPresentation:
    return VarietyPresentation(name, sig, tuple(parse(t, sig) for t in texts))


# ── Ambient conversion ───────────────────────────────────────────────────────

def associativity(sig: Signature = MAGMA) -> Polynomial:
    op = sig.ops[0].glyph
    return parse(f"(a{op}b){op}c - a{op}(b{op}c)", sig)


def to_tree_presentation(v: VarietyPresentation) -> VarietyPresentation:
    """The same variety in the free nonassociative ambient: associativity plus left-normed identities."""
    if not v.sig.is_word:
        return v
    sig = v.sig.as_tree()
    op = sig.ops[0].name
    ids = [associativity(sig)]
    for f in v.identities:
        ids.append(Polynomial({mono.left_normed(w, op): c for w, c in f.terms.items()}, sig))
    return VarietyPresentation(v.name, sig, tuple(ids))


# ── Named varieties ──────────────────────────────────────────────────────────
# Associators: (x,y,z) = (xy)z - x(yz)

_LEFT_ALT = "(a*b)*c - a*(b*c) + (b*a)*c - b*(a*c)"
_RIGHT_ALT = "(a*b)*c - a*(b*c) + (a*c)*b - a*(c*b)"
_CYCLIC = "(a*b)*c - a*(b*c) + (b*c)*a - b*(c*a) + (c*a)*b - c*(a*b)"
_SYM_12 = "(a*b)*c - a*(b*c) - (b*a)*c + b*(a*c)"
_SYM_23 = "(a*b)*c - a*(b*c) - (a*c)*b + a*(c*b)"

_NAMED = {
    "associative": lambda: VarietyPresentation("associative", WORDS, ()),
    "as1": lambda: presentation("as1", WORDS, "abc + bac + acb + cab + bca + cba"),
    "as2": lambda: presentation("as2", WORDS, "abc - bac - acb + cab + bca - cba"),
    "as3": lambda: presentation("as3", WORDS, "abc + bac - bca - cba"),
    "as4": lambda: presentation("as4", WORDS, "abc + acb - cba - cab"),
    "alternative": lambda: presentation("alternative", MAGMA, _LEFT_ALT, _RIGHT_ALT),
    "left-alternative": lambda: presentation("left-alternative", MAGMA, _LEFT_ALT),
    "right-alternative": lambda: presentation("right-alternative", MAGMA, _RIGHT_ALT),
    "assosymmetric": lambda: presentation("assosymmetric", MAGMA, _SYM_12, _SYM_23),
    "dual-as3": lambda: presentation("dual-as3", MAGMA, _LEFT_ALT, _CYCLIC),
    "dual-as4": lambda: presentation("dual-as4", MAGMA, _RIGHT_ALT, _CYCLIC),
    "novikov-nc": lambda: presentation(
        "novikov-nc", NOVIKOV,
        "a>(b<c) = (a>b)<c",
        "(a<b)>c - a>(b>c) = a<(b>c) - (a<b)<c",
    ),
    "dendriform": lambda: presentation(
        "dendriform", DENDRIFORM,
        "(a<=b)<=c = a<=(b<=c) + a<=(b>=c)",
        "(a>=b)<=c = a>=(b<=c)",
        "(a<=b)>=c + (a>=b)>=c = a>=(b>=c)",
    ),
}


def variety_names() -> tuple:
    return tuple(_NAMED)


@lru_cache(maxsize=None)
def named_variety(name: str) -> VarietyPresentation:
    try:
        return _NAMED[name]()
    except KeyError:
        raise InputError(f"unknown variety {name!r}; known: {', '.join(_NAMED)}") from None


# ── Files ────────────────────────────────────────────────────────────────────

def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_variety(text: str, path: str = "<string>") -> VarietyPresentation:
    name = Path(path).stem
    ambient = Ambient.TREE
    ops: list[Operation] = []
    features = {"derivations": False, "atoms": False}
    pending: list[tuple[int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "variety":
            name = rest or name
        elif key == "ambient":
            try:
                ambient = Ambient(rest)
            except ValueError:
                raise VarietyFileError(
                    f"ambient must be associative or nonassociative, got {rest!r}", path, lineno
                ) from None
        elif key == "op":
            try:
                ops.append(Operation.from_glyph(rest))
            except VarietasError as exc:
                raise VarietyFileError(str(exc), path, lineno) from None
        elif key == "features":
            for feat in rest.split():
                if feat not in features:
                    raise VarietyFileError(f"unknown feature {feat!r}", path, lineno)
                features[feat] = True
        elif key == "identity":
            pending.append((lineno, rest))
        else:
            raise VarietyFileError(f"unknown directive {key!r}", path, lineno)

    if not ops:
        raise VarietyFileError("no 'op' directive", path)
    try:
        sig = Signature(tuple(ops), ambient, **features)
    except VarietasError as exc:
        raise VarietyFileError(str(exc), path) from None

    identities = []
    for lineno, expr in pending:
        try:
            identities.append(parse(expr, sig))
        except VarietasError as exc:
            raise VarietyFileError(str(exc), path, lineno) from None
    try:
        v = VarietyPresentation(name, sig, tuple(identities))
    except VarietasError as exc:
        raise VarietyFileError(str(exc), path) from None
    logger.debug("variety_loaded", variety=name, path=path, identities=len(identities))
    return v


def load_variety(path) -> VarietyPresentation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise VarietyFileError(f"cannot read variety file: {exc.strerror}", str(path)) from None
    return parse_variety(text, str(path))


def parse_identity_list(text: str, sig: Signature, path: str = "<string>") -> list[Polynomial]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        try:
            out.append(parse(line, sig))
        except VarietasError as exc:
            raise VarietyFileError(str(exc), path, lineno) from None
    return out


def load_identities(path, sig: Signature) -> list[Polynomial]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise VarietyFileError(f"cannot read identity file: {exc.strerror}", str(path)) from None
    return parse_identity_list(text, sig, str(path))


def resolve_variety(ref: str) -> VarietyPresentation:
    """A path to a .var file, or the name of a built-in variety."""
    if ref in _NAMED and not Path(ref).exists():
        return named_variety(ref)
    return load_variety(ref)
