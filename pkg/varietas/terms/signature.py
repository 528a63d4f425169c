"""
signature.py — Operation alphabets and ambient modes.

A Signature names the binary operations an identity may use, whether
monomials are planar binary trees (free nonassociative ambient) or words
(associative ambient, one concatenation-like product), and which letter
decorations are allowed (derivation orders a', a''; operator atoms R(w)).
"""

from dataclasses import dataclass
from enum import Enum

from varietas.core.errors import InputError, UnknownOperationError


class Ambient(str, Enum):
    TREE = "nonassociative"
    WORD = "associative"


# glyph -> canonical operation name; names drive the canonical tree order
GLYPH_NAMES = {
    "*": "mul",
    ">": "succ",
    "<": "prec",
    ">=": "succeq",
    "<=": "preceq",
    "[,]": "lie",
    "{,}": "jordan",
}


@dataclass(frozen=True)
class Operation:
    name: str
    glyph: str

    @property
    def bracket(self) -> bool:
        """[x,y] / {x,y} prefix forms instead of infix glyphs."""
        return len(self.glyph) == 3 and self.glyph[1] == ","

    @classmethod
    def from_glyph(cls, glyph: str) -> "Operation":
        try:
            return cls(GLYPH_NAMES[glyph], glyph)
        except KeyError:
            raise UnknownOperationError(f"unknown operation symbol {glyph!r}") from None


@dataclass(frozen=True)
class Signature:
    ops: tuple
    ambient: Ambient = Ambient.TREE
    derivations: bool = False
    atoms: bool = False

    def __post_init__(self):
        if not self.ops:
            raise InputError("a signature needs at least one operation")
        names = [op.name for op in self.ops]
        if len(set(names)) != len(names):
            raise InputError(f"duplicate operation names in {names}")
        glyphs = [op.glyph for op in self.ops]
        if len(set(glyphs)) != len(glyphs):
            raise InputError(f"duplicate operation glyphs in {glyphs}")
        if self.ambient is Ambient.WORD:
            if len(self.ops) != 1 or self.ops[0].bracket:
                raise InputError("associative-word ambient takes exactly one infix product")

    @property
    def is_word(self) -> bool:
        return self.ambient is Ambient.WORD

    @property
    def op_names(self) -> tuple:
        return tuple(op.name for op in self.ops)

    def op(self, name: str) -> Operation:
        for op in self.ops:
            if op.name == name:
                return op
        raise UnknownOperationError(f"operation {name!r} is not in the signature")

    def op_by_glyph(self, glyph: str) -> Operation:
        for op in self.ops:
            if op.glyph == glyph:
                return op
        raise UnknownOperationError(f"unknown operation symbol {glyph!r}")

    def with_features(self, derivations: bool | None = None, atoms: bool | None = None) -> "Signature":
        return Signature(
            self.ops,
            self.ambient,
            self.derivations if derivations is None else derivations,
            self.atoms if atoms is None else atoms,
        )

    def as_tree(self) -> "Signature":
        return Signature(self.ops, Ambient.TREE, self.derivations, self.atoms)

    def as_word(self) -> "Signature":
        return Signature(self.ops, Ambient.WORD, self.derivations, self.atoms)

    @classmethod
    def from_glyphs(cls, glyphs, ambient: Ambient = Ambient.TREE, **features) -> "Signature":
        return cls(tuple(Operation.from_glyph(g) for g in glyphs), ambient, **features)


def _sig(*glyphs, ambient=Ambient.TREE, **features) -> Signature:
    return Signature.from_glyphs(glyphs, ambient, **features)


# ── Stock signatures ─────────────────────────────────────────────────────────
MAGMA = _sig("*")
WORDS = _sig("*", ambient=Ambient.WORD)
DIFF_WORDS = _sig("*", ambient=Ambient.WORD, derivations=True)
RB_WORDS = _sig("*", ambient=Ambient.WORD, atoms=True)
LIE = _sig("[,]")
JORDAN = _sig("{,}")
POLAR = _sig("[,]", "{,}")
NOVIKOV = _sig(">", "<")
DENDRIFORM = _sig(">=", "<=")
STAR = Signature((Operation("star", "*"),))
