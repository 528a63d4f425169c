"""
monomials.py — Letters, planar binary trees and words.

Tree ambient: a monomial is a Letter (leaf) or a Node(op, left, right).
Word ambient: a monomial is a tuple of Letters. A Letter is either a plain
variable with a derivation order (a, a', a'') or an operator atom R(w)
enclosing a word; the two features never mix on one letter.

All three are tuples underneath, so monomials hash and compare structurally.
"""

from functools import lru_cache
from typing import NamedTuple, Optional, Union

from varietas.core.errors import InputError

MARK = "'"


class Letter(NamedTuple):
    var: str
    order: int = 0
    atom: Optional[tuple] = None

    @property
    def is_atom(self) -> bool:
        return self.atom is not None


class Node(NamedTuple):
    op: str
    left: object
    right: object


Tree = Union[Letter, Node]
Word = tuple
Monomial = Union[Letter, Node, tuple]


def letter(var: str, order: int = 0) -> Letter:
    return Letter(var, order, None)


def atom(word: Word) -> Letter:
    return Letter("", 0, tuple(word))


def is_tree(m) -> bool:
    return isinstance(m, (Letter, Node))


# ── Structure ────────────────────────────────────────────────────────────────

def variables(m) -> tuple:
    """Base variables in left-to-right order, atoms included."""
    out = []
    _collect(m, out)
    return tuple(out)


def _collect(m, out: list):
    if isinstance(m, Letter):
        if m.atom is not None:
            for x in m.atom:
                _collect(x, out)
        else:
            out.append(m.var)
    elif isinstance(m, Node):
        _collect(m.left, out)
        _collect(m.right, out)
    else:
        for x in m:
            _collect(x, out)


def degree(m) -> int:
    return len(variables(m))


def is_multilinear(m) -> bool:
    vs = variables(m)
    return len(vs) == len(set(vs))


def atom_weight(m) -> int:
    """Number of operator atoms, nested ones included."""
    if isinstance(m, Letter):
        return 0 if m.atom is None else 1 + atom_weight(m.atom)
    if isinstance(m, Node):
        return atom_weight(m.left) + atom_weight(m.right)
    return sum(atom_weight(x) for x in m)


def max_order(m) -> int:
    if isinstance(m, Letter):
        return m.order if m.atom is None else max_order(m.atom)
    if isinstance(m, Node):
        return max(max_order(m.left), max_order(m.right))
    return max((max_order(x) for x in m), default=0)


def relabel(m, mapping: dict):
    """Rename base variables; variables missing from mapping are kept."""
    if isinstance(m, Letter):
        if m.atom is not None:
            return Letter("", 0, relabel(m.atom, mapping))
        return Letter(mapping.get(m.var, m.var), m.order, None)
    if isinstance(m, Node):
        return Node(m.op, relabel(m.left, mapping), relabel(m.right, mapping))
    return tuple(relabel(x, mapping) for x in m)


def mirror(m):
    """Opposite monomial: trees mirrored, words (and atom contents) reversed."""
    if isinstance(m, Letter):
        return m if m.atom is None else Letter("", 0, mirror(m.atom))
    if isinstance(m, Node):
        return Node(m.op, mirror(m.right), mirror(m.left))
    return tuple(mirror(x) for x in reversed(m))


def graft(m, var: str, replacement):
    """
    Replace the plain leaf `var` by `replacement` (a tree in tree ambient,
    a word spliced in place in word ambient).
    """
    if isinstance(m, Letter):
        if m.atom is not None:
            return Letter("", 0, graft(m.atom, var, replacement))
        if m.var == var:
            if m.order:
                raise InputError(f"cannot substitute into the decorated letter {var}{MARK * m.order}")
            return replacement
        return m
    if isinstance(m, Node):
        return Node(m.op, graft(m.left, var, replacement), graft(m.right, var, replacement))
    out = []
    for x in m:
        if isinstance(x, Letter) and x.atom is None and x.var == var:
            if x.order:
                raise InputError(f"cannot substitute into the decorated letter {var}{MARK * x.order}")
            out.extend(replacement)
        else:
            out.append(graft(x, var, replacement) if isinstance(x, Letter) else x)
    return tuple(out)


def to_word(m) -> Word:
    """Flatten a tree to its leaf word (associative image)."""
    if isinstance(m, Letter):
        return (m,)
    if isinstance(m, Node):
        return to_word(m.left) + to_word(m.right)
    return tuple(m)


def left_normed(word: Word, op: str):
    """(((x1 x2) x3) ... xn) as a tree."""
    it = iter(word)
    t = next(it)
    for x in it:
        t = Node(op, t, x)
    return t


# ── Canonical order ──────────────────────────────────────────────────────────
# Words: lexicographic on letters (variable, then derivation order, plain
# letters before atoms, atoms compared recursively). Trees: preorder shape
# first, then the leaf word.

@lru_cache(maxsize=None)
def letter_key(x: Letter) -> tuple:
    if x.atom is None:
        return (0, x.var, x.order)
    return (1, word_key(x.atom))


@lru_cache(maxsize=None)
def word_key(w: Word) -> tuple:
    return tuple(letter_key(x) for x in w)


def _shape(t, out: list):
    if isinstance(t, Node):
        out.append((1, t.op))
        _shape(t.left, out)
        _shape(t.right, out)
    else:
        out.append((0, ""))


@lru_cache(maxsize=None)
def monomial_key(m) -> tuple:
    if isinstance(m, (Letter, Node)):
        shape = []
        _shape(m, shape)
        return (tuple(shape), word_key(to_word(m)))
    return word_key(m)


# ── Enumeration ──────────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def tree_shapes(n: int, ops: tuple) -> tuple:
    """All planar binary trees with n numbered leaf slots 0..n-1 (as Letters '0'..)."""
    return tuple(_shapes(0, n, ops))


def _shapes(start: int, n: int, ops: tuple):
    if n == 1:
        yield Letter(str(start), 0, None)
        return
    for k in range(1, n):
        for left in _shapes(start, k, ops):
            for right in _shapes(start + k, n - k, ops):
                for op in ops:
                    yield Node(op, left, right)
