"""
printer.py — Text rendering of monomials and polynomials.

format_polynomial keeps exact coefficients; print_canonical first brings the
polynomial to integral normal form so that printed identities are stable.
Both outputs parse back to the same polynomial (up to that normalization).
"""

from fractions import Fraction

from varietas.linalg.rational import format_rational
from varietas.terms.monomials import MARK, Letter, Node
from varietas.terms.polynomial import Polynomial, integral_form


def format_letter(x: Letter) -> str:
    if x.atom is not None:
        return f"R({format_word(x.atom)})"
    return x.var + MARK * x.order


def format_word(w) -> str:
    return "".join(format_letter(x) for x in w)


def _format_tree(t, sig) -> str:
    if isinstance(t, Letter):
        return format_letter(t)
    op = sig.op(t.op)
    left = _format_tree(t.left, sig)
    right = _format_tree(t.right, sig)
    if op.bracket:
        return f"{op.glyph[0]}{left},{right}{op.glyph[2]}"
    if _is_infix(t.left, sig):
        left = f"({left})"
    if _is_infix(t.right, sig):
        right = f"({right})"
    return f"{left}{op.glyph}{right}"


def _is_infix(t, sig) -> bool:
    return isinstance(t, Node) and not sig.op(t.op).bracket


def format_monomial(m, sig) -> str:
    if sig.is_word:
        return format_word(m)
    return _format_tree(m, sig)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i, (m, c) in enumerate(p.items()):
        text = format_monomial(m, p.sig)
        mag = abs(c)
        if mag != 1:
            text = f"{format_rational(mag)} {text}"
        if i == 0:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(parts)


def print_canonical(p: Polynomial) -> str:
    return format_polynomial(integral_form(p))


def format_coefficients(values) -> str:
    """Space-separated exact rationals, e.g. '0 0 0 0 1/5'."""
    return " ".join(format_rational(Fraction(v)) for v in values)
