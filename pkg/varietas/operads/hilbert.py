"""
hilbert.py — Truncated Hilbert series and the composition test.

H(t) = sum_n (-1)^n d_n t^n / n!. For a Koszul pair H(H^!(t)) = t, so any
nonzero coefficient of H(H^!(t)) - t rules Koszulness out. Everything is
exact rational arithmetic on truncated power series.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from varietas.core.errors import InputError
from varietas.core.logging import get_logger
from varietas.engine.consequences import dimensions
from varietas.engine.presentation import VarietyPresentation
from varietas.linalg.rational import format_rational

logger = get_logger()


@dataclass(frozen=True)
class HilbertPrefix:
    dims: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.dims) < 2:
            raise InputError("a Hilbert prefix needs at least two dimensions")

    @property
    def length(self) -> int:
        return len(self.dims)

    def coefficients(self) -> list[Fraction]:
        """Coefficients of t^1 .. t^N."""
        return [Fraction((-1) ** n * d, factorial(n)) for n, d in enumerate(self.dims, start=1)]

    def series(self, n: int) -> list[Fraction]:
        """Power series coefficients indexed 0..n (constant term 0)."""
        if n > self.length:
            raise InputError(f"prefix {self.name!r} has {self.length} terms, {n} needed")
        return [Fraction(0)] + self.coefficients()[:n]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dims": list(self.dims),
            "coefficients": [format_rational(c) for c in self.coefficients()],
        }


def hilbert_prefix(v: VarietyPresentation, n: int) -> HilbertPrefix:
    return HilbertPrefix(tuple(dimensions(v, n)), v.name)


# ── Truncated power series ───────────────────────────────────────────────────

def _mul(f: Sequence[Fraction], g: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j in range(0, n + 1 - i):
            b = g[j]
            if b:
                out[i + j] += a * b
    return out


def compose(f: Sequence[Fraction], g: Sequence[Fraction], n: int) -> list[Fraction]:
    """f(g(t)) mod t^(n+1); g must have zero constant term."""
    if g[0]:
        raise InputError("inner series of a composition needs a zero constant term")
    out = [Fraction(0)] * (n + 1)
    out[0] = f[0]
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        power = _mul(power, g, n)
        if f[k]:
            for i in range(n + 1):
                out[i] += f[k] * power[i]
    return out


@dataclass(frozen=True)
class KoszulResult:
    degree: int
    residual: tuple
    reverse_residual: tuple

    @property
    def passes(self) -> bool:
        """The necessary condition holds in both composition orders."""
        return not any(self.residual) and not any(self.reverse_residual)

    @property
    def verdict(self) -> str:
        if self.passes:
            return "consistent with Koszulness"
        return "necessary Koszulness condition fails"

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "residual": [format_rational(x) for x in self.residual],
            "reverse_residual": [format_rational(x) for x in self.reverse_residual],
            "verdict": self.verdict,
        }


def _residual(outer: HilbertPrefix, inner: HilbertPrefix, n: int) -> tuple:
    series = compose(outer.series(n), inner.series(n), n)
    series[1] -= 1
    return tuple(series[1:])


def koszul_test(h: HilbertPrefix, hdual: HilbertPrefix, n: int) -> KoszulResult:
    """Coefficients of H(H^!(t)) - t and H^!(H(t)) - t through t^n."""
    if n < 1:
        raise InputError("composition degree must be positive")
    result = KoszulResult(n, _residual(h, hdual, n), _residual(hdual, h, n))
    logger.info("koszul_tested", operad=h.name, dual=hdual.name, **result.to_dict())
    return result
