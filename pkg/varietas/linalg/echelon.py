"""
echelon.py — Incremental, fraction-free reduced echelon basis.

Vectors arrive one at a time as sparse {column: int} dicts. Each stored row
is a primitive integer vector whose leftmost entry (its pivot) is positive,
and every stored row is zero in every other row's pivot column. Inserting a
row with pivot q clears column q from the older rows, and because q is never
left of an older row's pivot the leftmost-entry invariant survives. The
stored rows divided by their pivot entries are therefore exactly the unique
RREF of the span, whatever order the vectors arrived in.

Integer rows keep the inner loop on machine-speed ints; content is divided
out after every elimination step so entries stay in lowest terms.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Optional

from varietas.linalg.rational import RrefResult


def _combine(alpha: int, v: Mapping[int, int], beta: int, r: Mapping[int, int]) -> dict:
    """alpha * v - beta * r"""
    out = {k: alpha * x for k, x in v.items()} if alpha != 1 else dict(v)
    for k, x in r.items():
        y = out.get(k, 0) - beta * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def _primitive(v: dict) -> tuple[dict, int]:
    """Divide out the content and make the leftmost entry positive. Returns (row, divisor)."""
    g = gcd(*v.values())
    if v[min(v)] < 0:
        g = -g
    if g == 1:
        return v, 1
    return {k: x // g for k, x in v.items()}, g


def integer_vector(v: Mapping) -> dict:
    """Clear denominators of a rational sparse vector (result is primitive up to sign)."""
    v = {k: Fraction(x) for k, x in v.items() if x}
    if not v:
        return {}
    den = lcm(*(x.denominator for x in v.values()))
    out = {k: int(x * den) for k, x in v.items()}
    g = gcd(*out.values())
    return {k: x // g for k, x in out.items()}


class EchelonBasis:
    """
    Fully reduced echelon basis grown one vector at a time.

    With track=True every row also carries its expression as a rational
    combination of the offered vectors (by offer index), so membership
    queries can return a certificate.
    """

    def __init__(self, cols: int, track: bool = False):
        self.cols = cols
        self.track = track
        self._rows: dict[int, dict[int, int]] = {}
        self._combos: dict[int, dict[int, Fraction]] = {}
        self.offered = 0
        self.independent: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def full(self) -> bool:
        return len(self._rows) == self.cols

    def _reduce(self, vec: Mapping[int, int], combo: Optional[dict] = None):
        v = dict(vec)
        rows = self._rows
        for p in [c for c in v if c in rows]:
            a = v[p]
            r = rows[p]
            d = r[p]
            g = gcd(a, d)
            alpha, beta = d // g, a // g
            v = _combine(alpha, v, beta, r)
            if combo is not None:
                combo = {k: alpha * x for k, x in combo.items()}
                for k, x in self._combos[p].items():
                    y = combo.get(k, 0) - beta * x
                    if y:
                        combo[k] = y
                    else:
                        combo.pop(k, None)
        return v, combo

    def add(self, vec: Mapping[int, int]) -> bool:
        """Offer an integer vector; True when it enlarged the span."""
        index = self.offered
        self.offered += 1
        if not vec or len(self._rows) == self.cols:
            return False
        combo = {index: Fraction(1)} if self.track else None
        w, combo = self._reduce(vec, combo)
        if not w:
            return False

        w, g = _primitive(w)
        if combo is not None and g != 1:
            combo = {k: x / g for k, x in combo.items()}
        q = min(w)
        d = w[q]

        for p, r in list(self._rows.items()):
            a = r.get(q)
            if not a:
                continue
            h = gcd(a, d)
            alpha, beta = d // h, a // h
            nr, div = _primitive(_combine(alpha, r, beta, w))
            self._rows[p] = nr
            if self.track:
                old = self._combos[p]
                nc = {k: alpha * x for k, x in old.items()}
                for k, x in combo.items():
                    y = nc.get(k, 0) - beta * x
                    if y:
                        nc[k] = y
                    else:
                        nc.pop(k, None)
                if div != 1:
                    nc = {k: x / div for k, x in nc.items()}
                self._combos[p] = nc

        self._rows[q] = w
        if combo is not None:
            self._combos[q] = combo
        self.independent.append(index)
        return True

    def extend(self, vectors: Iterable[Mapping[int, int]]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vec: Mapping[int, int]) -> bool:
        if not vec:
            return True
        w, _ = self._reduce(vec)
        return not w

    def express(self, vec: Mapping[int, int]) -> Optional[dict[int, Fraction]]:
        """
        Coefficients c (by offer index) with vec = sum c[k] * offered[k],
        or None when vec is outside the span. Needs track=True.
        """
        if not self.track:
            raise ValueError("express() needs an EchelonBasis built with track=True")
        if not vec:
            return {}
        # scale * vec - sum(...) = residual; start the combination empty
        v = dict(vec)
        scale = Fraction(1)
        combo: dict[int, Fraction] = {}
        for p in [c for c in v if c in self._rows]:
            a = v[p]
            r = self._rows[p]
            d = r[p]
            g = gcd(a, d)
            alpha, beta = d // g, a // g
            v = _combine(alpha, v, beta, r)
            scale *= alpha
            combo = {k: alpha * x for k, x in combo.items()}
            for k, x in self._combos[p].items():
                combo[k] = combo.get(k, 0) + beta * x
        if v:
            return None
        return {k: x / scale for k, x in combo.items() if x}

    def to_rref(self, source_rows: int | None = None) -> RrefResult:
        rows = {}
        for p, r in self._rows.items():
            d = r[p]
            rows[p] = {c: Fraction(x, d) for c, x in r.items()}
        return RrefResult.from_sparse_rows(
            self.cols, rows.values(),
            source_rows=self.offered if source_rows is None else source_rows,
        )
