"""
rational.py — Exact dense rational matrices and reduced row-echelon form.

RationalMatrix is the plain dense carrier; RrefResult stores only the nonzero
rows of the unique reduced row-echelon form, sparsely, because consequence
spaces reach ~1500 x 1680 at degree 5 and their reduced rows have a few
hundred nonzeros at most.

Pivot rule for the dense elimination: among the rows that can supply a pivot
for the current column, take the entry with the smallest combined
numerator+denominator bit length, lowest row index on ties. The RREF is
unique, so the rule only changes intermediate fraction growth.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from varietas.core.errors import InputError


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x: Fraction) -> str:
    """Render as "p/q" (or "p" when the denominator is 1)."""
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major Fractions

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"matrix has {len(self.entries)} entries, expected {self.rows} x {self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise InputError(f"ragged matrix: row of length {len(r)}, expected {cols}")
        entries = tuple(as_fraction(x) for r in rows for x in r)
        return cls(len(rows), cols, entries)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )


@dataclass(frozen=True)
class RrefResult:
    """
    Reduced row-echelon form of a row space.

    rows[i] is a tuple of (column, value) pairs in ascending column order;
    its first pair is (pivot_columns[i], 1).
    """
    cols: int
    rows: tuple
    pivot_columns: tuple
    source_rows: int = 0

    @property
    def rank(self) -> int:
        return len(self.pivot_columns)

    @cached_property
    def pivot_rows(self) -> dict:
        return {p: dict(r) for p, r in zip(self.pivot_columns, self.rows)}

    @cached_property
    def matrix(self) -> RationalMatrix:
        height = max(self.source_rows, self.rank)
        dense = []
        for r in self.rows:
            line = [Fraction(0)] * self.cols
            for c, x in r:
                line[c] = x
            dense.append(line)
        dense.extend([[Fraction(0)] * self.cols for _ in range(height - self.rank)])
        return RationalMatrix.from_rows(dense, cols=self.cols)

    def row_vectors(self) -> list[dict]:
        return [dict(r) for r in self.rows]

    @classmethod
    def from_sparse_rows(cls, cols: int, rows: Iterable[Mapping[int, Fraction]], source_rows: int = 0):
        """Wrap rows that are already in reduced echelon form."""
        ordered = sorted((min(r), r) for r in rows if r)
        return cls(
            cols=cols,
            rows=tuple(tuple(sorted((c, as_fraction(x)) for c, x in r.items())) for _, r in ordered),
            pivot_columns=tuple(p for p, _ in ordered),
            source_rows=source_rows,
        )


def _bit_cost(x: Fraction) -> int:
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def rref(m: RationalMatrix) -> RrefResult:
    """Gauss-Jordan elimination over Q. Total: the empty matrix has rank 0."""
    work = m.to_rows()
    nrows, ncols = m.rows, m.cols
    pivots = []
    lead = 0
    for col in range(ncols):
        if lead >= nrows:
            break
        best = None
        for i in range(lead, nrows):
            x = work[i][col]
            if x:
                cost = _bit_cost(x)
                if best is None or cost < best[0]:
                    best = (cost, i)
        if best is None:
            continue
        i = best[1]
        work[lead], work[i] = work[i], work[lead]
        pivot_row = work[lead]
        inv = 1 / pivot_row[col]
        if inv != 1:
            pivot_row = [x * inv for x in pivot_row]
            work[lead] = pivot_row
        for k in range(nrows):
            if k == lead:
                continue
            f = work[k][col]
            if f:
                row_k = work[k]
                work[k] = [a - f * b if b else a for a, b in zip(row_k, pivot_row)]
        pivots.append(col)
        lead += 1

    sparse = tuple(
        tuple((c, x) for c, x in enumerate(work[i]) if x) for i in range(len(pivots))
    )
    return RrefResult(cols=ncols, rows=sparse, pivot_columns=tuple(pivots), source_rows=nrows)


def rank(m: RationalMatrix) -> int:
    return rref(m).rank


def nullspace(m: RationalMatrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}, one vector per free column."""
    r = rref(m)
    pivot_set = set(r.pivot_columns)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for p, row in r.pivot_rows.items():
            x = row.get(free)
            if x:
                v[p] = -x
        basis.append(v)
    return basis


def _as_sparse(v) -> dict:
    if isinstance(v, Mapping):
        return {c: as_fraction(x) for c, x in v.items() if x}
    return {c: as_fraction(x) for c, x in enumerate(v) if x}


def _vector_length(v) -> int | None:
    return None if isinstance(v, Mapping) else len(v)


def reduce_vector(space: RrefResult, v) -> dict:
    """Residual of v after subtracting its row-space component."""
    vec = _as_sparse(v)
    rows = space.pivot_rows
    for p in [c for c in vec if c in rows]:
        a = vec.get(p)
        if not a:
            continue
        for c, x in rows[p].items():
            y = vec.get(c, 0) - a * x
            if y:
                vec[c] = y
            else:
                vec.pop(c, None)
    return vec


def rowspace_contains(space: RrefResult, v) -> bool:
    n = _vector_length(v)
    if n is not None and n != space.cols:
        raise InputError(f"vector of length {n} against a space with {space.cols} columns")
    if isinstance(v, Mapping) and any(not 0 <= c < space.cols for c in v):
        raise InputError(f"vector index outside 0..{space.cols - 1}")
    return not reduce_vector(space, v)


def rowspace_equal(a: RrefResult, b: RrefResult) -> bool:
    if a.cols != b.cols:
        raise InputError(f"cannot compare row spaces with {a.cols} and {b.cols} columns")
    return a.pivot_columns == b.pivot_columns and a.rows == b.rows


def rowspace_contains_space(big: RrefResult, small: RrefResult) -> bool:
    if big.cols != small.cols:
        raise InputError(f"cannot compare row spaces with {big.cols} and {small.cols} columns")
    if small.rank > big.rank:
        return False
    return all(not reduce_vector(big, dict(r)) for r in small.rows)
