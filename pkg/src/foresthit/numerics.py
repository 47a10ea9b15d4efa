"""Exact rational scalars and dense matrices.

``Rational`` is :class:`fractions.Fraction`; it already keeps values reduced
with a positive denominator and uses Python's arbitrary-precision integers.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Integral
from typing import Iterable, Sequence

from .errors import DimensionError, RationalParseError, SingularMatrixError

Rational = Fraction

_INT_OR_RATIO = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+)")


def parse_rational(text) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` or a finite decimal such as ``"0.75"``.

    Integers and Fractions pass through unchanged. Floats are refused: their
    binary expansion is rarely the value the user meant.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalParseError(f"boolean is not a rational: {text!r}")
    if isinstance(text, Integral):
        return Fraction(int(text))
    if not isinstance(text, str):
        raise RationalParseError(
            f"expected an integer, Fraction or string, got {type(text).__name__}"
        )
    s = text.strip()
    if _INT_OR_RATIO.fullmatch(s) or _DECIMAL.fullmatch(s):
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise RationalParseError(f"zero denominator in {text!r}") from None
    raise RationalParseError(f"malformed rational: {text!r}")


def format_rational(x: Fraction) -> str:
    """Lowest-terms ``"p/q"``; integers print without ``/1``."""
    return str(Fraction(x))


class RationalMatrix:
    """Immutable dense matrix of Fractions.

    Indexing is ``A[i, j]`` (0-based) or ``A[i]`` for a row tuple.
    """

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(parse_rational(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged rows")
        self._rows = data
        self._shape = (len(data), ncols)

    @classmethod
    def _trusted(cls, rows) -> RationalMatrix:
        # rows are already tuples of Fractions with equal length
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._shape = (len(rows), len(rows[0]) if rows else 0)
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._trusted(tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls._trusted(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @classmethod
    def diag(cls, values: Sequence) -> RationalMatrix:
        vals = [parse_rational(v) for v in values]
        n = len(vals)
        zero = Fraction(0)
        return cls._trusted(
            tuple(tuple(vals[i] if i == j else zero for j in range(n)) for i in range(n))
        )

    @classmethod
    def outer(cls, col: Sequence, row: Sequence) -> RationalMatrix:
        col = [parse_rational(v) for v in col]
        row = [parse_rational(v) for v in row]
        return cls._trusted(tuple(tuple(a * b for b in row) for a in col))

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def n(self) -> int:
        """Row count; for the square matrices used throughout."""
        return self._shape[0]

    @property
    def is_square(self) -> bool:
        return self._shape[0] == self._shape[1]

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._rows[i][j]
        return self._rows[key]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self):
        return self._shape[0]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows
        )
        return f"RationalMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._rows]

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._rows[i][i] for i in range(min(self._shape)))

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(r, Fraction(0)) for r in self._rows)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def _check_same_shape(self, other):
        if self._shape != other._shape:
            raise DimensionError(f"shape mismatch {self._shape} vs {other._shape}")

    def __add__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return RationalMatrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __sub__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return RationalMatrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows))
        )

    def __neg__(self):
        return RationalMatrix._trusted(tuple(tuple(-a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, RationalMatrix):
            return NotImplemented
        c = parse_rational(c)
        return RationalMatrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self._shape[1] != other._shape[0]:
            raise DimensionError(f"cannot multiply {self._shape} by {other._shape}")
        cols = tuple(zip(*other._rows)) if other._rows else ()
        if not cols:
            cols = ((),) * other._shape[1]
        return RationalMatrix._trusted(
            tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
                for r in self._rows
            )
        )

    @property
    def T(self) -> RationalMatrix:
        return self.transpose()

    def transpose(self) -> RationalMatrix:
        if not self._rows:
            return self
        return RationalMatrix._trusted(tuple(zip(*self._rows)))

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum(self.diagonal(), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def vecmul(self, v: Sequence) -> tuple[Fraction, ...]:
        """Row vector times matrix: ``v @ A``."""
        if len(v) != self._shape[0]:
            raise DimensionError("vector length does not match row count")
        return tuple(
            sum((v[i] * self._rows[i][j] for i in range(len(v))), Fraction(0))
            for j in range(self._shape[1])
        )

    def inverse(self) -> RationalMatrix:
        return mat_inverse(self)


# Functional aliases for the algebra, matching the operator forms.

def identity(n: int) -> RationalMatrix:
    return RationalMatrix.identity(n)


def add(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a + b


def scale(c, a: RationalMatrix) -> RationalMatrix:
    return a * c


def mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b


def transpose(a: RationalMatrix) -> RationalMatrix:
    return a.transpose()


def trace(a: RationalMatrix) -> Fraction:
    return a.trace()


def mat_inverse(a: RationalMatrix) -> RationalMatrix:
    """Exact inverse by fraction-free (Bareiss) elimination.

    The matrix is first scaled by the lcm of its denominators so elimination
    runs on integers; every Bareiss division is exact. Pivoting takes the
    first nonzero entry of the column, which is enough over exact arithmetic.

    Raises
    ------
    SingularMatrixError
        If some column has no nonzero pivot candidate.
    """
    if not a.is_square:
        raise DimensionError(f"cannot invert a {a.shape} matrix")
    n = a.n
    if n == 0:
        return a
    scale_ = 1
    for row in a:
        for x in row:
            scale_ = math.lcm(scale_, x.denominator)
    m = [
        [int(x * scale_) for x in row] + [1 if i == j else 0 for j in range(n)]
        for i, row in enumerate(a)
    ]
    width = 2 * n
    prev = 1
    for k in range(n):
        p = next((r for r in range(k, n) if m[r][k] != 0), None)
        if p is None:
            raise SingularMatrixError(f"matrix is singular (no pivot in column {k + 1})")
        if p != k:
            m[k], m[p] = m[p], m[k]
        pivot_row = m[k]
        pk = pivot_row[k]
        for i in range(k + 1, n):
            row = m[i]
            rk = row[k]
            for j in range(k + 1, width):
                row[j] = (row[j] * pk - rk * pivot_row[j]) // prev
            row[k] = 0
        prev = pk
    # upper triangular integer system U X = R; back-substitute exactly
    inv = [[Fraction(0)] * n for _ in range(n)]
    for c in range(n):
        for i in range(n - 1, -1, -1):
            s = Fraction(m[i][n + c])
            for j in range(i + 1, n):
                if m[i][j]:
                    s -= m[i][j] * inv[j][c]
            inv[i][c] = s / m[i][i]
    return RationalMatrix._trusted(
        tuple(tuple(x * scale_ for x in row) for row in inv)
    )


def as_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)
