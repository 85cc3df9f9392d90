"""Exact scalars and the dense cubic (n x n x n) matrix container.

Entries are addressed by three 1-based indices (i, j, k):

* ``i`` picks the horizontal layer (the row direction),
* ``j`` picks the vertical page (the column direction),
* ``k`` picks the vertical layer (the depth slice; layers are displayed
  side by side, left to right, in the text format).

Internally the entries live in one flat tuple in k-major order (k, then
i, then j).  That layout is also the canonical serialization order used
by the io module and the consumption order of the random generator.

Everything here is immutable after construction and every operation is
pure: methods return new objects and never touch their inputs, so values
can be shared freely between threads or tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "NOT_CUBIC_MESSAGE",
    "ORDER_TOO_HIGH_MESSAGE",
    "ShapeError",
    "ScalarOverflowError",
    "Scalar",
    "ZERO",
    "ONE",
    "Dim3",
    "Index3",
    "Axis",
    "CubicMatrix",
]

# Wording used when input dimensions cannot form a cubic matrix or the
# order exceeds what the determinant formulas cover.
NOT_CUBIC_MESSAGE = "A is not square, cannot calculate the determinant"
ORDER_TOO_HIGH_MESSAGE = "A is higher than the third order, hence can not be calculated."


class ShapeError(ValueError):
    """Input dimensions cannot form (or index into) a cubic matrix."""


class ScalarOverflowError(OverflowError):
    """A scalar's reduced components left the 64-bit range."""


_NUM_MIN = -(2**63)
_NUM_MAX = 2**63 - 1
_DEN_MAX = 2**64 - 1


class Scalar:
    """An exact rational with bounded components.

    The value is always in canonical form: gcd(|num|, den) == 1 and
    den >= 1.  The numerator must fit a signed 64-bit integer and the
    denominator an unsigned one; any arithmetic whose reduced result
    leaves that range raises :class:`ScalarOverflowError` instead of
    wrapping.  (Values are computed exactly first, so "overflow" means
    the true result is unrepresentable, never that a wrong value was
    produced.)

    Instances are immutable by convention: nothing in this package
    assigns to ``num``/``den`` after construction.

    >>> Scalar(2, 4)
    Scalar(1, 2)
    >>> Scalar(3, -6)
    Scalar(-1, 2)
    >>> print(Scalar(7) * Scalar(1, 7))
    1
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"Scalar components must be int, got {num!r}/{den!r}")
        if den == 0:
            raise ZeroDivisionError("Scalar denominator is zero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        if not _NUM_MIN <= num <= _NUM_MAX:
            raise ScalarOverflowError(f"numerator {num} outside the signed 64-bit range")
        if den > _DEN_MAX:
            raise ScalarOverflowError(f"denominator {den} outside the unsigned 64-bit range")
        self.num = num
        self.den = den

    @classmethod
    def _reduced(cls, num: int, den: int = 1) -> "Scalar":
        # Fast path for results already known to be in lowest terms.
        if not _NUM_MIN <= num <= _NUM_MAX:
            raise ScalarOverflowError(f"numerator {num} outside the signed 64-bit range")
        if den > _DEN_MAX:
            raise ScalarOverflowError(f"denominator {den} outside the unsigned 64-bit range")
        s = object.__new__(cls)
        s.num = num
        s.den = den
        return s

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Scalar._reduced(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Scalar._reduced(self.num - other.num)
        return Scalar(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return Scalar._reduced(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    def __neg__(self) -> "Scalar":
        return Scalar._reduced(-self.num, self.den)

    def reciprocal(self) -> "Scalar":
        if self.num == 0:
            raise ZeroDivisionError("zero has no reciprocal")
        return Scalar(self.den, self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return self.num != 0

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        if self.den == 1:
            return f"Scalar({self.num})"
        return f"Scalar({self.num}, {self.den})"


ZERO = Scalar(0)
ONE = Scalar(1)


def _to_scalar(value: object) -> Scalar:
    """Coerce an entry given as int or Scalar; reject everything else."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Scalar(value)
    raise TypeError(f"matrix entries must be Scalar or int, got {value!r}")


@dataclass(frozen=True)
class Dim3:
    """Counts of horizontal layers, vertical pages, and vertical layers."""

    m: int
    n: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.p < 1:
            raise ShapeError(f"dimensions must be positive, got {self.m}x{self.n}x{self.p}")

    def is_cubic(self) -> bool:
        return self.m == self.n == self.p

    def __str__(self) -> str:
        return f"{self.m}x{self.n}x{self.p}"


@dataclass(frozen=True)
class Index3:
    """A 1-based entry address (horizontal layer i, vertical page j, vertical layer k)."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1 or self.k < 1:
            raise IndexError(f"entry index ({self.i},{self.j},{self.k}) must be 1-based (components >= 1)")

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


class Axis(Enum):
    """One of the three index directions of a cubic matrix.

    The single-letter values are the CLI spellings: h fixes i (a
    horizontal layer), p fixes j (a vertical page), l fixes k (a
    vertical layer).
    """

    HORIZONTAL_LAYER = "h"
    VERTICAL_PAGE = "p"
    VERTICAL_LAYER = "l"

    @classmethod
    def from_letter(cls, letter: str) -> "Axis":
        try:
            return cls(letter)
        except ValueError:
            raise ValueError(f"unknown axis {letter!r}, expected one of h, p, l") from None

    @property
    def letter(self) -> str:
        return self.value


def _flat(order: int, i: int, j: int, k: int) -> int:
    return (k - 1) * order * order + (i - 1) * order + (j - 1)


def _build_delete_table() -> dict[tuple[int, int, int, int], tuple[int, ...]]:
    # For every (order, i, j, k), the flat source indices of the entries
    # that survive deleting layer i, page j, and depth slice k, listed in
    # the k-major order of the resulting (order-1)-matrix.
    table = {}
    for order in (2, 3):
        rng = range(1, order + 1)
        for i in rng:
            for j in rng:
                for k in rng:
                    kept = tuple(
                        _flat(order, si, sj, sk)
                        for sk in rng
                        if sk != k
                        for si in rng
                        if si != i
                        for sj in rng
                        if sj != j
                    )
                    table[(order, i, j, k)] = kept
    return table


_DELETE_TABLE = _build_delete_table()


class CubicMatrix:
    """A dense order-n cubic matrix (n in {1, 2, 3}) of exact scalars.

    Construct from vertical-layer blocks: ``layers[k-1][i-1][j-1]`` is
    the entry at (i, j, k).  Plain ints are accepted and coerced to
    :class:`Scalar`.

    >>> A = CubicMatrix(2, [[[4, -3], [-1, 5]], [[-2, 4], [-7, 3]]])
    >>> print(A.get(Index3(2, 1, 2)))
    -7
    """

    __slots__ = ("order", "_cells", "_ints")

    def __init__(self, order: int, layers):
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise ShapeError(f"order must be a positive integer, got {order!r}")
        if order > 3:
            raise ShapeError(f"order {order} not supported: {ORDER_TOO_HIGH_MESSAGE}")
        blocks = list(layers)
        if len(blocks) != order:
            raise ShapeError(
                f"expected {order} vertical layers, got {len(blocks)}: {NOT_CUBIC_MESSAGE}"
            )
        cells = []
        for k, block in enumerate(blocks, start=1):
            rows = list(block)
            if len(rows) != order:
                raise ShapeError(
                    f"vertical layer {k} has {len(rows)} rows, expected {order}: {NOT_CUBIC_MESSAGE}"
                )
            for i, row in enumerate(rows, start=1):
                values = list(row)
                if len(values) != order:
                    raise ShapeError(
                        f"vertical layer {k} row {i} has {len(values)} entries, "
                        f"expected {order}: {NOT_CUBIC_MESSAGE}"
                    )
                cells.extend(_to_scalar(v) for v in values)
        self.order = order
        self._cells = tuple(cells)
        self._ints = self._int_view(self._cells)

    @staticmethod
    def _int_view(cells: tuple[Scalar, ...]) -> tuple[int, ...] | None:
        # Cached all-integer view of the cells; lets determinant kernels
        # run on plain ints when no entry has a denominator.
        for c in cells:
            if c.den != 1:
                return None
        return tuple(c.num for c in cells)

    @classmethod
    def from_layers(cls, order: int, layers) -> "CubicMatrix":
        return cls(order, layers)

    @classmethod
    def _from_cells(cls, order: int, cells: tuple[Scalar, ...]) -> "CubicMatrix":
        m = object.__new__(cls)
        m.order = order
        m._cells = cells
        m._ints = cls._int_view(cells)
        return m

    @classmethod
    def zeros(cls, order: int) -> "CubicMatrix":
        if order not in (1, 2, 3):
            raise ShapeError(f"order must be 1, 2, or 3, got {order!r}")
        return cls._from_cells(order, (ZERO,) * order**3)

    def _at(self, i: int, j: int, k: int) -> Scalar:
        n = self.order
        return self._cells[(k - 1) * n * n + (i - 1) * n + (j - 1)]

    def _check_range(self, at: Index3) -> None:
        n = self.order
        if at.i > n or at.j > n or at.k > n:
            raise IndexError(f"entry index {at} out of range for an order-{n} matrix")

    def get(self, at: Index3) -> Scalar:
        self._check_range(at)
        return self._at(at.i, at.j, at.k)

    def __getitem__(self, key) -> Scalar:
        if isinstance(key, Index3):
            return self.get(key)
        i, j, k = key
        return self.get(Index3(i, j, k))

    def layers(self) -> list[list[list[Scalar]]]:
        """Entries as nested lists indexed [k-1][i-1][j-1]."""
        n = self.order
        return [
            [[self._at(i, j, k) for j in range(1, n + 1)] for i in range(1, n + 1)]
            for k in range(1, n + 1)
        ]

    def add(self, other: "CubicMatrix") -> "CubicMatrix":
        if not isinstance(other, CubicMatrix):
            raise TypeError(f"cannot add CubicMatrix and {type(other).__name__}")
        if self.order != other.order:
            raise ShapeError(f"order mismatch: {self.order} vs {other.order}")
        return CubicMatrix._from_cells(
            self.order, tuple(a + b for a, b in zip(self._cells, other._cells))
        )

    __add__ = add

    def scale(self, c) -> "CubicMatrix":
        """Entrywise scalar multiple (plumbing for algebraic tests)."""
        c = _to_scalar(c)
        return CubicMatrix._from_cells(self.order, tuple(c * v for v in self._cells))

    def __neg__(self) -> "CubicMatrix":
        return self.scale(-1)

    def delete_sub(self, at: Index3) -> "CubicMatrix":
        """The order-(n-1) matrix left after removing horizontal layer
        at.i, vertical page at.j, and vertical layer at.k.  Residual
        layers keep their relative order."""
        if self.order == 1:
            raise ShapeError("an order-1 matrix has no sub-matrices to delete down to")
        self._check_range(at)
        cells = self._cells
        kept = _DELETE_TABLE[(self.order, at.i, at.j, at.k)]
        return CubicMatrix._from_cells(self.order - 1, tuple(cells[f] for f in kept))

    def scale_layer(self, axis: Axis, index: int, c) -> "CubicMatrix":
        """Multiply every entry whose axis-coordinate equals index by c."""
        n = self.order
        if not 1 <= index <= n:
            raise IndexError(f"{axis.letter}-layer index {index} out of range for an order-{n} matrix")
        c = _to_scalar(c)
        cells = list(self._cells)
        for f, (i, j, k) in _enumerate_coords(n):
            coord = i if axis is Axis.HORIZONTAL_LAYER else j if axis is Axis.VERTICAL_PAGE else k
            if coord == index:
                cells[f] = c * cells[f]
        return CubicMatrix._from_cells(n, tuple(cells))

    def swap_layers(self, axis: Axis, a: int, b: int) -> "CubicMatrix":
        """Exchange layers a and b along the given axis."""
        n = self.order
        for index in (a, b):
            if not 1 <= index <= n:
                raise IndexError(f"{axis.letter}-layer index {index} out of range for an order-{n} matrix")
        if a == b:
            return self
        swap = {a: b, b: a}
        cells = self._cells
        new = [None] * len(cells)
        for f, (i, j, k) in _enumerate_coords(n):
            if axis is Axis.HORIZONTAL_LAYER:
                i = swap.get(i, i)
            elif axis is Axis.VERTICAL_PAGE:
                j = swap.get(j, j)
            else:
                k = swap.get(k, k)
            new[f] = cells[_flat(n, i, j, k)]
        return CubicMatrix._from_cells(n, tuple(new))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubicMatrix):
            return NotImplemented
        return self.order == other.order and self._cells == other._cells

    def __hash__(self) -> int:
        return hash((self.order, self._cells))

    def __repr__(self) -> str:
        body = "; ".join(
            " | ".join(
                " ".join(str(self._at(i, j, k)) for j in range(1, self.order + 1))
                for k in range(1, self.order + 1)
            )
            for i in range(1, self.order + 1)
        )
        return f"<CubicMatrix order={self.order}: {body}>"


def _enumerate_coords(order: int):
    """Yield (flat index, (i, j, k)) in canonical k-major order."""
    f = 0
    for k in range(1, order + 1):
        for i in range(1, order + 1):
            for j in range(1, order + 1):
                yield f, (i, j, k)
                f += 1
