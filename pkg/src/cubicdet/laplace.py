"""Minors, cofactors, and layer expansions of cubic determinants.

A layer expansion fixes one layer (any axis, any index), multiplies each
of its order**2 entries by a sign and by the minor of that entry, and
sums.  With the sign (-1)**(j+k) from :func:`sign_expansion`, every one
of the 3n expansions of an order-n matrix reproduces the determinant;
that invariance is what the verify module cross-checks.

Cofactors come in two conventions, selected by :class:`SignConvention`:

* ``EXPANSION``: sign (-1)**(j+k), the one under which the expansions
  above hold.  Default everywhere.
* ``PAPER_DEF``: the definitional sign (-1)**(i+j+k).  A fixed-i
  expansion built from these cofactors comes out to (-1)**i times the
  determinant, so this convention is exposed for cofactor values only
  and never drives a determinant.

Term order inside a trace follows the reading order of a fixed layer
when the vertical layers are displayed side by side: fixed i or fixed j
enumerates the free pair with k outermost; fixed k enumerates row-major
(i outermost, j innermost).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core3d import ZERO, Axis, CubicMatrix, Index3, Scalar, ShapeError
from .determinant import det_closed, sign_expansion, sign_paper_def

__all__ = [
    "SignConvention",
    "TraceTerm",
    "ExpansionTrace",
    "minor",
    "cofactor",
    "expand",
    "det_laplace",
    "expand_all",
]


class SignConvention(Enum):
    """Which sign multiplies a minor to make a cofactor."""

    EXPANSION = "expansion"
    PAPER_DEF = "paper-def"


@dataclass(frozen=True)
class TraceTerm:
    """One contribution of a layer expansion: sign * entry * minor."""

    at: Index3
    entry: Scalar
    sign: int
    minor_value: Scalar
    contribution: Scalar


@dataclass(frozen=True)
class ExpansionTrace:
    """All order**2 terms of one layer expansion, plus their sum."""

    axis: Axis
    index: int
    terms: tuple[TraceTerm, ...]
    total: Scalar


def minor(A: CubicMatrix, at: Index3) -> Scalar:
    """det of the sub-matrix left after deleting the three layers through at."""
    return det_closed(A.delete_sub(at))


def cofactor(A: CubicMatrix, at: Index3, convention: SignConvention = SignConvention.EXPANSION) -> Scalar:
    """Signed minor of the entry at ``at`` under the chosen convention."""
    value = minor(A, at)
    sign = sign_expansion(at) if convention is SignConvention.EXPANSION else sign_paper_def(at)
    return value if sign > 0 else -value


def _layer_positions(order: int, axis: Axis, index: int):
    """(i, j, k) triples of the fixed layer, in trace order."""
    rng = range(1, order + 1)
    if axis is Axis.HORIZONTAL_LAYER:
        return [(index, j, k) for k in rng for j in rng]
    if axis is Axis.VERTICAL_PAGE:
        return [(i, index, k) for k in rng for i in rng]
    return [(i, j, index) for i in rng for j in rng]


def _check_layer_index(A: CubicMatrix, axis: Axis, index: int) -> None:
    if not isinstance(index, int) or isinstance(index, bool):
        raise TypeError(f"layer index must be an int, got {index!r}")
    if not 1 <= index <= A.order:
        raise IndexError(
            f"{axis.letter}-layer index {index} out of range for an order-{A.order} matrix"
        )


def expand(A: CubicMatrix, axis: Axis, index: int) -> ExpansionTrace:
    """One layer expansion with a full per-term trace.

    Every term records sign * entry * minor; the total equals the
    determinant of A.
    """
    if A.order == 1:
        raise ShapeError("an order-1 matrix has no layers to expand along")
    _check_layer_index(A, axis, index)
    terms = []
    total = ZERO
    for i, j, k in _layer_positions(A.order, axis, index):
        at = Index3(i, j, k)
        entry = A._at(i, j, k)
        sign = sign_expansion(at)
        minor_value = det_closed(A.delete_sub(at))
        contribution = entry * minor_value
        if sign < 0:
            contribution = -contribution
        total = total + contribution
        terms.append(TraceTerm(at, entry, sign, minor_value, contribution))
    return ExpansionTrace(axis, index, tuple(terms), total)


def det_laplace(A: CubicMatrix, axis: Axis = Axis.HORIZONTAL_LAYER, index: int = 1) -> Scalar:
    """Determinant by recursive layer expansion.

    An order-1 matrix is its own determinant (the base case).  Otherwise
    the fixed layer's entries are summed as sign * entry * det of the
    deleted sub-matrix, recursing along the same axis at layer 1 (any
    fixed choice is valid since the expansions agree; a fixed one keeps
    evaluation deterministic).
    """
    _check_layer_index(A, axis, index)
    if A.order == 1:
        return A._cells[0]
    total = ZERO
    for i, j, k in _layer_positions(A.order, axis, index):
        at = Index3(i, j, k)
        entry = A._at(i, j, k)
        if not entry:
            continue
        value = entry * det_laplace(A.delete_sub(at), axis, 1)
        total = total + value if sign_expansion(at) > 0 else total - value
    return total


def expand_all(A: CubicMatrix) -> list[ExpansionTrace]:
    """Every (axis, index) expansion: 3 * order traces, equal totals."""
    return [
        expand(A, axis, index)
        for axis in (Axis.HORIZONTAL_LAYER, Axis.VERTICAL_PAGE, Axis.VERTICAL_LAYER)
        for index in range(1, A.order + 1)
    ]
