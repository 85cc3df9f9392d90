"""Seeded random matrices and batch cross-checking of determinant paths.

The generator is splitmix64, fixed so that a (order, seed, range) triple
reproduces bit-identical matrices on any platform or language.  The
cross-check evaluates every determinant path (closed form, permutation
sum, each one-level layer expansion) plus nine derived algebraic laws,
comparing everything exactly against the permutation oracle.

Laplace path values come from one-level expansion traces rather than
the recursive evaluator: a systematically wrong sign shows up exactly
once per trace term, while in the recursive evaluator an error of even
multiplicity can cancel itself.  The recursive evaluator is checked
against the traces in the test suite instead.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import repeat

from .core3d import ZERO, Axis, CubicMatrix, Scalar, ShapeError
from .determinant import det_closed, det_permutation
from .io import serialize_text
from .laplace import expand

__all__ = [
    "SplitMix64",
    "GenSpec",
    "VerifyReport",
    "BatchSummary",
    "random_cubic",
    "matrix_digest",
    "build_report",
    "cross_check",
    "batch_verify",
]

_AXES = (Axis.HORIZONTAL_LAYER, Axis.VERTICAL_PAGE, Axis.VERTICAL_LAYER)

# Layer transforms used by the derived-law checks: deterministic so the
# whole report is a pure function of the subject matrix.
_LAW_LAYER = 1
_LAW_SWAP = (1, 2)
_LAW_SCALE = Scalar(2)


class SplitMix64:
    """The splitmix64 sequence: a 64-bit counter mixed through two
    multiply-xorshift rounds.  Tiny, dependency-free, and stable across
    languages, which is all the golden files need."""

    _MASK = (1 << 64) - 1
    _GAMMA = 0x9E3779B97F4A7C15
    _MIX1 = 0xBF58476D1CE4E5B9
    _MIX2 = 0x94D049BB133111EB

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next(self) -> int:
        self.state = (self.state + self._GAMMA) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * self._MIX1) & self._MASK
        z = ((z ^ (z >> 27)) * self._MIX2) & self._MASK
        return z ^ (z >> 31)


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one reproducible random matrix.

    Entries are drawn uniformly (up to modulo bias, which is irrelevant
    for identity checks) from the integers in [-range, range].
    """

    order: int
    seed: int
    range: int

    def __post_init__(self):
        if self.order not in (1, 2, 3):
            raise ValueError(f"order must be 1, 2, or 3, got {self.order!r}")
        if not 0 <= self.seed <= SplitMix64._MASK:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed!r}")
        if self.range < 1:
            raise ValueError(f"range must be >= 1, got {self.range!r}")


def random_cubic(spec: GenSpec) -> CubicMatrix:
    """The matrix named by spec: splitmix64 outputs, consumed in
    canonical (k-major) cell order, each mapped to (x mod (2R+1)) - R."""
    rng = SplitMix64(spec.seed)
    span = 2 * spec.range + 1
    cells = tuple(
        Scalar(rng.next() % span - spec.range) for _ in range(spec.order**3)
    )
    return CubicMatrix._from_cells(spec.order, cells)


def matrix_digest(A: CubicMatrix) -> str:
    """Short stable identifier: order plus a hash of the canonical text form."""
    digest = hashlib.sha256(serialize_text(A).encode("utf-8")).hexdigest()
    return f"order{A.order}:{digest[:16]}"


@dataclass(frozen=True)
class VerifyReport:
    """Agreement matrix for one subject.

    overall is true iff every path value equals det_value and every
    derived law holds; all comparisons are exact.
    """

    subject: str
    det_value: Scalar
    paths: dict[str, Scalar]
    agreements: dict[str, bool]
    derived_laws: tuple[tuple[str, bool], ...]
    overall: bool


def build_report(
    subject: str,
    det_value: Scalar,
    paths: dict[str, Scalar],
    derived_laws,
) -> VerifyReport:
    """Assemble a report from raw path values; exact comparisons only."""
    agreements = {name: value == det_value for name, value in paths.items()}
    laws = tuple(derived_laws)
    overall = all(agreements.values()) and all(ok for _, ok in laws)
    return VerifyReport(subject, det_value, dict(paths), agreements, laws, overall)


def cross_check(A: CubicMatrix) -> VerifyReport:
    """Evaluate every determinant path and derived law for one matrix.

    Paths: "closed", "permutation", and "laplace:<axis>:<index>" for all
    3 * order layer expansions.  Laws per axis: scaling layer 1 by 2
    scales the determinant by 2; swapping layers 1 and 2 preserves the
    determinant across horizontal layers and negates it across vertical
    pages and vertical layers; a zeroed layer forces determinant 0.
    Law predictions come from the permutation oracle on the transformed
    matrix, so a law failure localizes the bug outside the oracle.
    """
    if A.order == 1:
        raise ShapeError("cross-check needs order 2 or 3 (order 1 has no expansions)")
    det_value = det_permutation(A)
    paths: dict[str, Scalar] = {
        "closed": det_closed(A),
        "permutation": det_value,
    }
    for axis in _AXES:
        for index in range(1, A.order + 1):
            paths[f"laplace:{axis.letter}:{index}"] = expand(A, axis, index).total
    laws = []
    a, b = _LAW_SWAP
    for axis in _AXES:
        scaled = A.scale_layer(axis, _LAW_LAYER, _LAW_SCALE)
        laws.append((f"scale:{axis.letter}", det_permutation(scaled) == _LAW_SCALE * det_value))
        swapped = A.swap_layers(axis, a, b)
        expected = det_value if axis is Axis.HORIZONTAL_LAYER else -det_value
        laws.append((f"swap:{axis.letter}", det_permutation(swapped) == expected))
        zeroed = A.scale_layer(axis, _LAW_LAYER, ZERO)
        laws.append((f"zero:{axis.letter}", det_permutation(zeroed) == ZERO))
    return build_report(matrix_digest(A), det_value, paths, laws)


@dataclass(frozen=True)
class BatchSummary:
    """Outcome of a batch run; first_failure reproduces from the CLI."""

    trials: int
    failures: int
    first_failure: GenSpec | None


def batch_verify(orders, trials: int, seed: int, range: int) -> BatchSummary:
    """cross_check over `trials` seeded matrices per order.

    Per-trial seeds are drawn from one splitmix64 stream over the master
    seed, so the summary is deterministic and any failing GenSpec can be
    regenerated standalone.
    """
    orders = tuple(orders)
    for order in orders:
        if order not in (2, 3):
            raise ValueError(f"batch orders must be 2 or 3, got {order!r}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials!r}")
    # The range argument shadows the builtin here, hence repeat() for the loop.
    rng = SplitMix64(seed)
    run = 0
    failures = 0
    first_failure = None
    for order in orders:
        for _ in repeat(None, trials):
            spec = GenSpec(order, rng.next(), range)
            report = cross_check(random_cubic(spec))
            run += 1
            if not report.overall:
                failures += 1
                if first_failure is None:
                    first_failure = spec
    return BatchSummary(run, failures, first_failure)
