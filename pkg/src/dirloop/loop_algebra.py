"""Hilbert series of based loop spaces of suspensions.

For a connected base, the loop space of its suspension has the homology of
the tensor algebra on the reduced homology of the base.  This module keeps
two independent ways to obtain the graded dimensions: an explicit word
enumeration (used as the oracle in the test suite) and the convolution
recurrence (used for real computation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cubical import CubicalSet
from .homology import FieldSpec, GradedDims, RATIONALS, betti


@dataclass(frozen=True)
class HilbertSeries:
    """Graded dimension sequence, degree 0 upward, constant term 1."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("series must start with constant term 1")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("series coefficients must be nonnegative")

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def get(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k <= self.truncation else 0


def count_words_by_enumeration(
    degrees: Sequence[int], total: int, max_length: int | None = None
) -> int:
    """Number of words in given generators whose degrees sum to ``total``.

    Plain depth first enumeration, deliberately free of the convolution
    recurrence so it can serve as an independent check of it.
    """
    if any(d <= 0 for d in degrees):
        raise ValueError("generator degrees must be positive")
    if total < 0:
        raise ValueError("total degree must be nonnegative")

    def go(remaining: int, length: int) -> int:
        if remaining == 0:
            return 1
        if max_length is not None and length >= max_length:
            return 0
        acc = 0
        for d in degrees:
            if d <= remaining:
                acc += go(remaining - d, length + 1)
        return acc

    return go(total, 0)


def tensor_algebra_dims(generators: GradedDims, truncation: int) -> HilbertSeries:
    """Graded dimensions of the free associative algebra on ``generators``.

    Convolution: each degree counts words, split off by their last letter.
    """
    if generators.get(0) > 0:
        raise ValueError("generators in degree 0 are not allowed")
    coeffs = [1]
    for k in range(1, truncation + 1):
        coeffs.append(sum(generators.get(j) * coeffs[k - j] for j in range(1, k + 1)))
    return HilbertSeries(tuple(coeffs))


def verify_tensor_characterization(series: HilbertSeries, generators: GradedDims) -> bool:
    """Check that ``series`` satisfies the tensor algebra recurrence."""
    if generators.get(0) > 0:
        return False
    for k in range(1, series.truncation + 1):
        expected = sum(generators.get(j) * series.get(k - j) for j in range(1, k + 1))
        if series.get(k) != expected:
            return False
    return True


def loop_space_homology(
    base: CubicalSet, field: FieldSpec = RATIONALS, truncation: int = 6
) -> HilbertSeries:
    """Hilbert series of the loop space of the suspension of ``base``.

    The base must be connected; the generators of the answer are the
    reduced homology classes of the base, in their own degrees.
    """
    b = betti(base, field)
    if b.get(0) != 1:
        raise ValueError(
            f"base must be connected, found {b.get(0)} components over {field}"
        )
    return tensor_algebra_dims(b.reduced(), truncation)
