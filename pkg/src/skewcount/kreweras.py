"""The determinant formula for skew path counts.

The count N(outer/inner) equals the determinant of the n x n matrix with
(i, j)-entry binomial(outer_j - inner_i + 1, j - i + 1); with an empty inner
partition the entries reduce to binomial(outer_j + 1, j - i + 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import IntMatrix, binomial, det_exact
from .shapes import Partition, SkewShape


@dataclass(frozen=True)
class KrewerasMatrix:
    shape: SkewShape
    matrix: IntMatrix


def kreweras_matrix(shape: SkewShape) -> KrewerasMatrix:
    """The n x n binomial matrix of the shape (0x0 when the shape is empty)."""
    n = shape.n
    entries = tuple(
        binomial(shape.outer.part(j) - shape.inner.part(i) + 1, j - i + 1)
        for i in range(n)
        for j in range(n)
    )
    return KrewerasMatrix(shape, IntMatrix(n, n, entries))


def kreweras_count(shape: SkewShape) -> int:
    """N(outer/inner) as the exact determinant of the binomial matrix."""
    value = det_exact(kreweras_matrix(shape).matrix)
    # the determinant counts paths, so a negative value means a convention bug
    assert value >= 0, f"negative path count {value} for {shape}"
    return value


def remove_empty_rows(shape: SkewShape) -> SkewShape:
    """Drop every row with outer_i == inner_i, keeping the rest in order."""
    kept = [
        (shape.outer.part(i), shape.inner.part(i))
        for i in range(shape.n)
        if shape.outer.part(i) != shape.inner.part(i)
    ]
    return SkewShape(
        Partition(tuple(o for o, _ in kept)),
        Partition(tuple(i for _, i in kept)),
    )
