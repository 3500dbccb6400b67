"""
Geometry value objects.

Matrices use the PostScript row convention: [a b c d tx ty] maps a
point (x, y) to (a*x + c*y + tx, b*x + d*y + ty).
"""

from dataclasses import dataclass
from typing import NamedTuple, Sequence
import math

from figrelabel.core.constants import SINGULAR_DETERMINANT
from figrelabel.core.exceptions import SingularMatrix


class Point(NamedTuple):
    """A point or a delta, in bp unless stated otherwise."""

    x: float
    y: float


@dataclass(frozen=True, slots=True)
class Matrix:
    """Affine transform [a b c d tx ty]."""

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0
    tx: float = 0.0
    ty: float = 0.0

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "Matrix":
        a, b, c, d, tx, ty = (float(v) for v in values)
        return cls(a, b, c, d, tx, ty)

    def values(self) -> tuple:
        return (self.a, self.b, self.c, self.d, self.tx, self.ty)

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def is_invertible(self) -> bool:
        return abs(self.determinant) > SINGULAR_DETERMINANT

    def with_translation(self, tx: float, ty: float) -> "Matrix":
        return Matrix(self.a, self.b, self.c, self.d, tx, ty)


IDENTITY = Matrix()


def transform_point(m: Matrix, p: Point) -> Point:
    """User space to device space."""
    x, y = p
    return Point(m.a * x + m.c * y + m.tx, m.b * x + m.d * y + m.ty)


def dtransform_delta(m: Matrix, d: Point) -> Point:
    """Map a delta through the linear part only."""
    dx, dy = d
    return Point(m.a * dx + m.c * dy, m.b * dx + m.d * dy)


def idtransform_delta(m: Matrix, d: Point) -> Point:
    """
    Solve [a c; b d] * r = d for r.

    The translation terms never take part, so the result is the same for
    every matrix that shares the linear part of m.

    Raises:
        SingularMatrix: when the linear part cannot be inverted
    """
    if not m.is_invertible:
        raise SingularMatrix(f"matrix {list(m.values())} is not invertible")
    dx, dy = d
    det = m.determinant
    return Point((m.d * dx - m.c * dy) / det, (m.a * dy - m.b * dx) / det)


def itransform_point(m: Matrix, p: Point) -> Point:
    """Device space to user space."""
    return idtransform_delta(m, Point(p[0] - m.tx, p[1] - m.ty))


def multiply(first: Matrix, second: Matrix) -> Matrix:
    """Row-convention product first x second (apply first, then second)."""
    return Matrix(
        first.a * second.a + first.b * second.c,
        first.a * second.b + first.b * second.d,
        first.c * second.a + first.d * second.c,
        first.c * second.b + first.d * second.d,
        first.tx * second.a + first.ty * second.c + second.tx,
        first.tx * second.b + first.ty * second.d + second.ty,
    )


def concat_matrix(outer: Matrix, inner: Matrix) -> Matrix:
    """New CTM for `inner concat` under CTM `outer`: inner applies first."""
    return multiply(inner, outer)


def invert(m: Matrix) -> Matrix:
    """Full affine inverse."""
    if not m.is_invertible:
        raise SingularMatrix(f"matrix {list(m.values())} is not invertible")
    det = m.determinant
    a, b, c, d = m.d / det, -m.b / det, -m.c / det, m.a / det
    return Matrix(a, b, c, d, -(m.tx * a + m.ty * c), -(m.tx * b + m.ty * d))


def translation(tx: float, ty: float) -> Matrix:
    return Matrix(1.0, 0.0, 0.0, 1.0, float(tx), float(ty))


def scaling(sx: float, sy: float) -> Matrix:
    return Matrix(float(sx), 0.0, 0.0, float(sy), 0.0, 0.0)


def _cos_sin(degrees: float) -> tuple:
    # quarter turns are exact so rotate 90 composes without drift
    quarter = degrees / 90.0
    if quarter == math.floor(quarter):
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[int(quarter) % 4]
    radians = math.radians(degrees)
    return math.cos(radians), math.sin(radians)


def rotation(degrees: float) -> Matrix:
    cos_t, sin_t = _cos_sin(degrees)
    return Matrix(cos_t, sin_t, -sin_t, cos_t, 0.0, 0.0)
