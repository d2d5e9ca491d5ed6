"""Points of P^n(F_q) with canonical representatives, point sets, invertible
coordinate changes, projection away from (0:...:0:1), and the zero-prefix
embedding of a smaller projective space.

A point is stored as the unique scalar multiple whose first nonzero
coordinate is 1.  Point sets are deduplicated and sorted by reading the
coordinates as a base-q digit string, first coordinate most significant.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import UsageError
from .fields import Field


class Point:
    """A point of P^n(F_q) in canonical form (first nonzero coordinate is 1)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Sequence[int]):
        coords = tuple(int(c) for c in coords)
        if not coords:
            raise UsageError("a projective point needs at least one coordinate")
        if any(not 0 <= c < field.order for c in coords):
            raise UsageError("coordinates must be encodings in [0, q)")
        lead = next((i for i, c in enumerate(coords) if c), None)
        if lead is None:
            raise UsageError("(0:...:0) is not a projective point")
        if coords[lead] != 1:
            s = field.inv(coords[lead])
            coords = tuple(field.mul(s, c) for c in coords)
        self.field = field
        self.coords = coords

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Point):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def center(field: Field, n: int) -> Point:
    """The point (0:...:0:1) of P^n, the center of the projection."""
    return Point(field, (0,) * n + (1,))


class PointSet:
    """A deduplicated, canonically sorted set of points of P^n(F_q)."""

    __slots__ = ("field", "n", "points", "_lookup")

    def __init__(self, field: Field, n: int, points: Iterable = ()):
        if n < 0:
            raise UsageError("dimension must be nonnegative")
        seen = {}
        for p in points:
            if not isinstance(p, Point):
                p = Point(field, p)
            elif p.field != field:
                raise UsageError("point belongs to a different field")
            if p.n != n:
                raise UsageError(f"point {p} does not lie in P^{n}")
            seen[p.coords] = p
        self.field = field
        self.n = n
        self.points = tuple(seen[c] for c in sorted(seen))
        self._lookup = frozenset(seen)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return isinstance(p, Point) and p.field == self.field and p.coords in self._lookup

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.points == other.points)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.points))

    def __repr__(self) -> str:
        return "{" + ", ".join(repr(p) for p in self.points) + "}"

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "n": self.n,
                "points": [list(p.coords) for p in self.points]}

    @classmethod
    def from_json(cls, obj) -> "PointSet":
        if not isinstance(obj, dict) or not {"field", "n", "points"} <= set(obj):
            raise UsageError('a point set is {"field": ..., "n": int, "points": [[...], ...]}')
        field = Field.from_json(obj["field"])
        n = obj["n"]
        pts = obj["points"]
        if not isinstance(n, int) or not isinstance(pts, list):
            raise UsageError("point set has malformed n or points")
        return cls(field, n, pts)


@lru_cache(maxsize=None)
def space(field: Field, n: int) -> PointSet:
    """All of P^n(F_q), in canonical order."""
    if n < 0:
        raise UsageError("dimension must be nonnegative")
    q = field.order
    pts = []
    for t in range(1, q ** (n + 1)):
        coords = _digits_big(t, q, n + 1)
        if next(c for c in coords if c) == 1:
            pts.append(Point(field, coords))
    return PointSet(field, n, pts)


def complement(X: PointSet) -> PointSet:
    """The points of P^n(F_q) not in X."""
    return PointSet(X.field, X.n, (p for p in space(X.field, X.n) if p not in X))


def find_missing(X: PointSet) -> Point | None:
    """Canonically smallest point outside X, or None when X is the full space."""
    for p in space(X.field, X.n):
        if p not in X:
            return p
    return None


class CoordChange:
    """An invertible square matrix over F_q acting on point coordinates."""

    __slots__ = ("field", "matrix", "_inv_rows")

    def __init__(self, field: Field, matrix: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(c) for c in row) for row in matrix)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise UsageError("coordinate change must be a square matrix")
        if any(not 0 <= c < field.order for r in rows for c in r):
            raise UsageError("matrix entries must be encodings in [0, q)")
        inv = _gauss_invert(field, rows)
        if inv is None:
            raise UsageError("coordinate change matrix is not invertible")
        self.field = field
        self.matrix = rows
        self._inv_rows = inv

    @classmethod
    def identity(cls, field: Field, size: int) -> "CoordChange":
        return cls(field, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @property
    def n(self) -> int:
        return len(self.matrix) - 1

    def inverse(self) -> "CoordChange":
        return CoordChange(self.field, self._inv_rows)

    def compose(self, other: "CoordChange") -> "CoordChange":
        """Matrix product self * other (``other`` acts first)."""
        if self.field != other.field or self.n != other.n:
            raise UsageError("cannot compose changes over different spaces")
        F = self.field
        size = self.n + 1
        rows = []
        for i in range(size):
            row = []
            for j in range(size):
                acc = 0
                for k in range(size):
                    acc = F.add(acc, F.mul(self.matrix[i][k], other.matrix[k][j]))
                row.append(acc)
            rows.append(tuple(row))
        return CoordChange(F, rows)

    __matmul__ = compose

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoordChange):
            return NotImplemented
        return self.field == other.field and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.field, self.matrix))

    def __repr__(self) -> str:
        return f"CoordChange({list(map(list, self.matrix))})"


def change_to_last(point: Point) -> CoordChange:
    """A deterministic invertible change sending ``point`` to (0:...:0:1).

    Starting from the identity, the coordinates other than the leading one
    are cleared by elimination, then the leading coordinate is swapped into
    the last position.
    """
    F = point.field
    a = point.coords
    n = point.n
    lead = next(i for i, c in enumerate(a) if c)
    rows = [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]
    for j in range(n + 1):
        if j != lead and a[j]:
            rows[j][lead] = F.neg(a[j])
    rows[lead], rows[n] = rows[n], rows[lead]
    return CoordChange(F, rows)


def apply_change(change: CoordChange, x):
    """Apply a coordinate change to a point or pointwise to a point set."""
    if isinstance(x, Point):
        if x.field != change.field:
            raise UsageError("point and change live over different fields")
        if x.n != change.n:
            raise UsageError("point and change have mismatched dimensions")
        F = x.field
        coords = []
        for row in change.matrix:
            acc = 0
            for c, v in zip(row, x.coords):
                if c and v:
                    acc = F.add(acc, F.mul(c, v))
            coords.append(acc)
        return Point(F, coords)
    if isinstance(x, PointSet):
        return PointSet(x.field, x.n, (apply_change(change, p) for p in x))
    raise UsageError("apply_change expects a Point or a PointSet")


def project(x):
    """Drop the last coordinate; undefined at the center (0:...:0:1)."""
    if isinstance(x, Point):
        if not any(x.coords[:-1]):
            raise UsageError("projection undefined at center")
        return Point(x.field, x.coords[:-1])
    if isinstance(x, PointSet):
        if x.n < 1:
            raise UsageError("cannot project below dimension 0")
        if center(x.field, x.n) in x:
            raise UsageError("projection undefined: the set contains the center")
        return PointSet(x.field, x.n - 1, (project(p) for p in x))
    raise UsageError("project expects a Point or a PointSet")


def embed(x, d: int):
    """Prepend d zero coordinates, embedding P^(n-d) into P^n."""
    if d < 1:
        raise UsageError("embedding depth must be at least 1")
    if isinstance(x, Point):
        return Point(x.field, (0,) * d + x.coords)
    if isinstance(x, PointSet):
        return PointSet(x.field, x.n + d, (embed(p, d) for p in x))
    raise UsageError("embed expects a Point or a PointSet")


def _digits_big(t: int, base: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        t, r = divmod(t, base)
        out.append(r)
    return tuple(reversed(out))


def _gauss_invert(field: Field, rows) -> tuple | None:
    """Inverse matrix rows via Gauss-Jordan, or None when singular."""
    size = len(rows)
    a = [list(r) for r in rows]
    b = [[int(i == j) for j in range(size)] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        s = field.inv(a[col][col])
        a[col] = [field.mul(s, v) for v in a[col]]
        b[col] = [field.mul(s, v) for v in b[col]]
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [field.sub(v, field.mul(f, w)) for v, w in zip(a[r], a[col])]
                b[r] = [field.sub(v, field.mul(f, w)) for v, w in zip(b[r], b[col])]
    return tuple(tuple(r) for r in b)
