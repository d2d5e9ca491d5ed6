"""Closed-form degree bounds computed from |X|, q and n alone.

For a nonempty set X of points in P^n(F_q), the least degree Nz(X) of a form
that is nonzero at every point of X satisfies d1 <= Nz(X) <= d2, where

* d2 is the least d >= 1 with |X| <= q + ... + q^d, and
* d1 is the largest d >= 1 with q^(n-d+2) + ... + q^n < |X| (an empty sum
  counts as 0, so d1 >= 1 always).
"""

from dataclasses import dataclass

from .errors import UsageError


def geometric_sum(q: int, lo: int, hi: int) -> int:
    """q^lo + ... + q^hi, zero when the range is empty."""
    return sum(q ** i for i in range(lo, hi + 1))


def space_size(q: int, n: int) -> int:
    """Number of points of P^n(F_q)."""
    return geometric_sum(q, 0, n)


def _check_size(size: int, q: int, n: int) -> None:
    full = space_size(q, n)
    if not 1 <= size <= full:
        raise UsageError(f"|X| must lie in [1, {full}] for P^{n}(F_{q}), got {size}")


def upper_bound(size: int, q: int, n: int) -> int:
    """Least d >= 1 with size <= q + ... + q^d; never exceeds n+1."""
    _check_size(size, q, n)
    d = 1
    while geometric_sum(q, 1, d) < size:
        d += 1
    return d


def lower_bound(size: int, q: int, n: int) -> int:
    """Largest d >= 1 with q^(n-d+2) + ... + q^n < size."""
    _check_size(size, q, n)
    d = 1
    while geometric_sum(q, n - d + 1, n) < size:
        d += 1
    return d


@dataclass(frozen=True)
class BoundsReport:
    q: int
    n: int
    size: int
    d1: int
    d2: int

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "size": self.size,
                "d1": self.d1, "d2": self.d2}


def report(q: int, n: int, size: int) -> BoundsReport:
    return BoundsReport(q, n, size, lower_bound(size, q, n), upper_bound(size, q, n))
