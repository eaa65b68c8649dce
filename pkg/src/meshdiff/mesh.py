"""Mesh model and the standard collocation point families.

Points are always kept in ascending order.  Results from references that
use descending Chebyshev points differ by a row/column reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyInterval, NoConvergence, NonFinite, NotIncreasing, TooFew

_NEWTON_TOL = 1e-15
_NEWTON_MAX_ITER = 100


@dataclass(frozen=True, eq=False)
class Mesh:
    """Strictly increasing finite coordinates of at least two points."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_1d(np.asarray(self.points, dtype=float))
        if pts.ndim != 1:
            raise ValueError("mesh points must form a one-dimensional array")
        if pts.size < 2:
            raise TooFew(f"a mesh needs at least 2 points, got {pts.size}")
        if not np.all(np.isfinite(pts)):
            raise NonFinite("mesh coordinates must be finite")
        rising = np.diff(pts) > 0
        if not rising.all():
            k = int(np.argmin(rising)) + 1
            raise NotIncreasing(
                f"mesh points must be strictly increasing; offending index {k}"
            )
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.size

    @property
    def a(self) -> float:
        return float(self.points[0])

    @property
    def b(self) -> float:
        return float(self.points[-1])


def validate(points) -> Mesh:
    """Check raw coordinates and wrap them in a Mesh.

    No repair is attempted: out-of-order input raises NotIncreasing (the
    message cites the first offending position), NaN or inf raises
    NonFinite, and fewer than two points raises TooFew.
    """
    return Mesh(points)


def _check_interval(n, a, b):
    if int(n) < 2:
        raise TooFew(f"need at least 2 points, got n={int(n)}")
    if not (np.isfinite(a) and np.isfinite(b)):
        raise NonFinite(f"interval bounds must be finite, got [{a}, {b}]")
    if not a < b:
        raise EmptyInterval(f"need a < b, got a={a}, b={b}")


def _to_interval(t, a, b):
    # affine map from [-1, 1]; endpoints pinned bit-exactly, and a
    # symmetric t stays symmetric because the midpoint is added last
    x = 0.5 * (a + b) + 0.5 * (b - a) * t
    x[0] = a
    x[-1] = b
    return x


def uniform(n, a, b) -> Mesh:
    """Evenly spaced points on [a, b] with bit-exact endpoints."""
    _check_interval(n, a, b)
    return Mesh(np.linspace(float(a), float(b), int(n)))


def chebyshev_gauss_lobatto(n, a, b) -> Mesh:
    """Chebyshev-Gauss-Lobatto points mapped to [a, b], ascending.

    The canonical nodes are cos(pi*(n-j)/(n-1)); they are evaluated here
    in the equivalent sine form sin(pi*(2j-n+1)/(2n-2)) so the set is
    exactly symmetric about the interval midpoint and an odd-n center
    point lands exactly on it.
    """
    _check_interval(n, a, b)
    n = int(n)
    j = np.arange(n)
    t = np.sin(np.pi * (2.0 * j - (n - 1)) / (2.0 * (n - 1)))
    return Mesh(_to_interval(t, float(a), float(b)))


def _legendre_pair(k: int, x: np.ndarray):
    """P_k(x) and P_{k-1}(x) by the three-term recurrence, k >= 1."""
    p_prev = np.ones_like(x)
    p = x.copy()
    for j in range(2, k + 1):
        p, p_prev = ((2 * j - 1) * x * p - (j - 1) * p_prev) / j, p
    return p, p_prev


def legendre_gauss_lobatto(n, a, b) -> Mesh:
    """Legendre-Gauss-Lobatto points mapped to [a, b], ascending.

    Interior nodes are the roots of P'_{n-1}, found by Newton iteration
    from Chebyshev-Gauss-Lobatto starting guesses (converged to steps of
    at most 1e-15, at most 100 sweeps, NoConvergence otherwise).  The
    derivative comes from (1-x^2) P'_k = k (P_{k-1} - x P_k) and the
    second derivative from the Legendre differential equation.  The
    converged set is symmetrized by pairwise averaging so that
    x_i = -x_{n-1-i} holds bit-exactly on [-1, 1].
    """
    _check_interval(n, a, b)
    n = int(n)
    if n == 2:
        return Mesh(_to_interval(np.array([-1.0, 1.0]), float(a), float(b)))
    k = n - 1
    j = np.arange(1, n - 1)
    t = np.sin(np.pi * (2.0 * j - (n - 1)) / (2.0 * (n - 1)))
    for _ in range(_NEWTON_MAX_ITER):
        pk, pk_prev = _legendre_pair(k, t)
        w = 1.0 - t * t
        dp = k * (pk_prev - t * pk) / w
        ddp = (2.0 * t * dp - k * (k + 1) * pk) / w
        step = dp / ddp
        t -= step
        if np.max(np.abs(step)) <= _NEWTON_TOL:
            break
    else:
        raise NoConvergence(
            f"Legendre-Gauss-Lobatto iteration missed tolerance {_NEWTON_TOL} "
            f"after {_NEWTON_MAX_ITER} sweeps (n={n})"
        )
    t = 0.5 * (t - t[::-1])
    nodes = np.concatenate(([-1.0], t, [1.0]))
    if np.any(np.diff(nodes) <= 0):
        raise NoConvergence(f"Newton iteration collapsed two nodes (n={n})")
    return Mesh(_to_interval(nodes, float(a), float(b)))
