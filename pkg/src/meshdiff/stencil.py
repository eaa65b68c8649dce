"""Derivative weight rows for one stencil of arbitrarily spaced points.

The weights are the derivatives of the Lagrange cardinal functions at one
stencil point, generated order by order with the classical recursion:

    w_s[m] = s * ((a_i/a_m) * w_{s-1}[i] - w_{s-1}[m]) / (x_i - x_m),  m != i
    w_s[i] = -sum of the other entries

seeded with the order-zero Kronecker row.  Here a_j is the product of
(x_j - x_k) over k != j, the node-polynomial derivative at x_j.  The
ratios a_i/a_m are never formed as two big products: each is a product of
factor quotients paired by sorted magnitude, which keeps intermediates
near unity and stays accurate when spacings span many scales.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidStencil, OrderTooHigh

# gap below this multiple of eps * max|x| means two points coincide
_DUPLICATE_GAP = 4.0


@dataclass(frozen=True, eq=False)
class Stencil:
    """Strictly increasing points plus the index the row is evaluated at."""

    points: np.ndarray
    eval_index: int

    def __post_init__(self):
        pts = np.atleast_1d(np.asarray(self.points, dtype=float))
        if pts.ndim != 1:
            raise InvalidStencil("stencil points must form a one-dimensional array")
        if pts.size < 2:
            raise InvalidStencil(f"a stencil needs at least 2 points, got {pts.size}")
        if not np.all(np.isfinite(pts)):
            raise InvalidStencil("stencil points must be finite")
        gaps = np.diff(pts)
        if np.any(gaps <= 0):
            raise InvalidStencil("stencil points must be strictly increasing")
        scale = float(np.abs(pts).max())
        if np.any(gaps <= _DUPLICATE_GAP * np.finfo(float).eps * scale):
            raise InvalidStencil("stencil points too close together to separate")
        i = int(self.eval_index)
        if not 0 <= i < pts.size:
            raise InvalidStencil(
                f"eval_index {i} out of range for {pts.size} points"
            )
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "eval_index", i)

    @property
    def size(self) -> int:
        return self.points.size


@dataclass(frozen=True, eq=False)
class FactorVector:
    """Signed differences x_index - x_k with a placeholder 1 at k = index.

    negative_count is the number of negative entries, so the sign of the
    node-polynomial derivative a_index is (-1)**negative_count.
    """

    factors: np.ndarray
    negative_count: int


@dataclass(frozen=True, eq=False)
class QuotientVector:
    """Stabilized ratios a_i/a_m for one eval index i; values[i] is 1."""

    values: np.ndarray
    eval_index: int


@dataclass(frozen=True, eq=False)
class StencilRows:
    """Weight rows for derivative orders 1..max_order, shape (max_order, M)."""

    rows: np.ndarray
    eval_index: int
    max_order: int

    def row(self, order: int) -> np.ndarray:
        """Weights of the given derivative order (1-based order)."""
        if not 1 <= order <= self.max_order:
            raise ValueError(f"order must be in 1..{self.max_order}, got {order}")
        return self.rows[order - 1]


def build_factor_vector(stencil: Stencil, index: int) -> FactorVector:
    """Differences x_index - x_k for one stencil point, 1 at the point itself."""
    pts = stencil.points
    k = int(index)
    if not 0 <= k < pts.size:
        raise InvalidStencil(f"index {k} out of range for {pts.size} points")
    f = pts[k] - pts
    f[k] = 1.0
    if np.any(f == 0.0):
        raise InvalidStencil("duplicate stencil points give a zero factor")
    return FactorVector(f, int(np.count_nonzero(f < 0.0)))


def stable_quotients(stencil: Stencil, eval_index: int | None = None) -> QuotientVector:
    """Ratios a_i/a_m of node-polynomial derivatives, round-off stabilized.

    For each m the entry is the product of |F_i| and |F_m| factor pairs
    matched by ascending magnitude, signed by the parity of the negative
    factor counts.  The parity is taken on integers, never through a
    floating-point power.  Entry i itself is set to exactly 1.
    """
    i = stencil.eval_index if eval_index is None else int(eval_index)
    pts = stencil.points
    m_total = pts.size
    if not 0 <= i < m_total:
        raise InvalidStencil(f"eval_index {i} out of range for {m_total} points")
    fi = build_factor_vector(stencil, i)
    sorted_i = np.sort(np.abs(fi.factors))
    values = np.ones(m_total)
    for m in range(m_total):
        if m == i:
            continue
        fm = build_factor_vector(stencil, m)
        sorted_m = np.sort(np.abs(fm.factors))
        q = float(np.prod(sorted_i / sorted_m))
        if (fi.negative_count - fm.negative_count) % 2:
            q = -q
        values[m] = q
    if not np.all(np.isfinite(values)) or np.any(values == 0.0):
        raise InvalidStencil("stencil spacings overflow the quotient evaluation")
    return QuotientVector(values, i)


def stencil_rows(stencil: Stencil, max_order: int) -> StencilRows:
    """Derivative weight rows of orders 1..max_order at the eval point.

    Parameters
    ----------
    stencil : Stencil
        M points and the index i of the point the derivatives refer to.
    max_order : int
        Highest derivative order S; needs S <= M - 1, else OrderTooHigh.

    Returns
    -------
    StencilRows
        rows[s-1] holds the order-s weights.  Each diagonal entry is the
        negated sum of the rest of its row, so row sums vanish exactly.
    """
    m_total = stencil.size
    i = stencil.eval_index
    s_max = int(max_order)
    if s_max < 1:
        raise ValueError(f"max_order must be at least 1, got {s_max}")
    if s_max > m_total - 1:
        raise OrderTooHigh(
            f"order {s_max} needs at least {s_max + 1} points, stencil has {m_total}"
        )
    quot = stable_quotients(stencil).values
    dx = stencil.points[i] - stencil.points
    off = np.arange(m_total) != i
    rows = np.empty((s_max, m_total))
    prev = np.zeros(m_total)
    prev[i] = 1.0
    for s in range(1, s_max + 1):
        cur = np.zeros(m_total)
        cur[off] = s * (quot[off] * prev[i] - prev[off]) / dx[off]
        cur[i] = -cur.sum()
        rows[s - 1] = cur
        prev = cur
    return StencilRows(rows=rows, eval_index=i, max_order=s_max)
