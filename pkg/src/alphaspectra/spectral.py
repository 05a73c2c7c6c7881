"""Spectral radius of the convex combination alpha*D + (1-alpha)*A.

For a strongly connected digraph the radius is a simple positive eigenvalue
with a positive eigenvector, so power iteration on the matrix shifted by the
identity converges and the min/max quotients (Mx)_i / x_i give a certified
enclosure at every step.  An independent determinant-scan root finder is
kept deliberately free of any shared code with the iteration path so the
two can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _backend
from .digraph import Digraph, is_strongly_connected, out_degrees
from .errors import (
    AlphaRangeError,
    ConvergenceError,
    NonpositiveVectorError,
    NoSignChangeError,
    NotStronglyConnectedError,
)

DEFAULT_TOL = 1e-12
ITERATION_CAP = 1_000_000
DET_SCAN_STEP = 0.25


class Interval(NamedTuple):
    """Closed interval [lo, hi]."""

    lo: float
    hi: float

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def disjoint_below(self, other: "Interval") -> bool:
        """True iff every point of self lies strictly below all of other."""
        return self.hi < other.lo


@dataclass(frozen=True, eq=False)
class AlphaMatrix:
    """Dense alpha*D + (1-alpha)*A of a digraph, rows indexed by tails."""

    digraph: Digraph
    alpha: float
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Radius estimate with a certified enclosure and the Perron vector.

    ``residual`` is the final quotient spread relative to the shifted
    eigenvalue the iteration actually ran on.
    """

    radius: float
    enclosure: Interval
    perron: np.ndarray
    iterations: int
    residual: float


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < 1.0):
        raise AlphaRangeError(f"alpha must be in [0, 1), got {alpha}")
    return alpha


def build_alpha_matrix(d: Digraph, alpha: float) -> AlphaMatrix:
    """Entry (i, i) = alpha * outdeg(i); entry (i, j) = 1 - alpha on arcs."""
    alpha = _check_alpha(alpha)
    m = np.zeros((d.n, d.n))
    off = 1.0 - alpha
    for i, j in d.arcs:
        m[i, j] = off
    degs = out_degrees(d)
    for i in range(d.n):
        m[i, i] = alpha * degs[i]
    return AlphaMatrix(d, alpha, m)


def row_sum_bounds(m: AlphaMatrix) -> Interval:
    """[min outdegree, max outdegree]; the radius always lies inside, with
    equality of the endpoints exactly when all outdegrees agree."""
    if not is_strongly_connected(m.digraph):
        raise NotStronglyConnectedError("row-sum bounds need an irreducible matrix")
    degs = out_degrees(m.digraph)
    return Interval(float(min(degs)), float(max(degs)))


def cw_enclosure(m: AlphaMatrix, x: np.ndarray) -> Interval:
    """Quotient bounds [min (Mx)_i/x_i, max (Mx)_i/x_i] for positive x;
    always contains the spectral radius of M."""
    x = np.asarray(x, dtype=float)
    if x.shape != (m.digraph.n,) or not (x > 0).all():
        raise NonpositiveVectorError("test vector must be strictly positive")
    q = (m.matrix @ x) / x
    return Interval(float(q.min()), float(q.max()))


def spectral_radius(d: Digraph, alpha: float, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Radius, certified enclosure, and Perron vector by power iteration.

    Iterates on M + I: the shift makes every irreducible matrix primitive,
    so convergence is guaranteed, and the Perron root just translates by 1.
    """
    alpha = _check_alpha(alpha)
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError("spectral radius defined here for strongly connected digraphs")
    shifted = build_alpha_matrix(d, alpha).matrix + np.eye(d.n)
    x, lo, hi, iters = _backend.power_iteration(shifted, tol, ITERATION_CAP)
    if hi - lo > tol:
        raise ConvergenceError(
            f"power iteration failed to reach tol={tol} in {ITERATION_CAP} iterations"
        )
    enclosure = Interval(lo - 1.0, hi - 1.0)
    radius = 0.5 * (enclosure.lo + enclosure.hi)
    return SpectralResult(
        radius=radius,
        enclosure=enclosure,
        perron=x,
        iterations=iters,
        residual=(hi - lo) / hi,
    )


def det_scan_largest_real_root(d: Digraph, alpha: float, tol: float = DEFAULT_TOL) -> float:
    """Independent oracle: rightmost real root of det(xI - M).

    Walks a descending 0.25-step grid from (max outdegree + 1), finds the
    first nonpositive determinant, and bisects.  Shares no code with the
    power-iteration path.
    """
    alpha = _check_alpha(alpha)
    if not is_strongly_connected(d):
        raise NotStronglyConnectedError("determinant scan needs a strongly connected digraph")
    if d.n == 1:
        return 0.0
    degs = out_degrees(d)
    m = build_alpha_matrix(d, alpha).matrix

    def char_det(x: float) -> float:
        a = -m.copy()
        a[np.diag_indices(d.n)] += x
        return float(_backend.det_via_lu(a))

    hi = float(max(degs)) + 1.0
    floor = max(1.0, alpha * max(degs)) - DET_SCAN_STEP
    x_hi, f_hi = hi, char_det(hi)
    if f_hi <= 0.0:
        raise NoSignChangeError(f"det(xI - M) not positive at the upper bound x={hi}")
    x = hi
    bracket = None
    while x > floor:
        x -= DET_SCAN_STEP
        f = char_det(x)
        if f <= 0.0:
            bracket = (x, x_hi)
            break
        x_hi, f_hi = x, f
    if bracket is None:
        raise NoSignChangeError(f"no sign change of det(xI - M) above x={floor}")
    lo, up = bracket
    while up - lo > tol:
        mid = 0.5 * (lo + up)
        if char_det(mid) <= 0.0:
            lo = mid
        else:
            up = mid
    return 0.5 * (lo + up)
