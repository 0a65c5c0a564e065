"""Matrix composition, left-fold powers, and the convergence engine.

Matrices store the membership and non-membership components as two
float64 numpy arrays. Entries of a freshly ingested matrix satisfy the
IFN sum constraint; intermediate powers under p > 1 may not, and such
violations are counted, never clamped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Union

import numpy as np

from .errors import DimensionMismatchError, ZeroPError
from .ifn import ComponentPair, Ifn, make_ifn

# Threshold above which mu + nu > 1 counts as a real closure violation
# rather than float drift.
SUM_VIOLATION_TOL = 1e-9


@dataclass(frozen=True)
class GeneralizedMean:
    """Max/min composition via the weighted power mean with weight lam."""

    lam: float
    p: float

    def __post_init__(self):
        if not (0.0 <= self.lam <= 1.0):
            raise ValueError(f"lambda must lie in [0, 1], got {self.lam}")
        if self.p == 0:
            raise ZeroPError("p must be nonzero")


@dataclass(frozen=True)
class ConvexCombo:
    """Convex combination of max-min and arithmetic-mean composition."""

    lam: float

    def __post_init__(self):
        if not (0.0 <= self.lam <= 1.0):
            raise ValueError(f"lambda must lie in [0, 1], got {self.lam}")

    @property
    def alpha(self):
        return (1.0 + self.lam) / 2.0


Operator = Union[GeneralizedMean, ConvexCombo]


def max_min():
    return GeneralizedMean(1.0, 1.0)


def arith_mean():
    return GeneralizedMean(0.5, 1.0)


def root_power(p):
    if p <= 0:
        raise ValueError(f"root-power preset needs p > 0, got {p}")
    return GeneralizedMean(0.5, p)


def convex_mean(lam):
    return GeneralizedMean(lam, 1.0)


def harmonic():
    return GeneralizedMean(0.5, -1.0)


class Ifm:
    """A rectangular grid of <mu, nu> pairs."""

    __slots__ = ("mu", "nu")

    def __init__(self, mu, nu):
        mu = np.asarray(mu, dtype=np.float64)
        nu = np.asarray(nu, dtype=np.float64)
        if mu.ndim != 2 or mu.shape != nu.shape:
            raise DimensionMismatchError(
                f"component grids must share a 2-D shape, got {mu.shape} and {nu.shape}"
            )
        if mu.size == 0:
            raise DimensionMismatchError("matrix must be non-empty")
        if (mu < 0).any() or (mu > 1).any() or (nu < 0).any() or (nu > 1).any():
            raise ValueError("all components must lie in [0, 1]")
        self.mu = mu
        self.nu = nu
        self.mu.setflags(write=False)
        self.nu.setflags(write=False)

    @classmethod
    def from_pairs(cls, grid):
        """Build from a nested sequence of (mu, nu) pairs, validating
        each entry as an IFN."""
        rows = [[make_ifn(m, v) for m, v in row] for row in grid]
        if len({len(r) for r in rows}) != 1:
            raise DimensionMismatchError("ragged rows")
        return cls(
            [[e.mu for e in row] for row in rows],
            [[e.nu for e in row] for row in rows],
        )

    @classmethod
    def universal(cls, n):
        """The n x n matrix with every entry <1, 0>."""
        return cls(np.ones((n, n)), np.zeros((n, n)))

    @property
    def rows(self):
        return self.mu.shape[0]

    @property
    def cols(self):
        return self.mu.shape[1]

    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        """The (i, j) entry (0-based) as an Ifn when valid, else a
        ComponentPair."""
        m, v = float(self.mu[i, j]), float(self.nu[i, j])
        try:
            return Ifn(m, v)
        except ValueError:
            return ComponentPair(m, v)

    def sum_violations(self, tol=SUM_VIOLATION_TOL):
        """Number of entries with mu + nu > 1 beyond tol."""
        return int((self.mu + self.nu > 1.0 + tol).sum())

    def __eq__(self, other):
        if not isinstance(other, Ifm):
            return NotImplemented
        return (
            self.mu.shape == other.mu.shape
            and np.array_equal(self.mu, other.mu)
            and np.array_equal(self.nu, other.nu)
        )

    def __hash__(self):
        return hash((self.mu.tobytes(), self.nu.tobytes()))

    def __repr__(self):
        body = "; ".join(
            " ".join(f"<{self.mu[i, j]:g},{self.nu[i, j]:g}>" for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"Ifm[{self.rows}x{self.cols}: {body}]"


def _gen_mean_grid(x, y, lam, p):
    # x: (r, t) values folded so far, y: (t, c) fresh values; combine
    # over the shared axis. lam in (0, 1) here.
    with np.errstate(divide="ignore"):
        xp = x**p
        yp = y**p
        comb = lam * xp[:, :, None] + (1.0 - lam) * yp[None, :, :]
        return comb ** (1.0 / p)


def compose(A, B, op):
    """Max-mean / min-mean product of two matrices under op."""
    if A.cols != B.rows:
        raise DimensionMismatchError(
            f"cannot compose {A.rows}x{A.cols} with {B.rows}x{B.cols}"
        )
    if isinstance(op, GeneralizedMean):
        if op.lam == 1.0:
            # The mean collapses to the left argument; the right matrix
            # only contributes its column count.
            mu = np.repeat(A.mu.max(axis=1)[:, None], B.cols, axis=1)
            nu = np.repeat(A.nu.min(axis=1)[:, None], B.cols, axis=1)
        elif op.lam == 0.0:
            mu = np.repeat(B.mu.max(axis=0)[None, :], A.rows, axis=0)
            nu = np.repeat(B.nu.min(axis=0)[None, :], A.rows, axis=0)
        else:
            mu = _gen_mean_grid(A.mu, B.mu, op.lam, op.p).max(axis=1)
            nu = _gen_mean_grid(A.nu, B.nu, op.lam, op.p).min(axis=1)
    else:
        lam = op.lam
        x, y = A.mu[:, :, None], B.mu[None, :, :]
        mu = (lam * np.minimum(x, y) + (1.0 - lam) * (x + y) / 2.0).max(axis=1)
        x, y = A.nu[:, :, None], B.nu[None, :, :]
        nu = (lam * np.maximum(x, y) + (1.0 - lam) * (x + y) / 2.0).min(axis=1)
    # Guard against float spill just outside [0, 1].
    return Ifm(np.clip(mu, 0.0, 1.0), np.clip(nu, 0.0, 1.0))


def power(A, k, op):
    """Left-fold power A^k = (A^(k-1)) o A; the operators are
    non-associative so the fold direction matters."""
    if not A.is_square():
        raise DimensionMismatchError("powers require a square matrix")
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    result = A
    for _ in range(k - 1):
        result = compose(result, A, op)
    return result


def delta(A, B):
    """Max componentwise absolute difference over all entries."""
    if A.mu.shape != B.mu.shape:
        raise DimensionMismatchError(
            f"shape mismatch: {A.mu.shape} vs {B.mu.shape}"
        )
    return float(
        max(np.abs(A.mu - B.mu).max(), np.abs(A.nu - B.nu).max())
    )


def row_uniformity(M):
    """Max per-column spread (max - min over rows, both components);
    0 means all rows are identical."""
    if not M.is_square():
        raise DimensionMismatchError("row uniformity is defined for square matrices")
    spread_mu = (M.mu.max(axis=0) - M.mu.min(axis=0)).max()
    spread_nu = (M.nu.max(axis=0) - M.nu.min(axis=0)).max()
    return float(max(spread_mu, spread_nu))


def is_universal(M, tol):
    """True iff every entry is within tol of <1, 0>."""
    return bool((M.mu >= 1.0 - tol).all() and (M.nu <= tol).all())


def step_bound(op, m):
    """Theoretical Cauchy bound on delta(A^m, A^(m-1)), or None when
    the contraction argument does not apply (lam = 1, or p < 0)."""
    if isinstance(op, GeneralizedMean):
        if op.lam == 1.0 or op.p < 0:
            return None
        return op.lam ** ((m - 2) / op.p)
    if op.lam == 1.0:
        return None
    return op.alpha ** (m - 2)


@dataclass
class ConvergenceReport:
    """Outcome of iterating powers to a fixed point."""

    limit: Ifm
    iterations: int
    converged: bool
    oscillation_period: Optional[int] = None
    deltas: List[float] = field(default_factory=list)
    bound_trace: List[Optional[float]] = field(default_factory=list)
    sum_violations: int = 0


def power_sequence(A, op, eps=1e-12, max_iter=100000):
    """Iterate A^m until the step difference drops to eps or max_iter
    compositions have run.

    deltas[i] is delta(A^(i+2), A^(i+1)); bound_trace carries the
    matching theoretical bound (None where no guarantee holds). When
    lam = 1 there is no contraction, so exact repeats are detected
    instead and reported as an oscillation period.
    """
    if not A.is_square():
        raise DimensionMismatchError("powers require a square matrix")
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")

    detect_cycles = op.lam == 1.0
    seen = {A: 1} if detect_cycles else None

    report = ConvergenceReport(limit=A, iterations=0, converged=False)
    report.sum_violations = A.sum_violations()
    prev = A
    for m in range(2, max_iter + 2):
        cur = compose(prev, A, op)
        d = delta(cur, prev)
        report.iterations = m - 1
        report.deltas.append(d)
        report.bound_trace.append(step_bound(op, m))
        report.sum_violations += cur.sum_violations()
        report.limit = cur
        if d <= eps:
            report.converged = True
            return report
        if detect_cycles:
            if cur in seen:
                report.oscillation_period = m - seen[cur]
                return report
            seen[cur] = m
        prev = cur
    return report
