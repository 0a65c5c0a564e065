"""Brute-force verifier for the power-as-walk-maximum identity.

Enumerates every walk between each vertex pair and takes the max of the
membership weights and the min of the non-membership weights. Walk
weights are left-folds of the pairwise scalar operators, so the oracle
shares no code with the matrix engine's composition loop or with the
closed-form weight formula.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import List

import numpy as np

from .errors import BudgetExceededError, MismatchFoundError
from .ifn import gen_mean_pair, star_scalar
from .matrix import ConvexCombo, GeneralizedMean, Ifm, power

ENUMERATION_CAP = 10**7

LAMBDA_CHOICES = (0.0, 0.25, 0.5, 0.75, 0.9)
P_CHOICES = (-1.0, 0.5, 1.0, 2.0)


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 4
    max_m: int = 5


def _fold(op, a, b):
    if isinstance(op, GeneralizedMean):
        return gen_mean_pair(a, b, op.lam, op.p)
    return star_scalar(a, b, op.lam)


def brute_force_power(A, m, op, budget=OracleBudget()):
    """Entry (i, j) of A^m as <max, min> of weights over all m-walks
    from i to j, with walk weights computed by explicit left-fold."""
    n = A.rows
    if m < 1:
        raise ValueError(f"power exponent must be >= 1, got {m}")
    if n > budget.max_n or m > budget.max_m or n ** (m + 1) > ENUMERATION_CAP:
        raise BudgetExceededError(
            f"n={n}, m={m} exceeds budget (max_n={budget.max_n}, max_m={budget.max_m})"
        )
    entries = [[A.entry(i, j) for j in range(n)] for i in range(n)]
    mu = np.empty((n, n))
    nu = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            best_mu = -1.0
            best_nu = 2.0
            for mids in product(range(n), repeat=m - 1):
                verts = (i, *mids, j)
                w = entries[verts[0]][verts[1]]
                for a, b in zip(verts[1:-1], verts[2:]):
                    w = _fold(op, w, entries[a][b])
                best_mu = max(best_mu, w.mu)
                best_nu = min(best_nu, w.nu)
            mu[i, j] = best_mu
            nu[i, j] = best_nu
    return Ifm(mu, nu)


def random_ifm(rng, n):
    """A random valid matrix: mu = u, nu = v * (1 - u) keeps every entry
    inside the sum constraint without rejection."""
    mu = np.empty((n, n))
    nu = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            u = rng.random()
            v = rng.random()
            mu[i, j] = u
            nu[i, j] = v * (1.0 - u)
    return Ifm(mu, nu)


def random_operator(rng):
    lam = rng.choice(LAMBDA_CHOICES)
    if rng.random() < 0.5:
        return GeneralizedMean(lam, rng.choice(P_CHOICES))
    return ConvexCombo(lam)


@dataclass
class DifferentialReport:
    trials: int
    max_deviation: float = 0.0
    cases: List[tuple] = field(default_factory=list)


def differential_check(trials, budget=OracleBudget(), seed=0, tol=1e-12,
                       power_fn=power):
    """Run `trials` random engine-vs-oracle comparisons; deterministic
    for a fixed seed. Raises MismatchFoundError with the counterexample
    on the first disagreement beyond tol.

    power_fn exists so a deliberately broken engine can be swapped in to
    confirm the check has teeth.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = random.Random(seed)
    report = DifferentialReport(trials=trials)
    for t in range(trials):
        n = rng.randint(2, budget.max_n)
        m = rng.randint(2, budget.max_m)
        A = random_ifm(rng, n)
        op = random_operator(rng)
        got = power_fn(A, m, op)
        want = brute_force_power(A, m, op, budget)
        dev = float(
            max(np.abs(got.mu - want.mu).max(), np.abs(got.nu - want.nu).max())
        )
        report.max_deviation = max(report.max_deviation, dev)
        report.cases.append((n, m, op, dev))
        if dev > tol:
            raise MismatchFoundError(
                f"trial {t}: engine and oracle disagree by {dev} "
                f"(n={n}, m={m}, op={op})",
                matrix=A,
                operator=op,
                exponent=m,
            )
    return report
