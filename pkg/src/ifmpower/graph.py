"""Directed-graph view of a square matrix: walk weights, critical
structure, column-limit prediction, and DOT export.

Vertices are numbered 1..n to match the usual graph presentation; walks
may repeat vertices. A critical edge is an entry exactly equal to
<1, 0>; a critical vertex lies on a cycle of such edges. Columns
reachable from a critical vertex through critical edges saturate to
<1, 0> in the power limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .errors import BadPathError, DimensionMismatchError
from .ifn import ComponentPair, gen_mean_pair, star_scalar
from .matrix import Ifm


@dataclass(frozen=True)
class PathSpec:
    """A walk given as 1-based vertex indices; repeats allowed."""

    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if len(self.vertices) < 2:
            raise BadPathError("a walk needs at least one edge (two vertices)")

    @property
    def length(self):
        return len(self.vertices) - 1

    def edges(self):
        v = self.vertices
        return list(zip(v[:-1], v[1:]))


@dataclass(frozen=True)
class CriticalStructure:
    """Exact-<1,0> subgraph, its cycle vertices, and column reachability."""

    critical_edges: FrozenSet[Tuple[int, int]]
    critical_vertices: FrozenSet[int]
    reachable_columns: Tuple[bool, ...]


def _edge_values(A, path):
    if not A.is_square():
        raise DimensionMismatchError("walk weights are defined on square matrices")
    n = A.rows
    for v in path.vertices:
        if not 1 <= v <= n:
            raise BadPathError(f"vertex {v} outside [1, {n}]")
    return [A.entry(i - 1, j - 1) for i, j in path.edges()]


def _closed_form_component(values, coeffs, p):
    if len(set(values)) == 1:
        return values[0]
    if p < 0 and any(a == 0.0 and c > 0.0 for a, c in zip(values, coeffs)):
        return 0.0
    return sum(c * a**p for a, c in zip(values, coeffs)) ** (1.0 / p)


def path_weight_gen(A, path, lam, p):
    """Weight of a walk under the power-mean operator.

    Computed two ways: the closed form with geometric coefficients
    lam^(k-1), lam^(k-2)(1-lam), ..., (1-lam), and the left-fold of the
    pairwise mean. The two are algebraically identical; they must agree
    to 1e-12 or the call fails.
    """
    edges = _edge_values(A, path)
    k = len(edges)
    coeffs = [lam ** (k - 1)] + [
        lam ** (k - 1 - i) * (1.0 - lam) for i in range(1, k)
    ]

    closed = ComponentPair(
        _closed_form_component([e.mu for e in edges], coeffs, p),
        _closed_form_component([e.nu for e in edges], coeffs, p),
    )
    folded = edges[0]
    for e in edges[1:]:
        folded = gen_mean_pair(folded, e, lam, p)
    if max(abs(closed.mu - folded.mu), abs(closed.nu - folded.nu)) > 1e-12:
        raise ArithmeticError(
            f"closed form {closed} and fold {folded} disagree on {path}"
        )
    return folded


def path_weight_star(A, path, lam):
    """Weight of a walk under the convex-combination operator
    (left-fold of the pairwise star)."""
    edges = _edge_values(A, path)
    folded = edges[0]
    for e in edges[1:]:
        folded = star_scalar(folded, e, lam)
    return folded


def _critical_adjacency(A):
    n = A.rows
    return {
        i: [j for j in range(1, n + 1) if A.mu[i - 1, j - 1] == 1.0 and A.nu[i - 1, j - 1] == 0.0]
        for i in range(1, n + 1)
    }


def _reachable_from(adj, start):
    """Vertices reachable from start via at least one edge."""
    seen = set()
    stack = list(adj[start])
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(adj[v])
    return seen


def critical_structure(A):
    """Critical edges, vertices on critical cycles, and per-column
    reachability from a critical vertex."""
    if not A.is_square():
        raise DimensionMismatchError("critical structure needs a square matrix")
    n = A.rows
    adj = _critical_adjacency(A)
    edges = frozenset((i, j) for i, out in adj.items() for j in out)
    reach: Dict[int, set] = {v: _reachable_from(adj, v) for v in range(1, n + 1)}
    vertices = frozenset(v for v in range(1, n + 1) if v in reach[v])
    columns = tuple(
        any(j in reach[v] for v in vertices) for j in range(1, n + 1)
    )
    return CriticalStructure(edges, vertices, columns)


def predict_column_limits(A):
    """Per-column prediction: True where the limit column saturates to
    <1, 0> (a critical-edge walk from a critical vertex reaches it)."""
    return critical_structure(A).reachable_columns


def predict_universal(A):
    """True iff every column holds an exact <1, 0> entry, the criterion
    for the power limit to be the universal matrix."""
    if not A.is_square():
        raise DimensionMismatchError("prediction needs a square matrix")
    on = (A.mu == 1.0) & (A.nu == 0.0)
    return bool(on.any(axis=0).all())


def export_dot(A, graph_name="G", precision=5):
    """Render the matrix as a Graphviz digraph.

    Edges with mu > 0 or nu < 1 are drawn, labeled <mu,nu> rounded to
    `precision` decimals; critical edges are bold, critical vertices
    double-circled.
    """
    if not A.is_square():
        raise DimensionMismatchError("DOT export needs a square matrix")
    n = A.rows
    struct = critical_structure(A)
    lines = [f"digraph {graph_name} {{"]
    for v in range(1, n + 1):
        shape = "doublecircle" if v in struct.critical_vertices else "circle"
        lines.append(f'  {v} [label="v{v}", shape={shape}];')
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            mu = A.mu[i - 1, j - 1]
            nu = A.nu[i - 1, j - 1]
            if mu > 0.0 or nu < 1.0:
                label = f"⟨{mu:.{precision}f},{nu:.{precision}f}⟩"
                style = ', style=bold, penwidth=2' if (i, j) in struct.critical_edges else ""
                lines.append(f'  {i} -> {j} [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
