"""Weighted dual graphs of exceptional curve configurations.

A :class:`DualGraph` records a connected configuration of smooth
rational curves E_j with self-intersection -e_j (white vertices),
their transversal crossing points (edges, parallel edges allowed), and
boundary branches of integer multiplicity m >= 2 attached to them
(black vertices). For a contractible configuration (negative definite
intersection form) the module solves the adjunction system

    sum_i a_i (E_i . E_j) = d_j,
    d_j = (e_j - 2) + sum_{branches D at j} (1 - 1/m_D) (D . E_j),

exactly over the rationals; the configuration is klt precisely when
every a_i > -1 (a value of exactly -1 fails). Recognized shapes
(chains and forks of the catalogue, plus Dynkin diagrams of
(-2)-curves) get closed-form cyclic invariants on top of the solve.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NotNegativeDefiniteError, UnsupportedError, WrongClassError
from .exact import coeff


class GraphClass(enum.Enum):
    CHAIN_TWO_BLACK_ENDS = "ChainTwoBlackEnds"
    FORK_HALF_WEIGHTS = "ForkHalfWeights"
    CHAIN_ONE_BLACK_END = "ChainOneBlackEnd"
    DU_VAL_DYNKIN = "DuValDynkin"
    UNRECOGNIZED = "Unrecognized"


@dataclass(frozen=True)
class BranchAttachment:
    """A boundary branch D meeting the white curve `vertex` in `inter` points."""

    vertex: int
    mult: int
    inter: int = 1


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[int, ...]                 # e_j >= 1, curve E_j has E_j^2 = -e_j
    edges: tuple[tuple[int, int], ...]        # unordered pairs, multiset
    branches: tuple[BranchAttachment, ...] = ()

    def __post_init__(self):
        n = len(self.vertices)
        if n == 0:
            raise ValueError("graph needs at least one vertex")
        for e in self.vertices:
            if e < 1:
                raise ValueError(f"self-intersection weights must be >= 1, got {e}")
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            if i == j:
                raise ValueError("self-loops are not allowed on white vertices")
        for b in self.branches:
            if not 0 <= b.vertex < n:
                raise ValueError(f"branch vertex {b.vertex} out of range")
            if b.mult < 2:
                raise ValueError(f"branch multiplicity must be >= 2, got {b.mult}")
            if b.inter < 1:
                raise ValueError(f"branch intersection number must be >= 1, got {b.inter}")
        if not self._connected():
            raise ValueError("the white-vertex graph must be connected")

    @classmethod
    def make(cls, vertices, edges=(), branches=()) -> "DualGraph":
        """Build a graph from plain sequences.

        Branches may be given as BranchAttachment, as (vertex, mult) or
        (vertex, mult, inter) tuples, or as dicts with those keys.
        """
        edge_t = tuple(sorted((min(i, j), max(i, j)) for i, j in edges))
        brs = []
        for b in branches:
            if isinstance(b, BranchAttachment):
                brs.append(b)
            elif isinstance(b, dict):
                brs.append(BranchAttachment(b["vertex"], b["mult"], b.get("inter", 1)))
            else:
                brs.append(BranchAttachment(*b))
        return cls(tuple(vertices), edge_t, tuple(brs))

    def _connected(self) -> bool:
        n = len(self.vertices)
        adj = [set() for _ in range(n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for k in adj[stack.pop()]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return len(seen) == n


@dataclass(frozen=True)
class DiscrepancyResult:
    a: tuple[Fraction, ...]     # discrepancies, indexed like vertices
    d: tuple[Fraction, ...]     # adjunction degrees
    is_klt: bool                # all a_i > -1, strictly


@dataclass(frozen=True)
class ChainData:
    """A two-black-end chain in canonical orientation (left-to-right)."""

    weights: tuple[int, ...]    # e along the chain, left to right
    m_left: int
    m_right: int


def intersection_matrix(g: DualGraph) -> list[list[int]]:
    """Symmetric matrix with -e_j on the diagonal, edge counts off it."""
    n = len(g.vertices)
    m = [[0] * n for _ in range(n)]
    for j, e in enumerate(g.vertices):
        m[j][j] = -e
    for i, j in g.edges:
        m[i][j] += 1
        m[j][i] += 1
    return m


def is_negative_definite(g: DualGraph) -> bool:
    neg = [[-x for x in row] for row in intersection_matrix(g)]
    return linalg.is_positive_definite(neg)


def adjunction_degrees(g: DualGraph) -> list[Fraction]:
    """d_j = (e_j - 2) + sum over branches at j of (1 - 1/m)(D . E_j).

    Assumes every white vertex is a smooth rational curve and every
    crossing is transversal, which holds for all catalogue shapes.
    """
    d = [Fraction(e - 2) for e in g.vertices]
    for b in g.branches:
        d[b.vertex] += coeff(b.mult) * b.inter
    return d


def solve_discrepancies(g: DualGraph) -> DiscrepancyResult:
    """Unique exact solution a of M a = d, plus the klt verdict.

    Requires a negative definite intersection form; the residual
    M a - d of the returned solution is identically zero.
    """
    if not is_negative_definite(g):
        raise NotNegativeDefiniteError(
            "intersection form is not negative definite; "
            "the configuration is not contractible")
    m = intersection_matrix(g)
    d = adjunction_degrees(g)
    a = linalg.solve(m, d)
    assert all(lhs == rhs for lhs, rhs in zip(linalg.mat_vec(m, a), d))
    return DiscrepancyResult(tuple(a), tuple(d), all(x > -1 for x in a))


def _adjacency(g: DualGraph) -> list[list[int]]:
    adj = [[] for _ in g.vertices]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _has_parallel_edges(g: DualGraph) -> bool:
    return len(set(g.edges)) != len(g.edges)


def _path_order(g: DualGraph) -> list[int] | None:
    """Vertices in path order if the graph is a simple chain, else None."""
    n = len(g.vertices)
    if _has_parallel_edges(g) or len(g.edges) != n - 1:
        return None
    adj = _adjacency(g)
    degs = [len(a) for a in adj]
    if n == 1:
        return [0]
    if any(d > 2 for d in degs) or degs.count(1) != 2:
        return None
    order = [degs.index(1)]
    while len(order) < n:
        nxt = [k for k in adj[order[-1]] if len(order) < 2 or k != order[-2]]
        order.append(nxt[0])
    return order


def _fork_arms(g: DualGraph) -> tuple[int, list[list[int]]] | None:
    """(center, arms) if the graph is a tree with one degree-3 vertex."""
    n = len(g.vertices)
    if _has_parallel_edges(g) or len(g.edges) != n - 1:
        return None
    adj = _adjacency(g)
    degs = [len(a) for a in adj]
    if max(degs) != 3 or degs.count(3) != 1:
        return None
    center = degs.index(3)
    arms = []
    for start in adj[center]:
        arm = [start]
        prev = center
        while len(adj[arm[-1]]) == 2:
            nxt = [k for k in adj[arm[-1]] if k != prev][0]
            prev = arm[-1]
            arm.append(nxt)
        arms.append(arm)
    return center, arms


def _dynkin(g: DualGraph) -> bool:
    """A / D / E diagram of (-2)-curves."""
    if any(e != 2 for e in g.vertices):
        return False
    if _path_order(g) is not None:
        return True
    fork = _fork_arms(g)
    if fork is None:
        return False
    lengths = sorted(len(a) for a in fork[1])
    if lengths[:2] == [1, 1]:
        return True                      # D series
    return lengths in ([1, 2, 2], [1, 2, 3], [1, 2, 4])   # E6, E7, E8


def classify_graph(g: DualGraph) -> GraphClass:
    """Match the graph against the recognized resolution shapes.

    Chains with one black dot and the forks are made of (-2)-curves
    only; a two-black-end chain has free end weights subject to
    (e_left - 1) m_left = (e_right - 1) m_right with interior weights 2.
    Parallel-edge graphs and everything else are Unrecognized.
    """
    if _has_parallel_edges(g):
        return GraphClass.UNRECOGNIZED
    if not g.branches:
        return GraphClass.DU_VAL_DYNKIN if _dynkin(g) else GraphClass.UNRECOGNIZED

    path = _path_order(g)
    if path is not None:
        if len(g.branches) == 1:
            b = g.branches[0]
            if (b.inter == 1 and all(e == 2 for e in g.vertices)
                    and b.vertex in (path[0], path[-1])):
                return GraphClass.CHAIN_ONE_BLACK_END
            return GraphClass.UNRECOGNIZED
        if len(g.branches) == 2 and len(path) >= 2:
            by_vertex = {b.vertex: b for b in g.branches}
            if set(by_vertex) != {path[0], path[-1]}:
                return GraphClass.UNRECOGNIZED
            if any(b.inter != 1 for b in g.branches):
                return GraphClass.UNRECOGNIZED
            if any(g.vertices[v] != 2 for v in path[1:-1]):
                return GraphClass.UNRECOGNIZED
            e_l, e_r = g.vertices[path[0]], g.vertices[path[-1]]
            if e_l < 2 or e_r < 2:
                return GraphClass.UNRECOGNIZED
            m_l, m_r = by_vertex[path[0]].mult, by_vertex[path[-1]].mult
            if (e_l - 1) * m_l != (e_r - 1) * m_r:
                return GraphClass.UNRECOGNIZED
            return GraphClass.CHAIN_TWO_BLACK_ENDS
        return GraphClass.UNRECOGNIZED

    fork = _fork_arms(g)
    if fork is not None and len(g.branches) == 1:
        b = g.branches[0]
        if b.inter != 1 or any(e != 2 for e in g.vertices):
            return GraphClass.UNRECOGNIZED
        arms = sorted(fork[1], key=len)
        if len(arms[0]) != 1 or len(arms[1]) != 1:
            return GraphClass.UNRECOGNIZED
        # black dot at the tip of a longest arm (any tip for the D4 star)
        candidates = {a[-1] for a in fork[1] if len(a) == len(arms[-1])}
        if b.vertex in candidates:
            return GraphClass.FORK_HALF_WEIGHTS
        return GraphClass.UNRECOGNIZED
    return GraphClass.UNRECOGNIZED


def chain_data(g: DualGraph) -> ChainData:
    """Canonical orientation of a two-black-end chain.

    The left end is the one with the lexicographically smaller
    (multiplicity, weight) signature, so the result does not depend on
    the input vertex order.
    """
    if classify_graph(g) is not GraphClass.CHAIN_TWO_BLACK_ENDS:
        raise WrongClassError("graph is not a chain with two black ends")
    path = _path_order(g)
    by_vertex = {b.vertex: b for b in g.branches}
    left_key = (by_vertex[path[0]].mult, g.vertices[path[0]])
    right_key = (by_vertex[path[-1]].mult, g.vertices[path[-1]])
    if right_key < left_key:
        path = path[::-1]
    return ChainData(
        weights=tuple(g.vertices[v] for v in path),
        m_left=by_vertex[path[0]].mult,
        m_right=by_vertex[path[-1]].mult,
    )


def cyclic_invariants(g: DualGraph) -> tuple[int, int]:
    """Type (N, q) of the cyclic quotient contracted by a two-black-end chain.

    N = (n-1)(e_l - 1)(e_r - 1) + (e_l - 1) + (e_r - 1) and
    q = (n-1)(e_l - 1) + 1 for the canonically oriented chain of length
    n; the expansion of N/q reproduces the chain read right-to-left.
    """
    data = chain_data(g)
    n = len(data.weights)
    e_l, e_r = data.weights[0] - 1, data.weights[-1] - 1
    return (n - 1) * e_l * e_r + e_l + e_r, (n - 1) * e_l + 1


def local_group_order(g: DualGraph) -> int:
    """Order N * m_left * m_right of the local fundamental group.

    Only available for two-black-end chains; the fork shapes have no
    closed formula here.
    """
    cls = classify_graph(g)
    if cls is not GraphClass.CHAIN_TWO_BLACK_ENDS:
        raise UnsupportedError(
            f"no closed order formula for class {cls.value}")
    data = chain_data(g)
    n_inv, _ = cyclic_invariants(g)
    return n_inv * data.m_left * data.m_right
