"""Simply laced graphs, the affine ADE diagram shapes, and exact-arithmetic
Cartan matrix utilities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SimplyLacedGraph:
    """Finite graph without loops or multiple edges, vertices 0..n-1."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (0 <= i < j < self.num_vertices):
                raise GraphError(f"edge ({i},{j}) not sorted or out of range")
            if (i, j) in seen:
                raise GraphError(f"repeated edge ({i},{j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v]
        return tuple(sorted(out))

    def adjacent(self, i: int, j: int) -> bool:
        return tuple(sorted((i, j))) in set(self.edges)

    def arrows(self) -> tuple[tuple[int, int], ...]:
        """Both orientations of every edge; (i, j) stands for a map V_j -> V_i."""
        out = []
        for i, j in self.edges:
            out.append((i, j))
            out.append((j, i))
        return tuple(out)

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.num_vertices, self.num_vertices), dtype=np.int64)
        for i, j in self.edges:
            m[i, j] = m[j, i] = 1
        return m

    def cartan_matrix(self) -> np.ndarray:
        return 2 * np.eye(self.num_vertices, dtype=np.int64) - self.adjacency_matrix()


def cycle_graph(n: int) -> SimplyLacedGraph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices to stay simply laced")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return SimplyLacedGraph(n, tuple(sorted(tuple(sorted(e)) for e in edges)))


def path_graph(n: int) -> SimplyLacedGraph:
    return SimplyLacedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def affine_adjacency(family: str, n: int = 0) -> np.ndarray:
    """Adjacency matrix (with multiplicities) of the affine ADE diagram
    attached to each finite SL2 subgroup family.

    Cyclic of order n gives the n-cycle (a double edge for n = 2), binary
    dihedral of parameter n gives affine D_{n+2}, and the three exceptional
    groups give affine E6/E7/E8.
    """
    if family == "A":
        if n < 2:
            raise GraphError("cyclic family needs n >= 2")
        m = np.zeros((n, n), dtype=np.int64)
        if n == 2:
            m[0, 1] = m[1, 0] = 2
            return m
        for i in range(n):
            m[i, (i + 1) % n] += 1
            m[(i + 1) % n, i] += 1
        return m
    if family == "D":
        if n < 2:
            raise GraphError("binary dihedral family needs n >= 2")
        k = n + 2  # affine D_k on k+1 vertices
        v = k + 1
        m = np.zeros((v, v), dtype=np.int64)
        chain = list(range(2, k - 1))  # central chain, may be a single vertex
        edges = [(0, chain[0]), (1, chain[0])]
        edges += [(chain[t], chain[t + 1]) for t in range(len(chain) - 1)]
        edges += [(chain[-1], k - 1), (chain[-1], k)]
        for i, j in edges:
            m[i, j] = m[j, i] = 1
        return m
    if family in ("E6", "E7", "E8"):
        chains = {
            # arm lengths from the trivalent node, affine node included
            "E6": (2, 2, 2),
            "E7": (3, 3, 1),
            "E8": (5, 2, 1),
        }[family]
        v = 1 + sum(chains)
        m = np.zeros((v, v), dtype=np.int64)
        idx = 1
        for length in chains:
            prev = 0
            for _ in range(length):
                m[prev, idx] = m[idx, prev] = 1
                prev = idx
                idx += 1
        return m
    raise GraphError(f"unknown family {family!r}")


def graph_from_adjacency(adj: np.ndarray) -> SimplyLacedGraph:
    n = adj.shape[0]
    if (adj > 1).any():
        raise GraphError("multiple edges are not allowed here")
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if adj[i, j]
    )
    return SimplyLacedGraph(n, edges)


def wl_colors(adj: np.ndarray, init: list) -> list[int]:
    """Weisfeiler-Lehman color refinement; returns stable integer colors."""
    n = adj.shape[0]
    colors = init[:]
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [palette[c] for c in colors]
    for _ in range(n):
        sig = [
            (colors[i], tuple(sorted((int(adj[i, j]), colors[j]) for j in range(n) if adj[i, j])))
            for i in range(n)
        ]
        palette = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if new == colors:
            break
        colors = new
    return colors


def adjacency_isomorphic(a: np.ndarray, b: np.ndarray, a_init=None, b_init=None) -> bool:
    """Backtracking isomorphism test for small (multi)graphs, with optional
    initial vertex colors that the isomorphism must respect."""
    n = a.shape[0]
    if b.shape[0] != n:
        return False
    ca = wl_colors(a, a_init if a_init is not None else [0] * n)
    cb = wl_colors(b, b_init if b_init is not None else [0] * n)
    if sorted(ca) != sorted(cb):
        return False

    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or ca[i] != cb[j]:
                continue
            if all(mapping[k] == -1 or a[i, k] == b[j, mapping[k]] for k in range(n)):
                mapping[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return extend(0)


def integer_kernel_vector(mat: np.ndarray) -> np.ndarray | None:
    """A primitive integer kernel vector of a square integer matrix with
    one-dimensional kernel, or None if the kernel dimension differs from 1."""
    m = [[Fraction(int(x)) for x in row] for row in mat]
    n = len(m)
    cols = list(range(n))
    rank = 0
    pivots = []
    for c in cols:
        piv = next((i for i in range(rank, n) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(n):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in cols if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for i, c in enumerate(pivots):
        vec[c] = -m[i][f]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // np.gcd(denom, x.denominator)
    ints = np.array([int(x * denom) for x in vec], dtype=np.int64)
    g = int(np.gcd.reduce(np.abs(ints[ints != 0])))
    ints //= g
    if ints.sum() < 0:
        ints = -ints
    return ints


def leading_principal_minors(mat: np.ndarray) -> list[int]:
    """Exact leading principal minors of an integer matrix."""
    out = []
    for k in range(1, mat.shape[0] + 1):
        sub = [[Fraction(int(mat[i, j])) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for c in range(k):
            piv = next((i for i in range(c, k) if sub[i][c] != 0), None)
            if piv is None:
                det = Fraction(0)
                break
            if piv != c:
                sub[c], sub[piv] = sub[piv], sub[c]
                det = -det
            det *= sub[c][c]
            inv = 1 / sub[c][c]
            for i in range(c + 1, k):
                if sub[i][c] != 0:
                    f = sub[i][c] * inv
                    sub[i] = [x - f * y for x, y in zip(sub[i], sub[c])]
        assert det.denominator == 1
        out.append(int(det))
    return out
