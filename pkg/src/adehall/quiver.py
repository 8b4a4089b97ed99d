"""Double representations of a simply laced graph with the preprojective
relation, their isomorphism classes over small prime fields, and exact
subobject counting.

A representation assigns V_j -> V_i matrices x[i, j] to both orientations of
every edge, subject to sum_j x[i, j] x[j, i] = 0 at every vertex.  States are
encoded as base-q integers so the lexicographically least orbit member is
simply the smallest code; orbits are computed by closing under a generating
set of the base-change group, which visits exactly the orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import SimplyLacedGraph
from .linalg import PrimeFieldContext, enumerate_subspaces, rref

ENUMERATION_BUDGET = 1 << 24
ORBIT_BUDGET = 1 << 20


class BudgetError(RuntimeError):
    pass


class MatchingError(RuntimeError):
    """Stable invariants failed to separate classes; counting across fields
    would silently misattribute coefficients, so this is a hard error."""


def active_arrows(graph: SimplyLacedGraph, dims) -> list[tuple[int, int]]:
    return [(i, j) for i, j in graph.arrows() if dims[i] > 0 and dims[j] > 0]


@dataclass(frozen=True)
class DoubleRep:
    graph: SimplyLacedGraph
    dims: tuple[int, ...]
    maps: tuple  # entries aligned with active_arrows; each a tuple of row tuples
    q: int

    def matrix(self, i: int, j: int) -> np.ndarray:
        arrows = active_arrows(self.graph, self.dims)
        if (i, j) in arrows:
            m = self.maps[arrows.index((i, j))]
            return np.array(m, dtype=np.int64).reshape(self.dims[i], self.dims[j])
        return np.zeros((self.dims[i], self.dims[j]), dtype=np.int64)

    def satisfies_relation(self) -> bool:
        for i in range(self.graph.num_vertices):
            acc = np.zeros((self.dims[i], self.dims[i]), dtype=np.int64)
            for j in self.graph.neighbors(i):
                acc = (acc + self.matrix(i, j) @ self.matrix(j, i)) % self.q
            if acc.any():
                return False
        return True

    def state(self) -> int:
        return encode(self.graph, self.dims, [np.array(m).reshape(-1) for m in self.maps], self.q)


def _arrow_shapes(graph, dims):
    return [(dims[i], dims[j]) for i, j in active_arrows(graph, dims)]


def total_entries(graph, dims) -> int:
    return sum(r * c for r, c in _arrow_shapes(graph, dims))


def encode(graph, dims, flats, q) -> int:
    code = 0
    for flat in flats:
        for v in flat:
            code = code * q + int(v)
    return code


def decode(graph, dims, code, q) -> list[np.ndarray]:
    shapes = _arrow_shapes(graph, dims)
    total = sum(r * c for r, c in shapes)
    digits = []
    for _ in range(total):
        digits.append(code % q)
        code //= q
    digits.reverse()
    out = []
    pos = 0
    for r, c in shapes:
        out.append(np.array(digits[pos : pos + r * c], dtype=np.int64).reshape(r, c))
        pos += r * c
    return out


def rep_from_code(graph, dims, code, q) -> DoubleRep:
    mats = decode(graph, dims, code, q)
    return DoubleRep(graph, tuple(dims), tuple(tuple(map(int, m.reshape(-1))) for m in mats), q)


def enumerate_relation_variety(graph, dims, q, budget=ENUMERATION_BUDGET) -> list[int]:
    """All relation-satisfying matrix tuples, as sorted state codes."""
    arrows = active_arrows(graph, dims)
    shapes = _arrow_shapes(graph, dims)
    total = sum(r * c for r, c in shapes)
    if q**total > budget:
        raise BudgetError(
            f"relation variety needs {q}^{total} points, over the budget {budget}"
        )
    if total == 0:
        return [0]
    # offsets of each arrow's block inside the digit string
    offsets = {}
    pos = 0
    for arrow, (r, c) in zip(arrows, shapes):
        offsets[arrow] = (pos, r, c)
        pos += r * c

    n_codes = q**total
    sols = []
    chunk = 1 << 18
    powers = np.array([q ** (total - 1 - t) for t in range(total)], dtype=np.int64)
    for start in range(0, n_codes, chunk):
        codes = np.arange(start, min(start + chunk, n_codes), dtype=np.int64)
        digits = (codes[:, None] // powers[None, :]) % q
        ok = np.ones(len(codes), dtype=bool)
        for i in range(graph.num_vertices):
            if dims[i] == 0:
                continue
            acc = np.zeros((len(codes), dims[i], dims[i]), dtype=np.int64)
            for j in graph.neighbors(i):
                if dims[j] == 0 or (i, j) not in offsets:
                    continue
                o1, r1, c1 = offsets[(i, j)]
                o2, r2, c2 = offsets[(j, i)]
                a = digits[:, o1 : o1 + r1 * c1].reshape(-1, r1, c1)
                b = digits[:, o2 : o2 + r2 * c2].reshape(-1, r2, c2)
                acc = (acc + np.einsum("nij,njk->nik", a, b)) % q
            ok &= ~acc.reshape(len(codes), -1).any(axis=1)
        sols.extend(int(c) for c in codes[ok])
    return sols


def _gl_generators(n: int, q: int, ctx: PrimeFieldContext) -> list[np.ndarray]:
    if n == 0:
        return []
    gens = []
    if q > 2:
        d = np.eye(n, dtype=np.int64)
        d[0, 0] = ctx.primitive_root
        gens.append(d)
    if n >= 2:
        perm = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            perm[(i + 1) % n, i] = 1
        gens.append(perm)
        t = np.eye(n, dtype=np.int64)
        t[0, 1] = 1
        gens.append(t)
    return gens


def _inv_mod(m: np.ndarray, q: int) -> np.ndarray:
    n = m.shape[0]
    aug = np.hstack([m % q, np.eye(n, dtype=np.int64)])
    r, rank, _ = rref(aug, q)
    assert rank == n
    return r[:, n:]


class PieceTable:
    """All isomorphism classes of one graded piece (graph, dims, q): the
    relation variety partitioned into base-change orbits, plus a state-code
    lookup used for constant-time classification of restrictions and
    quotients."""

    def __init__(self, graph, dims, q, budget=ENUMERATION_BUDGET):
        self.graph = graph
        self.dims = tuple(int(d) for d in dims)
        self.q = q
        ctx = PrimeFieldContext(q)
        sols = enumerate_relation_variety(graph, self.dims, q, budget)
        self.total_solutions = len(sols)
        arrows = active_arrows(graph, self.dims)
        moves = []  # (arrow slot, left matrix or None, right matrix or None)
        for v in range(graph.num_vertices):
            for g in _gl_generators(self.dims[v], q, ctx):
                ginv = _inv_mod(g, q)
                action = []
                for slot, (i, j) in enumerate(arrows):
                    left = g if i == v else None
                    right = ginv if j == v else None
                    if left is not None or right is not None:
                        action.append((slot, left, right))
                moves.append(action)

        unassigned = dict.fromkeys(sols)
        self.class_of_code: dict[int, int] = {}
        self.classes: list[IsoClass] = []
        while unassigned:
            seed = next(iter(unassigned))
            orbit = {seed}
            frontier = [seed]
            while frontier:
                code = frontier.pop()
                mats = decode(graph, self.dims, code, q)
                for action in moves:
                    new = [m for m in mats]
                    for slot, left, right in action:
                        m = new[slot]
                        if left is not None:
                            m = left @ m % q
                        if right is not None:
                            m = m @ right % q
                        new[slot] = m
                    code2 = encode(graph, self.dims, [m.reshape(-1) for m in new], q)
                    if code2 not in orbit:
                        orbit.add(code2)
                        frontier.append(code2)
            cid = len(self.classes)
            canonical = min(orbit)
            rep = rep_from_code(graph, self.dims, canonical, q)
            cls = IsoClass(rep, len(orbit), profile(rep))
            self.classes.append(cls)
            for code in orbit:
                if code not in unassigned:
                    raise RuntimeError("orbit escaped the relation variety")
                del unassigned[code]
                self.class_of_code[code] = cid
        order = sorted(range(len(self.classes)), key=lambda c: self.classes[c].canonical.state())
        remap = {old: new for new, old in enumerate(order)}
        self.classes = [self.classes[c] for c in order]
        self.class_of_code = {code: remap[c] for code, c in self.class_of_code.items()}

    def class_index(self, rep: DoubleRep) -> int:
        return self.class_of_code[rep.state()]


@dataclass(frozen=True)
class IsoClass:
    canonical: DoubleRep
    orbit_size: int
    invariants: tuple

    @property
    def dims(self):
        return self.canonical.dims


def profile(rep: DoubleRep) -> tuple:
    """Field-stable isomorphism invariants: dims, the rank of every map, of
    every composable pair of maps, and of the joint in/out maps per vertex.

    Single and length-2 ranks alone do not separate all classes of the pieces
    in scope (two maps out of one vertex can have equal or distinct kernels
    at the same rank profile), hence the joint ranks.
    """
    graph, dims, q = rep.graph, rep.dims, rep.q
    singles = []
    for i, j in graph.arrows():
        if dims[i] and dims[j]:
            singles.append(((i, j), rref(rep.matrix(i, j), q)[1]))
        else:
            singles.append(((i, j), 0))
    pairs = []
    for i, j in graph.arrows():
        for k in graph.neighbors(j):
            if not (dims[i] and dims[j] and dims[k]):
                pairs.append(((i, j, k), 0))
                continue
            m = rep.matrix(i, j) @ rep.matrix(j, k) % q
            pairs.append(((i, j, k), rref(m, q)[1]))
    joints = []
    for v in range(graph.num_vertices):
        nbrs = [u for u in graph.neighbors(v) if dims[u]]
        if dims[v] == 0 or not nbrs:
            joints.append((v, 0, 0))
            continue
        out = np.vstack([rep.matrix(u, v) for u in nbrs])
        inc = np.hstack([rep.matrix(v, u) for u in nbrs])
        joints.append((v, rref(out, q)[1], rref(inc, q)[1]))
    return (tuple(dims), tuple(singles), tuple(pairs), tuple(joints))


def are_isomorphic(a: DoubleRep, b: DoubleRep, budget=ORBIT_BUDGET):
    """(isomorphic?, witness); the witness maps a onto b as a tuple of
    per-vertex base-change matrices."""
    if a.graph != b.graph or a.dims != b.dims or a.q != b.q:
        raise ValueError("representations live in different pieces")
    if profile(a) != profile(b):
        return False, None
    graph, dims, q = a.graph, a.dims, a.q
    ctx = PrimeFieldContext(q)
    arrows = active_arrows(graph, dims)
    gens = []
    for v in range(graph.num_vertices):
        for g in _gl_generators(dims[v], q, ctx):
            gens.append((v, g, _inv_mod(g, q)))
    start = a.state()
    target = b.state()
    identity = tuple(np.eye(dims[v], dtype=np.int64) for v in range(graph.num_vertices))
    seen = {start: identity}
    frontier = [start]
    while frontier:
        code = frontier.pop()
        if code == target:
            return True, seen[code]
        if len(seen) > budget:
            raise BudgetError("isomorphism search exceeded the orbit budget")
        mats = decode(graph, dims, code, q)
        witness = seen[code]
        for v, g, ginv in gens:
            new = list(mats)
            for slot, (i, j) in enumerate(arrows):
                m = new[slot]
                if i == v:
                    m = g @ m % q
                if j == v:
                    m = m @ ginv % q
                new[slot] = m
            code2 = encode(graph, dims, [m.reshape(-1) for m in new], q)
            if code2 not in seen:
                w = tuple(
                    (g @ witness[u] % q) if u == v else witness[u]
                    for u in range(graph.num_vertices)
                )
                seen[code2] = w
                frontier.append(code2)
    return (target in seen), seen.get(target)


def _complement_transform(basis: np.ndarray, dim: int, q: int):
    """Change of basis [subspace rows | complement standard vectors] and its
    inverse; the complement extends the RREF basis by the non-pivot axes."""
    if basis.shape[0] == 0:
        eye = np.eye(dim, dtype=np.int64)
        return eye, eye, []
    _, _, pivots = rref(basis, q)
    comp = [c for c in range(dim) if c not in set(pivots)]
    p_mat = np.zeros((dim, dim), dtype=np.int64)
    p_mat[:, : basis.shape[0]] = basis.T
    for t, c in enumerate(comp):
        p_mat[c, basis.shape[0] + t] = 1
    return p_mat, _inv_mod(p_mat, q), comp


def subobject_census(graph, table_c: PieceTable, c_index: int, sub_dims,
                     table_sub: PieceTable, table_quot: PieceTable) -> dict:
    """For one object C and one subobject dimension vector, count invariant
    subspace tuples by the isomorphism classes of their (restriction,
    quotient) pair.  Returns {(sub_class, quot_class): count}."""
    c_rep = table_c.classes[c_index].canonical
    dims = c_rep.dims
    q = c_rep.q
    ctx = PrimeFieldContext(q)
    sub_dims = tuple(int(d) for d in sub_dims)
    quot_dims = tuple(d - w for d, w in zip(dims, sub_dims))
    if any(w < 0 for w in quot_dims):
        raise ValueError("subobject dimensions exceed the ambient ones")
    per_vertex = [
        [m.array for m in enumerate_subspaces(dims[v], sub_dims[v], ctx)] if dims[v] else [np.zeros((sub_dims[v], 0), dtype=np.int64)]
        for v in range(graph.num_vertices)
    ]
    census: dict[tuple[int, int], int] = {}
    arrows_sub = active_arrows(graph, sub_dims)
    arrows_quot = active_arrows(graph, quot_dims)
    for tup in itertools.product(*per_vertex):
        transforms = [
            _complement_transform(tup[v], dims[v], q) for v in range(graph.num_vertices)
        ]
        ok = True
        blocks = {}
        for i, j in active_arrows(graph, dims):
            x = c_rep.matrix(i, j)
            t = transforms[i][1] @ x @ transforms[j][0] % q
            wi, wj = sub_dims[i], sub_dims[j]
            if t[wi:, :wj].any():
                ok = False
                break
            blocks[(i, j)] = t
        if not ok:
            continue
        sub_maps = []
        for i, j in arrows_sub:
            t = blocks.get((i, j))
            block = (
                t[: sub_dims[i], : sub_dims[j]]
                if t is not None
                else np.zeros((sub_dims[i], sub_dims[j]), dtype=np.int64)
            )
            sub_maps.append(block.reshape(-1))
        quot_maps = []
        for i, j in arrows_quot:
            t = blocks.get((i, j))
            block = (
                t[sub_dims[i] :, sub_dims[j] :]
                if t is not None
                else np.zeros((quot_dims[i], quot_dims[j]), dtype=np.int64)
            )
            quot_maps.append(block.reshape(-1))
        sub_code = encode(graph, sub_dims, sub_maps, q)
        quot_code = encode(graph, quot_dims, quot_maps, q)
        key = (table_sub.class_of_code[sub_code], table_quot.class_of_code[quot_code])
        census[key] = census.get(key, 0) + 1
    return census


def hall_count(a: IsoClass, b: IsoClass, c: IsoClass,
               table_sub: PieceTable, table_quot: PieceTable, table_c: PieceTable) -> int:
    """#{A' <= C with A' isomorphic to a and C/A' isomorphic to b}, exact."""
    if tuple(x + y for x, y in zip(a.dims, b.dims)) != c.dims:
        raise ValueError("dimension vectors do not add up")
    census = subobject_census(
        c.canonical.graph, table_c, table_c.classes.index(c), a.dims, table_sub, table_quot
    )
    ia = table_sub.classes.index(a)
    ib = table_quot.classes.index(b)
    return census.get((ia, ib), 0)
