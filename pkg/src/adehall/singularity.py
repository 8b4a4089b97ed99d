"""The polynomial algebra F_p[x, y] with a finite SL2 group action, the
ideal generated by positive-degree invariants, distinguished pairs of
irreducible copies inside m/n, cluster ideals of exceptional-fiber points,
and their equivariant Tor modules via the Koszul complex.

All module computations are degree-truncated linear algebra; no Groebner
bases.  Quotient models are certified a posteriori by the dimension and
regular-character checks, so a too-small truncation aborts instead of
returning wrong data.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import CharacterTable
from .groups import FiniteMatrixGroup
from .linalg import SpanBasis, nullspace, rref


class SingularityError(RuntimeError):
    pass


class StabilizationError(SingularityError):
    pass


def _mono_count(max_degree: int) -> int:
    return (max_degree + 1) * (max_degree + 2) // 2


def _mono_index(d: int, k: int) -> int:
    """Global index of x^(d-k) y^k among monomials ordered by degree then
    ascending y-power."""
    return d * (d + 1) // 2 + k


class EquivariantPolyAlgebra:
    """Per-degree monomial bases of F_p[x, y] with the substitution action
    (g . f)(v) = f(g^{-1} v), materialized as matrices on demand.

    Degree-d coefficient vectors are indexed by the power of y.  Action
    matrices have columns equal to the images of the basis monomials and are
    multiplicative in the group element.
    """

    def __init__(self, group: FiniteMatrixGroup, degree_cap: int | None = None):
        self.group = group
        self.p = group.ctx.p
        self.degree_cap = degree_cap if degree_cap is not None else 2 * group.order
        if self.degree_cap < 2 * group.order:
            raise SingularityError("degree cap below twice the group order")
        # linear substitution data: images of x and y under each element
        self._linear: list[np.ndarray] = []
        p = self.p
        for i in range(group.order):
            ginv = group.elements[group.inverse[i]].array
            # g.x = a x + b y, g.y = c x + d y  with g^{-1} = [[a, b], [c, d]]
            self._linear.append(np.array([[ginv[0, 0], ginv[1, 0]], [ginv[0, 1], ginv[1, 1]]]) % p)
        self._action_cache: dict[tuple[int, int], np.ndarray] = {}

    def action_matrix(self, elem: int, degree: int) -> np.ndarray:
        """Matrix of the element on the degree-d piece, columns = images."""
        key = (elem, degree)
        cached = self._action_cache.get(key)
        if cached is not None:
            return cached
        p = self.p
        if degree == 0:
            m = np.ones((1, 1), dtype=np.int64)
        elif degree == 1:
            m = self._linear[elem].copy()
        else:
            prev = self.action_matrix(elem, degree - 1)
            gx = self._linear[elem][:, 0]
            gy = self._linear[elem][:, 1]
            m = np.zeros((degree + 1, degree + 1), dtype=np.int64)
            for k in range(degree):
                m[:, k] = np.convolve(prev[:, k], gx) % p
            m[:, degree] = np.convolve(prev[:, degree - 1], gy) % p
        self._action_cache[key] = m
        return m

    def reynolds(self, degree: int) -> np.ndarray:
        """Averaging projector onto the degree-d invariants."""
        p = self.p
        acc = np.zeros((degree + 1, degree + 1), dtype=np.int64)
        for i in range(self.group.order):
            acc = (acc + self.action_matrix(i, degree)) % p
        return acc * pow(self.group.order % p, p - 2, p) % p


def _shift(vec: np.ndarray, a: int, b: int) -> np.ndarray:
    """Coefficients of x^a y^b times a degree-d form (vector indexed by
    y-power); result has degree d + a + b."""
    d = len(vec) - 1
    out = np.zeros(d + a + b + 1, dtype=np.int64)
    out[b : b + d + 1] = vec
    return out


@dataclass
class InvariantIdealN:
    """The ideal generated by all invariants of positive degree, held as
    per-degree RREF spans together with a minimal generator list."""

    algebra: EquivariantPolyAlgebra
    generators: list[tuple[int, np.ndarray]]
    spans: dict[int, SpanBasis]

    def span(self, degree: int) -> SpanBasis:
        """Degree-d piece of the ideal, extended by shifting as needed."""
        top = max(self.spans)
        while top < degree:
            top += 1
            basis = SpanBasis(top + 1, self.algebra.p)
            for row in self.spans[top - 1].rows:
                basis.add(_shift(row, 1, 0))
                basis.add(_shift(row, 0, 1))
            for d, g in self.generators:
                if d == top:
                    basis.add(g)
            self.spans[top] = basis
        return self.spans[degree]


def invariant_ideal(alg: EquivariantPolyAlgebra) -> InvariantIdealN:
    """Minimal homogeneous generators of the ideal of positive-degree
    invariants, found degree by degree with the Reynolds projector."""
    p = alg.p
    generators: list[tuple[int, np.ndarray]] = []
    spans: dict[int, SpanBasis] = {0: SpanBasis(1, p)}
    for d in range(1, alg.degree_cap + 1):
        basis = SpanBasis(d + 1, p)
        if d - 1 in spans:
            for row in spans[d - 1].rows:
                basis.add(_shift(row, 1, 0))
                basis.add(_shift(row, 0, 1))
        r = alg.reynolds(d)
        inv_rows, rank, _ = rref(r.T, p)
        for row in inv_rows[:rank]:
            if basis.add(row):
                generators.append((d, row.copy()))
        spans[d] = basis
    for d, g in generators:
        for i in range(alg.group.order):
            img = alg.action_matrix(i, d) @ g % p
            if not np.array_equal(img, g):
                raise SingularityError("found a non-invariant generator")
    return InvariantIdealN(alg, generators, spans)


@dataclass(frozen=True)
class IrreducibleCopy:
    """One irreducible summand of m/n: homogeneous polynomial representatives
    of a copy of pi sitting in a single degree."""

    pi: int
    degree: int
    lifts: np.ndarray  # rows = degree-d coefficient vectors


@dataclass(frozen=True)
class IsotypicPair:
    """The distinguished pair of copies of pi whose pencil of graphs carries
    the exceptional-fiber component attached to pi."""

    pi: int
    first: IrreducibleCopy
    second: IrreducibleCopy
    matched_second: np.ndarray  # second's lifts re-based so row t matches first's row t
    all_copies: tuple[IrreducibleCopy, ...]


class QuotientModel:
    """A finite-dimensional quotient A / I presented on standard monomials,
    with multiplication by x and y and the action of class representatives."""

    def __init__(self, alg, dim, std_indices, x_mat, y_mat, class_action, characters):
        self.algebra = alg
        self.dim = dim
        self.std_indices = std_indices
        self.x = x_mat
        self.y = y_mat
        self.class_action = class_action  # one matrix per conjugacy class rep
        self.characters = characters  # tuple of traces mod p, one per class


@dataclass
class PointIdeal:
    """A cluster ideal I(W) = A.W + n with its certified quotient model."""

    pi: int
    parameter: tuple  # (lam, mu) for chart points, ("intersection", rho, a, b) else
    w_polys: list[dict[int, np.ndarray]]
    model: QuotientModel
    dim_ok: bool
    regular_ok: bool

    @property
    def clean(self) -> bool:
        return self.dim_ok and self.regular_ok


def _quotient_action(alg, classes, d, n_span):
    """Action of class representatives on (m/n)_d, with the complement
    monomial basis; returns (complement indices, action matrices)."""
    p = alg.p
    mat = n_span.matrix()
    pivots = list(n_span.pivots)
    comp = [k for k in range(d + 1) if k not in set(pivots)]
    mats = []
    for rep in classes.representatives:
        a = alg.action_matrix(rep, d)
        cols = []
        for k in comp:
            v = a[:, k].copy()
            for row, c in zip(mat, pivots):
                if v[c]:
                    v = (v - v[c] * row) % p
            cols.append(v[comp])
        mats.append(np.array(cols, dtype=np.int64).T % p if comp else np.zeros((0, 0), dtype=np.int64))
    return comp, mats


def _element_quotient_action(alg, elem, d, n_span, comp):
    p = alg.p
    mat = n_span.matrix()
    pivots = list(n_span.pivots)
    a = alg.action_matrix(elem, d)
    cols = []
    for k in comp:
        v = a[:, k].copy()
        for row, c in zip(mat, pivots):
            if v[c]:
                v = (v - v[c] * row) % p
        cols.append(v[comp])
    return np.array(cols, dtype=np.int64).T % p if comp else np.zeros((0, 0), dtype=np.int64)


def isotypic_copies(alg, nid: InvariantIdealN, table: CharacterTable, pi: int) -> list[IrreducibleCopy]:
    """All irreducible summands of the pi-isotypic part of m/n, degree by
    degree, with canonical seed-generated splittings when a degree carries
    more than one copy."""
    p = alg.p
    group = alg.group
    classes = table.classes
    d_pi = table.degrees[pi]
    copies: list[IrreducibleCopy] = []
    for d in range(1, alg.degree_cap + 1):
        n_span = nid.span(d)
        comp = [k for k in range(d + 1) if k not in set(n_span.pivots)]
        if not comp:
            break  # m/n is a graded quotient: once a degree dies they all do
        qdim = len(comp)
        proj = np.zeros((qdim, qdim), dtype=np.int64)
        for i in range(group.order):
            chi = table.values[pi, classes.class_of[group.inverse[i]]]
            proj = (proj + chi * _element_quotient_action(alg, i, d, n_span, comp)) % p
        proj = proj * (table.degrees[pi] * pow(group.order % p, p - 2, p)) % p
        rank = rref(proj, p)[1]
        if rank % d_pi != 0:
            raise SingularityError("isotypic projector rank is not a multiple of dim pi")
        mult = rank // d_pi
        if mult == 0:
            continue
        class_mats = [
            _element_quotient_action(alg, i, d, n_span, comp) for i in range(group.order)
        ]
        found = SpanBasis(qdim, p)
        degree_copies: list[IrreducibleCopy] = []
        for seed in range(qdim):
            if len(degree_copies) == mult:
                break
            v = proj[:, seed] % p
            if not v.any() or found.contains(v):
                continue
            sub = SpanBasis(qdim, p)
            sub.add(v)
            frontier = [v]
            while frontier:
                w = frontier.pop()
                for m in class_mats:
                    img = m @ w % p
                    if sub.add(img):
                        frontier.append(img)
            if sub.dim != d_pi:
                continue  # seed generated more than one copy; try the next
            trial = SpanBasis(qdim, p)
            for row in found.rows:
                trial.add(row.copy())
            grown = sum(1 for row in sub.matrix() if trial.add(row))
            if grown != d_pi:
                continue  # overlaps a copy already extracted
            found = trial
            lifts = np.zeros((d_pi, d + 1), dtype=np.int64)
            for t, row in enumerate(sub.matrix()):
                lifts[t, comp] = row
            degree_copies.append(IrreducibleCopy(pi, d, lifts))
        if len(degree_copies) != mult:
            raise SingularityError(
                f"could not split the degree-{d} isotypic piece of pi={pi} into copies"
            )
        copies.extend(degree_copies)
    return copies


def _copy_rep_matrices(alg, nid, copy: IrreducibleCopy, elems) -> list[np.ndarray]:
    """rho(g)[t, u] with g . lift_t = sum_u rho[t, u] lift_u modulo n; the
    images are reduced mod the degree-d piece of n before taking coordinates."""
    p = alg.p
    n_span = nid.span(copy.degree)
    basis = SpanBasis(copy.degree + 1, p)
    for row in copy.lifts:
        basis.add(row)
    change = np.array([basis.coords(row) for row in copy.lifts], dtype=np.int64)
    change_inv = _mat_inverse(change, p)
    mats = []
    for g in elems:
        a = alg.action_matrix(g, copy.degree)
        rows = []
        for t in range(copy.lifts.shape[0]):
            img = n_span.reduce(a @ copy.lifts[t] % p)
            rows.append(basis.coords(img))
        mats.append(np.array(rows, dtype=np.int64) @ change_inv % p)
    return mats


def _mat_inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    aug = np.hstack([m % p, np.eye(n, dtype=np.int64)])
    r, rank, _ = rref(aug, p)
    if rank < n:
        raise SingularityError("singular change of basis")
    return r[:, n:]


def _equivariant_match(alg, nid, a: IrreducibleCopy, b: IrreducibleCopy) -> np.ndarray:
    """Invertible F with rho_a(g) F = F rho_b(g) for every group element; the
    rows of F @ b.lifts then transform exactly like a.lifts."""
    p = alg.p
    d = a.lifts.shape[0]
    elems = range(alg.group.order)
    rho_a = _copy_rep_matrices(alg, nid, a, elems)
    rho_b = _copy_rep_matrices(alg, nid, b, elems)
    rows = []
    for ra, rb in zip(rho_a, rho_b):
        for t in range(d):
            for w in range(d):
                row = np.zeros(d * d, dtype=np.int64)
                for u in range(d):
                    row[u * d + w] += ra[t, u]
                for s in range(d):
                    row[t * d + s] -= rb[s, w]
                rows.append(row % p)
    ker = nullspace(np.array(rows, dtype=np.int64), p)
    if ker.shape[0] != 1:
        raise SingularityError(f"equivariant matching space has dimension {ker.shape[0]}")
    f = ker[0].reshape(d, d) % p
    lead = f[np.nonzero(f)][0] if f.any() else 0
    if lead == 0:
        raise SingularityError("zero equivariant matching")
    f = f * pow(int(lead), p - 2, p) % p
    _mat_inverse(f, p)  # must be invertible
    return f


def graph_w_polys(pair: IsotypicPair, lam: int, mu: int, p: int) -> list[dict[int, np.ndarray]]:
    """Polynomial generators of the graph submodule {lam v' + mu v''}."""
    out = []
    for t in range(pair.first.lifts.shape[0]):
        poly: dict[int, np.ndarray] = {}
        if lam % p:
            poly[pair.first.degree] = pair.first.lifts[t] * (lam % p) % p
        if mu % p:
            d2 = pair.second.degree
            add = pair.matched_second[t] * (mu % p) % p
            if d2 in poly:
                poly[d2] = (poly[d2] + add) % p
            else:
                poly[d2] = add
        out.append({d: v for d, v in poly.items() if v.any()})
    return out


def cluster_quotient(
    alg: EquivariantPolyAlgebra,
    nid: InvariantIdealN,
    table: CharacterTable,
    w_polys: list[dict[int, np.ndarray]],
) -> QuotientModel:
    """Quotient A / (A.W + n) by degree-truncated linear algebra.

    The working degree is raised until the quotient dimension is stable for
    two consecutive increments and no standard monomial sits in the top two
    degrees; the caller checks dimension and character afterwards.
    """
    p = alg.p
    classes = table.classes
    maxdeg = max((max(poly) for poly in w_polys if poly), default=1)
    history: list[int] = []
    for top in range(maxdeg + 2, alg.degree_cap + 1):
        count = _mono_count(top)
        rows = []
        for poly in w_polys:
            if not poly:
                continue
            md = max(poly)
            for a in range(top - md + 1):
                for b in range(top - md - a + 1):
                    row = np.zeros(count, dtype=np.int64)
                    for d, vec in poly.items():
                        sh = _shift(vec, a, b)
                        dd = d + a + b
                        row[_mono_index(dd, 0) : _mono_index(dd, dd) + 1] += sh
                    rows.append(row % p)
        for d in range(1, top + 1):
            for vec in nid.span(d).rows:
                row = np.zeros(count, dtype=np.int64)
                row[_mono_index(d, 0) : _mono_index(d, d) + 1] = vec
                rows.append(row)
        mat = np.array(rows, dtype=np.int64) if rows else np.zeros((0, count), dtype=np.int64)
        red, rank, pivots = rref(mat, p)
        dim = count - rank
        history.append(dim)
        std = [i for i in range(count) if i not in set(pivots)]
        std_degrees = [_degree_of_index(i) for i in std]
        if (
            len(history) >= 3
            and history[-1] == history[-2] == history[-3]
            and all(d <= top - 2 for d in std_degrees)
        ):
            return _build_model(alg, table, red[:rank], pivots, std, top)
    raise StabilizationError(
        f"quotient dimension did not stabilize below degree {alg.degree_cap}: {history}"
    )


def _degree_of_index(i: int) -> int:
    d = 0
    while _mono_index(d + 1, 0) <= i:
        d += 1
    return d


def _build_model(alg, table, red, pivots, std, top):
    p = alg.p
    count = _mono_count(top)
    piv_list = list(pivots)
    piv_pos = {c: r for r, c in enumerate(piv_list)}

    def reduce_vec(v):
        out = v % p
        nz = [c for c in piv_list if out[c]]
        if nz:
            coeff = out[piv_list]
            out = (out - coeff @ red) % p
        return out[std]

    dim = len(std)
    x_mat = np.zeros((dim, dim), dtype=np.int64)
    y_mat = np.zeros((dim, dim), dtype=np.int64)
    for t, idx in enumerate(std):
        d = _degree_of_index(idx)
        k = idx - _mono_index(d, 0)
        ex = np.zeros(count, dtype=np.int64)
        ex[_mono_index(d + 1, k)] = 1
        x_mat[:, t] = reduce_vec(ex)
        ey = np.zeros(count, dtype=np.int64)
        ey[_mono_index(d + 1, k + 1)] = 1
        y_mat[:, t] = reduce_vec(ey)

    class_action = []
    characters = []
    for rep in table.classes.representatives:
        q = np.zeros((dim, dim), dtype=np.int64)
        per_degree = {}
        for t, idx in enumerate(std):
            d = _degree_of_index(idx)
            k = idx - _mono_index(d, 0)
            if d not in per_degree:
                per_degree[d] = alg.action_matrix(rep, d)
            img = per_degree[d][:, k]
            ev = np.zeros(count, dtype=np.int64)
            ev[_mono_index(d, 0) : _mono_index(d, d) + 1] = img
            q[:, t] = reduce_vec(ev)
        class_action.append(q)
        characters.append(int(q.trace() % p))
    return QuotientModel(alg, dim, tuple(std), x_mat, y_mat, class_action, tuple(characters))


def _is_regular_character(model: QuotientModel, table: CharacterTable) -> bool:
    p = model.algebra.p
    group = model.algebra.group
    id_class = table.classes.class_of[group.identity_index]
    for j, val in enumerate(model.characters):
        want = group.order % p if j == id_class else 0
        if val != want:
            return False
    return True


def point_ideal(
    alg, nid, table, pair: IsotypicPair, lam: int, mu: int, strict: bool = True
) -> PointIdeal:
    """Cluster ideal of the chart point (lam : mu) on the component attached
    to pi; strict mode insists on dimension |G| and the regular character."""
    p = alg.p
    if lam % p == 0 and mu % p == 0:
        raise ValueError("(lam, mu) must be a projective parameter")
    w = graph_w_polys(pair, lam, mu, p)
    model = cluster_quotient(alg, nid, table, w)
    dim_ok = model.dim == alg.group.order
    reg_ok = _is_regular_character(model, table)
    if strict and not (dim_ok and reg_ok):
        raise SingularityError(
            f"chart point ({lam}:{mu}) of pi={pair.pi}: dim {model.dim}, regular={reg_ok}"
        )
    return PointIdeal(pair.pi, (lam % p, mu % p), w, model, dim_ok, reg_ok)


def isotypic_pairs(alg, nid, table: CharacterTable) -> dict[int, IsotypicPair]:
    """For every nontrivial irreducible, the distinguished pair of copies in
    m/n: the unique pair whose pencil of graph ideals passes the cluster
    checks (dimension |G|, regular character) at interior parameters."""
    if alg.group.order == 2:
        raise SingularityError("the order-2 cyclic group is excluded here")
    out = {}
    for pi in range(table.count):
        if pi == table.trivial_index:
            continue
        copies = isotypic_copies(alg, nid, table, pi)
        if len(copies) < 2:
            raise SingularityError(f"pi={pi}: fewer than two copies in m/n")
        pair = _select_pair(alg, nid, table, pi, copies)
        out[pi] = pair
    return out


def _select_pair(alg, nid, table, pi, copies) -> IsotypicPair:
    p = alg.p
    candidates = []
    for i in range(len(copies)):
        for j in range(i + 1, len(copies)):
            candidates.append((copies[i], copies[j]))
    candidates.sort(key=lambda ab: (ab[0].degree, ab[1].degree))
    interior = [(1, c) for c in range(1, p)]
    need = min(3, max(2, p - 4))
    for a, b in candidates:
        try:
            f = _equivariant_match(alg, nid, a, b)
        except SingularityError:
            continue
        pair = IsotypicPair(pi, a, b, f @ b.lifts % p, tuple(copies))
        clean = 0
        for lam, mu in interior:
            try:
                pt = point_ideal(alg, nid, table, pair, lam, mu, strict=False)
            except StabilizationError:
                break
            if pt.clean:
                clean += 1
            if clean >= need:
                return pair
    raise SingularityError(f"no distinguished pair of copies found for pi={pi}")


def chart_scan(alg, nid, table, pair: IsotypicPair) -> list[PointIdeal]:
    """Cluster checks at every point of the chart projective line, boundary
    included; intersection parameters show up as the non-clean points."""
    p = alg.p
    points = [(1, 0), (0, 1)] + [(1, c) for c in range(1, p)]
    out = []
    for lam, mu in points:
        try:
            out.append(point_ideal(alg, nid, table, pair, lam, mu, strict=False))
        except StabilizationError:
            out.append(PointIdeal(pair.pi, (lam, mu), [], None, False, False))
    return out


def intersection_ideal(alg, nid, table, pairs, pi, rho, scans=None):
    """Cluster ideal at the intersection of the components attached to two
    adjacent nontrivial irreducibles: the ideal generated by one copy from
    each pencil, found by searching the non-clean chart points and validated
    by dimension, regular character, and the Tor_1 = C + pi + rho profile."""
    p = alg.p
    scans = scans or {}
    candidates = {}
    for s in (pi, rho):
        scan = scans.get(s) or chart_scan(alg, nid, table, pairs[s])
        scans[s] = scan
        dirty = [pt for pt in scan if not pt.clean]
        if not dirty:
            raise SingularityError(f"no intersection candidates on the chart of pi={s}")
        candidates[s] = dirty
    best = None
    for pt_pi in candidates[pi]:
        for pt_rho in candidates[rho]:
            if not pt_pi.w_polys or not pt_rho.w_polys:
                continue
            w = pt_pi.w_polys + pt_rho.w_polys
            try:
                model = cluster_quotient(alg, nid, table, w)
            except StabilizationError:
                continue
            if model.dim != alg.group.order or not _is_regular_character(model, table):
                continue
            tor = koszul_tor_model(model, table)
            want = _expected_intersection_tor1(table, pi, rho)
            if tuple(tor.multiplicities[1]) != want:
                continue
            ideal = PointIdeal(
                pi, ("intersection", rho, pt_pi.parameter, pt_rho.parameter), w, model, True, True
            )
            if best is None:
                best = (ideal, tor)
    if best is None:
        raise SingularityError(f"no valid intersection ideal for pi={pi}, rho={rho}")
    return best


def _expected_intersection_tor1(table, pi, rho):
    want = [0] * table.count
    want[table.trivial_index] = 1
    want[pi] += 1
    want[rho] += 1
    return tuple(want)


@dataclass(frozen=True)
class TorTriple:
    """Tor_0, Tor_1, Tor_2 of the cluster against the origin: dimensions,
    characters mod p, and multiplicity vectors over the irreducibles."""

    dims: tuple[int, int, int]
    characters: tuple[tuple[int, ...], ...]
    multiplicities: tuple[tuple[int, ...], ...]


def _subspace_trace(basis_rows: np.ndarray, op: np.ndarray, p: int) -> int:
    """Trace of op restricted to the invariant subspace spanned by the rows."""
    if basis_rows.shape[0] == 0:
        return 0
    span = SpanBasis(basis_rows.shape[1], p)
    for row in basis_rows:
        span.add(row)
    b = span.matrix()
    images = (op @ b.T % p).T
    r = np.array([span.coords(img) for img in images], dtype=np.int64)
    return int(r.trace() % p)


def _char_multiplicities(table: CharacterTable, char: tuple[int, ...], dim: int) -> tuple[int, ...]:
    p = table.p
    group, classes = table.group, table.classes
    inv_order = pow(group.order % p, p - 2, p)
    out = []
    for pi in range(table.count):
        s = 0
        for j in range(classes.count):
            s += classes.sizes[j] * char[j] * table.values[pi, classes.inverse_class[j]]
        m = s % p * inv_order % p
        if m > dim:
            raise SingularityError(f"multiplicity lift {m} exceeds the module dimension {dim}")
        out.append(int(m))
    return tuple(out)


def koszul_tor_model(model: QuotientModel, table: CharacterTable) -> TorTriple:
    """Cohomology of  O -> O (x) tau -> O  with differentials built from the
    two coordinate multiplications; the middle term carries the diagonal
    action twisted by the defining representation."""
    p = model.algebra.p
    n = model.dim
    x, y = model.x, model.y
    if not np.array_equal((x @ y - y @ x) % p, np.zeros((n, n), dtype=np.int64)):
        raise SingularityError("multiplication operators do not commute; bad truncation")
    d2 = np.vstack([y, (-x) % p]) % p  # v -> (y v, -x v)
    d1 = np.hstack([x, y]) % p  # (v, w) -> x v + y w
    if (d1 @ d2 % p).any():
        raise SingularityError("d1 . d2 != 0")

    k2 = nullspace(d2, p)
    k1 = nullspace(d1, p)
    im2 = rref(d2.T, p)
    im2_rows = im2[0][: im2[1]]
    im1 = rref(d1.T, p)
    im1_rows = im1[0][: im1[1]]

    dims = (
        n - im1[1],
        k1.shape[0] - im2[1],
        k2.shape[0],
    )

    group = model.algebra.group
    lin = []
    for rep in table.classes.representatives:
        ginv = group.elements[group.inverse[rep]].array
        lin.append(np.array([[ginv[0, 0], ginv[1, 0]], [ginv[0, 1], ginv[1, 1]]]) % p)

    char0, char1, char2 = [], [], []
    for j, rep in enumerate(table.classes.representatives):
        q = model.class_action[j]
        mid = np.kron(lin[j], q) % p
        t0 = (model.characters[j] - _subspace_trace(im1_rows, q, p)) % p
        t1 = (_subspace_trace(k1, mid, p) - _subspace_trace(im2_rows, mid, p)) % p
        t2 = _subspace_trace(k2, q, p)
        char0.append(t0)
        char1.append(t1)
        char2.append(t2)

    for j in range(table.classes.count):
        if (char0[j] - char1[j] + char2[j]) % p != 0:
            raise SingularityError("alternating character sum is nonzero")

    mults = (
        _char_multiplicities(table, tuple(char0), dims[0]),
        _char_multiplicities(table, tuple(char1), dims[1]),
        _char_multiplicities(table, tuple(char2), dims[2]),
    )
    return TorTriple(dims, (tuple(char0), tuple(char1), tuple(char2)), mults)


def koszul_tor(ideal: PointIdeal, table: CharacterTable) -> TorTriple:
    return koszul_tor_model(ideal.model, table)
