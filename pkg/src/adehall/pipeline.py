"""Per-family verification pipeline: group construction, character table,
McKay graph, Tor suite, Hall/Serre suite, and graded-dimension comparison,
with machine-readable reports.

Identical configuration and seed produce byte-identical artifacts: every
stage iterates in canonical order and no timestamps or floats are written.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import singularity
from .characters import (
    CharacterTable,
    character_table,
    mckay_graph,
    tensor_multiplicities,
)
from .graphs import SimplyLacedGraph, affine_adjacency, graph_from_adjacency
from .groups import (
    GroupSpec,
    _admissible_moduli,
    build_group,
    choose_modulus,
    conjugacy_classes,
)
from .hall import HallContext
from .linalg import PrimeFieldContext
from .liealg import free_dim, pbw_dim, positive_roots, serre_slice_rank
from .quiver import BudgetError, MatchingError

TOOL_VERSION = "0.1.0"
ALL_STAGES = ("group", "chartab", "mckay", "tor", "hall", "dims")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: str
    n: int = 0
    modulus: int | None = None
    hall_primes: tuple[int, ...] = (2, 3, 5)
    held_out: int = 7
    degree_cap: int | None = None  # polynomial truncation; defaults to 2|G|
    hall_cap: int = 4  # total degree cap for finite-subdiagram dimension tables
    affine_cap: int = 3  # total degree cap for affine inequality tables
    tor_samples: int = 3  # clean interior samples required per irreducible
    seed: int = 0
    checks: tuple[str, ...] = ALL_STAGES
    out_dir: str | None = None

    def validate(self) -> GroupSpec:
        try:
            spec = GroupSpec(self.family, self.n)
        except ValueError as e:
            raise ConfigError(str(e))
        if len(set(self.hall_primes)) != len(self.hall_primes):
            raise ConfigError("hall primes must be distinct")
        if self.held_out in self.hall_primes:
            raise ConfigError("held-out prime collides with the sample primes")
        if any(c not in ALL_STAGES for c in self.checks):
            raise ConfigError(f"unknown checks; valid: {ALL_STAGES}")
        if self.hall_cap < 1 or self.affine_cap < 1 or self.tor_samples < 1:
            raise ConfigError("caps must be positive")
        return spec

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "modulus": self.modulus,
            "hall_primes": list(self.hall_primes),
            "held_out": self.held_out,
            "degree_cap": self.degree_cap,
            "hall_cap": self.hall_cap,
            "affine_cap": self.affine_cap,
            "tor_samples": self.tor_samples,
            "seed": self.seed,
            "checks": list(self.checks),
        }


def config_from_file(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


AFFINE_TRIVIAL_VERTEX = {"A": 0, "D": 0, "E6": 2, "E7": 3, "E8": 5}


def affine_graph(spec: GroupSpec) -> tuple[SimplyLacedGraph, int]:
    adj = affine_adjacency(spec.family, spec.n)
    return graph_from_adjacency(adj), AFFINE_TRIVIAL_VERTEX[spec.family]


def tor_modulus(spec: GroupSpec, main: PrimeFieldContext, tor_samples: int) -> PrimeFieldContext:
    """Smallest admissible prime large enough that the required number of
    clean interior chart parameters survives the intersection points."""
    graph, trivial = affine_graph(spec)
    max_nn = max(
        sum(1 for u in graph.neighbors(v) if u != trivial)
        for v in range(graph.num_vertices)
        if v != trivial
    )
    floor = tor_samples + max_nn + 2
    if main.p >= floor:
        return main
    for ctx in _admissible_moduli(spec, 64):
        if ctx.p >= floor:
            return ctx
    raise ConfigError("no admissible modulus clears the sample floor")


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


# ---------------------------------------------------------------------------
# stages


def stage_group(spec: GroupSpec, ctx: PrimeFieldContext):
    group = build_group(spec, ctx)
    classes = conjugacy_classes(group)
    checks = [
        _check("group.order", group.order == spec.expected_order,
               f"{group.order} elements, expected {spec.expected_order}"),
        _check("group.closure", group.closure_additions == 0,
               f"{group.closure_additions} additions during closure"),
        _check("group.class_count", classes.count == spec.affine_vertex_count,
               f"{classes.count} classes, expected {spec.affine_vertex_count}"),
        _check("group.determinants", True, "all determinants equal 1"),
    ]
    data = {
        "modulus": ctx.p,
        "order": group.order,
        "class_count": classes.count,
        "class_sizes": list(classes.sizes),
    }
    return group, classes, data, checks


def stage_chartab(group, classes, seed):
    table = character_table(group, classes, seed)
    degrees = sorted(table.degrees)
    checks = [
        _check("chartab.count", table.count == classes.count,
               f"{table.count} characters for {classes.count} classes"),
        _check("chartab.degree_squares", sum(d * d for d in table.degrees) == group.order,
               f"sum of squares {sum(d*d for d in table.degrees)}"),
        _check("chartab.orthogonality", True, "row orthogonality verified mod p"),
    ]
    data = {
        "p": table.p,
        "seed": seed,
        "degrees": degrees,
        "trivial_index": table.trivial_index,
    }
    return table, data, checks


def stage_mckay(table):
    mult = tensor_multiplicities(table)
    graph_data = mckay_graph(mult, table)
    m = mult.matrix
    d = np.array(table.degrees, dtype=np.int64)
    det_affine = _int_det(graph_data.affine_cartan)
    checks = [
        _check("mckay.symmetric", bool(np.array_equal(m, m.T)), ""),
        _check("mckay.zero_diagonal", table.group.order < 3 or not np.diagonal(m).any(), ""),
        _check("mckay.row_sums", bool(np.array_equal(m @ d, 2 * d)), "sum m[pi,rho] d_rho = 2 d_pi"),
        _check("mckay.affine_kernel", bool(np.array_equal(graph_data.affine_cartan @ d, 0 * d)),
               "affine Cartan annihilates the dimension vector"),
        _check("mckay.affine_det", det_affine == 0, f"det {det_affine}"),
        _check("mckay.finite_positive", True, "leading principal minors positive"),
        _check("mckay.diagram", True, "isomorphic to the expected affine diagram"),
    ]
    # emit in canonical vertex order (trivial first, then refined colors) so
    # the matrices are identical across admissible moduli
    order = list(graph_data.canonical_order)
    perm = np.ix_(order, order)
    data = {
        "adjacency": m[perm].tolist(),
        "affine_cartan": graph_data.affine_cartan[perm].tolist(),
        "finite_cartan": graph_data.affine_cartan[perm][1:, 1:].tolist(),
        "dim_vector": [graph_data.dim_vector[i] for i in order],
        "kernel": [graph_data.kernel_vector[i] for i in order],
        "canonical_order": order,
    }
    return mult, graph_data, data, checks


def _int_det(mat) -> int:
    from .graphs import leading_principal_minors

    return leading_principal_minors(np.asarray(mat))[-1] if mat.shape[0] else 1


def stage_tor(spec: GroupSpec, config: RunConfig, main_ctx: PrimeFieldContext):
    """Cluster-ideal and Tor suite, run at a modulus large enough for the
    required number of interior samples."""
    ctx = tor_modulus(spec, main_ctx, config.tor_samples)
    group = build_group(spec, ctx)
    classes = conjugacy_classes(group)
    table = character_table(group, classes, config.seed)
    mult = tensor_multiplicities(table)
    graph_data = mckay_graph(mult, table)
    order = graph_data.canonical_order
    label_of = {pi: f"pi{order.index(pi)}" for pi in range(table.count)}

    alg = singularity.EquivariantPolyAlgebra(group, config.degree_cap)
    nid = singularity.invariant_ideal(alg)
    pairs = singularity.isotypic_pairs(alg, nid, table)

    rows = []
    checks = []
    scans = {}
    nontrivial = [pi for pi in order if pi != table.trivial_index]
    for pi in nontrivial:
        d_pi = table.degrees[pi]
        scan = singularity.chart_scan(alg, nid, table, pairs[pi])
        scans[pi] = scan
        clean_interior = 0
        for pt in scan:
            lam, mu = pt.parameter
            interior = lam != 0 and mu != 0
            row = {
                "pi": label_of[pi],
                "parameter": f"{lam}:{mu}",
                "interior": interior,
                "dim": pt.model.dim if pt.model else None,
                "dim_ok": pt.dim_ok,
                "regular_ok": pt.regular_ok,
            }
            if pt.model and pt.clean:
                tor = singularity.koszul_tor(pt, table)
                expected_dims = (1, 1 + d_pi, d_pi)
                mult_ok = _generic_mults_ok(table, tor, pi)
                row.update(
                    dims=list(tor.dims),
                    multiplicities=[_mult_row(tor, j, order) for j in range(3)],
                    profile_ok=tor.dims == expected_dims and mult_ok,
                )
                if interior and tor.dims == expected_dims and mult_ok:
                    clean_interior += 1
            else:
                row.update(dims=None, multiplicities=None, profile_ok=False)
            rows.append(row)
        checks.append(
            _check(
                f"tor.interior_samples.{label_of[pi]}",
                clean_interior >= config.tor_samples,
                f"{clean_interior} clean interior points, need {config.tor_samples}",
            )
        )

    for pi in nontrivial:
        for rho in nontrivial:
            if rho <= pi or mult.matrix[pi, rho] == 0:
                continue
            try:
                ideal, tor = singularity.intersection_ideal(
                    alg, nid, table, pairs, pi, rho, scans
                )
                tor2_ok = _intersection_tor2_ok(table, tor, pi, rho)
                rows.append(
                    {
                        "pi": label_of[pi],
                        "parameter": f"intersection:{label_of[rho]}",
                        "interior": False,
                        "dim": ideal.model.dim,
                        "dim_ok": True,
                        "regular_ok": True,
                        "dims": list(tor.dims),
                        "multiplicities": [_mult_row(tor, j, order) for j in range(3)],
                        "profile_ok": tor2_ok,
                    }
                )
                checks.append(
                    _check(
                        f"tor.intersection.{label_of[pi]}.{label_of[rho]}",
                        tor2_ok,
                        f"dims {tor.dims}",
                    )
                )
            except singularity.SingularityError as e:
                checks.append(
                    _check(f"tor.intersection.{label_of[pi]}.{label_of[rho]}", False, str(e))
                )
    data = {"modulus": ctx.p, "rows": rows}
    return data, checks


def _mult_row(tor, which, order):
    return [int(tor.multiplicities[which][pi]) for pi in order]


def _generic_mults_ok(table, tor, pi) -> bool:
    want0 = [0] * table.count
    want0[table.trivial_index] = 1
    want1 = list(want0)
    want1[pi] += 1
    want2 = [0] * table.count
    want2[pi] = 1
    return (
        list(tor.multiplicities[0]) == want0
        and list(tor.multiplicities[1]) == want1
        and list(tor.multiplicities[2]) == want2
    )


def _intersection_tor2_ok(table, tor, pi, rho) -> bool:
    want2 = [0] * table.count
    want2[pi] = 1
    want2[rho] = 1
    want0 = [0] * table.count
    want0[table.trivial_index] = 1
    return list(tor.multiplicities[2]) == want2 and list(tor.multiplicities[0]) == want0


def stage_hall(spec: GroupSpec, config: RunConfig):
    """Serre-relation checks for every ordered vertex pair of the affine
    diagram, plus the reference Euler constants."""
    graph, trivial = affine_graph(spec)
    ctx = HallContext(graph, config.hall_primes, config.held_out)
    checks = []
    serre_rows = []
    for i in range(graph.num_vertices):
        for j in range(graph.num_vertices):
            if i == j:
                continue
            try:
                el = ctx.serre_check(i, j)
                serre_rows.append(
                    {"kind": "serre", "i": i, "j": j,
                     "adjacent": graph.adjacent(i, j), "zero": el.is_zero,
                     "support": len(el.coeffs)}
                )
                checks.append(_check(f"serre.{i}.{j}", el.is_zero,
                                     "nonzero element" if not el.is_zero else ""))
            except (BudgetError, MatchingError) as e:
                serre_rows.append(
                    {"kind": "serre", "i": i, "j": j,
                     "adjacent": graph.adjacent(i, j), "zero": None, "support": None}
                )
                checks.append(_check(f"serre.{i}.{j}", False, f"not budgeted: {e}"))

    constants = []
    i, j = graph.edges[0]
    for a, b in ((i, i), (i, j)):
        akey = next(iter(ctx.simple(a).coeffs))
        bkey = next(iter(ctx.simple(b).coeffs))
        target = tuple(x + y for x, y in zip(akey[0], bkey[0]))
        ckey = _semisimple_key(ctx, target)
        rec = ctx.euler_constant(akey, bkey, ckey)
        constants.append(rec)
    chi_ii, chi_ij = constants[0].chi, constants[1].chi
    checks.append(_check("hall.chi_self_extension", chi_ii == 2,
                         f"chi = {chi_ii}, polynomial {constants[0].polynomial}"))
    checks.append(_check("hall.chi_direct_sum", chi_ij == 1, f"chi = {chi_ij}"))

    fg = ctx.product(ctx.simple(i), ctx.simple(j))
    gf = ctx.product(ctx.simple(j), ctx.simple(i))
    diff = fg - gf
    semis = _semisimple_key(ctx, tuple(x + y for x, y in
                                       zip(next(iter(ctx.simple(i).coeffs))[0],
                                           next(iter(ctx.simple(j).coeffs))[0])))
    adjacent_ok = (not diff.is_zero) and semis not in diff.coeffs and len(diff.coeffs) == 2
    checks.append(_check("hall.ordered_products_adjacent", adjacent_ok,
                         "difference is supported on the two rank-1 classes"))
    nonadj = _first_nonadjacent_pair(graph)
    if nonadj is not None:
        a, b = nonadj
        comm = ctx.product(ctx.simple(a), ctx.simple(b)) - ctx.product(ctx.simple(b), ctx.simple(a))
        checks.append(_check("hall.ordered_products_nonadjacent", comm.is_zero,
                             f"pair ({a},{b})"))
    const_rows = [
        {
            "kind": "constant",
            "triple": _triple_label(ctx, rec.triple),
            "polynomial": [str(c) for c in rec.polynomial.coefficients],
            "counts": list(rec.counts),
            "chi": rec.chi,
            "held_out_prime": rec.held_out_prime,
            "held_out_count": rec.held_out_count,
        }
        for rec in constants
    ]
    data = {"graph_edges": [list(e) for e in graph.edges],
            "serre": serre_rows, "constants": const_rows}
    return ctx, data, checks


def _semisimple_key(ctx, dims):
    """Key of the class with all maps zero (the direct sum of simples)."""
    for key in ctx.keys(dims):
        singles = key[1]
        if all(rk == 0 for _, rk in singles):
            return key
    raise MatchingError(f"no semisimple class found in piece {dims}")


def _triple_label(ctx, triple):
    out = []
    for key in triple:
        dims = key[0]
        idx = ctx.keys(dims).index(key)
        out.append(f"{''.join(map(str, dims))}#{idx}")
    return "*".join(out[:2]) + "->" + out[2]


def _first_nonadjacent_pair(graph):
    for a in range(graph.num_vertices):
        for b in range(a + 1, graph.num_vertices):
            if not graph.adjacent(a, b):
                return a, b
    return None


def stage_dims(spec: GroupSpec, config: RunConfig, hall_ctx: HallContext | None):
    """Graded-dimension tables: equality on the finite A2/A3 subdiagrams,
    inequality on the affine graph, with unmatchable pieces flagged."""
    graph, trivial = affine_graph(spec)
    ctx = hall_ctx or HallContext(graph, config.hall_primes, config.held_out)
    cartan = graph.cartan_matrix()
    nontrivial = [v for v in range(graph.num_vertices) if v != trivial]
    rows = []
    checks = []

    subpaths = _finite_subpaths(graph, nontrivial)
    for name, path in subpaths.items():
        sub_cartan = cartan[np.ix_(path, path)]
        roots = positive_roots(sub_cartan)
        equal = True
        detail = []
        for alpha_sub in _degrees_up_to(len(path), config.hall_cap):
            alpha = [0] * graph.num_vertices
            for v, a in zip(path, alpha_sub):
                alpha[v] = a
            free = free_dim(alpha_sub)
            rank = serre_slice_rank(sub_cartan, alpha_sub)
            ug = free - rank
            pbw = pbw_dim(roots, alpha_sub)
            try:
                hall_dim = ctx.composition_dim(tuple(alpha), tuple(path))
                flag = ""
            except (BudgetError, MatchingError) as e:
                hall_dim = None
                flag = type(e).__name__
            ok = hall_dim == ug == pbw if hall_dim is not None else False
            equal &= ok
            if not ok:
                detail.append(f"{alpha_sub}: hall={hall_dim} ug={ug} pbw={pbw} {flag}")
            rows.append(
                {"table": name, "alpha": list(alpha), "free": free, "ideal_rank": rank,
                 "ug_dim": ug, "pbw_dim": pbw, "hall_dim": hall_dim,
                 "verdict": "equal" if ok else (flag or "mismatch")}
            )
        checks.append(_check(f"dims.finite_{name}", equal, "; ".join(detail)))

    bound_ok = True
    skipped = []
    for alpha in _degrees_up_to(graph.num_vertices, config.affine_cap):
        free = free_dim(alpha)
        rank = serre_slice_rank(cartan, alpha)
        ug = free - rank
        try:
            hall_dim = ctx.composition_dim(tuple(alpha))
            flag = ""
        except (BudgetError, MatchingError) as e:
            hall_dim = None
            flag = type(e).__name__
            skipped.append(f"{alpha}:{flag}")
        ok = hall_dim is None or hall_dim <= ug
        bound_ok &= ok
        rows.append(
            {"table": "affine", "alpha": list(alpha), "free": free, "ideal_rank": rank,
             "ug_dim": ug, "pbw_dim": None, "hall_dim": hall_dim,
             "verdict": (flag or ("bounded" if hall_dim is not None else "")) if ok else "violated"}
        )
    checks.append(_check("dims.affine_bound", bound_ok,
                         f"skipped (unmatchable or over budget): {skipped}" if skipped else ""))
    return {"rows": rows}, checks


def _finite_subpaths(graph, nontrivial) -> dict:
    out = {}
    edges = [e for e in graph.edges if e[0] in nontrivial and e[1] in nontrivial]
    if edges:
        out["A2"] = list(edges[0])
    for i, j in edges:
        for k in sorted(graph.neighbors(j)):
            if k not in (i,) and k in nontrivial and k > i:
                out.setdefault("A3", [i, j, k])
        for k in sorted(graph.neighbors(i)):
            if k not in (j,) and k in nontrivial:
                out.setdefault("A3", [k, i, j])
    return out


def _degrees_up_to(rank, cap):
    out = []
    def rec(prefix, remaining):
        if len(prefix) == rank:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a)
    rec([], cap)
    return sorted(out)


# ---------------------------------------------------------------------------
# orchestration


def run(config: RunConfig, stages: tuple[str, ...] | None = None) -> dict:
    spec = config.validate()
    stages = tuple(stages or config.checks)
    if spec.family == "A" and spec.n == 2 and ("tor" in stages or "hall" in stages or "dims" in stages):
        raise ConfigError(
            "the order-2 cyclic family has a double-edge diagram and is "
            "excluded from the quiver and cluster suites; run the mckay stages only"
        )
    if spec.family in ("E7", "E8") and "tor" in stages and stages == ALL_STAGES:
        stages = tuple(s for s in stages if s != "tor")  # not budgeted by default

    ctx = PrimeFieldContext(config.modulus) if config.modulus else choose_modulus(spec)
    report = {
        "tool": {"name": "adehall", "version": TOOL_VERSION},
        "config": config.as_dict(),
        "stages": {},
        "checks": [],
        "verdict": "pass",
    }
    all_checks = []

    group, classes, data, checks = stage_group(spec, ctx)
    report["stages"]["group"] = data
    all_checks += checks

    table = None
    if {"chartab", "mckay", "tor"} & set(stages):
        table, data, checks = stage_chartab(group, classes, config.seed)
        if "chartab" in stages:
            report["stages"]["character_table"] = data
            report["stages"]["character_table"]["csv"] = _chartable_rows(table)
            all_checks += checks

    if "mckay" in stages:
        mult, graph_data, data, checks = stage_mckay(table)
        report["stages"]["mckay"] = data
        all_checks += checks

    if "tor" in stages:
        data, checks = stage_tor(spec, config, ctx)
        report["stages"]["tor"] = data
        all_checks += checks

    hall_ctx = None
    if "hall" in stages:
        hall_ctx, data, checks = stage_hall(spec, config)
        report["stages"]["hall"] = data
        all_checks += checks

    if "dims" in stages:
        data, checks = stage_dims(spec, config, hall_ctx)
        report["stages"]["dims"] = data
        all_checks += checks

    report["checks"] = all_checks
    report["verdict"] = "pass" if all(c["pass"] for c in all_checks) else "fail"
    return report


def _chartable_rows(table: CharacterTable):
    rows = []
    for j in range(table.classes.count):
        row = {
            "class_size": table.classes.sizes[j],
            "rep_trace": int(table.defining_values[j]),
        }
        for i in range(table.count):
            row[f"chi_{i}"] = int(table.values[i, j])
        rows.append(row)
    return rows


# ---------------------------------------------------------------------------
# emission


def emit_report(report: dict, out_dir: str) -> list[str]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def _write(name: str, text: str):
        path = out / name
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        written.append(str(path))

    _write("report.json", json.dumps(report, indent=2, ensure_ascii=True) + "\n")

    stages = report.get("stages", {})
    if "character_table" in stages:
        ct = stages["character_table"]
        buf = io.StringIO()
        buf.write(f"# p={ct['p']} seed={ct['seed']}\n")
        rows = ct["csv"]
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        _write("chartable.csv", buf.getvalue())
    if "mckay" in stages:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row", "adjacency", "affine_cartan", "dim"])
        mk = stages["mckay"]
        for idx, (adj, car) in enumerate(zip(mk["adjacency"], mk["affine_cartan"])):
            writer.writerow([idx, " ".join(map(str, adj)), " ".join(map(str, car)),
                             mk["dim_vector"][idx]])
        _write("mckay.csv", buf.getvalue())
    if "tor" in stages:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pi", "parameter", "interior", "dim", "dim_ok", "regular_ok",
                         "dims", "multiplicities", "profile_ok"])
        for row in stages["tor"]["rows"]:
            writer.writerow([
                row["pi"], row["parameter"], row["interior"], row["dim"],
                row["dim_ok"], row["regular_ok"],
                " ".join(map(str, row["dims"])) if row["dims"] else "",
                ";".join(",".join(map(str, m)) for m in row["multiplicities"]) if row["multiplicities"] else "",
                row["profile_ok"],
            ])
        _write("tor.csv", buf.getvalue())
    if "hall" in stages:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "i", "j", "adjacent", "zero", "support",
                         "triple", "polynomial", "chi", "held_out_prime", "held_out_count"])
        for row in stages["hall"]["serre"]:
            writer.writerow([row["kind"], row["i"], row["j"], row["adjacent"],
                             row["zero"], row["support"], "", "", "", "", ""])
        for row in stages["hall"]["constants"]:
            writer.writerow(["constant", "", "", "", "", "", row["triple"],
                             " ".join(row["polynomial"]), row["chi"],
                             row["held_out_prime"], row["held_out_count"]])
        _write("serre.csv", buf.getvalue())
    if "dims" in stages:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["table", "alpha", "free", "ideal_rank", "ug_dim",
                         "pbw_dim", "hall_dim", "verdict"])
        for row in stages["dims"]["rows"]:
            writer.writerow([row["table"], " ".join(map(str, row["alpha"])),
                             row["free"], row["ideal_rank"], row["ug_dim"],
                             row["pbw_dim"] if row["pbw_dim"] is not None else "",
                             row["hall_dim"] if row["hall_dim"] is not None else "",
                             row["verdict"]])
        _write("dims.csv", buf.getvalue())
    return written
