"""Command-line interface.

Subcommands: compute, generate, analytic, expected, verify, stats,
montecarlo, reproduce.  Machine-readable output (CSV with '.' decimals
and 12 significant digits, or JSON) goes to --output / stdout; log text
goes to stderr.  Exit codes: 0 success, 2 usage or parameter errors,
1 unexpected runtime failures.  With a fixed seed every command is
byte-identical across runs and across --threads values.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from .analytic import (
    ANALYTIC_FAMILIES,
    FamilyParams,
    analytic_centrality,
    er_expected,
    er_sparse_asymptotics,
    monte_carlo_er,
)
from .centrality import (
    boundary_counts,
    clustering_vector,
    ksi_normalized_vector,
    ksi_vector,
)
from .generators import FAMILIES, GenSpec, gen_bhl, generate
from .graph import CapacityError, EdgeListParseError, parse_edge_list, serialize_edge_list
from .parallel import ordered_map
from .spectral import CHEEGER_CAP, verify_cheeger_bounds, verify_lambda2_bound
from .stats import ba_size_invariance, network_report, ratio_series_ws, summarize

logger = logging.getLogger("ksigraph")

MEASURE_COLUMNS = ("xi", "xi_norm", "clustering", "boundary")

# Reference coefficient values for the standard 4000-node comparison
# instances (valid at scale 1.0 only).
TABLE1_ARTIFICIAL_REFERENCE = {
    "barabasi_albert": {"average_xi_hat": 0.0355, "average_xi": 138.9953},
    "watts_strogatz": {"average_xi_hat": 0.0039, "average_xi": 15.6413},
}

REPRODUCE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig10", "table1-artificial")


def fmt(x) -> str:
    """Floats with 12 significant digits, '.' decimal separator."""
    return format(float(x), ".12g")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, newline="\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# compute

def _cmd_compute(args) -> int:
    parsed = parse_edge_list(_read_text(args.input))
    g = parsed.graph
    measures = [m.strip() for m in args.measures.split(",") if m.strip()]
    for m in measures:
        if m not in MEASURE_COLUMNS:
            raise ValueError(f"unknown measure {m!r}; choose from {MEASURE_COLUMNS}")
    b = boundary_counts(g)
    columns = {
        "xi": ksi_vector(g, counts=b).values,
        "xi_norm": ksi_normalized_vector(g, counts=b).values,
        "clustering": clustering_vector(g).values,
        "boundary": b,
    }
    if g.n:
        summary = {
            "average_xi": float(columns["xi"].mean()),
            "average_xi_hat": float(columns["xi_norm"].mean()),
            "average_clustering": float(columns["clustering"].mean()),
        }
    else:
        summary = {"average_xi": None, "average_xi_hat": None, "average_clustering": None}

    if args.format == "json":
        nodes = []
        for i in range(g.n):
            row = {"node": int(parsed.labels[i]), "degree": int(g.degrees[i])}
            for m in measures:
                row[m] = int(columns[m][i]) if m == "boundary" else float(columns[m][i])
            nodes.append(row)
        _write_text(args.output, _json_dumps(
            {"n": g.n, "m": g.m, "nodes": nodes, "summary": summary}
        ))
        return 0

    out = io.StringIO()
    out.write("node,degree," + ",".join(measures) + "\n")
    for i in range(g.n):
        cells = [str(int(parsed.labels[i])), str(int(g.degrees[i]))]
        for m in measures:
            cells.append(str(int(columns[m][i])) if m == "boundary" else fmt(columns[m][i]))
        out.write(",".join(cells) + "\n")
    out.write(f"# n={g.n} m={g.m}\n")
    if g.n:
        out.write(
            "# average_xi=%s average_xi_hat=%s average_clustering=%s\n"
            % (fmt(summary["average_xi"]), fmt(summary["average_xi_hat"]),
               fmt(summary["average_clustering"]))
        )
    _write_text(args.output, out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# generate

def _spec_from_args(args) -> GenSpec:
    if args.spec:
        return GenSpec.from_json(args.spec)
    family = args.family
    if family is None:
        raise ValueError("either --spec or --family is required")
    need = {
        "erdos_renyi": ("n", "p"),
        "ring_lattice": ("n", "k"),
        "watts_strogatz": ("n", "k", "p_rewire"),
        "barabasi_albert": ("n", "m_attach"),
        "havel_hakimi": ("degrees",),
        "bhl": ("n", "n0", "m"),
    }[family]
    params = {}
    for name in need:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"family {family!r} requires --{name.replace('_', '-')}")
        params[name] = value
    if family == "havel_hakimi":
        params["degrees"] = [int(t) for t in str(params["degrees"]).split(",")]
    if family == "bhl" and args.theta is not None:
        params["theta"] = args.theta
    return GenSpec(family=family, params=params, seed=args.seed)


def _manifest_comment(spec: GenSpec) -> str:
    parts = [f"family={spec.family}"]
    for key in sorted(spec.params):
        value = spec.params[key]
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        parts.append(f"{key}={value}")
    parts.append(f"seed={spec.seed}")
    return " ".join(parts)


def _cmd_generate(args) -> int:
    spec = _spec_from_args(args)
    g = generate(spec)
    _write_text(args.output, serialize_edge_list(g, comments=[_manifest_comment(spec)]))
    return 0


# ---------------------------------------------------------------------------
# analytic

def _cmd_analytic(args) -> int:
    params = FamilyParams(family=args.family, n=args.n, k=args.k)
    fc = analytic_centrality(params)
    if args.format == "json":
        obj = {
            "family": fc.params.family,
            "n": fc.params.n,
            "k": fc.params.k,
            "total_nodes": fc.total_nodes,
            "classes": [
                {
                    "label": c.label,
                    "count": c.count,
                    "xi": str(c.xi),
                    "xi_float": float(c.xi),
                    "xi_hat": str(c.xi_hat),
                    "xi_hat_float": float(c.xi_hat),
                }
                for c in fc.classes
            ],
            "average_xi": str(fc.average_xi),
            "average_xi_float": float(fc.average_xi),
            "average_xi_hat": str(fc.average_xi_hat),
            "average_xi_hat_float": float(fc.average_xi_hat),
        }
        _write_text(args.output, _json_dumps(obj))
        return 0
    out = io.StringIO()
    out.write("class,count,xi,xi_hat\n")
    for c in fc.classes:
        out.write(f"{c.label},{c.count},{fmt(c.xi)},{fmt(c.xi_hat)}\n")
    out.write(f"average,{fc.total_nodes},{fmt(fc.average_xi)},{fmt(fc.average_xi_hat)}\n")
    _write_text(args.output, out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# expected

def _cmd_expected(args) -> int:
    if args.lam is not None:
        asym = er_sparse_asymptotics(args.n, args.lam)
        obj = {
            "n": asym.n,
            "lambda": asym.lam,
            "p": asym.lam / asym.n,
            "approx_average_xi_hat": asym.approx_average_xi_hat,
            "approx_average_xi": asym.approx_average_xi,
            "exact_average_xi_hat": asym.exact.average_xi_hat,
            "exact_average_xi": asym.exact.average_xi,
            "fitted_constant_xi_hat": asym.fitted_constant_xi_hat,
        }
    else:
        if args.p is None:
            raise ValueError("expected needs --p or --lam")
        exp = er_expected(args.n, args.p)
        obj = {
            "n": exp.n,
            "p": exp.p,
            "e_boundary": exp.e_boundary,
            "xi": exp.xi,
            "xi_hat": exp.xi_hat,
            "average_xi": exp.average_xi,
            "average_xi_hat": exp.average_xi_hat,
        }
    if args.format == "json":
        _write_text(args.output, _json_dumps(obj))
    else:
        keys = list(obj)
        _write_text(
            args.output,
            ",".join(keys) + "\n" + ",".join(fmt(obj[k]) for k in keys) + "\n",
        )
    return 0


# ---------------------------------------------------------------------------
# verify

def _load_graph_for_verify(args):
    if args.input:
        return parse_edge_list(_read_text(args.input)).graph
    return generate(_spec_from_args(args))


def _cmd_verify(args) -> int:
    g = _load_graph_for_verify(args)
    report: dict = {"n": g.n, "m": g.m}
    if g.n >= 2:
        bound = verify_lambda2_bound(g)
        report["lambda2_bound"] = bound.to_dict()
        report["passed"] = bound.holds_per_node and bound.holds_average
    else:
        report["lambda2_bound"] = {"status": "skipped", "reason": "needs at least two nodes"}
        report["passed"] = True
    if 2 <= g.n <= args.cheeger_cap:
        cheeger = verify_cheeger_bounds(g, cap=args.cheeger_cap)
        report["cheeger"] = cheeger.to_dict()
        report["cheeger"]["status"] = "computed"
        report["passed"] = bool(
            report["passed"] and cheeger.xi_bound_holds and cheeger.xi_hat_bound_holds
        )
    else:
        reason = (
            "needs at least two nodes"
            if g.n < 2
            else f"n={g.n} exceeds exact-enumeration cap {args.cheeger_cap}"
        )
        report["cheeger"] = {"status": "skipped", "reason": reason}
    _write_text(args.output, _json_dumps(report))
    return 0


# ---------------------------------------------------------------------------
# stats

def _cmd_stats(args) -> int:
    parsed = parse_edge_list(_read_text(args.input))
    rep = network_report(parsed.graph, graph_id=args.graph_id, bins=args.bins)
    if args.histograms:
        for measure, summary in rep.summaries.items():
            path = Path(f"{args.histograms}.{measure}.csv")
            out = io.StringIO()
            out.write("bin_left,count\n")
            for left, cnt in zip(summary.bin_edges[:-1], summary.bin_counts):
                out.write(f"{fmt(left)},{int(cnt)}\n")
            if len(summary.bin_edges) == 2 and summary.bin_edges[0] == summary.bin_edges[1]:
                out = io.StringIO()
                out.write("bin_left,count\n")
                out.write(f"{fmt(summary.bin_edges[0])},{int(summary.bin_counts[0])}\n")
            path.write_text(out.getvalue(), newline="\n")
            logger.info("wrote %s", path)
    if args.format == "json":
        _write_text(args.output, _json_dumps(rep.to_dict()))
    else:
        out = io.StringIO()
        out.write("network,average_xi_hat,average_xi,n\n")
        out.write(
            f"{rep.graph_id},{fmt(rep.average_xi_hat)},{fmt(rep.average_xi)},{rep.n}\n"
        )
        _write_text(args.output, out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# montecarlo

def _cmd_montecarlo(args) -> int:
    report = monte_carlo_er(args.n, args.p, args.samples, seed=args.seed, threads=args.threads)
    obj = {
        "n": report.n,
        "p": report.p,
        "samples": report.samples,
        "seed": args.seed,
        "quantities": [
            {
                "name": q.name,
                "sample_mean": q.sample_mean,
                "sample_sd": q.sample_sd,
                "standard_error": q.standard_error,
                "expected": q.expected,
                "z_score": q.z_score,
                "within_3se": q.within_3se,
            }
            for q in report.quantities
        ],
    }
    if args.format == "json":
        _write_text(args.output, _json_dumps(obj))
    else:
        out = io.StringIO()
        out.write("name,sample_mean,sample_sd,standard_error,expected,z_score\n")
        for q in report.quantities:
            out.write(
                ",".join(
                    [
                        q.name,
                        fmt(q.sample_mean),
                        fmt(q.sample_sd),
                        "" if q.standard_error is None else fmt(q.standard_error),
                        fmt(q.expected),
                        "" if q.z_score is None else fmt(q.z_score),
                    ]
                )
                + "\n"
            )
        _write_text(args.output, out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# reproduce

def _scaled(value: int, scale: float, minimum: int = 1) -> int:
    return max(minimum, round(value * scale))


def _write_csv(path: Path, header: str, rows) -> str:
    out = io.StringIO()
    out.write(header + "\n")
    for row in rows:
        out.write(",".join(row) + "\n")
    path.write_text(out.getvalue(), newline="\n")
    return path.name


def _hist_rows(values, bins: int):
    summary = summarize(values, bins=bins)
    if len(summary.bin_edges) == 2 and summary.bin_edges[0] == summary.bin_edges[1]:
        return [(fmt(summary.bin_edges[0]), str(int(summary.bin_counts[0])))]
    return [
        (fmt(left), str(int(cnt)))
        for left, cnt in zip(summary.bin_edges[:-1], summary.bin_counts)
    ]


def _reproduce_fig1(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    from .generators import gen_watts_strogatz

    k = _scaled(50, scale)
    ns = [_scaled(200, scale), _scaled(500, scale)]
    ps = [0.2, 0.6]
    files = []
    cells = [(n, p) for n in ns for p in ps]

    def one(cell):
        n, p = cell
        g = gen_watts_strogatz(n, k, p, seed=seed)
        b = boundary_counts(g)
        xi = ksi_vector(g, counts=b).values
        xh = ksi_normalized_vector(g, counts=b).values
        xi0 = (k + 3) / 2
        xh0 = (k + 3) / (2 * (n - 2 * k))
        return n, p, xi / xi0, xh / xh0

    for n, p, xi_rel, xh_rel in ordered_map(one, cells, threads=threads):
        tag = f"n{n}_p{str(p).replace('.', '')}"
        files.append(_write_csv(outdir / f"fig1_{tag}_xi_ratio_hist.csv", "bin_left,count",
                                _hist_rows(xi_rel, 40)))
        files.append(_write_csv(outdir / f"fig1_{tag}_xi_hat_ratio_hist.csv", "bin_left,count",
                                _hist_rows(xh_rel, 40)))
    return {"n_values": ns, "k": k, "p_values": ps, "files": files}


def _reproduce_fig2(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    n = _scaled(500, scale)
    two_k_values = [v for v in (_scaled(10, scale), _scaled(50, scale), _scaled(100, scale))]
    p_grid = [round(0.1 * i, 1) for i in range(10)]
    seeds = [seed + i for i in range(3)]
    files = []
    for two_k in two_k_values:
        k = max(1, two_k // 2)
        series = ratio_series_ws(n, k, p_grid, seeds, threads=threads)
        rows = [(fmt(s["p"]), fmt(s["xi_ratio"]), fmt(s["xi_hat_ratio"])) for s in series]
        files.append(_write_csv(outdir / f"fig2_2k{2 * k}.csv", "p,xi_ratio,xi_hat_ratio", rows))
    return {"n": n, "two_k_values": two_k_values, "p_grid": p_grid, "seeds": seeds, "files": files}


def _reproduce_fig3(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    ns = [_scaled(v, scale, minimum=20) for v in (200, 500, 1000, 2000)]
    p_grid = [round(0.1 * i, 1) for i in range(1, 10)]
    seeds = [seed + i for i in range(5)]
    files = []
    for n in ns:
        k = max(1, n // 10)  # fixed 2k/n = 0.2 across sizes
        series = ratio_series_ws(n, k, p_grid, seeds, threads=threads)
        rows = [(fmt(s["p"]), fmt(s["xi_ratio"])) for s in series]
        files.append(_write_csv(outdir / f"fig3_n{n}.csv", "p,xi_ratio", rows))
    return {"n_values": ns, "ratio_2k_over_n": 0.2, "p_grid": p_grid, "seeds": seeds, "files": files}


def _reproduce_fig4(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    from .generators import gen_barabasi_albert

    ns = [_scaled(200, scale, minimum=20), _scaled(500, scale, minimum=20)]
    fracs = [(1, 4), (1, 2), (3, 4)]
    files = []
    cells = [(n, num, den) for n in ns for num, den in fracs]

    def one(cell):
        n, num, den = cell
        m_attach = max(1, n * num // den)
        g = gen_barabasi_albert(n, m_attach, seed=seed)
        b = boundary_counts(g)
        return n, m_attach, ksi_vector(g, counts=b).values, ksi_normalized_vector(g, counts=b).values

    for n, m_attach, xi, xh in ordered_map(one, cells, threads=threads):
        tag = f"n{n}_m{m_attach}"
        files.append(_write_csv(outdir / f"fig4_{tag}_xi_hist.csv", "bin_left,count",
                                _hist_rows(xi, 40)))
        files.append(_write_csv(outdir / f"fig4_{tag}_xi_hat_hist.csv", "bin_left,count",
                                _hist_rows(xh, 40)))
    return {"n_values": ns, "attach_fractions": ["1/4", "1/2", "3/4"], "files": files}


def _reproduce_fig5(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    ns = [_scaled(v, scale, minimum=30) for v in (200, 500, 750, 1000, 1500, 2000)]
    ratios = [(4 * j + 1) / 30 for j in range(8)]
    seeds = [seed + i for i in range(3)]
    rows = ba_size_invariance(ns, ratios, seeds, threads=threads)
    csv_rows = [
        (str(r["n"]), fmt(r["k_ratio"]), str(r["m_attach"]),
         fmt(r["average_xi_hat"]), fmt(r["average_xi"]))
        for r in rows
    ]
    name = _write_csv(outdir / "fig5_ba_coefficients.csv",
                      "n,k_ratio,m_attach,average_xi_hat,average_xi", csv_rows)
    return {"n_values": ns, "k_ratios": ratios, "seeds": seeds, "files": [name]}


def _reproduce_fig10(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    n = _scaled(4000, scale, minimum=40)
    n0 = _scaled(500, scale, minimum=20)
    m = min(_scaled(50, scale, minimum=2), n0 // 2)
    g = gen_bhl(n, n0, m, seed=seed)
    b = boundary_counts(g)
    xi = ksi_vector(g, counts=b).values
    xh = ksi_normalized_vector(g, counts=b).values
    files = [
        _write_csv(outdir / "fig10_xi_hist.csv", "bin_left,count", _hist_rows(xi, 50)),
        _write_csv(outdir / "fig10_xi_hat_hist.csv", "bin_left,count", _hist_rows(xh, 50)),
    ]
    return {"n": n, "n0": n0, "m": m, "files": files}


def _reproduce_table1(outdir: Path, scale: float, seed: int, threads: int) -> dict:
    from .generators import gen_barabasi_albert, gen_watts_strogatz

    n = _scaled(4000, scale, minimum=50)
    instances = [
        ("barabasi_albert", lambda: gen_barabasi_albert(n, _scaled(43, scale, 2), seed=seed)),
        ("watts_strogatz", lambda: gen_watts_strogatz(n, _scaled(21, scale, 2), 0.3, seed=seed)),
    ]
    rows = []
    for name, make in instances:
        g = make()
        b = boundary_counts(g)
        xh = float(ksi_normalized_vector(g, counts=b).values.mean())
        xi = float(ksi_vector(g, counts=b).values.mean())
        ref = TABLE1_ARTIFICIAL_REFERENCE[name]
        if scale == 1.0:
            dev_xh = abs(xh - ref["average_xi_hat"]) / ref["average_xi_hat"]
            dev_xi = abs(xi - ref["average_xi"]) / ref["average_xi"]
            rows.append((name, str(g.n), fmt(xh), fmt(xi),
                         fmt(ref["average_xi_hat"]), fmt(ref["average_xi"]),
                         fmt(dev_xh), fmt(dev_xi)))
        else:
            rows.append((name, str(g.n), fmt(xh), fmt(xi), "", "", "", ""))
    name = _write_csv(
        outdir / "table1_artificial.csv",
        "network,n,average_xi_hat,average_xi,ref_xi_hat,ref_xi,rel_dev_xi_hat,rel_dev_xi",
        rows,
    )
    return {"n": n, "reference_valid_at_scale": 1.0, "files": [name]}


def _cmd_reproduce(args) -> int:
    recipes = {
        "fig1": _reproduce_fig1,
        "fig2": _reproduce_fig2,
        "fig3": _reproduce_fig3,
        "fig4": _reproduce_fig4,
        "fig5": _reproduce_fig5,
        "fig10": _reproduce_fig10,
        "table1-artificial": _reproduce_table1,
    }
    if args.id not in recipes:
        raise ValueError(f"unknown experiment id {args.id!r}; valid ids: {', '.join(REPRODUCE_IDS)}")
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    info = recipes[args.id](outdir, args.scale, args.seed, args.threads)
    manifest = {
        "experiment": args.id,
        "scale": args.scale,
        "seed": args.seed,
        "parameters": {k: v for k, v in info.items() if k != "files"},
        "files": info["files"],
    }
    (outdir / "manifest.json").write_text(_json_dumps(manifest), newline="\n")
    logger.info("wrote %d file(s) to %s", len(info["files"]) + 1, outdir)
    return 0


# ---------------------------------------------------------------------------
# parser / dispatch

def _add_genspec_arguments(sub):
    sub.add_argument("--family", choices=FAMILIES, help="generator family")
    sub.add_argument("--spec", help="GenSpec as a JSON object (alternative to flags)")
    sub.add_argument("--n", type=int, help="node count")
    sub.add_argument("--p", type=float, help="edge probability")
    sub.add_argument("--k", type=int, help="ring-lattice half-degree")
    sub.add_argument("--p-rewire", dest="p_rewire", type=float, help="rewiring probability")
    sub.add_argument("--m-attach", dest="m_attach", type=int, help="edges attached per new node")
    sub.add_argument("--n0", type=int, help="initial core size")
    sub.add_argument("--m", type=int, help="smallest initial degree / edges per new node")
    sub.add_argument("--theta", type=float, help="triad-closure probability (default 0.9)")
    sub.add_argument("--degrees", help="comma-separated degree sequence")
    sub.add_argument("--seed", type=int, default=0, help="generator seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksigraph",
        description="Ksi-centrality graph analytics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="per-node centrality table for an edge list")
    p.add_argument("--input", required=True, help="edge-list path ('-' for stdin)")
    p.add_argument("--measures", default="xi,xi_norm,clustering,boundary")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("generate", help="write a generated graph as an edge list")
    _add_genspec_arguments(p)
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("analytic", help="closed-form family values")
    p.add_argument("--family", choices=ANALYTIC_FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_analytic)

    p = sub.add_parser("expected", help="closed-form G(n,p) expectations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--lam", type=float, help="sparse regime: p = lambda / n")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_expected)

    p = sub.add_parser("verify", help="connectivity and Cheeger bound report")
    p.add_argument("--input", help="edge-list path (alternative to generator flags)")
    _add_genspec_arguments(p)
    p.add_argument("--cheeger-cap", dest="cheeger_cap", type=int, default=CHEEGER_CAP)
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("stats", help="distribution report for an edge list")
    p.add_argument("--input", required=True)
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--graph-id", dest="graph_id", default="graph")
    p.add_argument("--histograms", help="prefix for per-measure bin_left,count CSV files")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("montecarlo", help="sampled G(n,p) means vs closed forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--output", default="-")
    p.set_defaults(fn=_cmd_montecarlo)

    p = sub.add_parser("reproduce", help="write figure/table data bundles")
    p.add_argument("--id", required=True, help=f"one of: {', '.join(REPRODUCE_IDS)}")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", required=True, help="output directory")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (EdgeListParseError, CapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
