"""Command-line front end: spectra, bound tables, index values, class
enumeration, exhaustive verification runs, and alpha scans."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .bounds import energy_bounds, estrada_upper, evaluate_all
from .enumeration import CLASSES, EnumerationQuery, enumerate_graphs, trees, unicyclic
from .errors import CapabilityError, Graph6Error, GraphError
from .families import family_from_spec
from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph, graph_from_json, graph_to_json
from .spectral import default_alpha_grid, indices, spectrum
from .verify import (
    TheoremReport,
    merge_reports,
    named_small_bases,
    random_connected_corpus,
    round_floats,
    verify_delta_and_irregular_bounds,
    verify_domination,
    verify_gamma_extremes,
    verify_pendant_monotonicity,
    verify_rewiring_lemmas,
    verify_tree_extremes,
)

WORKERS_ENV = "ASPECTRAL_WORKERS"
DEFAULT_SEED = 1729


@dataclass
class RunConfig:
    """Parsed invocation settings shared by the subcommand runners."""

    command: str
    graph6: str | None = None
    family: str | None = None
    file: str | None = None
    alpha: float | None = None
    alphas: list[float] = field(default_factory=list)
    n_range: list[int] = field(default_factory=list)
    theorem: str | None = None
    graph_class: str | None = None
    fmt: str = "json"
    as_csv: bool = False
    output: str | None = None
    json_path: str | None = None
    checkpoint: str | None = None
    workers: int = 1
    seed: int = DEFAULT_SEED
    count: int = 200
    max_total: int = 6


def fmt12(x: float) -> str:
    return f"{float(x):.12g}"


def parse_alphas(text: str) -> list[float]:
    if text == "default":
        return list(default_alpha_grid())
    try:
        values = [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise GraphError(f"bad alpha list {text!r}") from exc
    if not values:
        raise GraphError("alpha list is empty")
    for a in values:
        if not 0.0 <= a <= 1.0:
            raise GraphError(f"alpha {a} outside [0, 1]")
    return values


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError as exc:
        raise GraphError(f"bad n range {text!r}, expected N or LO..HI") from exc


def _write_output(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(round_floats(payload), indent=2, sort_keys=True) + "\n"


def _load_graph(cfg: RunConfig) -> Graph:
    picked = [s for s in (cfg.graph6, cfg.family, cfg.file) if s is not None]
    if len(picked) != 1:
        raise GraphError("need exactly one of --graph, --family, --file")
    if cfg.graph6 is not None:
        return graph6_decode(cfg.graph6)
    if cfg.family is not None:
        return family_from_spec(cfg.family)
    with open(cfg.file, "r", encoding="ascii") as fh:
        text = fh.read().strip()
    if not text:
        raise GraphError(f"empty graph file {cfg.file!r}")
    if text.startswith("{"):
        return graph_from_json(json.loads(text))
    return graph6_decode(text.splitlines()[0].strip())


def _summary_payload(g: Graph, alpha: float) -> dict:
    s = spectrum(g, alpha)
    return {
        "graph6": graph6_encode(g),
        "n": g.n,
        "m": g.m,
        "alpha": s.alpha,
        "eigenvalues": list(s.eigenvalues),
        "rho": s.rho,
        "least": s.least,
        "perron": list(s.perron) if s.perron is not None else None,
    }


def _run_spectrum(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    payload = _summary_payload(g, cfg.alpha)
    if cfg.fmt != "text":
        _write_output(cfg, _dump_json(payload))
        return 0
    lines = [
        f"graph6: {payload['graph6']}",
        f"n={payload['n']} m={payload['m']} alpha={fmt12(payload['alpha'])}",
        f"rho = {fmt12(payload['rho'])}",
        f"least = {fmt12(payload['least'])}",
        "eigenvalues: " + ", ".join(fmt12(v) for v in payload["eigenvalues"]),
    ]
    if payload["perron"] is not None:
        lines.append("perron: " + ", ".join(fmt12(v) for v in payload["perron"]))
    else:
        lines.append("perron: none (needs a connected graph and alpha < 1)")
    _write_output(cfg, "\n".join(lines) + "\n")
    return 0


_BOUND_COLUMNS = ("bound_id", "direction", "applicable", "reason", "value",
                  "target", "slack", "strict", "equality_class")


def _run_bounds(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    rows = [ev.to_dict() for ev in evaluate_all(g, cfg.alpha)]
    if cfg.as_csv:
        out = [",".join(_BOUND_COLUMNS)]
        for row in rows:
            cells = []
            for col in _BOUND_COLUMNS:
                value = row[col]
                if value is None:
                    cells.append("")
                elif isinstance(value, bool):
                    cells.append("true" if value else "false")
                elif isinstance(value, float):
                    cells.append(fmt12(value))
                else:
                    cells.append(str(value))
            out.append(",".join(cells))
        _write_output(cfg, "\n".join(out) + "\n")
    else:
        _write_output(cfg, _dump_json(rows))
    return 0


def _run_indices(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    vals = indices(g, cfg.alpha)
    upper, lower1, lower2 = energy_bounds(g, cfg.alpha)
    payload = {
        "graph6": graph6_encode(g),
        "alpha": cfg.alpha,
        "energy": vals.energy,
        "estrada": vals.estrada,
        "zagreb": vals.zagreb,
        "energy_upper": upper,
        "energy_lower_spread": lower1,
        "energy_lower_moment": lower2,
        "estrada_upper": estrada_upper(g, cfg.alpha) if g.m >= 1 else None,
    }
    if cfg.fmt != "text":
        _write_output(cfg, _dump_json(payload))
        return 0
    lines = [f"graph6: {payload['graph6']}", f"alpha = {fmt12(cfg.alpha)}"]
    for key in ("energy", "estrada", "zagreb", "energy_upper",
                "energy_lower_spread", "energy_lower_moment", "estrada_upper"):
        value = payload[key]
        lines.append(f"{key} = " + ("n/a" if value is None else fmt12(value)))
    _write_output(cfg, "\n".join(lines) + "\n")
    return 0


def _run_enumerate(cfg: RunConfig) -> int:
    query = EnumerationQuery(cfg.n_range[0], cfg.graph_class)
    graphs = list(enumerate_graphs(query))
    if cfg.fmt == "graph6":
        body = "\n".join(graph6_encode(g) for g in graphs)
        _write_output(cfg, body + "\n" if body else "")
    else:
        _write_output(cfg, _dump_json([graph_to_json(g) for g in graphs]))
    return 0


def _run_scan_alpha(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    lines = ["alpha,rho"]
    for a in cfg.alphas:
        s = spectrum(g, a)
        lines.append(f"{fmt12(a)},{fmt12(s.rho)}")
    _write_output(cfg, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Verification driver


def _bounds_runner(checks, corpus_builder):
    def run(cfg: RunConfig, block_n: int | None):
        if block_n is None:
            corpus = corpus_builder(cfg, None)
        else:
            corpus = corpus_builder(cfg, block_n)
        return verify_delta_and_irregular_bounds(
            corpus, cfg.alphas, checks=checks, workers=cfg.workers)
    return run


def _connected_corpus(cfg: RunConfig, n: int):
    return enumerate_graphs(EnumerationQuery(n, "connected"))


def _tree_unicyclic_corpus(cfg: RunConfig, n: int):
    out = []
    if n <= 10:
        out.extend(trees(n))
    if n <= 9 and n >= 3:
        out.extend(unicyclic(n))
    return out


def _rewiring_runner(checks):
    def run(cfg: RunConfig, block_n):
        corpus = named_small_bases() + random_connected_corpus(
            cfg.count, max_n=6, seed=cfg.seed)
        return verify_rewiring_lemmas(corpus, cfg.alphas, checks=checks)
    return run


def _pendant_runner(cfg: RunConfig, block_n):
    bases = named_small_bases() + random_connected_corpus(
        cfg.count, max_n=6, seed=cfg.seed)
    return verify_pendant_monotonicity(bases, cfg.max_total, cfg.alphas)


def _tree_runner(cfg: RunConfig, block_n: int):
    return verify_tree_extremes([block_n], cfg.alphas)


def _domination_runner(cfg: RunConfig, block_n: int):
    return verify_domination([block_n], cfg.alphas, workers=cfg.workers)


def _gamma_runner(graph_class):
    def run(cfg: RunConfig, block_n: int):
        return verify_gamma_extremes([block_n], cfg.alphas, graph_class)
    return run


# theorem id -> (runner, default n range or None for corpus-style runs)
_THEOREMS: dict = {}


def _register(ids, runner, default_range):
    for token in ids:
        _THEOREMS[token] = (runner, default_range)


_register(("2.1", "move"), _rewiring_runner({"move"}), None)
_register(("2.2", "swap"), _rewiring_runner({"swap"}), None)
_register(("cor2.1", "contract"), _rewiring_runner({"contract"}), None)
_register(("rewiring",), _rewiring_runner(None), None)
_register(("3.1", "tree-unicyclic"),
          _bounds_runner({"tree-unicyclic"}, _tree_unicyclic_corpus), (4, 9))
_register(("3.2", "irregular"),
          _bounds_runner({"irregular", "gap"}, _connected_corpus), (4, 7))
_register(("p3.1", "shi"), _bounds_runner({"shi"}, _connected_corpus), (4, 7))
_register(("p3.2", "kconnected"),
          _bounds_runner({"kconnected"}, _connected_corpus), (4, 7))
_register(("comparisons",),
          _bounds_runner({"comparisons"}, _connected_corpus), (4, 7))
_register(("rowsum",), _bounds_runner({"rowsum"}, _connected_corpus), (2, 7))
_register(("mu", "laplacian-half"),
          _bounds_runner({"laplacian-half"}, _connected_corpus), (2, 7))
_register(("bounds-all",), _bounds_runner(None, _connected_corpus), (2, 7))
_register(("3.3", "domination"), _domination_runner, (2, 6))
_register(("3.4", "3.7", "tree-order"), _tree_runner, (5, 10))
_register(("3.5", "3.6", "pendant"), _pendant_runner, None)
_register(("4.1", "gamma-all"), _gamma_runner("all"), (2, 7))
_register(("4.2", "gamma-unicyclic"), _gamma_runner("unicyclic"), (3, 9))
_register(("4.3", "gamma-nonbipartite"),
          _gamma_runner("connected-nonbipartite"), (3, 7))


def _load_checkpoint(path: str | None) -> dict:
    if not path or not os.path.exists(path):
        return {}
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)


def _save_checkpoint(path: str | None, store: dict) -> None:
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(store, fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def _run_one_theorem(cfg: RunConfig, token: str, store: dict) -> TheoremReport:
    runner, default_range = _THEOREMS[token]
    if default_range is None:
        blocks = [None]
    elif cfg.n_range:
        blocks = list(cfg.n_range)
    else:
        blocks = list(range(default_range[0], default_range[1] + 1))
    parts = []
    for block in blocks:
        key = f"{token}:{'all' if block is None else block}"
        if key in store:
            parts.append(TheoremReport.from_dict(store[key]))
            continue
        part = runner(cfg, block)
        store[key] = part.to_dict()
        _save_checkpoint(cfg.checkpoint, store)
        parts.append(part)
    report = parts[0] if len(parts) == 1 else merge_reports(parts)
    report.theorem_id = token
    return report


def _run_verify(cfg: RunConfig) -> int:
    store = _load_checkpoint(cfg.checkpoint)
    tokens = sorted(set(_THEOREMS)) if cfg.theorem == "all" else [cfg.theorem]
    if any(t not in _THEOREMS for t in tokens):
        raise GraphError(f"unknown check id {cfg.theorem!r}; "
                         f"known: {', '.join(sorted(_THEOREMS))}")
    reports = []
    for token in tokens:
        report = _run_one_theorem(cfg, token, store)
        reports.append(report)
        line = (f"{token}: {report.status} "
                f"instances={report.instances_checked} "
                f"violations={len(report.violations)}")
        print(line)
        for note in report.notes:
            print(f"  note: {note}")
    if cfg.json_path:
        payload = reports[0].to_dict() if len(reports) == 1 \
            else [r.to_dict() for r in reports]
        with open(cfg.json_path, "w", encoding="ascii") as fh:
            fh.write(_dump_json(payload))
    return 1 if any(r.status == "FAIL" for r in reports) else 0


# ---------------------------------------------------------------------------
# Argument parsing


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", help="graph6 string")
    sub.add_argument("--family", help="family spec such as Sn:6, Pn:5, Cn:10, "
                                      "Kn:4, Snpe:6, Dna:7,2, Tnd:10,4, "
                                      "domext:8,3,A")
    sub.add_argument("--file", help="path to a graph6 line or a JSON graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspectral",
        description="Spectra and extremal checks for the degree-weighted "
                    "adjacency family alpha*D + (1-alpha)*A.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_spec = subs.add_parser("spectrum", help="eigenvalues and Perron vector")
    _add_graph_source(p_spec)
    p_spec.add_argument("--alpha", type=float, required=True)
    p_spec.add_argument("--format", dest="fmt", default="json",
                        choices=("json", "text"))
    p_spec.add_argument("--output")

    p_bounds = subs.add_parser("bounds", help="bound table for one graph")
    _add_graph_source(p_bounds)
    p_bounds.add_argument("--alpha", type=float, required=True)
    p_bounds.add_argument("--csv", action="store_true")
    p_bounds.add_argument("--output")

    p_idx = subs.add_parser("indices", help="energy, Estrada, Zagreb values")
    _add_graph_source(p_idx)
    p_idx.add_argument("--alpha", type=float, required=True)
    p_idx.add_argument("--format", dest="fmt", default="json",
                       choices=("json", "text"))
    p_idx.add_argument("--output")

    p_enum = subs.add_parser("enumerate", help="list a graph class")
    p_enum.add_argument("--class", dest="graph_class", required=True,
                        choices=CLASSES)
    p_enum.add_argument("--n", required=True)
    p_enum.add_argument("--format", dest="fmt", default="graph6",
                        choices=("graph6", "json"))
    p_enum.add_argument("--output")

    p_ver = subs.add_parser("verify", help="run exhaustive checks")
    p_ver.add_argument("--theorem", required=True,
                       help="check id (see README) or 'all'")
    p_ver.add_argument("--n", help="order range, N or LO..HI")
    p_ver.add_argument("--alphas", default="default")
    p_ver.add_argument("--json", dest="json_path")
    p_ver.add_argument("--checkpoint")
    p_ver.add_argument("--workers", type=int,
                       default=int(os.environ.get(WORKERS_ENV, "1")))
    p_ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ver.add_argument("--count", type=int, default=200,
                       help="random corpus size for rewiring/pendant checks")
    p_ver.add_argument("--max-total", type=int, default=6,
                       help="largest combined pendant path length")

    p_scan = subs.add_parser("scan-alpha", help="rho over an alpha grid (CSV)")
    _add_graph_source(p_scan)
    p_scan.add_argument("--alphas", default="default")
    p_scan.add_argument("--output")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("graph", "family", "file"):
        if hasattr(args, name):
            setattr(cfg, "graph6" if name == "graph" else name,
                    getattr(args, name))
    if getattr(args, "alpha", None) is not None:
        if not 0.0 <= args.alpha <= 1.0:
            raise GraphError(f"alpha {args.alpha} outside [0, 1]")
        cfg.alpha = args.alpha
    if hasattr(args, "alphas"):
        cfg.alphas = parse_alphas(args.alphas)
    if getattr(args, "n", None):
        cfg.n_range = parse_range(args.n)
    for name in ("theorem", "graph_class", "fmt", "output", "json_path",
                 "checkpoint", "workers", "seed", "count"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "max_total"):
        cfg.max_total = args.max_total
    cfg.workers = max(1, int(cfg.workers))
    cfg.as_csv = bool(getattr(args, "csv", False))
    return cfg


_RUNNERS = {
    "spectrum": _run_spectrum,
    "bounds": _run_bounds,
    "indices": _run_indices,
    "enumerate": _run_enumerate,
    "verify": _run_verify,
    "scan-alpha": _run_scan_alpha,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _RUNNERS[args.command](cfg)
    except (GraphError, Graph6Error, CapabilityError, FileNotFoundError) as exc:
        parser.exit(2, f"aspectral: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
