"""Command-line entry point: ``lollipop-blowup <command> [flags]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .blowup import blowup, decomposition_family_bruteforce, split_family
from .constructions import (
    VARIANTS,
    ConstructionSpec,
    edge_count_formula,
    lollipop,
    predicted_extremal,
    realize,
)
from .containment import (
    SearchBudgetExceeded,
    blowup_contains,
    min_vertex_cover,
    subgraph_contains,
)
from .graph import Graph
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .turan import ex_bruteforce
from .verify import SUITES, load_config, run_suite

THREADS_ENV = "LOLLIPOP_THREADS"


class _Emitter:
    """Collects output lines and writes them to ``--out`` or stdout."""

    def __init__(self, args: argparse.Namespace):
        self.fmt = args.format
        self.out = args.out
        self.lines: list[str] = []

    def graphs(self, items: list[tuple[Graph, dict]]) -> None:
        for g, meta in items:
            if self.fmt == "graph6":
                self.lines.append(encode_graph6(g))
            else:
                self.lines.append(json.dumps({"graph6": encode_graph6(g), "n": g.n,
                                              "edges": g.num_edges(), **meta}, sort_keys=True))

    def record(self, obj: dict) -> None:
        self.lines.append(json.dumps(obj, sort_keys=True))

    def flush(self) -> None:
        text = "".join(line + "\n" for line in self.lines)
        if self.out:
            with open(self.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _need(parser: argparse.ArgumentParser, args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        parser.error(f"{args.command} needs {', '.join(missing)}")


def _graph6_arg(parser: argparse.ArgumentParser, text: str, flag: str) -> Graph:
    try:
        return decode_graph6(text)
    except Graph6Error as exc:
        parser.error(f"{flag}: {exc}")
        raise  # unreachable, parser.error exits


def _pattern(parser, args) -> tuple[Graph, Optional[tuple[int, int, int]]]:
    """Pattern from ``--pattern-graph6`` or the blow-up given by ``--k --l --p``."""
    if args.pattern_graph6 is not None:
        if args.k is not None or args.l is not None:
            parser.error("give either --pattern-graph6 or --k/--l, not both")
        return _graph6_arg(parser, args.pattern_graph6, "--pattern-graph6"), None
    _need(parser, args, "k", "l", "p")
    return blowup(lollipop(args.k, args.l), args.p).graph, (args.k, args.l, args.p)


def _specs(parser, args) -> list[ConstructionSpec]:
    _need(parser, args, "n")
    if args.variant is None:
        _need(parser, args, "k", "l", "p")
        pred = predicted_extremal(args.k, args.l, args.p, args.n)
        if not pred.covered:
            parser.error(f"no predicted construction: {pred.rule}")
        return list(pred.specs)
    if args.variant == "JoinFamily":
        parser.error("JoinFamily graphs come from --k 3 --l 1 --p 2 without --variant")
    try:
        return [ConstructionSpec(args.variant, args.n, args.p or 2, args.q or 1)]
    except ValueError as exc:
        parser.error(str(exc))
        raise


def cmd_construct(parser, args, em: _Emitter) -> int:
    items = []
    for spec in _specs(parser, args):
        g = realize(spec)
        _note(f"{spec.label()}: {g.n} vertices, {g.num_edges()} edges")
        items.append((g, {"construction": spec.label(), "formula_edges": edge_count_formula(spec)}))
    em.graphs(items)
    return 0


def cmd_blowup(parser, args, em: _Emitter) -> int:
    if args.pattern_graph6 is not None:
        base = _graph6_arg(parser, args.pattern_graph6, "--pattern-graph6")
    else:
        _need(parser, args, "k", "l")
        base = lollipop(args.k, args.l)
    _need(parser, args, "p")
    res = blowup(base, args.p)
    _note(f"blow-up: {res.graph.n} vertices, {res.graph.num_edges()} edges")
    em.graphs([(res.graph, {"edge_cliques": [list(c) for c in res.edge_cliques],
                            "base_edges": [list(e) for e in res.base_edges]})])
    return 0


def cmd_split_family(parser, args, em: _Emitter) -> int:
    _need(parser, args, "k", "l")
    if args.mode == "chi":
        _need(parser, args, "p")
    fam = split_family(lollipop(args.k, args.l), args.mode, args.p)
    _note(f"{len(fam)} members")
    em.graphs([(g, {}) for g in fam])
    return 0


def cmd_decomp_family(parser, args, em: _Emitter) -> int:
    _need(parser, args, "k", "l", "p")
    bound = args.n if args.n is not None else 7
    pattern = blowup(lollipop(args.k, args.l), args.p).graph
    fam = decomposition_family_bruteforce(pattern, args.p, bound, args.t_max, budget=args.budget)
    _note(f"{len(fam)} minimal members on at most {bound} vertices"
          + (" (partial: some checks ran out of budget)" if fam.partial else ""))
    em.graphs([(g, {"partial": fam.partial}) for g in fam])
    return 0


def cmd_contains(parser, args, em: _Emitter) -> int:
    if args.host_graph6 is not None:
        host = _graph6_arg(parser, args.host_graph6, "--host-graph6")
        label = "host"
    else:
        if args.variant is None:
            parser.error("contains needs --host-graph6 or --variant/--n/--p/--q")
        spec = _specs(parser, args)[0]
        host, label = realize(spec), spec.label()
    pattern, lkp = _pattern(parser, args)
    try:
        if lkp is not None:
            emb = blowup_contains(host, *lkp, budget=args.budget)
            found = None if emb is None else {"base_map": list(emb.base_map),
                                              "apex_sets": [list(a) for a in emb.apex_sets]}
        else:
            e = subgraph_contains(host, pattern, budget=args.budget)
            found = None if e is None else {"mapping": list(e.mapping)}
        result = "free" if found is None else "contains"
    except SearchBudgetExceeded as exc:
        result, found = "undecided", {"nodes": exc.nodes}
    em.record({"host": label, "host_graph6": encode_graph6(host),
               "pattern_graph6": encode_graph6(pattern), "result": result, "witness": found})
    _note(result)
    return 0


def cmd_vc(parser, args, em: _Emitter) -> int:
    if args.pattern_graph6 is not None:
        g = _graph6_arg(parser, args.pattern_graph6, "--pattern-graph6")
    else:
        _need(parser, args, "k", "l")
        g = lollipop(args.k, args.l)
    size, cover = min_vertex_cover(g)
    em.record({"graph6": encode_graph6(g), "size": size, "cover": cover})
    _note(f"minimum vertex cover: {size}")
    return 0


def cmd_ex_brute(parser, args, em: _Emitter) -> int:
    _need(parser, args, "n")
    pattern, _ = _pattern(parser, args)
    try:
        res = ex_bruteforce(args.n, pattern, budget=args.budget)
    except ValueError as exc:
        parser.error(str(exc))
        raise
    _note(f"max_edges {res.max_edges}")
    if args.format == "json":
        em.record({"n": res.n, "pattern_graph6": encode_graph6(pattern),
                   "max_edges": res.max_edges,
                   "witnesses": [encode_graph6(g) for g in res.witnesses]})
    else:
        em.graphs([(g, {}) for g in res.witnesses])
    return 0


def _apply_overrides(cfg: dict, args: argparse.Namespace) -> dict:
    flags = {k: getattr(args, k) for k in ("k", "l", "p", "n") if getattr(args, k) is not None}
    if not flags:
        return cfg
    for suite in ("freeness", "saturation", "embeddings", "decomposition"):
        cell = dict(cfg[suite]["cells"][0])
        if suite in ("saturation", "freeness"):
            cell.pop("variant", None)
            cell.pop("q", None)
        if suite == "decomposition" and "n" in flags:
            cell["max_m_vertices"] = flags["n"]
            cell.update({k: v for k, v in flags.items() if k != "n"})
        elif suite == "embeddings":
            cell.update({k: v for k, v in flags.items() if k != "n"})
        else:
            cell.update(flags)
        if args.t_max is not None and suite == "decomposition":
            cell["t_max"] = args.t_max
        cfg[suite]["cells"] = [cell]
    for key in ("k", "l", "p"):
        if key in flags:
            cfg["oracle-equivalence"][key] = flags[key]
    return cfg


def cmd_verify(parser, args, em: _Emitter) -> int:
    if args.format == "graph6":
        parser.error("verify writes JSON reports; --format graph6 does not apply")
    suites = list(SUITES) if "all" in args.suite else args.suite
    try:
        cfg = _apply_overrides(load_config(args.config), args)
    except (OSError, ValueError) as exc:
        parser.error(str(exc))
        raise
    reports = []
    failed = False
    for suite in suites:
        def progress(case: dict, suite=suite) -> None:
            _note(f"[{suite}] {case['id']}: {case['outcome']}")

        rep = run_suite(suite, cfg, seed=args.seed, budget=args.budget, threads=args.threads,
                        timing=args.timing, progress=progress)
        _note(f"[{suite}] summary {rep.summary}")
        failed |= not rep.ok
        reports.append(rep.to_dict())
    payload = reports[0] if len(reports) == 1 else reports
    em.lines.append(json.dumps(payload, sort_keys=True, indent=1))
    return 1 if failed else 0


COMMANDS = {
    "construct": cmd_construct,
    "blowup": cmd_blowup,
    "split-family": cmd_split_family,
    "decomp-family": cmd_decomp_family,
    "contains": cmd_contains,
    "vc": cmd_vc,
    "ex-brute": cmd_ex_brute,
    "verify": cmd_verify,
}


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lollipop-blowup",
        description="Constructions, containment and verification for edge blow-ups of lollipops.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--k", type=int, help="cycle length of the lollipop")
    parser.add_argument("--l", type=int, help="path length of the lollipop")
    parser.add_argument("--p", type=int, help="clique order minus one in the blow-up")
    parser.add_argument("--n", type=int, help="host order (vertex bound for decomp-family)")
    parser.add_argument("--q", type=int, help="clique parameter of H and H'")
    parser.add_argument("--variant", choices=VARIANTS)
    parser.add_argument("--mode", choices=("all", "independent", "chi"), default="independent")
    parser.add_argument("--t-max", type=int, dest="t_max")
    parser.add_argument("--budget", type=int, help="search node budget per containment check")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--threads", type=int, default=_default_threads(),
                        help=f"worker processes for verify (default ${THREADS_ENV} or 1)")
    parser.add_argument("--format", choices=("graph6", "json"), default="json")
    parser.add_argument("--out", help="output file (default stdout)")
    parser.add_argument("--pattern-graph6", dest="pattern_graph6")
    parser.add_argument("--host-graph6", dest="host_graph6")
    parser.add_argument("--suite", action="append", choices=SUITES + ("all",),
                        help="verify suite; repeatable")
    parser.add_argument("--config", help="JSON file replacing sections of the verify grid")
    parser.add_argument("--timing", action="store_true", help="record wall times in reports")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify" and (args.suite or args.config or args.timing):
        parser.error("--suite, --config and --timing only apply to verify")
    if args.command == "verify" and not args.suite:
        args.suite = ["all"]
    if args.threads < 1:
        parser.error("--threads must be positive")
    em = _Emitter(args)
    code = COMMANDS[args.command](parser, args, em)
    em.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
