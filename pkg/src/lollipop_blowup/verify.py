"""Verification suites and their JSON reports.

Each suite expands a parameter grid (see ``data/verify_grid.json``) into
cases.  A case records its parameters and an outcome (``pass``, ``fail`` or
``undecided``) together with its evidence, graphs being stored as graph6
strings.  Wall times are only recorded on request so that
reports are byte-reproducible.
"""

from __future__ import annotations

import copy
import hashlib
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Any, Callable, Optional

from .blowup import blowup, decomposition_family_bruteforce, split_family
from .constructions import (
    VARIANTS,
    ConstructionSpec,
    edge_count_formula,
    lollipop,
    predicted_extremal,
    realize,
    small_case_family,
    y_family,
)
from .containment import (
    BlowupEmbedding,
    SearchBudgetExceeded,
    blowup_contains,
    freeness_certificate,
    subgraph_contains,
    verify_blowup_embedding,
)
from .graph import Graph, complete_multipartite, disjoint_union, join, make_basic
from .graph6 import decode_graph6, encode_graph6
from .turan import saturation_report

__all__ = [
    "SCHEMA",
    "SCHEMA_VERSION",
    "SUITES",
    "VerifyReport",
    "default_config",
    "load_config",
    "run_suite",
    "random_hosts",
]

SCHEMA = "lollipop-blowup/verify-report"
SCHEMA_VERSION = 1
PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"


@dataclass
class VerifyReport:
    suite: str
    config: dict
    fingerprint: dict
    cases: list[dict] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, UNDECIDED: 0}
        for case in self.cases:
            out[case["outcome"]] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary[FAIL] == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d = {"schema": SCHEMA, "schema_version": SCHEMA_VERSION, **d, "summary": self.summary}
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"


def default_config() -> dict:
    text = resources.files("lollipop_blowup").joinpath("data/verify_grid.json").read_text()
    return json.loads(text)


def load_config(path: Optional[str] = None) -> dict:
    """Default grid, with top-level suite sections replaced from ``path``."""
    cfg = default_config()
    if path is not None:
        with open(path) as fh:
            user = json.load(fh)
        unknown = set(user) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites in config: {sorted(unknown)}")
        cfg.update(user)
    return cfg


def _fingerprint(section: dict) -> dict:
    from . import __version__

    blob = json.dumps(section, sort_keys=True).encode()
    return {
        "package": "lollipop_blowup",
        "version": __version__,
        "python": f"{sys.version_info.major}.{sys.version_info.minor}",
        "config_sha256": hashlib.sha256(blob).hexdigest(),
    }


def _embedding_evidence(emb: BlowupEmbedding) -> dict:
    return {"base_map": list(emb.base_map), "apex_sets": [list(a) for a in emb.apex_sets]}


def _host_spec(cell: dict) -> list[ConstructionSpec]:
    k, l, p, n = cell["k"], cell["l"], cell["p"], cell["n"]
    if "variant" in cell:
        return [ConstructionSpec(cell["variant"], n, p, cell.get("q", 1))]
    pred = predicted_extremal(k, l, p, n)
    if not pred.covered:
        raise ValueError(f"no predicted construction for {cell}: {pred.rule}")
    return list(pred.specs)


# ---- case workers (top level so they can run in a process pool) ----

def _case_freeness(cell: dict, budget: Optional[int]) -> dict:
    k, l, p = cell["k"], cell["l"], cell["p"]
    hosts = []
    outcome = PASS
    for spec in _host_spec(cell):
        g = realize(spec)
        entry: dict[str, Any] = {"construction": spec.label(), "graph6": encode_graph6(g),
                                 "edges": g.num_edges()}
        if spec.variant in ("H", "Hprime"):
            cert = freeness_certificate(spec, k, l, p)
            entry["certificate"] = None if cert is None else {
                "kind": cert.kind, "q_size": cert.q_size,
                "budget": cert.budget, "demand": cert.demand,
            }
            if cert is None:
                outcome = FAIL
        try:
            emb = blowup_contains(g, k, l, p, budget=budget)
        except SearchBudgetExceeded as exc:
            entry["search"] = {"result": "undecided", "nodes": exc.nodes}
            if outcome == PASS:
                outcome = UNDECIDED
        else:
            if emb is None:
                entry["search"] = {"result": "free"}
            else:
                entry["search"] = {"result": "contains", **_embedding_evidence(emb)}
                outcome = FAIL
        hosts.append(entry)
    return {"id": f"k={k},l={l},p={p},n={cell['n']}", "params": cell, "outcome": outcome,
            "evidence": {"hosts": hosts}}


def _formula_specs(variant: str, section: dict, p: int) -> list[ConstructionSpec]:
    ns = range(section["n_min"], section["n_max"] + 1)
    qs = range(section["q_min"], section["q_max"] + 1)
    out = []
    for n in ns:
        if variant == "TuranOnly":
            out.append(ConstructionSpec(variant, n, p))
        elif variant in ("H", "Hprime"):
            for q in qs:
                try:
                    out.append(ConstructionSpec(variant, n, p, q))
                except ValueError:
                    pass
        elif variant == "Hstar":
            out.append(ConstructionSpec(variant, n))
        else:
            out.extend(s for s in small_case_family(n) if s.variant == "JoinFamily")
    return out


def _case_formulas(cell: dict, budget: Optional[int]) -> dict:
    variant, p = cell["variant"], cell.get("p")
    mismatches = []
    specs = _formula_specs(variant, cell["section"], p)
    for spec in specs:
        actual = realize(spec).num_edges()
        expect = edge_count_formula(spec)
        if actual != expect:
            mismatches.append({"construction": spec.label(), "formula": expect, "counted": actual})
    params = {"variant": variant} if p is None else {"variant": variant, "p": p}
    return {"id": " ".join(f"{k}={v}" for k, v in params.items()), "params": params,
            "outcome": FAIL if mismatches else PASS,
            "evidence": {"checked": len(specs), "mismatches": mismatches}}


def _case_families(cell: dict, budget: Optional[int]) -> dict:
    k, l, p = cell["k"], cell["l"], cell["p"]
    base = lollipop(k, l)
    star = split_family(base, "independent")
    chi = split_family(base, "chi", p - 1)
    every = split_family(base, "all")
    ys = y_family(k, l)
    missing_y = [encode_graph6(y) for y in ys if y not in star]
    checks = {
        "independent_in_chi": star.issubset(chi),
        "chi_in_all": chi.issubset(every),
        "y_family_in_independent": not missing_y,
    }
    return {"id": f"k={k},l={l},p={p}", "params": {"k": k, "l": l, "p": p},
            "outcome": PASS if all(checks.values()) else FAIL,
            "evidence": {"sizes": {"independent": len(star), "chi": len(chi), "all": len(every),
                                   "y_family": len(ys)},
                         "checks": checks, "missing_y": missing_y}}


def random_hosts(seed: int, count: int, n_min: int, n_max: int, edge_prob: float) -> list[Graph]:
    """Seeded G(n, edge_prob) hosts with ``n`` uniform in ``[n_min, n_max]``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob]
        out.append(Graph.from_edges(n, edges))
    return out


def _case_oracle(cell: dict, budget: Optional[int]) -> dict:
    g = decode_graph6(cell["graph6"])
    k, l, p = cell["k"], cell["l"], cell["p"]
    pattern = blowup(lollipop(k, l), p).graph
    try:
        fast = blowup_contains(g, k, l, p, budget=budget)
        generic = subgraph_contains(g, pattern, budget=budget, host_symmetry=False)
    except SearchBudgetExceeded:
        return {"id": f"host {cell['index']}", "params": cell, "outcome": UNDECIDED,
                "evidence": {}}
    agree = (fast is None) == (generic is None)
    evidence: dict[str, Any] = {"blowup_search": fast is not None,
                                "generic_search": generic is not None}
    if fast is not None:
        evidence["embedding"] = _embedding_evidence(fast)
        if not verify_blowup_embedding(g, fast):
            agree = False
    return {"id": f"host {cell['index']}", "params": cell,
            "outcome": PASS if agree else FAIL, "evidence": evidence}


def _case_saturation(cell: dict, budget: Optional[int]) -> dict:
    k, l, p = cell["k"], cell["l"], cell["p"]
    sample, seed = cell.get("sample"), cell.get("seed", 0)
    reports = []
    outcome = PASS
    for spec in _host_spec(cell):
        g = realize(spec)
        rep = saturation_report(g, k, l, p, sample=sample, seed=seed, budget=budget)
        counts = rep.counts
        if counts[UNDECIDED] or rep.base_free is None:
            outcome = UNDECIDED
        reports.append({"construction": spec.label(), "graph6": encode_graph6(g),
                        "base_free": rep.base_free, "counts": counts,
                        "probes": [list(pr) for pr in rep.probes]})
    return {"id": f"k={k},l={l},p={p},n={cell['n']}", "params": cell, "outcome": outcome,
            "evidence": {"hosts": reports}}


def _case_embeddings(cell: dict, budget: Optional[int]) -> dict:
    k, l, p = cell["k"], cell["l"], cell["p"]
    m = (k + l) * p
    side = complete_multipartite([m] * (p - 1))
    targets = [(f"Y{i}", y) for i, y in enumerate(y_family(k, l))]
    targets.append(("paths", disjoint_union(make_basic("path", k + 1), make_basic("path", l + 1))))
    hosts = []
    outcome = PASS
    for name, piece in targets:
        host = join(piece, side)
        entry: dict[str, Any] = {"host": name, "piece_graph6": encode_graph6(piece)}
        try:
            emb = blowup_contains(host, k, l, p, budget=budget)
        except SearchBudgetExceeded:
            entry["result"] = UNDECIDED
            outcome = FAIL if outcome == FAIL else UNDECIDED
        else:
            if emb is not None and verify_blowup_embedding(host, emb):
                entry["result"] = "embedded"
                entry.update(_embedding_evidence(emb))
            else:
                entry["result"] = "missing"
                outcome = FAIL
        hosts.append(entry)
    return {"id": f"k={k},l={l},p={p}", "params": cell, "outcome": outcome,
            "evidence": {"m": m, "hosts": hosts}}


def _case_decomposition(cell: dict, budget: Optional[int]) -> dict:
    k, l, p = cell["k"], cell["l"], cell["p"]
    bound, t_max = cell["max_m_vertices"], cell["t_max"]
    pattern = blowup(lollipop(k, l), p).graph
    brute = decomposition_family_bruteforce(pattern, p, bound, t_max, budget=budget)
    splits = split_family(lollipop(k, l), "chi", p - 1).filter(lambda g: g.n <= bound)
    equal = brute.codes() == splits.codes()
    if brute.partial:
        outcome = UNDECIDED if equal or brute.codes() <= splits.codes() else FAIL
    else:
        outcome = PASS if equal else FAIL
    return {"id": f"k={k},l={l},p={p},bound={bound}", "params": cell, "outcome": outcome,
            "evidence": {"partial": brute.partial,
                         "bruteforce": [encode_graph6(g) for g in brute],
                         "split_family": [encode_graph6(g) for g in splits]}}


def _expand(suite: str, section: dict, seed: int) -> list[tuple[Callable, dict]]:
    if suite == "freeness":
        return [(_case_freeness, c) for c in section["cells"]]
    if suite == "formulas":
        out = []
        for variant in VARIANTS:
            if variant in ("Hstar", "JoinFamily"):
                out.append((_case_formulas, {"variant": variant, "section": section}))
            else:
                out.extend((_case_formulas, {"variant": variant, "p": p, "section": section})
                           for p in section["p"])
        return out
    if suite == "families":
        return [(_case_families, {"k": k, "l": l, "p": p})
                for k, l in section["bases"] for p in section["p"]]
    if suite == "oracle-equivalence":
        hosts = random_hosts(seed, section["hosts"], section["n_min"], section["n_max"],
                             section["edge_prob"])
        return [(_case_oracle, {"index": i, "k": section["k"], "l": section["l"],
                                "p": section["p"], "graph6": encode_graph6(g)})
                for i, g in enumerate(hosts)]
    if suite == "saturation":
        return [(_case_saturation, {**c, "sample": section.get("sample"), "seed": seed})
                for c in section["cells"]]
    if suite == "embeddings":
        return [(_case_embeddings, c) for c in section["cells"]]
    if suite == "decomposition":
        return [(_case_decomposition, c) for c in section["cells"]]
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("freeness", "formulas", "families", "oracle-equivalence", "saturation",
          "embeddings", "decomposition")


def _timed(job: tuple[Callable, dict, Optional[int], bool]) -> dict:
    fn, params, budget, timing = job
    start = time.perf_counter()
    case = fn(params, budget)
    case["params"] = {k: v for k, v in case["params"].items() if k != "section"}
    if timing:
        case["wall_time"] = round(time.perf_counter() - start, 4)
    return case


def run_suite(suite: str, config: Optional[dict] = None, *, seed: int = 0,
              budget: Optional[int] = None, threads: int = 1, timing: bool = False,
              progress: Optional[Callable[[dict], None]] = None) -> VerifyReport:
    """Run one suite and collect a report.

    ``budget`` overrides the section's own budget.  With ``threads > 1``
    cases run in a process pool; case order, and so the report, does not
    depend on the thread count.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    cfg = default_config() if config is None else config
    section = copy.deepcopy(cfg[suite])
    if budget is None:
        budget = section.get("budget")
    echo = {"suite": suite, "section": section, "seed": seed, "budget": budget}
    report = VerifyReport(suite, echo, _fingerprint(echo))
    jobs = [(fn, params, budget, timing) for fn, params in _expand(suite, section, seed)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_timed, jobs)
            for case in results:
                report.cases.append(case)
                if progress:
                    progress(case)
    else:
        for job in jobs:
            case = _timed(job)
            report.cases.append(case)
            if progress:
                progress(case)
    return report

