"""Search report emission: text table, CSV, and versioned JSON.

Identical inputs and flags produce byte-identical CSV and JSON (timing
excluded): every number in a report is reproducible from the embedded
options alone.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .search import TypeTable, SearchOptions

REPORT_VERSION = 1


@dataclass
class SearchReport:
    table: TypeTable
    options: SearchOptions
    embedding: str = ""
    backend: str = ""
    wall_time_ms: float = 0.0


def _options_dict(o: SearchOptions) -> dict:
    return {
        "max_length": o.max_length,
        "test4": o.use_test4,
        "remark2": o.use_remark2,
        "seam_remark2": o.seam_remark2,
        "assume_transitive": o.assume_transitive,
        "workers": o.workers,
    }


def to_json_dict(rep: SearchReport) -> dict:
    t = rep.table
    return {
        "report_version": REPORT_VERSION,
        "embedding": rep.embedding,
        "n": t.n,
        "genus": t.genus,
        "root": t.root,
        "rows": [{"type": r.type, "nsc": r.nsc, "min_length": r.min_length}
                 for r in t.rows],
        "visited": t.visited,
        "contractible_directed": t.contractible_directed,
        "splitting_directed": t.splitting_directed,
        "wall_time_ms": round(rep.wall_time_ms, 3),
        "options": _options_dict(rep.options),
        "backend": rep.backend,
    }


def render_json(rep: SearchReport) -> str:
    return json.dumps(to_json_dict(rep), indent=1, sort_keys=True) + "\n"


def render_csv(rep: SearchReport) -> str:
    lines = ["type,nsc,min_length"]
    for r in rep.table.rows:
        ml = "" if r.min_length is None else str(r.min_length)
        lines.append(f"{r.type},{r.nsc},{ml}")
    t = rep.table
    lines.append(f"visited,{t.visited},")
    lines.append(f"contractible_directed,{t.contractible_directed},")
    lines.append(f"splitting_directed,{t.splitting_directed},")
    return "\n".join(lines) + "\n"


def render_text(rep: SearchReport) -> str:
    t = rep.table
    out = [f"n = {t.n}  genus = {t.genus}  root = {t.root}"
           + (f"  [{rep.embedding}]" if rep.embedding else "")]
    out.append(f"{'type':>6} {'nsc':>8} {'min length':>11}")
    for r in t.rows:
        ml = "-" if r.min_length is None else str(r.min_length)
        out.append(f"{r.type:>6} {r.nsc:>8} {ml:>11}")
    out.append(f"visited nodes        {t.visited}")
    out.append(f"contractible (dir.)  {t.contractible_directed}")
    out.append(f"splitting (dir.)     {t.splitting_directed}")
    if rep.wall_time_ms:
        out.append(f"wall time            {rep.wall_time_ms/1000.0:.2f} s")
    if rep.backend:
        out.append(f"backend              {rep.backend}")
    return "\n".join(out) + "\n"
