"""Census scans over lex-segment ideals with deterministic, order-stable output."""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import comb
from typing import Optional

from . import hilbert as hs
from . import lexseg
from . import rees
from . import staircase as st

SCANS = ("h1", "h2", "depth", "rees")

# frozen column order; JSON rows carry the same keys plus nothing else
CSV_COLUMNS = (
    "scan",
    "ideal",
    "d",
    "a_d",
    "mu",
    "h",
    "e",
    "lambda",
    "h1_bound",
    "h2",
    "depth",
    "certainty",
    "certificate",
    "family",
    "buchberger_ok",
    "toric_ok",
    "square_free",
    "integrally_closed",
    "ok",
)


@dataclass(frozen=True)
class ScanConfig:
    d_max: int = 5
    a_d_max: int = 10
    kmax: int = 6
    power_probe: int = 4
    seed: int = 0
    mode: str = "exhaustive"  # or "sampled"
    samples: int = 200
    out: Optional[str] = None
    format: str = "json"
    jobs: int = 1
    tdeg_cap: int = 4

    def __post_init__(self):
        if self.d_max < 0 or self.a_d_max < 0:
            raise ValueError("d_max and a_d_max must be nonnegative")
        if self.kmax < 1 or self.power_probe < 1 or self.jobs < 1 or self.samples < 1:
            raise ValueError("window sizes, samples and jobs must be >= 1")
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")


def population(cfg: ScanConfig) -> list[st.ColumnSequence]:
    pop = [
        st.ColumnSequence((0,) + c)
        for d in range(1, cfg.d_max + 1)
        for c in itertools.combinations(range(1, cfg.a_d_max + 1), d)
    ]
    if cfg.mode == "sampled" and len(pop) > cfg.samples:
        pop = sorted(random.Random(cfg.seed).sample(pop, cfg.samples), key=lambda a: (len(a), a))
    return pop


def _base_row(scan: str, a) -> dict:
    return {"scan": scan, "ideal": str(a), "d": a.d, "a_d": a[-1], "mu": st.mu(a)}


def _row_h(scan: str, a, cfg: ScanConfig) -> dict:
    s = hs.hilbert_series(a)
    row = _base_row(scan, a)
    bound = comb(st.mu(a) - 1, 2)
    row.update(h=list(s.h), e=s.e, **{"lambda": s.lam}, h1_bound=bound, h2=s.coeff(2))
    row["ok"] = s.coeff(1) >= bound if scan == "h1" else s.coeff(2) >= 0
    return row


def _row_depth(scan: str, a, cfg: ScanConfig) -> dict:
    v = lexseg.depth_classify(a, cfg.kmax, cfg.power_probe)
    row = _base_row(scan, a)
    row.update(depth=v.depth, certainty=v.certainty, certificate=v.certificate, ok=True)
    return row


def _rows_rees(scan: str, a, cfg: ScanConfig) -> list[dict]:
    out = []
    for fam in rees.eligible_families(a):
        basis, order = rees.gb_family(a, fam)
        bb = rees.buchberger_verify(basis, order)
        tor = not rees.toric_membership_sample(a, basis, order, cfg.tdeg_cap)
        row = _base_row(scan, a)
        row.update(
            family=fam,
            buchberger_ok=bb,
            toric_ok=tor,
            square_free=rees.normality_certificate(basis, order),
            integrally_closed=rees.crosscheck_integral_closedness(a),
            ok=bb and tor,
        )
        out.append(row)
    return out


def _work(args) -> list[dict]:
    scan, a, cfg = args
    if scan in ("h1", "h2"):
        return [_row_h(scan, a, cfg)]
    if scan == "depth":
        return [_row_depth(scan, a, cfg)]
    return _rows_rees(scan, a, cfg)


def run_scan(scan: str, cfg: ScanConfig) -> dict:
    if scan not in SCANS:
        raise ValueError(f"unknown scan {scan!r}")
    pop = population(cfg)
    tasks = [(scan, a, cfg) for a in pop]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            chunks = list(ex.map(_work, tasks, chunksize=max(1, len(tasks) // (4 * cfg.jobs))))
    else:
        chunks = [_work(t) for t in tasks]
    rows = [r for chunk in chunks for r in chunk]
    return {"scan": scan, "config": _config_dict(cfg), "summary": summarize(scan, rows), "rows": rows}


def _config_dict(cfg: ScanConfig) -> dict:
    # output path and parallelism do not affect results
    d = asdict(cfg)
    for k in ("out", "jobs", "format"):
        d.pop(k)
    return d


def summarize(scan: str, rows: list[dict]) -> dict:
    out = {"ideals": len({r["ideal"] for r in rows}), "rows": len(rows)}
    if scan == "h1":
        bad = [r["ideal"] for r in rows if not r["ok"]]
        out.update(violations=len(bad), counterexamples=bad)
    elif scan == "h2":
        h2s = [r["h2"] for r in rows]
        out.update(
            min_h2=min(h2s) if h2s else None,
            violations=sum(1 for v in h2s if v < 0),
            counterexamples=[r["ideal"] for r in rows if r["h2"] < 0],
            zero_h2=sum(1 for v in h2s if v == 0),
        )
    elif scan == "depth":
        table = Counter((r["depth"], r["certainty"]) for r in rows)
        certs = Counter(certificate_name(r["certificate"]) for r in rows)
        out.update(
            table=[{"depth": d, "certainty": c, "count": n} for (d, c), n in sorted(table.items())],
            certificates=dict(sorted(certs.items())),
        )
    else:
        fams = Counter(r["family"] for r in rows)
        out.update(
            families=dict(sorted(fams.items())),
            failures=[f'{r["ideal"]} {r["family"]}' for r in rows if not r["ok"]],
            square_free_vs_closed=dict(
                sorted(Counter(f'{r["family"]}:{r["square_free"]}:{r["integrally_closed"]}' for r in rows).items())
            ),
        )
    return out


def certificate_name(cert: str) -> str:
    """Certificate family without instance data (indices, colon steps, inner chains)."""
    head = cert.split("/")[0]
    return re.sub(r"\s*\(k=\d+\)|\s*\b[in]=\d+", "", head).strip()


def scan_failed(report: dict) -> bool:
    """Mathematical mismatch: a theorem-backed scan found a violation (h2 is report-only)."""
    scan = report["scan"]
    if scan == "h1":
        return report["summary"]["violations"] > 0
    if scan == "rees":
        return bool(report["summary"]["failures"])
    return False


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in report["rows"]:
        w.writerow({k: _cell(r.get(k, "")) for k in CSV_COLUMNS})
    return buf.getvalue()


def _cell(v):
    if isinstance(v, list):
        return " ".join(map(str, v))
    return v
