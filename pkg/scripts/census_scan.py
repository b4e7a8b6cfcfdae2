#!/usr/bin/env python3
"""Run every census scan and write JSON and CSV reports to one directory."""

import argparse
import json
import sys
from pathlib import Path

from zlab.scan import SCANS, ScanConfig, render, run_scan, scan_failed


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--admax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--outdir", default="results/scans")
    args = p.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    failed = False
    for scan in SCANS:
        cfg = ScanConfig(d_max=args.dmax, a_d_max=args.admax, seed=args.seed, jobs=args.jobs)
        report = run_scan(scan, cfg)
        for fmt in ("json", "csv"):
            (outdir / f"{scan}.{fmt}").write_text(render(report, fmt))
        failed |= scan_failed(report)
        print(scan, json.dumps(report["summary"], sort_keys=True)[:300])
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
