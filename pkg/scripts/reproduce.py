#!/usr/bin/env python3
"""Run the reproduction manifest and write it to results/manifest.json."""

import argparse
import json
import sys
from pathlib import Path

from zlab.reproduce import run_manifest


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default="results/manifest.json")
    p.add_argument("--only", nargs="*")
    args = p.parse_args()
    man = run_manifest(args.only)
    print("\n".join(man.lines()))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(man.to_dict(), indent=2))
    return 0 if man.ok else 1


if __name__ == "__main__":
    sys.exit(main())
