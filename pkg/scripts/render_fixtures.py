#!/usr/bin/env python3
"""Render every bundled fixture arrangement to SVG.

Usage: python scripts/render_fixtures.py [OUTDIR]
"""

import pathlib
import sys

from corecover import render_svg
from corecover.formats import parse_arrangement

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main() -> int:
    outdir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "out"
    outdir.mkdir(parents=True, exist_ok=True)
    for path in sorted((ROOT / "fixtures").glob("*.json")):
        arr = parse_arrangement(path.read_bytes())
        if arr.n > 2:
            print(f"skip {path.name}: ambient dimension {arr.n}")
            continue
        target = outdir / (path.stem + ".svg")
        target.write_text(render_svg(arr), encoding="utf-8")
        print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
