"""Write every figure data file into one directory.

    python scripts/make_figure_data.py out/
"""

import sys
from pathlib import Path

from covosc.cli import main

RUNS = [
    ("squeeze.csv", ["squeeze", "--eta", "0,1,2,4"]),
    ("entangle.csv", ["entangle", "--eta", "0,0.5,1,2", "--kmax", "40"]),
    ("parton.csv", ["parton", "--eta", "0,1,2,3,4"]),
    ("fourier.csv", ["fourier-check"]),
    ("validate.csv", ["validate"]),
]


def run(outdir: Path) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name, argv in RUNS:
        code = main([*argv, "--output", str(outdir / name)])
        print(f"{name}: exit {code}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run(Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")))
