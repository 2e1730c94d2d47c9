#!/usr/bin/env python3
"""Write the whole construction catalogue as colouring files + certificates.

Usage: python scripts/build_certificates.py [outdir]
"""

import sys
from pathlib import Path

from gallai.cli import main as cli


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "artifacts")
    out.mkdir(parents=True, exist_ok=True)

    jobs = [
        (["construct", "cyclic", "--k", "5"], "k11", ["--d", "3", "--expect-count", "5"]),
        (["construct", "cyclic", "--k", "8"], "k17-cyclic", ["--d", "3", "--expect-count", "16"]),
        (["construct", "k17"], "k17-3graph",
         ["--notion", "strong", "--d", "4", "--expect-count", "0"]),
        (["construct", "pointwise-cycles", "--k", "4", "--n", "13"], "pw13",
         ["--notion", "pointwise", "--d", "4", "--expect-count", "0"]),
        (["construct", "paths", "--k", "5", "--n", "40", "--seed", "1"], "paths5",
         ["--d", "3", "--expect-count", "6"]),
        (["construct", "parity", "--n", "8"], "parity8",
         ["--notion", "covering"]),
        (["construct", "covering-4graph", "--n", "8"], "cover4g",
         ["--notion", "covering", "--tricoloured"]),
        (["construct", "minimal-3graph", "--n", "12"], "h12",
         ["--notion", "strong", "--colour", "1"]),
    ]
    failures = 0
    for build, stem, checks in jobs:
        gal = out / f"{stem}.gal"
        cert = out / f"{stem}.json"
        code = cli(build + ["-o", str(gal)])
        code = code or cli(["certify", str(gal), *checks, "--cert", str(cert)])
        print(f"{stem:12s} exit={code}  ({gal.name}, {cert.name})")
        failures += bool(code)

    code = cli(["pipeline", "--k", "9", "-o", str(out / "pipeline9.gal"),
                "--cert", str(out / "pipeline9.json")])
    print(f"{'pipeline9':12s} exit={code}")
    failures += bool(code)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
