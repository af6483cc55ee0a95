#!/usr/bin/env python3
"""Run every verification suite and write one report file per suite.

Usage:
    python scripts/verify_all.py [--out-dir reports] [--max-n 6]
                                 [--samples 200] [--seed 0] [--k-max 3]

Exit status is 0 only if all suites pass.
"""

import argparse
import pathlib
import sys
import time

from k4free.suites import SUITES, SuiteParams, run_suite


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", default="reports")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=int, default=3)
    args = p.parse_args(argv)

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for name in SUITES:
        # the lemma checks brute-force each graph many times; keep their
        # exhaustive corpus a step smaller than the bounds one
        params = SuiteParams(
            max_n=args.max_n - 1 if name == "lemmas" else args.max_n,
            samples=args.samples,
            seed=args.seed,
            k_max=args.k_max,
        )
        t0 = time.time()
        report = run_suite(name, params)
        path = out / f"{name}.txt"
        path.write_text(report.to_text())
        status = "PASS" if report.passed else "FAIL"
        all_ok = all_ok and report.passed
        print(
            f"{name:<9} {status}  records={len(report.records):<7} "
            f"failures={report.failures}  {time.time() - t0:6.1f}s  -> {path}"
        )
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
