#!/usr/bin/env python3
"""Run every verification sweep and write one combined JSON report.

Usage: python scripts/run_full_verification.py [--samples N] [--seed S]
       [--out report.json]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from g2spin7.cy import cy_axioms_sweep
from g2spin7.g2 import phi0, verify_g2_identities
from g2spin7.ledger import SignLedger
from g2spin7.report import Report
from g2spin7.spin7 import verify_spin7


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", default="verification_report.json")
    args = ap.parse_args()

    ledger = SignLedger()
    t0 = time.perf_counter()
    checks = verify_g2_identities(phi0(), samples=args.samples, seed=args.seed,
                                  ledger=ledger)
    checks += cy_axioms_sweep(phi0(), count=args.samples, seed=args.seed + 1,
                              ledger=ledger)
    checks += verify_spin7(samples=args.samples, seed=args.seed, ledger=ledger)
    elapsed = time.perf_counter() - t0

    report = Report(backend="rational", seed=args.seed, checks=checks,
                    ledger_signs=ledger.as_dict(), ledger_notes=ledger.notes())
    Path(args.out).write_text(report.to_json())
    print(report.to_text())
    print(f"\n{len(checks)} checks in {elapsed:.1f}s -> {args.out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
