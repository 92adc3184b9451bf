"""Harvest a handful of random instances and summarize them.

Usage: python3 demos/scan_report.py [seed]
"""

import sys
from collections import Counter

from g2isogeny.scan import scan

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
report = scan(11, 200, 10, seed)

print("seed %d: %d instances, %d failures, %d curves skipped"
      % (seed, len(report.instances), len(report.failures), report.skipped))
for inst in report.instances:
    F = inst["curve"]["F"]
    shape = "quintic" if F[6] == 0 else "sextic"
    print("  p = %3d  %-7s  P_H(1) = %6d  twist_equiv = %s"
          % (inst["curve"]["p"], shape, sum(inst["weil_H"]), inst["twist_equiv"]))
print("failure codes:", dict(Counter(f["code"] for f in report.failures)))
