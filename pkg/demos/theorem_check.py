"""
palindromic polynomial vs domino-stable, over every small shape
prints a small table; any disagreement would be printed as a grid
"""

import sys
import time

from cellrook.analysis import verify_corpus
from cellrook.enumerate import enumerate_shapes

top = {"poly": 8, "collection": 6}
if len(sys.argv) > 1:
    top = {"poly": int(sys.argv[1]), "collection": int(sys.argv[2])}

print("%-11s %5s %7s %7s %7s %6s" % ("universe", "rank", "shapes", "stable", "palin", "fails"))
for universe, hi in top.items():
    for n in range(1, hi + 1):
        t = time.time()
        agg = verify_corpus(enumerate_shapes(n, universe), keep_going=True)
        print("%-11s %5d %7d %7d %7d %6d   %.2fs" % (
            universe, n, agg.total, agg.stable, agg.palindromic, agg.failures, time.time() - t))
        for c in agg.counterexamples:
            print(c["counterexample"]["shape"])
