"""
free polyominoes and king-connected collections counted by rank
"""

import os
import time

from cellrook.enumerate import count_shapes, default_jobs

jobs = default_jobs()
print("jobs", jobs, "(set CELLROOK_JOBS to change)")
for universe, hi in [("poly", int(os.environ.get("POLY_MAX", 10))),
                     ("collection", int(os.environ.get("COLL_MAX", 8)))]:
    row = []
    t = time.time()
    for n in range(1, hi + 1):
        row.append(count_shapes(n, universe, jobs))
    print(universe, row, "%.1fs" % (time.time() - t))
