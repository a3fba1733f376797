"""How the residue/signature square check scales with the number of sampled forms."""

import time

from realcycles.verify import residue_square

for n in (25, 50, 100, 200, 400):
    t0 = time.perf_counter()
    rep = residue_square(n, seed=0)
    dt = time.perf_counter() - t0
    print(f"{n:4d} forms  {len(rep.items):5d} checks  {rep.status}  {dt:6.2f}s")
