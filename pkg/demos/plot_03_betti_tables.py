"""
Multigraded Betti numbers two ways
==================================

The Koszul route looks at each lcm-lattice element a and reads homology off
the upper Koszul complex. The oracle route uses only the order of the lcm
lattice. They share no code beyond the homology kernel, so agreement is a
real cross-check.
"""

import time

from edgereg import graph as gr
from edgereg.betti import betti_gpw_oracle, betti_multigraded, lcm_lattice
from edgereg.homology import STATS
from edgereg.ideal import edge_ideal, power

i = edge_ideal(gr.cycle(5))
t = betti_multigraded(i)
print(t.diagram())
print("reg =", t.regularity, " projdim =", t.projdim)
print("the lcm lattice has", len(lcm_lattice(i)), "elements")

# the single second syzygy lives in the top multidegree
print({k: v for k, v in t.entries.items() if k[0] == 2})

for s in (1, 2):
    q = power(edge_ideal(gr.complete(4)), s)
    t0 = time.time()
    a = betti_multigraded(q)
    t1 = time.time()
    b = betti_gpw_oracle(q)
    t2 = time.time()
    print(f"I(K4)^{s}: lattice {len(lcm_lattice(q))}, reg {a.regularity}, "
          f"agree={a == b}  koszul {t1 - t0:.2f}s  oracle {t2 - t1:.2f}s")

print("homology calls so far:", STATS["homology_calls"], " Euler checks:", STATS["euler_checks"])
