"""
Regularity of powers against 2s + c
===================================

"""

from edgereg import graph as gr
from edgereg import harness as hz

g = gr.cycle(5)
rep = hz.run_checks(g, hz.CHECK_ORDER, smax=2)
c, nu = rep.invariants["c"], rep.invariants["nu_G"]
print("C5: c =", c, " nu =", nu)
for s, vals in sorted(rep.per_s.items()):
    print(f"s={s}: {2 * s + nu - 1} <= reg I^s = {vals['reg_I']} <= reg J^s = {vals['reg_J']}"
          f" = reg I(G*)^s = {vals['reg_Istar']} = 2s + c = {2 * s + c}")
for name, v in rep.verdicts.items():
    print(f"  {name:18s} {'pass' if v.passed else 'FAIL'}")

# the witness of top socle degree for J^s
for s in (1, 2, 3):
    w = hz.witness_socle(g, s)
    print(f"s={s}: w = {w.w}, deg {w.degree}, outside J^s: {w.outside}, killed by every x_j: {w.annihilated}")
