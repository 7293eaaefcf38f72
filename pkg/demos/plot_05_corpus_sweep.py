"""
Sweeping a corpus
=================

Connected graphs on up to four vertices, every check, written as CSV.
"""

import csv
import io

from edgereg import harness as hz

corpus = hz.build_corpus(["connected:2-4", "cycle:5"])
rep = hz.run_corpus(corpus, hz.CHECK_ORDER, smax=2)
print("graphs:", len(rep.reports), " all pass:", rep.passed)

rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
cols = ["graph_id", "s", "c", "nu_G", "reg_I", "reg_J", "reg_Istar", "hansen", "kwok_floor"]
print("  ".join(f"{c:>9s}" for c in cols))
for row in rows:
    print("  ".join(f"{row[c]:>9s}" for c in cols))

# slack of the main bound, 2s + c - reg I^s
slack = [int(r["s"]) * 2 + int(r["c"]) - int(r["reg_I"]) for r in rows]
print("tight instances:", sum(x == 0 for x in slack), "of", len(slack))
