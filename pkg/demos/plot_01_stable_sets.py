"""
Stable sets, induced matchings and independence bounds
=======================================================

"""

from edgereg import graph as gr

# a five-cycle: every maximal stable set has two vertices
c5 = gr.cycle(5)
rep = gr.alpha(c5)
print("alpha(C5) =", rep.alpha, " c =", rep.c, " witness =", rep.witness)
print("sizes of maximal stable sets:", rep.maximal_set_sizes)

# induced matchings: two edges count only if no edge joins them
print("nu(P5) =", gr.induced_matching_number(gr.path(5)))
print("nu(C5) =", gr.induced_matching_number(c5))

# whiskering adds a leaf n+i to every vertex i
w = gr.whisker(c5)
print("C5* has", w.n, "vertices and", w.e, "edges; very well-covered:", gr.is_very_well_covered(w))
print("nu(C5*) =", gr.induced_matching_number(w), "= alpha(C5) =", rep.alpha)

# closed-form upper bounds on alpha, both exact
for g in (c5, gr.complete(4), gr.path(6), gr.random_graph(10, "1/2", seed=3)):
    print(f"n={g.n:2d} e={g.e:2d}  alpha={gr.alpha(g).alpha}  "
          f"hansen={gr.hansen_bound(g.n, g.e)}  kwok={gr.kwok_bound(g)}")
