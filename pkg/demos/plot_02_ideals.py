"""
Edge ideals, squares, polarization and restriction
===================================================

"""

from edgereg import graph as gr
from edgereg.ideal import (add_squares, edge_ideal, polarize, power, restrict,
                           socle_degrees, standard_monomials, whisker_caps,
                           whisker_edge_ideal, whisker_names)

p3 = gr.path(3)
i = edge_ideal(p3)
j = add_squares(i)
print("I(P3) =", i)
print("J     =", j)
print("I(P3)^2 =", power(i, 2))

# S/J has a basis of squarefree monomials over stable sets
print("standard monomials of S/J:", [j.format_monomial(u) for u in standard_monomials(j)])
print("socle degrees:", socle_degrees(j), " top =", max(socle_degrees(j)), "= c + 1")

# polarizing J turns x_k^2 into x_k*y_k: exactly the whisker ideal
jp = polarize(j, whisker_names)
print("J^pol =", jp)
print("I(P3*) =", whisker_edge_ideal(p3), " equal:", jp == whisker_edge_ideal(p3))

# killing the leaf variables recovers the powers of I(G)
for s in (1, 2, 3):
    r = restrict(power(whisker_edge_ideal(p3), s), whisker_caps(p3.n))
    print(f"s={s}: restriction gives I(P3)^{s}:", r == power(i, s))
