"""
Two triangles glued along an edge
=================================

The graph with edges 12, 13, 23, 24, 34 is the smallest interesting input:
its moment-angle complex has four nonzero bigraded homology groups, but
only two survive in double homology.
"""

import numpy as np

from bihochster import from_facets, hochster_table, double_homology
from bihochster.complex import format_face
from bihochster.hochster import CochainComplexCH
from bihochster.homology import describe_cycle, reduced_homology
from bihochster.io import render_table

K = from_facets(4, [{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}])
print(K)

# Bigraded homology, one row per nonzero bidegree (-k, 2l)
print(render_table(hochster_table(K), "md"))

# The two classes in bidegree (-1, 6) come from the triangles 123 and 234,
# and the two in (-2, 8) from the whole graph.  The complex CH_2 links them.
ch = CochainComplexCH(K, 2)
for J, H in ch.blocks[3]:
    print("H_1 of K_J for J =", format_face(J), ":", describe_cycle(H, 0))
H = reduced_homology(K)
print("H_1(K) generators:", [describe_cycle(H[1], i) for i in range(H[1].rank)])
D = ch.differential(3)
print("D: CH_2^3 -> CH_2^4 =\n", np.array(D, dtype=int))

# D is invertible over Z, so both of those rows cancel
print(render_table(double_homology(K), "md"))
