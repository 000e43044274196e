"""
Ghost vertices
==============

A vertex of [m] that is not a face of K changes the moment-angle complex
only by a product factor, yet it wipes out double homology completely.
"""

from bihochster import double_homology, from_facets, hochster_table
from bihochster.complex import ghost_vertices
from bihochster.hochster import CochainComplexCH
from bihochster.io import render_table

# a triangle boundary on [3], then the same triangle on [5]
small = from_facets(3, [{1, 2}, {2, 3}, {1, 3}])
big = from_facets(5, [{1, 2}, {2, 3}, {1, 3}])
print("ghosts:", ghost_vertices(small), ghost_vertices(big))

print(render_table(double_homology(small)))
print(render_table(hochster_table(big)))

# In degree n = 0, the empty set class maps to one class per ghost vertex,
# which already makes the bottom row vanish
ch = CochainComplexCH(big, 0)
print("D^0 in degree 0:", ch.differential(0).tolist())

print(render_table(double_homology(big)))
