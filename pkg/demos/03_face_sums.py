"""
Face sums
=========

A complex that splits as K1 and K2 glued along a single face has the same
double homology as two simplices glued the same way.  Here we find such a
splitting, build the two-simplex model L and check the short exact
sequences relating the three complexes.
"""

from bihochster import build_L, double_homology, find_wedge_decomposition
from bihochster.complex import facets, format_face
from bihochster.fuzz import random_wedge_decomposable
from bihochster.io import render_table
from bihochster.wedge import check_ses_all

K, known = random_wedge_decomposable(6, seed=2024)
print("K facets:", " ".join(format_face(f) for f in facets(K)))

dec = find_wedge_decomposition(K)
print("glued along", format_face(dec.sigma))
print("K1:", " ".join(format_face(f) for f in facets(dec.K1)))
print("K2:", " ".join(format_face(f) for f in facets(dec.K2)))

L = build_L(dec)
print("L: ", " ".join(format_face(f) for f in facets(L)))

# 63 nonempty J times 7 degrees
print("failing (J, n):", check_ses_all(dec))

print(render_table(double_homology(K), "md"))
print(render_table(double_homology(L), "md"))
