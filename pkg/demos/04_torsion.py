"""
Torsion in full subcomplexes
============================

The 6-vertex triangulation of the real projective plane is the smallest
input where a full subcomplex has torsion in its homology, so the cochain
complexes CH carry relations and every kernel and image has to be taken
modulo them.
"""

from bihochster import double_homology, hochster_table, load_fixture, reduced_homology
from bihochster.hochster import SubcomplexHomology, d_squared_holds
from bihochster.io import render_table

K = load_fixture("rp2")
print(K)
print("reduced homology:", {n: str(g) for n, g in reduced_homology(K).as_dict().items()})

cache = SubcomplexHomology(K)
print(render_table(hochster_table(K, cache)))
print("d o d = 0:", d_squared_holds(K, cache))
print(render_table(double_homology(K, cache)))
