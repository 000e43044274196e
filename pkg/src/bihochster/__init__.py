"""Bigraded homology and double homology of moment-angle complexes over Z."""

from importlib import resources

from .complex import (ComplexError, DecompositionError, SimplicialComplex, face, face_sum,
                      facets, from_facets, full_subcomplex, ghost_vertices, simplex,
                      boundary_of_simplex, vertices_of)
from .hochster import (BigradedTable, CochainComplexCH, SubcomplexHomology, ch_complex,
                       ch_differential, double_homology, hochster_table)
from .homology import HomologyBasis, boundary_matrix, induced_map, reduced_homology
from .linalg import (AbelianGroup, ConsistencyError, PresentedGroup, cokernel,
                     smith_normal_form, solve_integer, subquotient)
from .wedge import (WedgeDecomposition, build_L, check_ses, find_wedge_decomposition,
                    mayer_vietoris_verify)

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path to a bundled ``.cplx`` file (``glued_triangles``, ``rp2``, ``ghost``)."""
    return resources.files(__package__) / "data" / f"{name}.cplx"


def load_fixture(name: str) -> SimplicialComplex:
    from .io import parse_complex
    return parse_complex(fixture_path(name).read_text(), f"{name}.cplx")
