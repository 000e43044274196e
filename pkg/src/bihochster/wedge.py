"""Face sums: detection, the two-simplex model L, and exactness checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .complex import (DecompositionError, SimplicialComplex, face_key, face_sum, facets,
                      from_facets, full_subcomplex, ghost_vertices, intersection, union)
from .homology import HomologyBasis, HomologyGroup, reduced_homology
from .linalg import PresentedGroup, block_diag, cokernel, subquotient, zeros


@dataclass(frozen=True)
class WedgeDecomposition:
    """``K = K1 ⊔_σ K2``."""

    K: SimplicialComplex
    K1: SimplicialComplex
    K2: SimplicialComplex
    sigma: int

    @property
    def rho(self) -> int:
        return self.K1.vertex_set

    @property
    def tau(self) -> int:
        return self.K2.vertex_set

    def properness(self) -> dict[str, bool]:
        """Which reading of "σ is a proper face of Ki" holds for each part.

        ``differs`` is Ki ≠ ⟨σ⟩ (the one enforced); ``strict`` asks for a
        face of Ki strictly containing σ.
        """
        out = {}
        for name, Ki in (("K1", self.K1), ("K2", self.K2)):
            out[f"{name}_differs"] = len(Ki.faces) != 1 << bin(self.sigma).count("1")
            out[f"{name}_strict"] = any(f != self.sigma and f | self.sigma == f for f in Ki.faces)
        return out


def _facet_components(facet_list: list[int], sigma: int) -> list[list[int]]:
    outside = [F for F in facet_list if F & ~sigma]
    parent = list(range(len(outside)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(outside)), 2):
        if (outside[i] & outside[j]) & ~sigma:
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i, F in enumerate(outside):
        groups.setdefault(find(i), []).append(F)
    return sorted(groups.values(), key=lambda g: min(g, key=face_key))


def find_wedge_decomposition(K: SimplicialComplex) -> WedgeDecomposition | None:
    """A decomposition K = K1 ⊔_σ K2 with σ of least cardinality, or None.

    For each candidate face σ, the facets not inside σ are joined when they
    share a vertex outside σ; a disconnected graph splits K.
    """
    facet_list = facets(K)
    for sigma in K.faces:
        comps = _facet_components(facet_list, sigma)
        if len(comps) < 2:
            continue
        # one component against the rest first, then any other 2-partition
        splits = [(comps[:1], comps[1:])]
        for r in range(2, len(comps) // 2 + 1):
            for left in combinations(range(len(comps)), r):
                splits.append(([comps[i] for i in left],
                               [comps[i] for i in range(len(comps)) if i not in left]))
        for left, right in splits:
            K1 = from_facets(K.m, [sigma] + [F for g in left for F in g])
            K2 = from_facets(K.m, [sigma] + [F for g in right for F in g])
            try:
                face_sum(K1, K2, sigma)
            except DecompositionError:
                continue
            return WedgeDecomposition(K, K1, K2, sigma)
    return None


def decompose(K1: SimplicialComplex, K2: SimplicialComplex, sigma: int) -> WedgeDecomposition:
    """Validate a given split and wrap it."""
    return WedgeDecomposition(face_sum(K1, K2, sigma), K1, K2, sigma)


def build_L(decomp: WedgeDecomposition) -> SimplicialComplex:
    """⟨V(K1)⟩ ⊔_σ ⟨V(K2)⟩ for a ghost-free face sum."""
    if ghost_vertices(decomp.K):
        raise ValueError(f"K has ghost vertices {ghost_vertices(decomp.K)}")
    return from_facets(decomp.K.m, [decomp.rho, decomp.tau])


def _map_matrix(Hsub: HomologyBasis, Hsup: HomologyBasis, n: int) -> np.ndarray:
    s, t = Hsub[n], Hsup[n]
    if not s.rank or not t.rank:
        return zeros(t.rank, s.rank)
    index = Hsup.chains.index(n)
    pushed = zeros(Hsup.chains.size(n), s.rank)
    pushed[[index[f] for f in s.faces]] = s.representatives
    return t.coordinates(pushed)


def _direct_sum(*groups: HomologyGroup) -> PresentedGroup:
    g = sum(h.rank for h in groups)
    rels = [h.group.relations for h in groups]
    return PresentedGroup(g, block_diag(rels) if rels else zeros(0, 0))


def is_injective(source: PresentedGroup, M: np.ndarray, target: PresentedGroup) -> bool:
    return subquotient(source, M, zeros(source.generators, 0), codomain=target).is_trivial


def is_surjective(M: np.ndarray, target: PresentedGroup) -> bool:
    return cokernel(np.concatenate([M, target.relations], axis=1)).structure.is_trivial


def is_exact_at(source: PresentedGroup, f: np.ndarray, middle: PresentedGroup,
                g: np.ndarray, target: PresentedGroup) -> bool:
    """ker g == im f inside ``middle`` (including g∘f = 0)."""
    if f.shape[1] and g.shape[0] and not target.is_zero(g @ f):
        return False
    return subquotient(middle, g, f, codomain=target).is_trivial


def check_ses(decomp: WedgeDecomposition, J: int, n: int, L: SimplicialComplex | None = None) -> bool:
    """Exactness of 0 → H̃_n(K1_J) ⊕ H̃_n(K2_J) → H̃_n(K_J) → H̃_n(L_J) → 0."""
    if J == 0:
        raise ValueError("J must be nonempty")
    L = L if L is not None else build_L(decomp)
    H1 = reduced_homology(full_subcomplex(decomp.K1, J))
    H2 = reduced_homology(full_subcomplex(decomp.K2, J))
    HK = reduced_homology(full_subcomplex(decomp.K, J))
    HL = reduced_homology(full_subcomplex(L, J))
    A = _direct_sum(H1[n], H2[n])
    B, C = HK[n].group, HL[n].group
    psi = np.concatenate([_map_matrix(H1, HK, n), _map_matrix(H2, HK, n)], axis=1)
    phi = _map_matrix(HK, HL, n)
    return (is_injective(A, psi, B)
            and is_surjective(phi, C)
            and is_exact_at(A, psi, B, phi, C))


def check_ses_all(decomp: WedgeDecomposition) -> list[tuple[int, int]]:
    """(J, n) pairs where the sequence fails, over all nonempty J and 0 ≤ n ≤ m."""
    L = build_L(decomp)
    bad = []
    for J in range(1, 1 << decomp.K.m):
        for n in range(decomp.K.m + 1):
            if not check_ses(decomp, J, n, L):
                bad.append((J, n))
    return bad


def mayer_vietoris_failures(K1: SimplicialComplex, K2: SimplicialComplex) -> list[str]:
    """Positions where the reduced Mayer-Vietoris sequence is not exact.

    The maps i(x) = (x, -x) and j(a, b) = a + b are built explicitly and
    checked exactly.  The connecting map is not constructed; exactness forces
    it to identify coker j_{n+1} with ker i_n, and that isomorphism type is
    what gets compared.
    """
    I, U = intersection(K1, K2), union(K1, K2)
    HI, H1, H2, HU = (reduced_homology(X) for X in (I, K1, K2, U))

    def i_map(n):
        neg = -_map_matrix(HI, H2, n)
        return np.concatenate([_map_matrix(HI, H1, n), H2[n].reduce(neg)], axis=0)

    def j_map(n):
        return np.concatenate([_map_matrix(H1, HU, n), _map_matrix(H2, HU, n)], axis=1)

    failures = []
    for n in range(-1, HU.chains.top_degree + 1):
        gI, gU = HI[n].group, HU[n].group
        mid = _direct_sum(H1[n], H2[n])
        i_n = i_map(n)
        if not is_exact_at(gI, i_n, mid, j_map(n), gU):
            failures.append(f"middle of degree {n}")
        gU1 = HU[n + 1].group
        coker_j = cokernel(np.concatenate([j_map(n + 1), gU1.relations], axis=1)).structure
        ker_i = subquotient(gI, i_n, zeros(gI.generators, 0), codomain=mid)
        if coker_j != ker_i:
            failures.append(f"connecting map into degree {n}: coker j = {coker_j}, ker i = {ker_i}")
    return failures


def mayer_vietoris_verify(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    return not mayer_vietoris_failures(K1, K2)


__all__ = ["WedgeDecomposition", "build_L", "check_ses", "check_ses_all", "decompose",
           "find_wedge_decomposition", "mayer_vietoris_failures", "mayer_vietoris_verify"]
