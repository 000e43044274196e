"""Reduced simplicial homology over Z with explicit cycle representatives.

The chain complex is augmented: the empty face is a genuine cell in degree
-1, so ``H̃_{-1}({∅}) = Z`` and every nonempty complex has ``H̃_{-1} = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .complex import SimplicialComplex, card, vertices_of
from .linalg import (ConsistencyError, PresentedGroup, AbelianGroup, int_matrix,
                     smith_normal_form, solve_integer, zeros)


class ChainBasis:
    """Faces of K grouped by degree (size - 1), each list in bitset order."""

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        by_degree: dict[int, list[int]] = {}
        for f in K.faces:
            by_degree.setdefault(card(f) - 1, []).append(f)
        self._faces = by_degree
        self._index = {n: {f: i for i, f in enumerate(fs)} for n, fs in by_degree.items()}

    @property
    def top_degree(self) -> int:
        return max(self._faces)

    def faces(self, n: int) -> list[int]:
        return self._faces.get(n, [])

    def index(self, n: int) -> dict[int, int]:
        return self._index.get(n, {})

    def size(self, n: int) -> int:
        return len(self._faces.get(n, ()))


def boundary_matrix(K: SimplicialComplex | ChainBasis, n: int) -> np.ndarray:
    """Matrix of ∂_n : C_n → C_{n-1} (augmented, so ∂_0 sends vertices to ∅).

    Removing the i-th smallest vertex of a face carries sign (-1)^i.
    """
    basis = K if isinstance(K, ChainBasis) else ChainBasis(K)
    if n < 0:
        return zeros(0, basis.size(n))
    cols = basis.faces(n)
    row_index = basis.index(n - 1)
    out = zeros(basis.size(n - 1), len(cols))
    for j, f in enumerate(cols):
        sign = 1
        g = f
        while g:
            low = g & -g
            out[row_index[f ^ low], j] = sign
            sign = -sign
            g ^= low
    return out


@dataclass(frozen=True)
class HomologyGroup:
    """H̃_n(K) with chosen generators.

    ``representatives`` has one column per generator, a cycle in the chain
    basis of degree ``n``.  ``projector`` sends any cycle to its generator
    coordinates; torsion coordinates are reduced modulo ``moduli`` (0 marks a
    free generator).  Torsion generators come first.
    """

    degree: int
    faces: tuple[int, ...]
    representatives: np.ndarray
    projector: np.ndarray
    moduli: tuple[int, ...]

    @cached_property
    def group(self) -> PresentedGroup:
        g = len(self.moduli)
        tors = [i for i, d in enumerate(self.moduli) if d]
        R = zeros(g, len(tors))
        for c, i in enumerate(tors):
            R[i, c] = self.moduli[i]
        return PresentedGroup(g, R)

    @property
    def structure(self) -> AbelianGroup:
        return AbelianGroup(sum(1 for d in self.moduli if d == 0),
                            tuple(d for d in self.moduli if d))

    @property
    def rank(self) -> int:
        """Number of generators (free and torsion)."""
        return len(self.moduli)

    def reduce(self, coords: np.ndarray) -> np.ndarray:
        """Reduce generator coordinates (rows) modulo the torsion orders."""
        out = np.array(coords, dtype=object, copy=True)
        for i, d in enumerate(self.moduli):
            if d:
                out[i] = out[i] % d
        return out

    def coordinates(self, cycles: np.ndarray) -> np.ndarray:
        """Generator coordinates of cycle vectors (a vector or columns)."""
        if not self.moduli:
            shape = (0,) if np.ndim(cycles) == 1 else (0, np.shape(cycles)[1])
            return np.zeros(shape, dtype=object)
        return self.reduce(self.projector @ np.asarray(cycles, dtype=object))


def _zero_group(n: int, faces) -> HomologyGroup:
    return HomologyGroup(n, tuple(faces), zeros(len(faces), 0), zeros(0, len(faces)), ())


class HomologyBasis:
    """Reduced homology of K in every degree, with representatives."""

    def __init__(self, K: SimplicialComplex):
        self.complex = K
        self.chains = ChainBasis(K)
        self._groups: dict[int, HomologyGroup] = {}
        self._compute()

    def _compute(self):
        K, chains = self.complex, self.chains
        top = chains.top_degree
        if len(K.faces) == 1:
            self._groups[-1] = HomologyGroup(-1, (0,), int_matrix([[1]]), int_matrix([[1]]), (0,))
            return
        if K.cone_apex() is not None:
            return
        kernel_snf = smith_normal_form(boundary_matrix(chains, -1))
        for n in range(-1, top + 1):
            r = kernel_snf.rank
            Z = kernel_snf.V[:, r:]
            to_kernel = kernel_snf.V_inv[r:, :]
            if n < top:
                next_boundary = boundary_matrix(chains, n + 1)
                next_snf = smith_normal_form(next_boundary)
            else:
                next_boundary = zeros(chains.size(n), 0)
                next_snf = None
            faces = chains.faces(n)
            if Z.shape[1]:
                rel = smith_normal_form(to_kernel @ next_boundary)
                diag = rel.diagonal
                keep, moduli = [], []
                for i in range(Z.shape[1]):
                    d = diag[i] if i < len(diag) else 0
                    if d != 1:
                        keep.append(i)
                        moduli.append(d)
                if keep:
                    reps = Z @ rel.U_inv[:, keep]
                    proj = (rel.U @ to_kernel)[keep]
                    self._groups[n] = HomologyGroup(n, tuple(faces), reps, proj, tuple(moduli))
            if next_snf is not None:
                kernel_snf = next_snf

    def __getitem__(self, n: int) -> HomologyGroup:
        g = self._groups.get(n)
        if g is None:
            return _zero_group(n, self.chains.faces(n))
        return g

    def degrees(self) -> list[int]:
        """Degrees with nonzero homology."""
        return sorted(self._groups)

    def structure(self, n: int) -> AbelianGroup:
        return self[n].structure

    def as_dict(self) -> dict[int, AbelianGroup]:
        return {n: g.structure for n, g in sorted(self._groups.items())}


def reduced_homology(K: SimplicialComplex) -> HomologyBasis:
    return HomologyBasis(K)


@dataclass(frozen=True)
class InducedMap:
    """Matrix of an inclusion-induced map in generator coordinates."""

    source: HomologyGroup
    target: HomologyGroup
    matrix: np.ndarray


def _embed(source: HomologyGroup, target_chains: ChainBasis, n: int) -> np.ndarray:
    index = target_chains.index(n)
    rows = [index[f] for f in source.faces]
    out = zeros(target_chains.size(n), source.rank)
    if source.rank:
        out[rows] = source.representatives
    return out


def induced_map(Ksub: SimplicialComplex, Ksup: SimplicialComplex, n: int,
                Hsub: HomologyBasis | None = None, Hsup: HomologyBasis | None = None,
                method: str = "project") -> InducedMap:
    """Map H̃_n(Ksub) → H̃_n(Ksup) induced by the inclusion.

    ``method="project"`` applies the target's cycle projector to the pushed
    forward representatives.  ``method="solve"`` instead writes each pushed
    cycle as (target generators) + (boundary) by an exact integer solve; it
    is slower and exists as an independent cross-check.
    """
    if not Ksub.is_subcomplex_of(Ksup):
        raise ValueError("source complex is not a subcomplex of the target")
    Hsub = Hsub if Hsub is not None else reduced_homology(Ksub)
    Hsup = Hsup if Hsup is not None else reduced_homology(Ksup)
    src, tgt = Hsub[n], Hsup[n]
    pushed = _embed(src, Hsup.chains, n)
    if method == "project":
        matrix = tgt.coordinates(pushed) if tgt.rank else zeros(0, src.rank)
    elif method == "solve":
        matrix = _solve_coordinates(Hsup, n, pushed)
    else:
        raise ValueError(f"unknown method {method!r}")
    return InducedMap(src, tgt, matrix)


def _solve_coordinates(H: HomologyBasis, n: int, cycles: np.ndarray) -> np.ndarray:
    tgt = H[n]
    bd = boundary_matrix(H.chains, n + 1)
    system = np.concatenate([tgt.representatives, bd], axis=1)
    out = zeros(tgt.rank, cycles.shape[1])
    for j in range(cycles.shape[1]):
        x = solve_integer(system, cycles[:, j]) if system.shape[0] else np.zeros(system.shape[1], dtype=object)
        if x is None:
            raise ConsistencyError(f"cycle {j} is not a combination of generators and boundaries")
        out[:, j] = x[:tgt.rank]
    return tgt.reduce(out) if tgt.rank else out


def euler_characteristic(K: SimplicialComplex) -> int:
    """Σ (-1)^n · #faces of degree n, over n ≥ -1."""
    return sum((-1) ** (card(f) - 1) for f in K.faces)


def describe_cycle(H: HomologyGroup, column: int) -> str:
    terms = []
    for coeff, f in zip(H.representatives[:, column], H.faces):
        if coeff:
            terms.append(f"{coeff:+d}[{''.join(map(str, vertices_of(f))) or 'ø'}]")
    return " ".join(terms) or "0"


__all__ = ["ChainBasis", "HomologyBasis", "HomologyGroup", "InducedMap", "boundary_matrix",
           "reduced_homology", "induced_map", "euler_characteristic", "describe_cycle"]
