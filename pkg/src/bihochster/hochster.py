"""Bigraded homology of moment-angle complexes and their double homology.

Everything is assembled from the reduced homology of full subcomplexes
``K_J``.  For homological degree ``n`` the cochain complex ``CH_n^*`` has
``CH_n^l = ⊕_{|J|=l} H̃_{n-1}(K_J)`` and differential built from the maps
induced by ``K_J ⊂ K_{J∪{x}}``, signed by ``(-1)^(n-2) · ε(x, J)`` with
``ε(x, J) = (-1)^{#{j ∈ J : j < x}}``.  A class in ``HH_n^l`` sits in
bidegree ``(-k, 2l)`` with ``k = l - n``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complex import SimplicialComplex, card, full_subcomplex
from .homology import HomologyBasis, HomologyGroup, reduced_homology
from .linalg import (AbelianGroup, ConsistencyError, PresentedGroup, block_diag,
                     rank_over_rationals, subquotient, zeros)

Bidegree = tuple[int, int]


def subsets_of_size(m: int, l: int) -> list[int]:
    """Bitsets of all l-subsets of [m], in increasing numeric order."""
    out = []
    for combo in combinations(range(m), l):
        b = 0
        for i in combo:
            b |= 1 << i
        out.append(b)
    return sorted(out)


def epsilon(x: int, J: int) -> int:
    """(-1)^{#{j ∈ J : j < x}} for a 1-based vertex x."""
    below = J & ((1 << (x - 1)) - 1)
    return -1 if card(below) % 2 else 1


def _homology_of_subcomplex(args):
    K, J = args
    return reduced_homology(full_subcomplex(K, J))


class SubcomplexHomology:
    """Reduced homology of every full subcomplex ``K_J``, computed once.

    With ``jobs > 1`` the 2^m independent computations run in a process
    pool; results are stored by ``J`` so the outcome does not depend on
    completion order.
    """

    def __init__(self, K: SimplicialComplex, jobs: int = 1):
        self.complex = K
        subsets = list(range(1 << K.m))
        if jobs > 1 and len(subsets) > 64:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_homology_of_subcomplex,
                                        [(K, J) for J in subsets], chunksize=16))
        else:
            results = [_homology_of_subcomplex((K, J)) for J in subsets]
        self._by_subset: dict[int, HomologyBasis] = dict(zip(subsets, results))

    def __getitem__(self, J: int) -> HomologyBasis:
        return self._by_subset[J]

    def group(self, J: int, degree: int) -> HomologyGroup:
        return self._by_subset[J][degree]

    def induced(self, J: int, x: int, degree: int) -> np.ndarray:
        """Generator matrix of H̃_degree(K_J) → H̃_degree(K_{J∪{x}})."""
        src = self._by_subset[J]
        tgt = self._by_subset[J | (1 << (x - 1))]
        s, t = src[degree], tgt[degree]
        if not s.rank or not t.rank:
            return zeros(t.rank, s.rank)
        index = tgt.chains.index(degree)
        pushed = zeros(tgt.chains.size(degree), s.rank)
        pushed[[index[f] for f in s.faces]] = s.representatives
        return t.coordinates(pushed)


@dataclass
class BigradedTable:
    """Groups indexed by bidegree ``(-k, 2l)`` with 0 ≤ k ≤ l ≤ m; absent entries are zero."""

    kind: str
    m: int
    entries: dict[Bidegree, AbelianGroup] = field(default_factory=dict)

    def __getitem__(self, bidegree: Bidegree) -> AbelianGroup:
        return self.entries.get(bidegree, AbelianGroup())

    def add(self, bidegree: Bidegree, group: AbelianGroup):
        if group.is_trivial:
            return
        neg_k, two_l = bidegree
        l, k = two_l // 2, -neg_k
        if two_l % 2 or not 0 <= k <= l <= self.m:
            raise ValueError(f"bidegree {bidegree} outside the admissible range")
        self.entries[bidegree] = self[bidegree] + group

    def rows(self) -> list[tuple[int, int, AbelianGroup]]:
        """``(k, l, group)`` for every nonzero entry, ordered by (l, k)."""
        out = [(-nk, tl // 2, g) for (nk, tl), g in self.entries.items()]
        return sorted(out, key=lambda r: (r[1], r[0]))

    def is_zero(self) -> bool:
        return not self.entries

    def total_degrees(self) -> dict[int, AbelianGroup]:
        """Collapse to total degree ``-k + 2l``."""
        out: dict[int, AbelianGroup] = {}
        for (nk, tl), g in self.entries.items():
            out[nk + tl] = out.get(nk + tl, AbelianGroup()) + g
        return dict(sorted(out.items()))

    def as_simple_dict(self) -> dict[Bidegree, tuple[int, tuple[int, ...]]]:
        return {b: (g.free_rank, g.torsion) for b, g in sorted(self.entries.items())}

    def __eq__(self, other):
        if not isinstance(other, BigradedTable):
            return NotImplemented
        return self.m == other.m and self.entries == other.entries


def hochster_table(K: SimplicialComplex, cache: SubcomplexHomology | None = None) -> BigradedTable:
    """H_{-k,2l}(Z_K) = ⊕_{|J|=l} H̃_{l-k-1}(K_J)."""
    cache = cache or SubcomplexHomology(K)
    table = BigradedTable("H", K.m)
    for J in range(1 << K.m):
        l = card(J)
        for degree, group in cache[J].as_dict().items():
            k = l - degree - 1
            table.add((-k, 2 * l), group)
    return table


class CochainComplexCH:
    """``CH_n^*`` for one homological degree ``n``."""

    def __init__(self, K: SimplicialComplex, n: int, cache: SubcomplexHomology | None = None):
        self.complex = K
        self.n = n
        self.cache = cache or SubcomplexHomology(K)
        m = K.m
        self.blocks: list[list[tuple[int, HomologyGroup]]] = []
        self.offsets: list[dict[int, int]] = []
        self.groups: list[PresentedGroup] = []
        for l in range(m + 1):
            blocks, offsets, rels = [], {}, []
            pos = 0
            for J in subsets_of_size(m, l):
                H = self.cache.group(J, n - 1)
                if H.rank:
                    blocks.append((J, H))
                    offsets[J] = pos
                    pos += H.rank
                    rels.append(H.group.relations)
            self.blocks.append(blocks)
            self.offsets.append(offsets)
            self.groups.append(PresentedGroup(pos, block_diag(rels) if rels else zeros(pos, 0)))
        self._differentials: dict[int, np.ndarray] = {}

    @property
    def m(self) -> int:
        return self.complex.m

    def rank(self, l: int) -> int:
        """Number of generators of CH_n^l (0 outside 0..m)."""
        return self.groups[l].generators if 0 <= l <= self.m else 0

    def group(self, l: int) -> PresentedGroup:
        if 0 <= l <= self.m:
            return self.groups[l]
        return PresentedGroup.free(0)

    def differential(self, l: int) -> np.ndarray:
        """D^l : CH_n^l → CH_n^{l+1} in generator coordinates."""
        if l in self._differentials:
            return self._differentials[l]
        rows, cols = self.rank(l + 1), self.rank(l)
        D = zeros(rows, cols)
        if rows and cols:
            global_sign = -1 if (self.n - 2) % 2 else 1
            src_off, tgt_off = self.offsets[l], self.offsets[l + 1]
            for J, H in self.blocks[l]:
                c0 = src_off[J]
                for x in range(1, self.m + 1):
                    bit = 1 << (x - 1)
                    if J & bit or (J | bit) not in tgt_off:
                        continue
                    I = J | bit
                    block = self.cache.induced(J, x, self.n - 1)
                    r0 = tgt_off[I]
                    target = self.cache.group(I, self.n - 1)
                    signed = target.reduce(global_sign * epsilon(x, J) * block)
                    D[r0:r0 + block.shape[0], c0:c0 + block.shape[1]] = signed
        self._differentials[l] = D
        return D

    def check_d_squared(self) -> bool:
        """True if D^{l+1} ∘ D^l vanishes modulo relations for every l."""
        for l in range(self.m - 1):
            if self.rank(l) and self.rank(l + 2):
                prod = self.differential(l + 1) @ self.differential(l)
                if not self.group(l + 2).is_zero(prod):
                    return False
        return True

    def cohomology(self, l: int) -> AbelianGroup:
        """HH_n^l = ker D^l / im D^{l-1}."""
        if not self.rank(l):
            return AbelianGroup()
        prev = self.differential(l - 1) if l >= 1 else zeros(self.rank(l), 0)
        return subquotient(self.group(l), self.differential(l), prev,
                           codomain=self.group(l + 1))

    def rational_cohomology_ranks(self) -> list[int]:
        """dim_Q HH_n^l for each l, from the differentials on free generators."""
        def free_idx(l):
            R = self.group(l).relations
            return [i for i in range(R.shape[0]) if not np.any(R[i])]

        ranks = []
        for l in range(self.m + 1):
            fl = free_idx(l)
            r_out = 0
            if l < self.m and fl:
                D = self.differential(l)[free_idx(l + 1)][:, fl]
                r_out = rank_over_rationals(D) if D.size else 0
            r_in = 0
            if l >= 1 and fl:
                D = self.differential(l - 1)[fl][:, free_idx(l - 1)]
                r_in = rank_over_rationals(D) if D.size else 0
            ranks.append(len(fl) - r_out - r_in)
        return ranks


def ch_complex(K: SimplicialComplex, n: int, cache: SubcomplexHomology | None = None) -> CochainComplexCH:
    return CochainComplexCH(K, n, cache)


def ch_differential(K: SimplicialComplex, n: int, l: int,
                    cache: SubcomplexHomology | None = None) -> np.ndarray:
    """Matrix of CH_n^l → CH_n^{l+1}."""
    if not 0 <= l <= K.m:
        raise ValueError(f"l must be in 0..{K.m}")
    return CochainComplexCH(K, n, cache).differential(l)


def double_homology(K: SimplicialComplex, cache: SubcomplexHomology | None = None,
                    jobs: int = 1) -> BigradedTable:
    """Bigraded double homology HH_{-k,2l}(Z_K) over Z.

    Raises :class:`ConsistencyError` if some assembled differential fails
    to square to zero.
    """
    cache = cache or SubcomplexHomology(K, jobs=jobs)
    table = BigradedTable("HH", K.m)
    for n in range(K.m + 1):
        ch = CochainComplexCH(K, n, cache)
        if not any(ch.rank(l) for l in range(K.m + 1)):
            continue
        if not ch.check_d_squared():
            raise ConsistencyError(f"d∘d != 0 in CH_{n}^* of {K}")
        for l in range(K.m + 1):
            table.add((n - l, 2 * l), ch.cohomology(l))
    return table


def d_squared_holds(K: SimplicialComplex, cache: SubcomplexHomology | None = None) -> bool:
    cache = cache or SubcomplexHomology(K)
    return all(CochainComplexCH(K, n, cache).check_d_squared() for n in range(K.m + 1))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BIHOCHSTER_JOBS", "1")))
    except ValueError:
        return 1


__all__ = ["BigradedTable", "CochainComplexCH", "SubcomplexHomology", "ch_complex",
           "ch_differential", "d_squared_holds", "double_homology", "epsilon",
           "hochster_table", "subsets_of_size"]
