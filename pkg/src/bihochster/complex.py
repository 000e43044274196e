"""Finite simplicial complexes on the vertex set ``[m] = {1, ..., m}``.

A face is an ``int`` bitset: vertex ``i`` is bit ``i - 1``.  Complexes store
their full (downward closed) face set explicitly, always containing the
empty face ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

MAX_VERTICES = 63


class ComplexError(ValueError):
    """Invalid complex data (out-of-range vertex, not downward closed, ...)."""


class DecompositionError(ValueError):
    """A requested face sum does not satisfy its preconditions."""


def face(vertices: Iterable[int]) -> int:
    """Bitset of a collection of 1-based vertices."""
    out = 0
    for v in vertices:
        if v < 1:
            raise ComplexError(f"vertex {v} is not positive")
        out |= 1 << (v - 1)
    return out


def vertices_of(f: int) -> tuple[int, ...]:
    out = []
    i = 1
    while f:
        if f & 1:
            out.append(i)
        f >>= 1
        i += 1
    return tuple(out)


def card(f: int) -> int:
    return bin(f).count("1")


def face_key(f: int) -> tuple[int, int]:
    return (card(f), f)


def full_face(m: int) -> int:
    return (1 << m) - 1


def subfaces(f: int):
    """All subsets of ``f`` (including 0 and ``f``)."""
    sub = f
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & f


def format_face(f: int) -> str:
    return "{" + ",".join(map(str, vertices_of(f))) + "}"


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward closed family of faces of ``[m]``.

    ``faces`` is sorted by (cardinality, bitset value).  ``witness`` is set
    by :func:`face_sum` and records the decomposition it was built from; it
    takes no part in equality.
    """

    m: int
    faces: tuple[int, ...]
    witness: tuple | None = field(default=None, compare=False, repr=False)
    _lookup: frozenset = field(default=frozenset(), compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.m <= MAX_VERTICES:
            raise ComplexError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.m}")
        fs = frozenset(self.faces)
        top = full_face(self.m)
        for f in fs:
            if f < 0 or f & ~top:
                raise ComplexError(f"face {format_face(f)} is not contained in [{self.m}]")
        if 0 not in fs:
            raise ComplexError("the empty face is missing")
        for f in fs:
            g = f
            while g:
                low = g & -g
                if f & ~low not in fs:
                    raise ComplexError(
                        f"not downward closed: {format_face(f)} present but "
                        f"{format_face(f & ~low)} missing")
                g ^= low
        object.__setattr__(self, "faces", tuple(sorted(fs, key=face_key)))
        object.__setattr__(self, "_lookup", fs)

    def __contains__(self, f: int) -> bool:
        return f in self._lookup

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    @property
    def dimension(self) -> int:
        return card(self.faces[-1]) - 1

    @property
    def vertex_set(self) -> int:
        """Effective vertex set V(K) as a bitset."""
        out = 0
        for i in range(self.m):
            if (1 << i) in self._lookup:
                out |= 1 << i
        return out

    def faces_of_size(self, k: int) -> list[int]:
        return [f for f in self.faces if card(f) == k]

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.m == other.m and self._lookup <= other._lookup

    def is_simplex(self) -> bool:
        """True if K is the full power set of a single face (including {∅})."""
        top = self.faces[-1]
        return all((f | top) == top for f in self.faces) and len(self.faces) == 1 << card(top)

    def cone_apex(self) -> int | None:
        """A vertex v with σ∪{v} ∈ K for every face σ, if one exists."""
        for i in range(self.m):
            v = 1 << i
            if v in self._lookup and all((f | v) in self._lookup for f in self.faces):
                return i + 1
        return None

    def __str__(self) -> str:
        return f"<{', '.join(format_face(f) for f in facets(self))}> on [{self.m}]"


def _closure(facet_list: Iterable[int]) -> set[int]:
    out = {0}
    for f in facet_list:
        if f in out:
            continue
        out.update(subfaces(f))
    return out


def from_facets(m: int, facet_list: Iterable) -> SimplicialComplex:
    """The complex generated by ``facet_list`` on ``[m]``.

    Facets may be bitsets or iterables of 1-based vertices.
    """
    bits = []
    top = full_face(m) if m >= 1 else 0
    for f in facet_list:
        b = f if isinstance(f, int) else face(f)
        if b < 0 or b & ~top:
            raise ComplexError(f"facet {format_face(b) if b >= 0 else b} is not contained in [{m}]")
        bits.append(b)
    return SimplicialComplex(m, tuple(_closure(bits)))


def from_faces(m: int, faces: Iterable[int]) -> SimplicialComplex:
    """Wrap an already downward closed face set (validated)."""
    return SimplicialComplex(m, tuple(set(faces)))


def simplex(m: int, f: int | None = None) -> SimplicialComplex:
    """The simplex ⟨f⟩ on [m]; the full simplex when ``f`` is omitted."""
    return from_facets(m, [full_face(m) if f is None else f])


def boundary_of_simplex(m: int) -> SimplicialComplex:
    top = full_face(m)
    return from_facets(m, [top & ~(1 << i) for i in range(m)])


def full_subcomplex(K: SimplicialComplex, J: int) -> SimplicialComplex:
    """K_J = {σ ∩ J : σ ∈ K}, still on [m]."""
    if J & ~full_face(K.m):
        raise ComplexError(f"{format_face(J)} is not contained in [{K.m}]")
    return SimplicialComplex(K.m, tuple({f & J for f in K.faces}))


def ghost_vertices(K: SimplicialComplex) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(K.m) if (1 << i) not in K)


def facets(K: SimplicialComplex) -> list[int]:
    """Inclusion-maximal faces, in (cardinality, value) order."""
    out = []
    for f in K.faces:
        maximal = True
        rest = full_face(K.m) & ~f
        while rest:
            low = rest & -rest
            if (f | low) in K:
                maximal = False
                break
            rest ^= low
        if maximal:
            out.append(f)
    return out


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    _same_m(K1, K2)
    return SimplicialComplex(K1.m, tuple(set(K1.faces) | set(K2.faces)))


def intersection(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    _same_m(K1, K2)
    return SimplicialComplex(K1.m, tuple(set(K1.faces) & set(K2.faces)))


def _same_m(K1, K2):
    if K1.m != K2.m:
        raise ComplexError(f"vertex counts differ: {K1.m} vs {K2.m}")


def face_sum(K1: SimplicialComplex, K2: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """The face sum K1 ⊔_σ K2.

    Requires ``K1 ∩ K2 == ⟨σ⟩`` and that neither part is ⟨σ⟩ itself.
    """
    _same_m(K1, K2)
    gen = set(subfaces(sigma))
    common = set(K1.faces) & set(K2.faces)
    if sigma not in K1 or sigma not in K2:
        raise DecompositionError(f"{format_face(sigma)} is not a face of both complexes")
    if common != gen:
        extra = sorted(common - gen, key=face_key)
        raise DecompositionError(
            f"intersection is not <{format_face(sigma)}>: also contains "
            + ", ".join(format_face(f) for f in extra[:5]))
    for i, Ki in enumerate((K1, K2), start=1):
        if set(Ki.faces) == gen:
            raise DecompositionError(f"K{i} equals <{format_face(sigma)}>; sigma must be proper")
    faces = set(K1.faces) | set(K2.faces)
    return SimplicialComplex(K1.m, tuple(faces), witness=(K1, K2, sigma))


def relabel(K: SimplicialComplex, perm: dict[int, int]) -> SimplicialComplex:
    """Image of K under a vertex bijection of [m] (``perm`` maps old→new)."""
    def image(f):
        return face(perm[v] for v in vertices_of(f))
    return SimplicialComplex(K.m, tuple(image(f) for f in K.faces))
