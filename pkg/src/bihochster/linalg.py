"""Exact integer linear algebra.

Matrices are numpy arrays of ``dtype=object`` holding Python ints, so every
entry is arbitrary precision and empty shapes such as ``(0, 5)`` survive
slicing and multiplication.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np


class ConsistencyError(RuntimeError):
    """An algebraic identity that must hold (d∘d = 0, well-definedness) failed."""


def int_matrix(data, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce ``data`` into an exact object matrix.

    ``shape`` is required for empty input, where it cannot be inferred.
    """
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return np.zeros(shape, dtype=object)
    arr = np.array(data, dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1) if shape is None else arr.reshape(shape)
    if shape is not None and arr.shape != shape:
        raise ValueError(f"expected shape {shape}, got {arr.shape}")
    # normalise numpy scalar ints to Python ints
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = int(v)
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def int_vector(data) -> np.ndarray:
    return np.array([int(v) for v in data], dtype=object)


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def dump(M: np.ndarray) -> str:
    """Plain-text rendering of a matrix for bug reports."""
    rows, cols = M.shape
    lines = [f"{rows}x{cols}"]
    lines.extend(" ".join(str(v) for v in row) for row in M)
    return "\n".join(lines)


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form.

    The inverses of ``U`` and ``V`` are carried along because lattice bases
    (columns of ``U_inv``) and kernel coordinates (rows of ``V_inv``) are
    needed downstream.
    """

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [self.D[i, i] for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]


def smith_normal_form(M) -> SmithDecomposition:
    """Smith normal form by row/column reduction.

    The pivot is always the first entry of minimal absolute value in
    row-major order, which makes the output a deterministic function of the
    input.
    """
    A = np.array(M, dtype=object, copy=True)
    if A.ndim != 2:
        raise ValueError("smith_normal_form expects a 2-d matrix")
    r, c = A.shape
    U, U_inv = identity(r), identity(r)
    V, V_inv = identity(c), identity(c)

    def swap_rows(i, j):
        if i != j:
            A[[i, j]] = A[[j, i]]
            U[[i, j]] = U[[j, i]]
            U_inv[:, [i, j]] = U_inv[:, [j, i]]

    def swap_cols(i, j):
        if i != j:
            A[:, [i, j]] = A[:, [j, i]]
            V[:, [i, j]] = V[:, [j, i]]
            V_inv[[i, j]] = V_inv[[j, i]]

    for t in range(min(r, c)):
        sub = A[t:, t:]
        best = None
        for (i, j), v in np.ndenumerate(sub):
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i + t, j + t)
                if best[0] == 1:
                    break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])

        while True:
            p = A[t, t]
            rows = [i for i in range(t + 1, r) if A[i, t]]
            if rows:
                q = np.array([A[i, t] // p for i in rows], dtype=object)
                A[rows] -= np.outer(q, A[t])
                U[rows] -= np.outer(q, U[t])
                U_inv[:, t] += U_inv[:, rows] @ q
            cols = [j for j in range(t + 1, c) if A[t, j]]
            if cols:
                q = np.array([A[t, j] // p for j in cols], dtype=object)
                A[:, cols] -= np.outer(A[:, t], q)
                V[:, cols] -= np.outer(V[:, t], q)
                V_inv[t] += q @ V_inv[cols]

            # leftover remainders are strictly smaller than the pivot
            best = None
            for i in range(t + 1, r):
                v = A[i, t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), "r", i)
            for j in range(t + 1, c):
                v = A[t, j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), "c", j)
            if best is not None:
                if best[1] == "r":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue

            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if A[i, j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # fold the offending row into the pivot row and reduce again
            A[t] += A[bad]
            U[t] += U[bad]
            U_inv[:, bad] -= U_inv[:, t]

        if A[t, t] < 0:
            A[t] = -A[t]
            U[t] = -U[t]
            U_inv[:, t] = -U_inv[:, t]

    return SmithDecomposition(U=U, D=A, V=V, U_inv=U_inv, V_inv=V_inv)


def solve_integer(A, b) -> np.ndarray | None:
    """An integer solution of ``A @ x == b``, or ``None`` if there is none."""
    A = np.asarray(A, dtype=object)
    b = int_vector(b)
    if A.shape[0] != b.shape[0]:
        raise ValueError(f"incompatible shapes {A.shape} and {b.shape}")
    snf = smith_normal_form(A)
    y = snf.U @ b if A.shape[0] else b
    diag = snf.diagonal
    z = np.zeros(A.shape[1], dtype=object)
    for i, yi in enumerate(y):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if yi != 0:
                return None
        elif yi % d:
            return None
        else:
            z[i] = yi // d
    return snf.V @ z if A.shape[1] else z


def kernel_basis(A) -> np.ndarray:
    """Columns form a basis of the integer kernel of ``A``."""
    A = np.asarray(A, dtype=object)
    snf = smith_normal_form(A)
    return snf.V[:, snf.rank:]


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"torsion coefficients must be >= 2: {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            t = invariant_factors_from(t)
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_diagonal(cls, diagonal, generators: int) -> "AbelianGroup":
        """Group ``Z^generators / diag(diagonal)`` (missing entries are 0)."""
        nonzero = [d for d in diagonal if d != 0]
        free = generators - len(nonzero)
        return cls(free, tuple(d for d in sorted(nonzero) if d > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.free_rank + other.free_rank,
                            invariant_factors_from(self.torsion + other.torsion))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def invariant_factors_from(orders) -> tuple[int, ...]:
    """Invariant factors of ``sum Z/d_i`` for arbitrary cyclic orders."""
    orders = [d for d in orders if d > 1]
    if not orders:
        return ()
    snf = smith_normal_form(np.diag(np.array(orders, dtype=object)))
    return tuple(d for d in snf.invariant_factors if d > 1)


@dataclass(frozen=True)
class PresentedGroup:
    """``Z^generators / (column span of relations)`` with canonical coordinates.

    The canonical form comes from the Smith decomposition of the relation
    matrix: ``to_canonical`` sends a generator-coordinate vector to its
    coordinates on the nontrivial cyclic summands (torsion first, reduced mod
    the order, then free), and ``from_canonical`` lifts back.
    """

    generators: int
    relations: np.ndarray
    structure: AbelianGroup = field(init=False)
    _snf: SmithDecomposition = field(init=False, repr=False)
    _keep: tuple[int, ...] = field(init=False, repr=False)
    _moduli: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        R = np.asarray(self.relations, dtype=object)
        if R.ndim != 2 or R.shape[0] != self.generators:
            raise ValueError(f"relations must have {self.generators} rows, got shape {R.shape}")
        object.__setattr__(self, "relations", R)
        snf = smith_normal_form(R)
        diag = snf.diagonal
        keep, moduli = [], []
        for i in range(self.generators):
            d = diag[i] if i < len(diag) else 0
            if d != 1:
                keep.append(i)
                moduli.append(d)
        object.__setattr__(self, "_snf", snf)
        object.__setattr__(self, "_keep", tuple(keep))
        object.__setattr__(self, "_moduli", tuple(moduli))
        object.__setattr__(self, "structure", AbelianGroup.from_diagonal(diag, self.generators))

    @classmethod
    def free(cls, n: int) -> "PresentedGroup":
        return cls(n, zeros(n, 0))

    @property
    def moduli(self) -> tuple[int, ...]:
        """Order of each canonical coordinate (0 for a free one)."""
        return self._moduli

    def to_canonical(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=object)
        if x.ndim == 1:
            return self.to_canonical(x.reshape(-1, 1))[:, 0]
        if self.generators == 0:
            return zeros(0, x.shape[1])
        y = (self._snf.U @ x)[list(self._keep)]
        for i, d in enumerate(self._moduli):
            if d:
                y[i] = y[i] % d
        return y

    def from_canonical(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=object)
        lift = self._snf.U_inv[:, list(self._keep)]
        if y.ndim == 1:
            return lift @ y if len(self._keep) else np.zeros(self.generators, dtype=object)
        return lift @ y if len(self._keep) else zeros(self.generators, y.shape[1])

    def is_zero(self, x) -> bool:
        """True if ``x`` (vector or columns) lies in the relation span."""
        return not np.any(self.to_canonical(x))


def cokernel(M) -> PresentedGroup:
    """``Z^rows / im(M)``."""
    M = np.asarray(M, dtype=object)
    return PresentedGroup(M.shape[0], M)


def lattice_basis(A) -> np.ndarray:
    """Columns form a basis of the column lattice of ``A``."""
    A = np.asarray(A, dtype=object)
    snf = smith_normal_form(A)
    rk = snf.rank
    return snf.U_inv[:, :rk] * np.array(snf.diagonal[:rk], dtype=object)


def lattice_coordinates(basis_snf: SmithDecomposition, W) -> np.ndarray | None:
    """Coordinates of the columns of ``W`` in the lattice basis built by
    :func:`lattice_basis` from the same decomposition; ``None`` if some
    column is outside the lattice."""
    rk = basis_snf.rank
    diag = basis_snf.diagonal
    Y = basis_snf.U @ W
    if np.any(Y[rk:]):
        return None
    out = zeros(rk, W.shape[1])
    for i in range(rk):
        for j in range(W.shape[1]):
            q, rem = divmod(Y[i, j], diag[i])
            if rem:
                return None
            out[i, j] = q
    return out


def subquotient(ambient: PresentedGroup, ker_of, im_of,
                codomain: PresentedGroup | None = None) -> AbelianGroup:
    """Structure of ``ker(ker_of) / im(im_of)`` inside ``ambient``.

    ``ker_of`` maps ambient generator coordinates into ``codomain`` (free if
    omitted); ``im_of`` maps into ambient generator coordinates.  Kernel
    membership and images are both taken modulo the relevant relations.
    Raises :class:`ConsistencyError` if ``ker_of`` is not well defined on the
    ambient group or ``ker_of @ im_of`` is not zero modulo relations.
    """
    g = ambient.generators
    Dk = np.asarray(ker_of, dtype=object)
    Ei = np.asarray(im_of, dtype=object)
    if Dk.shape[1] != g or Ei.shape[0] != g:
        raise ValueError(f"shape mismatch: ambient {g}, ker_of {Dk.shape}, im_of {Ei.shape}")
    if codomain is None:
        codomain = PresentedGroup.free(Dk.shape[0])
    if codomain.generators != Dk.shape[0]:
        raise ValueError("codomain does not match ker_of")
    R = ambient.relations
    Rc = codomain.relations

    if Dk.shape[0] and R.shape[1] and not codomain.is_zero(Dk @ R):
        raise ConsistencyError("ker_of does not respect ambient relations")
    if Dk.shape[0] and Ei.shape[1] and not codomain.is_zero(Dk @ Ei):
        raise ConsistencyError("composite of differentials is nonzero modulo relations")

    # lifts of the kernel: x with Dk x in im(Rc)
    aug = np.concatenate([Dk, Rc], axis=1)
    lifts = kernel_basis(aug)[:g] if aug.shape[0] else identity(g)
    basis_snf = smith_normal_form(lifts)
    rk = basis_snf.rank
    W = np.concatenate([Ei, R], axis=1)
    coords = lattice_coordinates(basis_snf, W)
    if coords is None:
        raise ConsistencyError("image is not contained in the kernel")
    return cokernel(coords).structure if rk else AbelianGroup()


def rank_over_rationals(M) -> int:
    """Rank over Q by Gaussian elimination on fractions (cross-check route)."""
    A = [[Fraction(int(v)) for v in row] for row in np.asarray(M, dtype=object)]
    rank = 0
    rows = len(A)
    cols = len(A[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(rank + 1, rows):
            f = A[i][c] / A[rank][c]
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
