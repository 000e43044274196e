"""Seeded random complexes and the property suites that check the
structural theorems on them.

Every trial draws from ``random.Random(f"{seed}:{suite}:{index}")`` so a
failure is reproducible from (seed, suite, index) alone, independent of how
many workers ran the suite.
"""

from __future__ import annotations

import hashlib
import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .complex import (SimplicialComplex, card, face_key, face_sum, facets, format_face,
                      from_facets, full_face, full_subcomplex, ghost_vertices, simplex)
from .hochster import d_squared_holds, double_homology
from .linalg import AbelianGroup, ConsistencyError
from .wedge import (WedgeDecomposition, check_ses_all, find_wedge_decomposition,
                    mayer_vietoris_failures)

SUITES = ("ghost", "wedge", "prop41", "dsquared", "ses", "mv", "attach")
DEFAULT_MAX_M = {"ghost": 6, "wedge": 7, "prop41": 6, "dsquared": 6, "ses": 6, "mv": 6, "attach": 7}
WEDGE_HH = {(0, 0): AbelianGroup(1), (-1, 4): AbelianGroup(1)}
SIMPLEX_HH = {(0, 0): AbelianGroup(1)}


def _subsets_at_least(ground: int, size: int) -> list[int]:
    out = [s for s in _all_subsets(ground) if card(s) >= size]
    return sorted(out, key=face_key)


def _all_subsets(ground: int):
    sub = ground
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & ground


def random_complex(m: int, density: float, seed, max_size: int | None = None) -> SimplicialComplex:
    """Each subset of [m] of size ≥ 2 is a facet with probability ``density``.

    ``max_size`` optionally skips larger candidates, which keeps random
    complexes away from being a single big simplex.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    cap = m if max_size is None else max_size
    chosen = [f for f in _subsets_at_least(full_face(m), 2)
              if card(f) <= cap and rng.random() < density]
    return from_facets(m, chosen)


def _fuzz_complex(rng: random.Random, m: int, density: float | None) -> SimplicialComplex:
    cap = rng.randint(2, max(2, m))
    d = density if density is not None else rng.uniform(0.1, 0.6)
    return random_complex(m, d, rng, max_size=cap)


def _random_part(rng: random.Random, m: int, sigma: int, part: int, density: float) -> SimplicialComplex:
    """A complex on σ ∪ part containing σ and every vertex of ``part``."""
    ground = sigma | part
    cap = rng.randint(2, max(2, card(ground)))
    chosen = [sigma] + [f for f in _subsets_at_least(ground, 2)
                        if card(f) <= cap and rng.random() < density]
    covered = 0
    for f in chosen:
        covered |= f
    chosen.extend(1 << i for i in range(m) if part >> i & 1 and not covered >> i & 1)
    return from_facets(m, chosen)


def random_wedge_decomposable(m: int, seed, density: float | None = None
                              ) -> tuple[SimplicialComplex, WedgeDecomposition]:
    """A ghost-free face sum K1 ⊔_σ K2 on [m] together with its witness."""
    if m < 2:
        raise ValueError("a face sum needs at least 2 vertices")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    verts = list(range(m))
    rng.shuffle(verts)
    s = rng.randint(0, m - 2)
    sigma = sum(1 << v for v in verts[:s])
    rest = verts[s:]
    cut = rng.randint(1, len(rest) - 1)
    left = sum(1 << v for v in rest[:cut])
    right = sum(1 << v for v in rest[cut:])
    K1 = _random_part(rng, m, sigma, left, density if density is not None else rng.uniform(0.2, 0.7))
    K2 = _random_part(rng, m, sigma, right, density if density is not None else rng.uniform(0.2, 0.7))
    K = face_sum(K1, K2, sigma)
    assert not ghost_vertices(K)
    return K, WedgeDecomposition(K, K1, K2, sigma)


def random_simplex_attachment(m: int, seed) -> tuple[SimplicialComplex, int, int]:
    """K = K' ∪ ⟨τ⟩ with K' ∩ ⟨τ⟩ = ⟨σ⟩, σ ⊊ τ ⊊ [m], ghost-free.

    Returns ``(K, tau, sigma)``; K is never a simplex.
    """
    if m < 2:
        raise ValueError("need at least 2 vertices")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    verts = list(range(m))
    rng.shuffle(verts)
    t = rng.randint(1, m - 1)
    tau_list = verts[:t]
    s = rng.randint(0, t - 1)
    sigma = sum(1 << v for v in rng.sample(tau_list, s))
    tau = sum(1 << v for v in tau_list)
    outside = full_face(m) & ~tau
    K_prime = _random_part(rng, m, sigma, outside, rng.uniform(0.2, 0.7))
    K = from_facets(m, facets(K_prime) + [tau])
    return K, tau, sigma


def fingerprint(K: SimplicialComplex) -> str:
    text = facet_text(K)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def facet_text(K: SimplicialComplex) -> str:
    fs = facets(K)
    return f"{K.m}: " + " ".join(format_face(f) for f in fs)


@dataclass
class RunConfig:
    suite: str = "all"
    trials: int = 100
    seed: int = 0
    m: int | None = None
    density: float | None = None
    jobs: int = 1
    output_format: str = "tsv"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.m is not None:
            if not 1 <= self.m <= 10:
                raise ValueError("m must be in 1..10 for fuzzing")
            if self.m > 7:
                warnings.warn(f"m={self.m} makes every trial expensive (2^m subcomplexes)")
        if self.density is not None and not 0 < self.density < 1:
            raise ValueError("density must lie strictly between 0 and 1")

    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)


@dataclass
class TrialResult:
    suite: str
    index: int
    seed: int
    m: int
    facets: str
    fingerprint: str
    property: str
    passed: bool
    witness: list = field(default_factory=list)


@dataclass
class VerificationReport:
    trials: list[TrialResult]
    wall_time: float = 0.0

    @property
    def failures(self) -> list[TrialResult]:
        return [t for t in self.trials if not t.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, tuple[int, int]]:
        """suite → (passed, total)."""
        out: dict[str, list[int]] = {}
        for t in self.trials:
            c = out.setdefault(t.suite, [0, 0])
            c[0] += t.passed
            c[1] += 1
        return {k: (v[0], v[1]) for k, v in out.items()}


def _table_mismatch(table, expected: dict) -> list:
    keys = sorted(set(table.entries) | set(expected))
    return [list(b) for b in keys if table[b] != expected.get(b, AbelianGroup())]


def _hh_or_witness(K):
    try:
        return double_homology(K), None
    except ConsistencyError as exc:
        return None, str(exc)


def _pick_m(rng: random.Random, cfg_m: int | None, suite: str, low: int = 1) -> int:
    return cfg_m if cfg_m is not None else rng.randint(low, DEFAULT_MAX_M[suite])


def ghost_complex(rng: random.Random, m: int, density: float | None = None) -> SimplicialComplex:
    """Random complex with at least one ghost vertex."""
    K = _fuzz_complex(rng, m, density)
    if not ghost_vertices(K):
        v = rng.randrange(m)
        K = full_subcomplex(K, full_face(m) & ~(1 << v))
    return K


def trial_input(suite: str, index: int, seed: int, m: int | None = None,
                density: float | None = None):
    """The random input of one trial.

    A complex for ``ghost``, ``prop41`` and ``dsquared``; a pair of complexes
    for ``mv``; ``(K, decomposition)`` for ``wedge`` and ``ses``; and
    ``(K, tau, sigma)`` for ``attach``.
    """
    rng = random.Random(f"{seed}:{suite}:{index}")
    if suite == "ghost":
        return ghost_complex(rng, _pick_m(rng, m, suite), density)
    if suite in ("wedge", "ses"):
        return random_wedge_decomposable(_pick_m(rng, m, suite, 2), rng, density)
    if suite in ("prop41", "dsquared"):
        return _fuzz_complex(rng, _pick_m(rng, m, suite), density)
    if suite == "mv":
        mm = _pick_m(rng, m, suite)
        return _fuzz_complex(rng, mm, density), _fuzz_complex(rng, mm, density)
    if suite == "attach":
        return random_simplex_attachment(_pick_m(rng, m, suite, 2), rng)
    raise ValueError(f"unknown suite {suite!r}")


def run_trial(suite: str, index: int, seed: int, m: int | None = None,
              density: float | None = None) -> TrialResult:
    data = trial_input(suite, index, seed, m, density)

    def result(K, prop, passed, witness=()):
        return TrialResult(suite, index, seed, K.m, facet_text(K), fingerprint(K), prop,
                           bool(passed), list(witness))

    if suite == "ghost":
        K = data
        HH, err = _hh_or_witness(K)
        if err:
            return result(K, "HH = 0 with ghost vertex", False, [err])
        return result(K, "HH = 0 with ghost vertex", HH.is_zero(), sorted(HH.entries))

    if suite == "wedge":
        K, _ = data
        HH, err = _hh_or_witness(K)
        if err:
            return result(K, "HH = Z(0,0) + Z(-1,4)", False, [err])
        bad = _table_mismatch(HH, WEDGE_HH)
        if find_wedge_decomposition(K) is None:
            bad.append("decomposition not detected")
        return result(K, "HH = Z(0,0) + Z(-1,4)", not bad, bad)

    if suite == "prop41":
        K = data
        HH, err = _hh_or_witness(K)
        if err:
            return result(K, "HH_{-k,0} detects ghosts", False, [err])
        row0 = {b: g for b, g in HH.entries.items() if b[1] == 0}
        expected = {} if ghost_vertices(K) else {(0, 0): AbelianGroup(1)}
        bad = [list(b) for b in sorted(set(row0) | set(expected)) if row0.get(b) != expected.get(b)]
        return result(K, "HH_{-k,0} detects ghosts", not bad, bad)

    if suite == "dsquared":
        return result(data, "d∘d = 0", d_squared_holds(data))

    if suite == "ses":
        K, dec = data
        bad = check_ses_all(dec)
        return result(K, "face-sum short exact sequence", not bad,
                      [[format_face(J), n] for J, n in bad])

    if suite == "mv":
        K1, K2 = data
        bad = mayer_vietoris_failures(K1, K2)
        pair = from_facets(K1.m, facets(K1) + facets(K2))
        out = result(pair, "Mayer-Vietoris exactness", not bad, bad)
        out.facets = facet_text(K1) + " | " + facet_text(K2)
        return out

    if suite == "attach":
        K = data[0]
        HH, err = _hh_or_witness(K)
        if err:
            return result(K, "simplex attachment", False, [err])
        bad = _table_mismatch(HH, WEDGE_HH)
        return result(K, "simplex attachment", not bad, bad)

    raise ValueError(f"unknown suite {suite!r}")


def _run_trial_args(args):
    return run_trial(*args)


def verify_theorems(config: RunConfig) -> VerificationReport:
    start = time.perf_counter()
    tasks = [(suite, i, config.seed, config.m, config.density)
             for suite in config.suites() for i in range(config.trials)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            trials = list(pool.map(_run_trial_args, tasks, chunksize=4))
    else:
        trials = [run_trial(*t) for t in tasks]
    return VerificationReport(trials, time.perf_counter() - start)


def simplex_double_homology_matches(m: int) -> bool:
    return double_homology(simplex(m)).entries == SIMPLEX_HH


__all__ = ["RunConfig", "TrialResult", "VerificationReport", "SUITES", "WEDGE_HH", "SIMPLEX_HH",
           "fingerprint", "facet_text", "ghost_complex", "random_complex",
           "random_simplex_attachment", "random_wedge_decomposable", "run_trial", "trial_input",
           "simplex_double_homology_matches", "verify_theorems"]
