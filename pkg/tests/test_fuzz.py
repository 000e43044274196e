import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from bihochster.complex import face_sum, from_facets, ghost_vertices, relabel, simplex
from bihochster.fuzz import (SUITES, RunConfig, fingerprint, ghost_complex, random_complex,
                             random_simplex_attachment, random_wedge_decomposable, run_trial,
                             simplex_double_homology_matches, verify_theorems)

from conftest import GLUED_TRIANGLES_FACETS


def test_random_complex_extremes():
    assert random_complex(4, 1.0, 0) == simplex(4)
    assert random_complex(4, 0.0, 0) == from_facets(4, [()])


def test_random_complex_deterministic():
    assert random_complex(5, 0.4, "abc") == random_complex(5, 0.4, "abc")
    assert fingerprint(random_complex(5, 0.4, 7)) == fingerprint(random_complex(5, 0.4, 7))


def test_random_complex_max_size():
    K = random_complex(6, 0.9, 3, max_size=2)
    assert K.dimension <= 1


def test_wedge_generator_reaches_two_glued_triangles():
    target = from_facets(4, GLUED_TRIANGLES_FACETS)
    images = {relabel(target, dict(zip(range(1, 5), p)))
              for p in itertools.permutations(range(1, 5))}
    hits = [seed for seed in range(1000) if random_wedge_decomposable(4, seed)[0] in images]
    assert hits


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10 ** 6))
def test_wedge_generator_is_valid(m, seed):
    K, dec = random_wedge_decomposable(m, seed)
    assert face_sum(dec.K1, dec.K2, dec.sigma) == K
    assert not ghost_vertices(K)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10 ** 6))
def test_attachment_generator(m, seed):
    K, tau, sigma = random_simplex_attachment(m, seed)
    assert sigma | tau == tau and sigma != tau
    assert tau in K
    assert not ghost_vertices(K)
    assert not K.is_simplex()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10 ** 6))
def test_ghost_generator(m, seed):
    assert ghost_vertices(ghost_complex(random.Random(seed), m))


def test_run_trial_reproducible():
    a = run_trial("wedge", 3, 11)
    b = run_trial("wedge", 3, 11)
    assert a == b
    assert a.passed


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes(suite):
    report = verify_theorems(RunConfig(suite=suite, trials=6, seed=5))
    assert report.counts() == {suite: (6, 6)}


def test_parallel_matches_serial():
    cfg = dict(suite="all", trials=3, seed=2)
    serial = verify_theorems(RunConfig(jobs=1, **cfg))
    parallel = verify_theorems(RunConfig(jobs=2, **cfg))
    assert serial.trials == parallel.trials


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(trials=0)
    with pytest.raises(ValueError):
        RunConfig(suite="nope")
    with pytest.raises(ValueError):
        RunConfig(density=1.5)
    with pytest.warns(UserWarning):
        RunConfig(m=8)


def test_simplices():
    assert all(simplex_double_homology_matches(m) for m in range(1, 6))
