"""
Randomized checks
=================

Every suite draws its complexes from a generator seeded by
(seed, suite, trial), so any failure can be replayed on its own.
"""

from bihochster.cli import render_report
from bihochster.fuzz import RunConfig, run_trial, verify_theorems

report = verify_theorems(RunConfig(suite="all", trials=20, seed=7, jobs=2))
print(render_report(report, "tsv"))
print(f"{len(report.trials)} trials in {report.wall_time:.1f}s")

# replaying one trial
t = run_trial("wedge", 11, 7)
print(t.facets, t.fingerprint, t.passed)
