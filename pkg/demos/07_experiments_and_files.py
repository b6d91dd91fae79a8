"""
Reproducible experiments and file formats
=========================================

Named experiments produce JSON reports that are byte-identical for a
fixed seed once timing is left out.  The same runs are available from
the command line as ``chibound experiment NAME``.
"""

import tempfile
from pathlib import Path

from chibound.constructions import shift_graph
from chibound.experiments import ExperimentSpec, experiment_names, run_experiment
from chibound.io import format_graph6, read_graph, write_graph

print("experiments:", ", ".join(experiment_names()))

spec = ExperimentSpec("tree-surgery", {"count": 20}, seed=7)
report = run_experiment(spec)
print("all passed:", report.all_passed, "cases:", len(report.cases))
print("deterministic:", report.to_json(timing=False) == run_experiment(spec).to_json(timing=False))

# A time budget stops between cases and marks the report incomplete.
partial = run_experiment(ExperimentSpec("burling-verify", {}, seed=7, budget_seconds=0))
print("budgeted run complete:", partial.complete, "cases:", len(partial.cases))

# Edge lists keep structured labels; graph6 keeps only the vertex order.
with tempfile.TemporaryDirectory() as d:
    g = shift_graph(6, 2)
    write_graph(g, Path(d) / "g.el")
    print("edge-list round trip:", read_graph(Path(d) / "g.el") == g)
    print("graph6:", format_graph6(g))
