"""Marked points moving in the torus fiber, and when their strands cross.

Start points sit an infinitesimal ε apart, so every time printed below is
exact. The later strand at a crossing point passes over.
"""

from __future__ import annotations

from fibersym.fibration import FibrationFrame, crossing_table, puncture_paths, relative_locations

for v1 in [(-1, -1, 1), (-1, 1, 1)]:
    paths = puncture_paths(FibrationFrame(v1))
    print(f"v1 = {v1}")
    for p in paths:
        print(f"  y{p.label}: start ({p.start[0]}, {p.start[1]}), velocity {p.velocity}")
    for r in relative_locations(paths):
        print(f"  y{r.mover} passes {r.relation.value} the start of y{r.anchor} at t = {r.time}")
    for ev in crossing_table(paths):
        note = f"  [{', '.join(sorted(ev.flags))}]" if ev.flags else ""
        print(f"  y{ev.pair[0]}, y{ev.pair[1]} at {ev.event_time}: y{ev.over} over{note}")
    print()
