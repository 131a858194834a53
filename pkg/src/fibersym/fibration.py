"""Puncture paths in the torus fiber and their crossing data.

Fibering T^3 minus four lines along v1 = (a1, a2, a3), with v2 = (1, 1, 0)
and v3 = (0, 1, 1), the fiber is a torus whose four marked points move
linearly in time. Starting points are displaced from the origin by multiples
of a positive infinitesimal ε, handled exactly with :class:`EpsNumber`.

Assembling the final monodromy word from these data is left to the caller;
:mod:`fibersym.surfaces` can evaluate any candidate word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .errors import DegenerateBasisError, DegenerateGeometryError
from .exactla import EPS, EpsNumber

Point = tuple[EpsNumber, EpsNumber]

START_INCIDENCE = "start_incidence"
COINCIDENT_DUPLICATE = "coincident_duplicate"


@dataclass(frozen=True)
class FibrationFrame:
    v1: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "v1", tuple(int(a) for a in self.v1))
        if len(self.v1) != 3:
            raise ValueError("v1 must have three entries")
        if self.A == 0:
            raise DegenerateBasisError(f"v1 = {self.v1} gives det(v1, v2, v3) = a1 - a2 + a3 = 0")

    @property
    def A(self) -> int:
        a1, a2, a3 = self.v1
        return a1 - a2 + a3


@dataclass(frozen=True)
class PuncturePath:
    label: int
    start: Point
    velocity: tuple[int, int]

    def at(self, t) -> Point:
        return (self.start[0] + t * self.velocity[0], self.start[1] + t * self.velocity[1])


@dataclass(frozen=True)
class CrossingEvent:
    pair: tuple[int, int]
    times: tuple[EpsNumber, EpsNumber]
    point: Point
    flags: frozenset = field(default_factory=frozenset)

    @property
    def over(self) -> int:
        """The strand that reaches the crossing point later passes over."""
        return self.pair[0] if self.times[0] > self.times[1] else self.pair[1]

    @property
    def under(self) -> int:
        return self.pair[1] if self.over == self.pair[0] else self.pair[0]

    @property
    def event_time(self) -> EpsNumber:
        return max(self.times)

    def sort_key(self):
        return (self.event_time, self.pair, self.times)


class Relation(str, Enum):
    ABOVE = "above"
    BELOW = "below"
    THROUGH_START = "through_start"


@dataclass(frozen=True)
class RelativeLocation:
    mover: int
    anchor: int
    relation: Relation
    time: EpsNumber


def torus_point(p: Point) -> Point:
    return (p[0].frac(), p[1].frac())


def _solve2(a, b, c, d, r1, r2):
    """Solve [[a, b], [c, d]] (x, y) = (r1, r2) for an invertible integer matrix."""
    det = a * d - b * c
    return (r1 * d - r2 * b) / det, (r2 * a - r1 * c) / det


def fiber_point_systems(frame: FibrationFrame) -> list[tuple[tuple[int, int, int, int], Point, tuple[int, int]]]:
    """The four 2x2 systems locating line L_i in the fiber at time t.

    Each entry is (matrix entries (a, b, c, d), constant right-hand side,
    t-coefficient of the right-hand side), in the order L1..L4.
    """
    a1, a2, a3 = frame.v1
    e = EPS
    return [
        ((1, 1, 0, 1), (-e, 3 * e), (-a2, -a3)),
        ((1, 0, 0, 1), (e, -3 * e), (-a1, -a3)),
        ((1, 0, 1, 1), (-e, e), (-a1, -a2)),
        ((0, -1, 1, -1), (EpsNumber(), EpsNumber()), (a2 - a1, a3 - a1)),
    ]


# y-ordering of the marked points: y1 = x1, y2 = x3, y3 = x4, y4 = x2
RELABEL = (0, 2, 3, 1)


def puncture_paths(frame: FibrationFrame) -> list[PuncturePath]:
    """Paths y1..y4 of the marked points, labelled by first-coordinate order at t = 0."""
    a1, a2, a3 = frame.v1
    e = EPS
    zero = EpsNumber()
    paths = [
        PuncturePath(1, (-4 * e, 3 * e), (a3 - a2, -a3)),
        PuncturePath(2, (-e, 2 * e), (-a1, a1 - a2)),
        PuncturePath(3, (zero, zero), (a3 - a2, a1 - a2)),
        PuncturePath(4, (e, -3 * e), (-a1, -a3)),
    ]
    systems = fiber_point_systems(frame)
    for path, sys_index in zip(paths, RELABEL):
        (a, b, c, d), const, slope = systems[sys_index]
        sx, sy = path.start
        vx, vy = path.velocity
        # substitute the path back into its defining system, separately in t^0 and t^1
        if (a * sx + b * sy, c * sx + d * sy) != const or (a * vx + b * vy, c * vx + d * vy) != slope:
            raise AssertionError(f"path y{path.label} does not solve its line system")
    return paths


def _offset_box(pi: PuncturePath, pj: PuncturePath, extra: int = 0) -> range:
    bound = max(map(abs, pi.velocity)) + max(map(abs, pj.velocity)) + 1 + extra
    return range(-bound, bound + 1)


def _in_window(t: EpsNumber) -> bool:
    return EpsNumber() <= t < 1


def _same_time_collisions(pi: PuncturePath, pj: PuncturePath) -> Iterator[EpsNumber]:
    dvx, dvy = pi.velocity[0] - pj.velocity[0], pi.velocity[1] - pj.velocity[1]
    dx, dy = pj.start[0] - pi.start[0], pj.start[1] - pi.start[1]
    box = _offset_box(pi, pj)
    if dvx == dvy == 0:
        if dx.frac() == 0 and dy.frac() == 0:
            yield EpsNumber()
        return
    for p, q in product(box, box):
        if dvx:
            t = (dx + p) / dvx
            if dvy * t != dy + q:
                continue
        else:
            t = (dy + q) / dvy
            if dx + p != 0:
                continue
        if _in_window(t):
            yield t


def verify_disjoint_strands(paths: Sequence[PuncturePath]) -> bool:
    """True iff no two marked points ever occupy the same torus point at the same time."""
    return not any(next(_same_time_collisions(pi, pj), None) is not None for pi, pj in combinations(paths, 2))


def _pair_solutions(pi: PuncturePath, pj: PuncturePath, extra: int = 0) -> set[tuple[EpsNumber, EpsNumber]]:
    (vix, viy), (vjx, vjy) = pi.velocity, pj.velocity
    a, b, c, d = vix, -vjx, viy, -vjy
    det = a * d - b * c
    dx, dy = pj.start[0] - pi.start[0], pj.start[1] - pi.start[1]
    box = _offset_box(pi, pj, extra)
    found = set()
    for p, q in product(box, box):
        r1, r2 = dx + p, dy + q
        if det == 0:
            # consistent parallel system: the strands overlap along a segment
            consistent = (a * r2 - c * r1) == 0 and (b * r2 - d * r1) == 0
            if consistent and (a, b, c, d) != (0, 0, 0, 0) or (a, b, c, d) == (0, 0, 0, 0) and r1 == r2 == 0:
                raise DegenerateGeometryError(
                    f"y{pi.label} and y{pj.label} have parallel velocities and share a line"
                )
            continue
        ti, tj = _solve2(a, b, c, d, r1, r2)
        if _in_window(ti) and _in_window(tj):
            found.add((ti, tj))
    return found


def crossing_table(paths: Sequence[PuncturePath]) -> list[CrossingEvent]:
    """All crossings of pairs of strands with both times in [0, 1), sorted by event time.

    Events where one strand sits at its start point (time 0) carry the
    ``start_incidence`` flag. A strand that winds twice meets another at the
    same torus point twice; when the two events agree in time and over-strand
    the later copy carries ``coincident_duplicate``. The crossing table proper
    is the unflagged events, see :func:`table_rows`.
    """
    if not verify_disjoint_strands(paths):
        raise DegenerateGeometryError("two marked points collide")
    events = []
    for pi, pj in combinations(sorted(paths, key=lambda p: p.label), 2):
        sols = _pair_solutions(pi, pj)
        if _pair_solutions(pi, pj, extra=1) != sols:
            raise AssertionError("offset box too small: enlarged box found new crossings")
        for ti, tj in sols:
            if ti == tj:
                raise DegenerateGeometryError(f"y{pi.label} and y{pj.label} meet at equal times")
            flags = frozenset({START_INCIDENCE}) if ti == 0 or tj == 0 else frozenset()
            events.append(CrossingEvent((pi.label, pj.label), (ti, tj), torus_point(pi.at(ti)), flags))
    events.sort(key=CrossingEvent.sort_key)
    seen = set()
    out = []
    for ev in events:
        key = (ev.pair, ev.over, ev.event_time, ev.point)
        if not ev.flags and key in seen:
            ev = CrossingEvent(ev.pair, ev.times, ev.point, frozenset({COINCIDENT_DUPLICATE}))
        elif not ev.flags:
            seen.add(key)
        out.append(ev)
    return out


def table_rows(events: Sequence[CrossingEvent]) -> list[CrossingEvent]:
    return [e for e in events if not e.flags]


def relative_locations(paths: Sequence[PuncturePath]) -> list[RelativeLocation]:
    """Where each strand passes the start point of every other strand.

    For t in (0, 1) with the mover's first coordinate equal to the anchor's
    starting first coordinate (mod 1), the second coordinates are compared.
    Only passes within an infinitesimal distance of the start point are
    reported; farther passes say nothing about the cluster of start points.
    """
    out = []
    for mover, anchor in permutations(sorted(paths, key=lambda p: p.label), 2):
        vx = mover.velocity[0]
        if vx == 0:
            continue
        gap = anchor.start[0] - mover.start[0]
        for p in range(-abs(vx) - 1, abs(vx) + 2):
            t = (gap + p) / vx
            if not EpsNumber() < t < 1:
                continue
            dy = mover.at(t)[1] - anchor.start[1]
            if dy.rational_part.denominator != 1:
                continue
            dy = dy - dy.rational_part
            s = dy.sign()
            rel = Relation.THROUGH_START if s == 0 else Relation.ABOVE if s > 0 else Relation.BELOW
            out.append(RelativeLocation(mover.label, anchor.label, rel, t))
    out.sort(key=lambda r: (r.mover, r.anchor, r.time))
    return out
