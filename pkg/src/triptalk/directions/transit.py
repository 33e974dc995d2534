"""Earliest-arrival transit planning over the timetable graph.

Time-expanded search: states are (arrival time, place, boarded line sequence);
expansion follows walk links and boards the earliest feasible run of each
line serving the current place. Alternatives are distinct line-number
sequences, sorted by arrival time; ties break toward fewer steps, then
lexicographic line numbers.
"""

from __future__ import annotations

import heapq
import itertools

from ..nlu.times import TimeSpec
from .dataset import MapDataset, Place
from .model import Itinerary, RouteStep, StepKind

MAX_BUSES = 4


def _resolve_depart(depart_after: TimeSpec | int, now_minutes: int | None) -> int:
    if isinstance(depart_after, TimeSpec):
        if depart_after.is_now:
            if now_minutes is None:
                raise ValueError('depart_after is "now" but no clock was given')
            return now_minutes
        return depart_after.minutes
    return int(depart_after)


def plan_transit(
    dataset: MapDataset,
    origin: Place,
    destination: Place,
    depart_after: TimeSpec | int,
    max_alternatives: int = 3,
    now_minutes: int | None = None,
) -> list[Itinerary]:
    """Plan up to max_alternatives transit itineraries; [] when unreachable."""
    start_time = _resolve_depart(depart_after, now_minutes)
    counter = itertools.count()
    # key: (arrive, steps, line_seq) for deterministic tie-breaking
    heap: list[tuple] = [(start_time, 0, (), next(counter), origin.id, ())]
    best: dict[tuple[str, tuple], int] = {(origin.id, ()): start_time}
    found: list[Itinerary] = []
    seen_seqs: set[tuple] = set()

    while heap and len(found) < max_alternatives:
        time, n_steps, seq, _, place_id, path = heapq.heappop(heap)
        if best.get((place_id, seq), float("inf")) < time:
            continue
        if place_id == destination.id and path:
            if seq not in seen_seqs:
                seen_seqs.add(seq)
                found.append(Itinerary(tuple(path)))
            continue

        for walk in dataset.walk_adj.get(place_id, ()):
            step = RouteStep(
                kind=StepKind.WALK,
                origin=dataset.places[walk.from_id],
                destination=dataset.places[walk.to_id],
                depart=time,
                arrive=time + walk.minutes,
            )
            _push(heap, best, counter, step.arrive, n_steps + 1, seq, walk.to_id, path + (step,))

        if len(seq) >= MAX_BUSES:
            continue
        for line, stop_idx in dataset.lines_at.get(place_id, ()):
            if stop_idx >= len(line.stops) - 1:
                continue
            run = _earliest_run(line, stop_idx, time)
            if run is None:
                continue
            board_time = line.time_at_stop(run, stop_idx)
            new_seq = seq + (line.line_number,)
            for j in range(stop_idx + 1, len(line.stops)):
                step = RouteStep(
                    kind=StepKind.BUS,
                    origin=dataset.places[place_id],
                    destination=dataset.places[line.stops[j]],
                    depart=board_time,
                    arrive=line.time_at_stop(run, j),
                    line_number=line.line_number,
                )
                _push(heap, best, counter, step.arrive, n_steps + 1, new_seq, line.stops[j], path + (step,))

    found.sort(key=lambda it: (it.arrive, len(it.steps), it.line_sequence()))
    return found


def _earliest_run(line, stop_idx: int, after: int) -> int | None:
    for run in range(len(line.departures)):
        if line.time_at_stop(run, stop_idx) >= after:
            return run
    return None


def _push(heap, best, counter, time, n_steps, seq, place_id, path):
    key = (place_id, seq)
    if best.get(key, float("inf")) <= time:
        return
    best[key] = time
    heapq.heappush(heap, (time, n_steps, seq, next(counter), place_id, path))
