"""Shortest-time driving directions over the road graph."""

from __future__ import annotations

import heapq
import itertools

from .dataset import MapDataset, Place, RoadEdge
from .model import Itinerary, RouteStep, StepKind


class NoRouteError(ValueError):
    def __init__(self, origin: Place, destination: Place):
        super().__init__(f"no driving route from {origin.canonical_name} to {destination.canonical_name}")
        self.origin = origin
        self.destination = destination


def plan_driving(dataset: MapDataset, origin: Place, destination: Place, depart: int = 0) -> Itinerary:
    """Minimum-total-minutes road path; consecutive same-street edges merge
    into one drive step. Raises NoRouteError when unreachable."""
    if origin.id == destination.id:
        raise NoRouteError(origin, destination)

    counter = itertools.count()
    heap: list[tuple] = [(0, next(counter), origin.id)]
    dist: dict[str, int] = {origin.id: 0}
    parent: dict[str, RoadEdge] = {}
    while heap:
        d, _, place_id = heapq.heappop(heap)
        if d > dist.get(place_id, float("inf")):
            continue
        if place_id == destination.id:
            break
        for edge in dataset.road_adj.get(place_id, ()):
            nd = d + edge.minutes
            if nd < dist.get(edge.to_id, float("inf")):
                dist[edge.to_id] = nd
                parent[edge.to_id] = edge
                heapq.heappush(heap, (nd, next(counter), edge.to_id))

    if destination.id not in parent:
        raise NoRouteError(origin, destination)

    edges: list[RoadEdge] = []
    node = destination.id
    while node != origin.id:
        edge = parent[node]
        edges.append(edge)
        node = edge.from_id
    edges.reverse()

    steps: list[RouteStep] = []
    clock = depart
    i = 0
    while i < len(edges):
        j = i
        minutes = 0
        while j < len(edges) and edges[j].street == edges[i].street:
            minutes += edges[j].minutes
            j += 1
        steps.append(
            RouteStep(
                kind=StepKind.DRIVE,
                origin=dataset.places[edges[i].from_id],
                destination=dataset.places[edges[j - 1].to_id],
                depart=clock,
                arrive=clock + minutes,
                street=edges[i].street,
            )
        )
        clock += minutes
        i = j
    return Itinerary(tuple(steps))
