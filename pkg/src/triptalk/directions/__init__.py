"""Offline map backend: dataset, location resolution, route planning, step text."""

from .dataset import (
    DatasetError,
    MapDataset,
    Place,
    PlaceKind,
    RoadEdge,
    TransitLine,
    WalkEdge,
    load_dataset,
    intersection_hint_names,
)
from .model import Itinerary, RouteStep, StepKind
from .resolve import NoMatchError, resolve_location
from .transit import plan_transit
from .driving import NoRouteError, plan_driving
from .language import steps_to_language

__all__ = [
    "DatasetError",
    "MapDataset",
    "Place",
    "PlaceKind",
    "RoadEdge",
    "TransitLine",
    "WalkEdge",
    "load_dataset",
    "intersection_hint_names",
    "Itinerary",
    "RouteStep",
    "StepKind",
    "NoMatchError",
    "resolve_location",
    "plan_transit",
    "NoRouteError",
    "plan_driving",
    "steps_to_language",
]
