"""Render itinerary steps as instruction sentences with emphasis slots."""

from __future__ import annotations

from ..nlu.times import format_clock
from .model import Itinerary, RouteStep, StepKind


def _walk_text(step: RouteStep) -> str:
    minutes = step.arrive - step.depart
    plural = "minute" if minutes == 1 else "minutes"
    return (
        f"Walk from {step.origin.canonical_name} to {step.destination.canonical_name}, "
        f"about {minutes} {plural}."
    )


def _bus_text(step: RouteStep) -> str:
    return (
        f"Take the {step.line_number} bus from {step.origin.canonical_name} "
        f"toward {step.destination.canonical_name}, departing at {format_clock(step.depart)}."
    )


def _drive_text(step: RouteStep) -> str:
    minutes = step.arrive - step.depart
    plural = "minute" if minutes == 1 else "minutes"
    return (
        f"Drive along {step.street} from {step.origin.canonical_name} "
        f"to {step.destination.canonical_name}, about {minutes} {plural}."
    )


def step_to_language(step: RouteStep) -> dict:
    """One instruction sentence plus the slots the delivery layer emphasizes."""
    street_names = [step.origin.canonical_name, step.destination.canonical_name]
    if step.kind is StepKind.BUS:
        return {
            "text": _bus_text(step),
            "bus_number": step.line_number,
            "depart_time": format_clock(step.depart),
            "street_names": street_names,
        }
    if step.kind is StepKind.DRIVE:
        if step.street:
            street_names.insert(0, step.street)
        return {"text": _drive_text(step), "street_names": street_names}
    return {"text": _walk_text(step), "street_names": street_names}


def steps_to_language(itinerary: Itinerary) -> list[dict]:
    return [step_to_language(step) for step in itinerary.steps]
