"""Route steps and itineraries produced by the planners."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .dataset import Place


class StepKind(enum.Enum):
    WALK = "walk"
    BUS = "bus"
    DRIVE = "drive"


@dataclass(frozen=True)
class RouteStep:
    kind: StepKind
    origin: Place
    destination: Place
    depart: int  # minutes since midnight
    arrive: int
    line_number: str | None = None
    street: str | None = None  # drive steps

    def __post_init__(self):
        if self.arrive < self.depart:
            raise ValueError(f"step arrives before it departs: {self}")
        if self.kind is StepKind.BUS and not self.line_number:
            raise ValueError("bus steps carry a line number")


@dataclass(frozen=True)
class Itinerary:
    steps: tuple[RouteStep, ...]
    total_minutes: int = field(init=False)
    bus_count: int = field(init=False)

    def __post_init__(self):
        if not self.steps:
            raise ValueError("itinerary needs at least one step")
        for a, b in zip(self.steps, self.steps[1:]):
            if a.destination.id != b.origin.id:
                raise ValueError(f"steps not contiguous: {a.destination.id} -> {b.origin.id}")
            if b.depart < a.arrive:
                raise ValueError("step times go backward across a boundary")
        object.__setattr__(self, "total_minutes", self.steps[-1].arrive - self.steps[0].depart)
        object.__setattr__(self, "bus_count", sum(1 for s in self.steps if s.kind is StepKind.BUS))

    @property
    def depart(self) -> int:
        return self.steps[0].depart

    @property
    def arrive(self) -> int:
        return self.steps[-1].arrive

    def line_sequence(self) -> tuple[str, ...]:
        return tuple(s.line_number for s in self.steps if s.kind is StepKind.BUS)
