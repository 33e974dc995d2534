"""The offline map dataset: places, transit lines, roads, and walk links.

The file format is a single JSON object:

    {
      "places": [{"id", "name", "kind": "landmark"|"intersection",
                  "aliases": [...], "lat", "lon"}, ...],
      "lines":  [{"id", "line_number", "stops": [place ids],
                  "departures": [minutes at first stop],
                  "inter_stop_minutes": [per-leg minutes]}, ...],
      "roads":  [{"from", "to", "minutes", "street"}, ...],
      "walks":  [{"from", "to", "minutes"}, ...]
    }

Roads and walks are undirected; the loader indexes both directions.
Validation reports every problem found, not just the first.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path


class DatasetError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("invalid map dataset:\n  " + "\n  ".join(problems))
        self.problems = problems


class PlaceKind(enum.Enum):
    LANDMARK = "landmark"
    INTERSECTION = "intersection"


@dataclass(frozen=True)
class Place:
    id: str
    canonical_name: str
    kind: PlaceKind
    aliases: tuple[str, ...] = ()
    lat: float = 0.0
    lon: float = 0.0

    def streets(self) -> tuple[str, str] | None:
        """The two street names of an intersection, from its canonical form."""
        if self.kind is not PlaceKind.INTERSECTION:
            return None
        left, _, right = self.canonical_name.partition(" and ")
        return (left, right)


@dataclass(frozen=True)
class TransitLine:
    id: str
    line_number: str
    stops: tuple[str, ...]  # place ids, in travel order
    departures: tuple[int, ...]  # minutes since midnight at the first stop
    inter_stop_minutes: tuple[int, ...]

    def time_at_stop(self, run: int, stop_index: int) -> int:
        t = self.departures[run]
        for leg in self.inter_stop_minutes[:stop_index]:
            t += leg
        return t


@dataclass(frozen=True)
class RoadEdge:
    from_id: str
    to_id: str
    minutes: int
    street: str


@dataclass(frozen=True)
class WalkEdge:
    from_id: str
    to_id: str
    minutes: int


@dataclass
class MapDataset:
    places: dict[str, Place]
    lines: list[TransitLine]
    roads: list[RoadEdge]
    walks: list[WalkEdge]
    # adjacency indexes, both directions
    road_adj: dict[str, list[RoadEdge]] = field(default_factory=dict)
    walk_adj: dict[str, list[WalkEdge]] = field(default_factory=dict)
    lines_at: dict[str, list[tuple[TransitLine, int]]] = field(default_factory=dict)

    def __post_init__(self):
        for edge in self.roads:
            self.road_adj.setdefault(edge.from_id, []).append(edge)
            self.road_adj.setdefault(edge.to_id, []).append(
                RoadEdge(edge.to_id, edge.from_id, edge.minutes, edge.street)
            )
        for walk in self.walks:
            self.walk_adj.setdefault(walk.from_id, []).append(walk)
            self.walk_adj.setdefault(walk.to_id, []).append(WalkEdge(walk.to_id, walk.from_id, walk.minutes))
        for line in self.lines:
            for idx, stop in enumerate(line.stops):
                self.lines_at.setdefault(stop, []).append((line, idx))

    def place_by_name(self, canonical_name: str) -> Place | None:
        for p in self.places.values():
            if p.canonical_name == canonical_name:
                return p
        return None


def _check_place(raw: dict, problems: list[str]) -> Place | None:
    pid = raw.get("id")
    if not pid or not isinstance(pid, str):
        problems.append(f"place with missing/invalid id: {raw!r}")
        return None
    name = raw.get("name")
    if not name or not isinstance(name, str):
        problems.append(f"place {pid}: missing name")
        return None
    try:
        kind = PlaceKind(raw.get("kind", "landmark"))
    except ValueError:
        problems.append(f"place {pid}: unknown kind {raw.get('kind')!r}")
        return None
    if kind is PlaceKind.INTERSECTION:
        parts = name.split(" and ")
        if len(parts) != 2:
            problems.append(f"place {pid}: intersection name must be '<Street A> and <Street B>': {name!r}")
        elif sorted(parts) != parts:
            problems.append(f"place {pid}: intersection streets must be alphabetically ordered: {name!r}")
    aliases = raw.get("aliases", [])
    if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
        problems.append(f"place {pid}: aliases must be strings")
        aliases = []
    return Place(
        id=pid,
        canonical_name=name,
        kind=kind,
        aliases=tuple(aliases),
        lat=float(raw.get("lat", 0.0)),
        lon=float(raw.get("lon", 0.0)),
    )


def _check_line(raw: dict, places: dict[str, Place], problems: list[str]) -> TransitLine | None:
    lid = raw.get("id") or raw.get("line_number") or "?"
    number = raw.get("line_number")
    if not number:
        problems.append(f"line {lid}: missing line_number")
        return None
    stops = raw.get("stops", [])
    if len(stops) < 2:
        problems.append(f"line {lid}: needs at least 2 stops")
        return None
    ok = True
    for s in stops:
        if s not in places:
            problems.append(f"line {lid}: unknown stop id {s!r}")
            ok = False
    if len(set(stops)) != len(stops):
        problems.append(f"line {lid}: repeated stop ids")
        ok = False
    departures = raw.get("departures", [])
    if not departures:
        problems.append(f"line {lid}: no departures")
        ok = False
    if any(b <= a for a, b in zip(departures, departures[1:])):
        problems.append(f"line {lid}: departures must be strictly increasing")
        ok = False
    legs = raw.get("inter_stop_minutes", [])
    if len(legs) != len(stops) - 1:
        problems.append(f"line {lid}: inter_stop_minutes must have {len(stops) - 1} entries")
        ok = False
    if any(not isinstance(m, int) or m <= 0 for m in legs):
        problems.append(f"line {lid}: inter-stop minutes must be positive integers")
        ok = False
    if not ok:
        return None
    return TransitLine(
        id=str(lid),
        line_number=str(number),
        stops=tuple(stops),
        departures=tuple(departures),
        inter_stop_minutes=tuple(legs),
    )


def _check_edge(raw: dict, places: dict[str, Place], what: str, problems: list[str]) -> tuple | None:
    src, dst, minutes = raw.get("from"), raw.get("to"), raw.get("minutes")
    ok = True
    for pid in (src, dst):
        if pid not in places:
            problems.append(f"{what} edge {raw!r}: unknown place id {pid!r}")
            ok = False
    if not isinstance(minutes, int) or minutes <= 0:
        problems.append(f"{what} edge {raw!r}: minutes must be a positive integer")
        ok = False
    if what == "road" and not raw.get("street"):
        problems.append(f"road edge {raw!r}: missing street name")
        ok = False
    return (src, dst, minutes) if ok else None


def load_dataset(path: str | Path) -> MapDataset:
    """Load and validate a map dataset; raises DatasetError listing every problem."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DatasetError([f"cannot read {path}: {exc}"]) from exc
    except json.JSONDecodeError as exc:
        raise DatasetError([f"cannot parse {path}: {exc}"]) from exc
    if not isinstance(raw, dict) or not raw:
        raise DatasetError(["dataset file must hold a non-empty JSON object"])

    problems: list[str] = []
    places: dict[str, Place] = {}
    names: set[str] = set()
    for entry in raw.get("places", []):
        place = _check_place(entry, problems)
        if place is None:
            continue
        if place.id in places:
            problems.append(f"duplicate place id {place.id}")
        if place.canonical_name in names:
            problems.append(f"duplicate canonical name {place.canonical_name!r}")
        places[place.id] = place
        names.add(place.canonical_name)
    if not places:
        problems.append("dataset has no places")

    lines = []
    for entry in raw.get("lines", []):
        line = _check_line(entry, places, problems)
        if line is not None:
            lines.append(line)

    roads = []
    for entry in raw.get("roads", []):
        checked = _check_edge(entry, places, "road", problems)
        if checked:
            roads.append(RoadEdge(checked[0], checked[1], checked[2], entry["street"]))
    walks = []
    for entry in raw.get("walks", []):
        checked = _check_edge(entry, places, "walk", problems)
        if checked:
            walks.append(WalkEdge(*checked))

    if problems:
        raise DatasetError(problems)
    return MapDataset(places=places, lines=lines, roads=roads, walks=walks)


_STREET_SUFFIXES = {
    "street", "st", "avenue", "ave", "boulevard", "blvd", "road", "rd",
    "drive", "dr", "lane", "ln", "way", "place", "pl", "court", "ct",
}


def street_base(street: str) -> str:
    """Street name with its type suffix removed: "Murray Avenue" -> "murray"."""
    tokens = street.lower().split()
    while len(tokens) > 1 and tokens[-1] in _STREET_SUFFIXES:
        tokens.pop()
    return " ".join(tokens)


def intersection_hint_names(dataset: MapDataset) -> list[str]:
    """Intersection names for the speech-recognizer hint list.

    Yields both the full canonical form and the short base-name form
    ("beechwood and northumberland") of every intersection.
    """
    names = set()
    for place in dataset.places.values():
        streets = place.streets()
        if streets is None:
            continue
        names.add(place.canonical_name.lower())
        names.add(f"{street_base(streets[0])} and {street_base(streets[1])}")
    return sorted(names)
