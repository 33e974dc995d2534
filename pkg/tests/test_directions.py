import json

import pytest

from triptalk.directions import (
    DatasetError,
    NoMatchError,
    PlaceKind,
    intersection_hint_names,
    load_dataset,
    resolve_location,
    steps_to_language,
)
from triptalk.directions.dataset import street_base
from triptalk.directions.model import Itinerary, RouteStep, StepKind
from triptalk.directions.resolve import edit_distance
from triptalk.resources import data_path


@pytest.fixture(scope="module")
def demo():
    return load_dataset(data_path("pittsburgh_demo.json"))


def test_demo_dataset_loads_clean(demo):
    assert len(demo.places) >= 25
    assert {l.line_number for l in demo.lines} == {"28X", "61C", "61D", "71A"}
    assert demo.walk_adj and demo.road_adj


def test_empty_file_rejected(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("")
    with pytest.raises(DatasetError):
        load_dataset(path)


def test_unknown_stop_named_in_error(tmp_path):
    data = {
        "places": [
            {"id": "a", "name": "Alpha", "kind": "landmark"},
            {"id": "b", "name": "Beta", "kind": "landmark"},
        ],
        "lines": [
            {"id": "L1", "line_number": "1A", "stops": ["a", "ghost"], "departures": [10], "inter_stop_minutes": [5]}
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(DatasetError) as err:
        load_dataset(path)
    assert "L1" in str(err.value) and "ghost" in str(err.value)


def test_validation_collects_every_problem(tmp_path):
    data = {
        "places": [
            {"id": "x", "name": "Northumberland Street and Beechwood Boulevard", "kind": "intersection"},
            {"id": "y", "name": "Yard", "kind": "landmark"},
        ],
        "lines": [
            {"id": "L1", "line_number": "9", "stops": ["x"], "departures": [5], "inter_stop_minutes": []},
            {"id": "L2", "line_number": "9", "stops": ["x", "y"], "departures": [9, 7], "inter_stop_minutes": [3]},
        ],
        "roads": [{"from": "x", "to": "nope", "minutes": -2, "street": "Elm"}],
    }
    path = tmp_path / "multi.json"
    path.write_text(json.dumps(data))
    with pytest.raises(DatasetError) as err:
        load_dataset(path)
    assert len(err.value.problems) >= 4


def test_resolve_alias(demo):
    assert resolve_location(demo, "airport").canonical_name == "Pittsburgh International Airport"
    assert resolve_location(demo, "The Airport").canonical_name == "Pittsburgh International Airport"


def test_resolve_intersection_with_asr_error(demo):
    place = resolve_location(demo, "beechwood in northumberland")
    assert place.canonical_name == "Beechwood Boulevard and Northumberland Street"
    assert resolve_location(demo, "forbes and murray").canonical_name == "Forbes Avenue and Murray Avenue"
    assert resolve_location(demo, "forbes & murray").canonical_name == "Forbes Avenue and Murray Avenue"
    assert resolve_location(demo, "baker at butler").canonical_name == "Baker Street and Butler Street"


def test_resolve_exact_canonical_is_idempotent(demo):
    for place in demo.places.values():
        assert resolve_location(demo, place.canonical_name) is place


def test_resolve_fuzzy_whole_string(demo):
    assert resolve_location(demo, "downtwon pittsburgh").canonical_name == "Downtown Pittsburgh"


def test_resolve_no_match_carries_candidates(demo):
    with pytest.raises(NoMatchError) as err:
        resolve_location(demo, "xyzzy quux blorp")
    assert err.value.query == "xyzzy quux blorp"
    assert 1 <= len(err.value.candidates) <= 3


def test_street_base():
    assert street_base("Murray Avenue") == "murray"
    assert street_base("Northumberland Street") == "northumberland"
    assert street_base("26th Street") == "26th"


def test_edit_distance():
    assert edit_distance("abc", "abc") == 0
    assert edit_distance("abc", "abd") == 1
    assert edit_distance("in", "and") == 2
    assert edit_distance("kitten", "sitting", cap=2) == 3  # capped at cap+1


def test_intersection_hints_include_short_forms(demo):
    names = intersection_hint_names(demo)
    assert "beechwood and northumberland" in names
    assert "forbes and murray" in names
    assert "beechwood boulevard and northumberland street" in names


def _place(pid, name):
    from triptalk.directions.dataset import Place

    return Place(id=pid, canonical_name=name, kind=PlaceKind.LANDMARK)


def test_steps_to_language_bus_sentence():
    a, b = _place("a", "Downtown Pittsburgh"), _place("b", "Squirrel Hill Library")
    step = RouteStep(kind=StepKind.BUS, origin=a, destination=b, depart=619, arrive=650, line_number="61C")
    payload = steps_to_language(Itinerary((step,)))[0]
    assert "61C" in payload["text"]
    assert "10:19 am" in payload["text"]
    assert payload["bus_number"] == "61C"
    assert payload["depart_time"] == "10:19 am"
    assert "Downtown Pittsburgh" in payload["street_names"]


def test_steps_to_language_walk_has_no_bus_slot():
    a, b = _place("a", "A Plaza"), _place("b", "B Court")
    step = RouteStep(kind=StepKind.WALK, origin=a, destination=b, depart=0, arrive=5)
    payload = steps_to_language(Itinerary((step,)))[0]
    assert "bus_number" not in payload
    assert payload["text"].startswith("Walk from A Plaza")


def test_steps_to_language_order_preserved():
    a, b, c, d = (_place(x, x.upper()) for x in "abcd")
    steps = (
        RouteStep(kind=StepKind.WALK, origin=a, destination=b, depart=0, arrive=4),
        RouteStep(kind=StepKind.BUS, origin=b, destination=c, depart=10, arrive=30, line_number="71A"),
        RouteStep(kind=StepKind.WALK, origin=c, destination=d, depart=30, arrive=33),
    )
    payloads = steps_to_language(Itinerary(steps))
    assert len(payloads) == 3
    assert payloads[0]["text"].startswith("Walk")
    assert "71A" in payloads[1]["text"]
    assert payloads[2]["text"].startswith("Walk")
