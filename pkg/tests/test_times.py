import pytest

from triptalk.nlu import TimeSpec, TimeParseError, format_clock, parse_time


def test_clock_conversion_examples():
    assert parse_time("12:15 pm") == TimeSpec.clock(735)
    assert parse_time("5 pm") == TimeSpec.clock(1020)
    assert parse_time("7 am") == TimeSpec.clock(420)
    assert parse_time("12 am") == TimeSpec.clock(0)
    assert parse_time("12:30 pm") == TimeSpec.clock(750)
    assert parse_time("17:45") == TimeSpec.clock(1065)
    assert parse_time("noon") == TimeSpec.clock(720)


def test_immediacy_phrases_resolve_to_now():
    assert parse_time("right now").is_now
    assert parse_time("immediately").is_now
    assert parse_time("Right Now").is_now


def test_unrecognized_surface_raises_with_surface():
    with pytest.raises(TimeParseError) as err:
        parse_time("midnightish")
    assert err.value.surface == "midnightish"
    with pytest.raises(TimeParseError):
        parse_time("25:00")
    with pytest.raises(TimeParseError):
        parse_time("0 pm")


def test_now_resolution_uses_session_clock():
    assert TimeSpec.now().resolve(600) == 600
    assert TimeSpec.clock(735).resolve(600) == 735


def test_format_clock():
    assert format_clock(619) == "10:19 am"
    assert format_clock(735) == "12:15 pm"
    assert format_clock(0) == "12:00 am"
    assert format_clock(720) == "12:00 pm"
    assert format_clock(1439) == "11:59 pm"


def test_roundtrip_parse_format():
    for minutes in (0, 1, 59, 60, 619, 720, 735, 1439):
        assert parse_time(format_clock(minutes)) == TimeSpec.clock(minutes)
