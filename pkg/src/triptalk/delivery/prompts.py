"""The prompt bank: hand-written utterance variants for every dialog prompt.

Key-information prompts carry attention-grabbing prefixes; request prompts
carry clarification and verbose help variants used after no-parse turns.
"""

from __future__ import annotations

from dataclasses import dataclass, field

# Spoken before the doc's step-completion question in senior-tailored mode.
STEP_CONFIRM_QUESTION = "Let me know when you are ready to continue."

STEP_PREFIXES = ("The next thing you want to do is",)


@dataclass(frozen=True)
class PromptSpec:
    key: str
    templates: tuple[str, ...]
    prefixes: tuple[str, ...] = ()  # non-empty marks a key-information prompt
    variants: dict = field(default_factory=dict)  # variant name -> templates

    @property
    def key_information(self) -> bool:
        return bool(self.prefixes)

    def templates_for(self, variant: str) -> tuple[str, ...]:
        if variant == "base":
            return self.templates
        return self.variants.get(variant, self.templates)


@dataclass(frozen=True)
class PromptBank:
    prompts: dict[str, PromptSpec]

    def get(self, key: str) -> PromptSpec:
        if key not in self.prompts:
            raise KeyError(f"no prompt bank entry for {key!r}")
        return self.prompts[key]

    def __contains__(self, key: str) -> bool:
        return key in self.prompts

    def keys(self):
        return self.prompts.keys()


def _spec(key, templates, prefixes=(), **variants):
    return PromptSpec(key=key, templates=tuple(templates), prefixes=tuple(prefixes), variants={k: tuple(v) for k, v in variants.items()})


def default_prompt_bank() -> PromptBank:
    specs = [
        _spec(
            "welcome",
            [
                "Hello, this is the {color} system. I can find bus or driving directions "
                "anywhere in the city. I will pause after each step so you have time to "
                "write it down, and you can ask me to repeat a step at any time.",
                "Hello, you have reached the {color} system. I can plan a bus or driving "
                "trip for you, one step at a time. Feel free to ask me to repeat anything.",
            ],
        ),
        _spec(
            "request_departure",
            ["Where are you leaving from?", "Where will your trip start?"],
            clarify=["Please tell me where you are leaving from. You can say a place or an intersection."],
            help=[
                "I still did not catch that. Tell me your starting point, for example: "
                "I'm leaving from the airport, or, from Forbes and Murray. Where are you leaving from?"
            ],
        ),
        _spec(
            "request_arrival",
            ["Where do you want to go?", "Where are you going?"],
            clarify=["Please tell me where you want to go. You can say a place or an intersection."],
            help=[
                "I still did not catch that. Tell me your destination, for example: "
                "I'm going to CMU, or, to Forbes and Murray. Where do you want to go?"
            ],
        ),
        _spec(
            "request_time",
            ["When do you want to leave?", "What time would you like to leave?"],
            clarify=["Please say a departure time, like 10 am or 5:30 pm, or say right now."],
            help=[
                "I still did not catch that. Please tell me when to plan your trip for. "
                "You can say a clock time like 9:15 am, or say right now."
            ],
        ),
        _spec(
            "request_mode",
            ["Would you like bus directions or driving directions?"],
            clarify=["Please say bus for bus directions, or driving for driving directions."],
            help=["I still did not catch that. Say the word bus, or the word driving."],
        ),
        _spec(
            "confirm_departure",
            ["Okay, leaving from {place}.", "Got it, you are leaving from {place}."],
            prefixes=("Please check this.",),
        ),
        _spec(
            "confirm_arrival",
            ["Okay, going to {place}.", "Got it, you are going to {place}."],
            prefixes=("Please check this.",),
        ),
        _spec(
            "trip_summary",
            [
                "I found your trip. You will take {bus_count_phrase}, and the trip will "
                "take about {trip_minutes} minutes, arriving at {arrive_time}.",
            ],
            prefixes=("Here is your trip.", "Listen carefully."),
        ),
        _spec("step", ["{step_text}"], prefixes=STEP_PREFIXES),
        _spec(
            "step_wait",
            ["When you are ready, say continue. You can also say repeat to hear that step again."],
        ),
        _spec(
            "route_changed",
            [
                "Okay, here is another route. You will take {bus_count_phrase}, and the "
                "trip will take about {trip_minutes} minutes, arriving at {arrive_time}.",
            ],
            prefixes=("Here is a different route.",),
        ),
        _spec("only_one_route", ["There is only one route available for this trip, so I will keep it."]),
        _spec(
            "no_route",
            [
                "I'm sorry, I could not find a route at that time. "
                "Let's try a different departure time. When would you like to leave?"
            ],
        ),
        _spec("resolve_failed", ["I'm sorry, I could not find a place called {query}."]),
        _spec(
            "same_place",
            ["Your departure and arrival are the same place. Let's pick a different destination."],
        ),
        _spec("pause_ack", ["Take your time. Say continue when you are ready.", "No problem, take your time."]),
        _spec("restart_ack", ["Okay, let's start over."]),
        _spec("goodbye", ["You are all set. Have a good trip. Goodbye.", "You are all set. Goodbye, and have a good trip."]),
    ]
    return PromptBank({s.key: s for s in specs})
