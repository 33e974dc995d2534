"""Free-text location resolution against the map dataset.

Match order: exact canonical/alias match, then the intersection pattern
"<A> (and|at|in|&) <B>" with per-street fuzzy matching, then a fuzzy
whole-string match. Fuzziness corrects speech-recognition-style errors
("beechwood in northumberland"). Budgets: edit distance <= 2 per street
token, <= 4 for whole strings, case-insensitive.
"""

from __future__ import annotations

from .dataset import MapDataset, Place, PlaceKind, street_base

STREET_EDIT_BUDGET = 2
WHOLE_EDIT_BUDGET = 4

_SEPARATORS = ("and", "at", "in", "&")


class NoMatchError(ValueError):
    def __init__(self, query: str, candidates: list[str]):
        hint = f" (closest: {', '.join(candidates)})" if candidates else ""
        super().__init__(f"no place matching {query!r}{hint}")
        self.query = query
        self.candidates = candidates


def _normalize(text: str) -> str:
    cleaned = [c for c in text.lower() if c.isalnum() or c.isspace() or c in "&'"]
    return " ".join("".join(cleaned).split())


def edit_distance(a: str, b: str, cap: int | None = None) -> int:
    """Levenshtein distance; stops early past ``cap`` when given."""
    if a == b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    previous = list(range(len(a) + 1))
    for j, cb in enumerate(b, 1):
        current = [j]
        best = j
        for i, ca in enumerate(a, 1):
            cost = min(previous[i] + 1, current[i - 1] + 1, previous[i - 1] + (ca != cb))
            current.append(cost)
            best = min(best, cost)
        if cap is not None and best > cap:
            return cap + 1
        previous = current
    return previous[-1]


def _alias_index(dataset: MapDataset) -> dict[str, Place]:
    index = {}
    for place in dataset.places.values():
        index.setdefault(_normalize(place.canonical_name), place)
        for alias in place.aliases:
            index.setdefault(_normalize(alias), place)
    return index


def _street_pairs(dataset: MapDataset) -> dict[tuple[str, str], Place]:
    pairs = {}
    for place in dataset.places.values():
        streets = place.streets()
        if streets:
            key = tuple(sorted(street_base(s) for s in streets))
            pairs[key] = place
    return pairs


def _match_street(name: str, bases: set[str]) -> str | None:
    name = name.strip()
    if not name:
        return None
    best, best_dist = None, STREET_EDIT_BUDGET + 1
    for base in sorted(bases):
        dist = edit_distance(name, base, cap=STREET_EDIT_BUDGET)
        if dist < best_dist:
            best, best_dist = base, dist
    return best


def _intersection_match(dataset: MapDataset, text: str) -> Place | None:
    tokens = text.split()
    pairs = _street_pairs(dataset)
    if not pairs:
        return None
    bases = {b for pair in pairs for b in pair}
    for i, token in enumerate(tokens):
        if token not in _SEPARATORS or i == 0 or i == len(tokens) - 1:
            continue
        left = _match_street(" ".join(tokens[:i]), bases)
        right = _match_street(" ".join(tokens[i + 1 :]), bases)
        if left and right:
            place = pairs.get(tuple(sorted((left, right))))
            if place:
                return place
    return None


def resolve_location(dataset: MapDataset, text: str) -> Place:
    """Resolve free text to a Place, or raise NoMatchError with top candidates."""
    if not text or not text.strip():
        raise NoMatchError(text, [])
    query = _normalize(text)

    index = _alias_index(dataset)
    if query in index:
        return index[query]

    place = _intersection_match(dataset, query)
    if place is not None:
        return place

    scored = []
    for key, candidate in index.items():
        dist = edit_distance(query, key, cap=WHOLE_EDIT_BUDGET)
        scored.append((dist, key, candidate))
    scored.sort(key=lambda item: (item[0], item[1]))
    if scored and scored[0][0] <= WHOLE_EDIT_BUDGET:
        return scored[0][2]

    seen = []
    for _, _, candidate in scored[:6]:
        if candidate.canonical_name not in seen:
            seen.append(candidate.canonical_name)
        if len(seen) == 3:
            break
    raise NoMatchError(text, seen)
