"""Access to the data files shipped inside the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def data_path(name: str) -> Path:
    """Filesystem path of a shipped data file (templates, lexicon, demo map)."""
    return Path(resources.files("triptalk").joinpath("data", name))
