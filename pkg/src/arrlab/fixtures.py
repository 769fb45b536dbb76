"""Access to the data files shipped with the package."""
from __future__ import annotations

import json
from pathlib import Path

from .arrangement import Arrangement, parse_arrangement

_DATA = Path(__file__).parent / "data"

ARRANGEMENTS = ("triangle", "qa", "qb", "qb_plus", "l1", "l2")
MATROIDS = ("m1", "m2")
FAMILIES = ("zacharias", "c2", "m1", "m2")


def arrangement_path(name: str) -> Path:
    return _DATA / "arrangements" / f"{name}.json"


def matroid_path(name: str) -> Path:
    return _DATA / "matroids" / f"{name}.json"


def family_path(name: str) -> Path:
    return _DATA / "families" / f"{name}.json"


def load_arrangement(name: str) -> Arrangement:
    return parse_arrangement(arrangement_path(name))


def load_json(path: Path) -> dict:
    return json.loads(Path(path).read_text())
