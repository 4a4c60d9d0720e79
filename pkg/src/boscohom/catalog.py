"""The bundled diagram catalog and the Reidemeister pairs drawn from it."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .diagram import LinkDiagram, read_catalog

# pairs of diagrams related by Reidemeister moves (and braid Markov moves)
REIDEMEISTER_PAIRS: tuple[tuple[str, str], ...] = (
    ("unknot", "unknot_kink_pos"),
    ("unknot", "unknot_kink_neg"),
    ("unknot", "unknot_braid2"),
    ("unknot", "unknot_braid4"),
    ("unknot", "unknot_r2"),
    ("trefoil", "trefoil_braid"),
    ("trefoil", "trefoil_r1"),
    ("trefoil", "trefoil_r2"),
    ("r3_left", "r3_right"),
)

UNKNOT_DIAGRAMS = ("unknot", "unknot_kink_pos", "unknot_kink_neg", "unknot_braid2", "unknot_braid4", "unknot_r2")

LONG_RUNNING = frozenset({"torus_3_7"})

# published absolute signatures, used only for informational degree checks
REFERENCE_SIGNATURE = {
    "trefoil": 2,
    "trefoil_mirror": 2,
    "figure_eight": 0,
    "cinquefoil": 4,
    "knot_6_2": 2,
    "knot_8_19": 6,
    "knot_8_20": 0,
    "knot_8_21": 2,
}


@lru_cache(maxsize=None)
def catalog_text() -> str:
    return resources.files("boscohom").joinpath("data/catalog.txt").read_text()


@lru_cache(maxsize=None)
def load_catalog() -> dict[str, LinkDiagram]:
    return read_catalog(catalog_text())


def get(name: str) -> LinkDiagram:
    try:
        return load_catalog()[name]
    except KeyError:
        raise KeyError(f"no catalog entry named {name!r}") from None


def names(include_long: bool = True) -> list[str]:
    return [n for n in load_catalog() if include_long or n not in LONG_RUNNING]
