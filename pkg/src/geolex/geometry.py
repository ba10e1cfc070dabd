"""Offline 50-state geometry: a square-tile grid layout.

The engine must render maps without fetching geometry, so it ships its own
simplified representation: one square tile per state, arranged to echo the
states' relative positions. The same grid backs the CLI's SVG export and
the TopoJSON asset served to the web UI (src/geolex/assets/us-states.topo.json,
generated by ``tile_topojson`` and kept in sync by a test).
"""

from __future__ import annotations

import json
from pathlib import Path

from .states import STATES

# usps -> (column, row) in a 12 x 8 grid.
TILE_GRID: dict[str, tuple[int, int]] = {
    "AK": (0, 0), "ME": (11, 0),
    "VT": (10, 1), "NH": (11, 1),
    "WA": (1, 2), "ID": (2, 2), "MT": (3, 2), "ND": (4, 2), "MN": (5, 2),
    "IL": (6, 2), "WI": (7, 2), "MI": (8, 2), "NY": (9, 2), "MA": (10, 2),
    "RI": (11, 2),
    "OR": (1, 3), "NV": (2, 3), "WY": (3, 3), "SD": (4, 3), "IA": (5, 3),
    "IN": (6, 3), "OH": (7, 3), "PA": (8, 3), "NJ": (9, 3), "CT": (10, 3),
    "CA": (1, 4), "UT": (2, 4), "CO": (3, 4), "NE": (4, 4), "MO": (5, 4),
    "KY": (6, 4), "WV": (7, 4), "VA": (8, 4), "MD": (9, 4), "DE": (10, 4),
    "AZ": (2, 5), "NM": (3, 5), "KS": (4, 5), "AR": (5, 5), "TN": (6, 5),
    "NC": (7, 5), "SC": (8, 5),
    "OK": (4, 6), "LA": (5, 6), "MS": (6, 6), "AL": (7, 6), "GA": (8, 6),
    "HI": (0, 7), "TX": (4, 7), "FL": (9, 7),
}

GRID_COLS = 12
GRID_ROWS = 8
CELL = 60
GAP = 4


def tile_origin(usps: str, cell: int = CELL, gap: int = GAP) -> tuple[int, int]:
    """Top-left pixel of a state's tile."""
    col, row = TILE_GRID[usps]
    return col * (cell + gap), row * (cell + gap)


def grid_size(cell: int = CELL, gap: int = GAP) -> tuple[int, int]:
    return (
        GRID_COLS * (cell + gap) - gap,
        GRID_ROWS * (cell + gap) - gap,
    )


def tile_topojson(cell: int = CELL, gap: int = GAP) -> dict:
    """The tile grid as a TopoJSON topology (objects.states, one ring each)."""
    arcs = []
    geometries = []
    for s in STATES:
        x, y = tile_origin(s.usps, cell, gap)
        arcs.append([[x, y], [x + cell, y], [x + cell, y + cell], [x, y + cell], [x, y]])
        geometries.append({
            "type": "Polygon",
            "arcs": [[len(arcs) - 1]],
            "id": s.usps,
            "properties": {"usps": s.usps, "name": s.name, "index": s.index},
        })
    width, height = grid_size(cell, gap)
    return {
        "type": "Topology",
        "bbox": [0, 0, width, height],
        "objects": {"states": {"type": "GeometryCollection", "geometries": geometries}},
        "arcs": arcs,
    }


ASSET_PATH = Path(__file__).parent / "assets" / "us-states.topo.json"


def topojson_bytes() -> bytes:
    """Canonical serialized form of the asset (stable key order, compact)."""
    return (json.dumps(tile_topojson(), separators=(",", ":")) + "\n").encode("utf-8")


def write_asset(path: Path = ASSET_PATH) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(topojson_bytes())
