"""The 50-state table and resolution of free-text location strings.

State order is fixed: alphabetical by USPS code. Every per-state vector in
the package is indexed by ``StateId.index`` against this order.
"""

from __future__ import annotations

from dataclasses import dataclass

# (usps, name), alphabetical by usps. D.C. and territories are deliberately
# absent: locations outside the 50 states do not resolve.
_STATE_ROWS = (
    ("AK", "Alaska"),
    ("AL", "Alabama"),
    ("AR", "Arkansas"),
    ("AZ", "Arizona"),
    ("CA", "California"),
    ("CO", "Colorado"),
    ("CT", "Connecticut"),
    ("DE", "Delaware"),
    ("FL", "Florida"),
    ("GA", "Georgia"),
    ("HI", "Hawaii"),
    ("IA", "Iowa"),
    ("ID", "Idaho"),
    ("IL", "Illinois"),
    ("IN", "Indiana"),
    ("KS", "Kansas"),
    ("KY", "Kentucky"),
    ("LA", "Louisiana"),
    ("MA", "Massachusetts"),
    ("MD", "Maryland"),
    ("ME", "Maine"),
    ("MI", "Michigan"),
    ("MN", "Minnesota"),
    ("MO", "Missouri"),
    ("MS", "Mississippi"),
    ("MT", "Montana"),
    ("NC", "North Carolina"),
    ("ND", "North Dakota"),
    ("NE", "Nebraska"),
    ("NH", "New Hampshire"),
    ("NJ", "New Jersey"),
    ("NM", "New Mexico"),
    ("NV", "Nevada"),
    ("NY", "New York"),
    ("OH", "Ohio"),
    ("OK", "Oklahoma"),
    ("OR", "Oregon"),
    ("PA", "Pennsylvania"),
    ("RI", "Rhode Island"),
    ("SC", "South Carolina"),
    ("SD", "South Dakota"),
    ("TN", "Tennessee"),
    ("TX", "Texas"),
    ("UT", "Utah"),
    ("VA", "Virginia"),
    ("VT", "Vermont"),
    ("WA", "Washington"),
    ("WI", "Wisconsin"),
    ("WV", "West Virginia"),
    ("WY", "Wyoming"),
)


@dataclass(frozen=True)
class StateId:
    """One U.S. state; index/usps/name are a bijection."""

    index: int
    usps: str
    name: str


STATES: tuple[StateId, ...] = tuple(
    StateId(i, usps, name) for i, (usps, name) in enumerate(_STATE_ROWS)
)
N_STATES = len(STATES)

_BY_USPS = {s.usps: s for s in STATES}
# Lowercased usps codes and full names share one lookup table.
_BY_KEY = {s.usps.lower(): s for s in STATES}
_BY_KEY.update({s.name.lower(): s for s in STATES})


def by_usps(code: str) -> StateId | None:
    return _BY_USPS.get(code.upper())


def by_index(index: int) -> StateId:
    return STATES[index]


def _fold(text: str) -> str:
    # Case-fold and collapse internal whitespace so "new  york" still matches.
    return " ".join(text.lower().split())


def normalize_state(location_text: str) -> StateId | None:
    """Resolve a free-text location to a state, or None.

    Accepts a full state name or USPS abbreviation, case-insensitively,
    either as the whole string or as the trailing component of a
    "City, State" string. Anything else is unresolved; nothing is guessed.
    """
    whole = _fold(location_text)
    if whole in _BY_KEY:
        return _BY_KEY[whole]
    if "," in location_text:
        tail = _fold(location_text.rsplit(",", 1)[1])
        if tail in _BY_KEY:
            return _BY_KEY[tail]
    return None


def extract_city(location_text: str, state: StateId) -> str | None:
    """Pull the "City" out of a "City, State" location string.

    Only the text before the last comma counts as a city; bare state
    strings yield None. The result is whitespace-trimmed and title-cased.
    """
    if "," not in location_text:
        return None
    head = location_text.rsplit(",", 1)[0]
    words = head.split()
    if not words:
        return None
    return " ".join(w.capitalize() for w in words)


def states_csv() -> str:
    """The embedded state table as ``usps,name`` CSV, for audit export."""
    lines = ["usps,name"]
    lines.extend(f"{s.usps},{s.name}" for s in STATES)
    return "\n".join(lines) + "\n"
