"""Bundled reference data."""

from __future__ import annotations

import json
from importlib import resources

from .serialize import table_from_dict
from .transform import InvariantTable


def quintic_gw_path():
    """Filesystem path of the bundled quintic table (degrees 1..4)."""
    return resources.files(__package__) / "data" / "quintic_gw.json"


def quintic_gw_table() -> InvariantTable:
    with quintic_gw_path().open("r", encoding="utf-8") as fh:
        return table_from_dict(json.load(fh))
