"""Runtime caps shared across the package."""

from __future__ import annotations

import os


def max_vertices() -> int:
    """Dimension cap for diagrams and matrices, overridable through the
    ALTKNOT_MAX_V environment variable."""
    return int(os.environ.get("ALTKNOT_MAX_V", "64"))
