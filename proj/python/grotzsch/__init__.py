"""3-coloring engine for triangle-free plane graphs."""

from ._core import (
    Graph,
    audit_report,
    brute_force,
    count_extensions,
    extend_boundary,
    generate,
    is_proper,
    parse,
    serialize,
    short_cycles,
    three_color,
)

__all__ = [
    "Graph",
    "audit_report",
    "brute_force",
    "count_extensions",
    "extend_boundary",
    "generate",
    "is_proper",
    "parse",
    "serialize",
    "short_cycles",
    "three_color",
]
