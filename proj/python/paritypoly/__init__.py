"""Parity virtual Alexander polynomial of virtual knot diagrams."""

from ._paritypoly import (
    DiagramCode,
    LaurentPoly,
    ParseError,
    ValidationError,
    compute,
    equal_up_to_unit,
    phi_delta,
    presentation,
)

__all__ = [
    "DiagramCode",
    "LaurentPoly",
    "ParseError",
    "ValidationError",
    "compute",
    "equal_up_to_unit",
    "phi_delta",
    "presentation",
]
