"""Exact orbit-method character tables for odd-order groups of nilpotency class 2."""

from _orbitkit import (
    Group,
    InvalidSpec,
    NotTwoDivisible,
    catalog,
    chartable,
    orbits,
    verify,
)

__all__ = [
    "Group",
    "InvalidSpec",
    "NotTwoDivisible",
    "catalog",
    "chartable",
    "orbits",
    "verify",
]
