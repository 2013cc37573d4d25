"""Exact left-orderings on torus-knot groups and the Klein-bottle group.

Thin re-export of the C++ core; all words are strings in the word
grammar (single-space-separated letters with optional ^exponent, "1" for
the identity, d = Delta).
"""

from ._core import (
    choose_ordering,
    compat_report,
    cofinal_floor,
    cone_map,
    conjugate_ordering,
    equal,
    fiber,
    klein_canonical,
    klein_sign,
    less,
    meridian,
    normalize,
    phi,
    presentation,
    sign,
    twist_sign,
)

__all__ = [
    "choose_ordering",
    "compat_report",
    "cofinal_floor",
    "cone_map",
    "conjugate_ordering",
    "equal",
    "fiber",
    "klein_canonical",
    "klein_sign",
    "less",
    "meridian",
    "normalize",
    "phi",
    "presentation",
    "sign",
    "twist_sign",
]
