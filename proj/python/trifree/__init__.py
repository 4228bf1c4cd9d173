"""3-coloring of triangle-free plane graphs.

Graphs are rotation lists: ``rotation[v]`` holds the neighbors of ``v`` in
clockwise order.
"""

from ._trifree import (
    TrifreeError,
    brute_force_3color,
    generate,
    is_proper,
    is_triangle_free,
    parse,
    serialize,
    three_color,
    three_color_precolored,
)

__all__ = [
    "TrifreeError",
    "brute_force_3color",
    "generate",
    "is_proper",
    "is_triangle_free",
    "parse",
    "serialize",
    "three_color",
    "three_color_precolored",
]
