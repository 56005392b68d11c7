"""Shared desk-scale fixtures.

Built on demand so parse/trace validation runs on every construction.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .embedding import PlanarEmbedding
from .oracle import cells_to_embedding, gen_grid


def square() -> PlanarEmbedding:
    g = gen_grid(2, 2)
    g.name = "square"
    return g


def domino() -> PlanarEmbedding:
    """2x3-vertex grid: two unit cells stacked."""
    g = gen_grid(2, 3)
    g.name = "domino"
    return g


def grid3() -> PlanarEmbedding:
    g = gen_grid(3, 3)
    g.name = "grid3"
    return g


def grid4() -> PlanarEmbedding:
    g = gen_grid(4, 4)
    g.name = "grid4"
    return g


def fig8() -> PlanarEmbedding:
    """Two unit squares sharing exactly one vertex."""
    return cells_to_embedding([(0, 0), (1, 1)], name="fig8")


def twin_nonagons() -> PlanarEmbedding:
    """Two 9-gon faces joined through a central 4-gon face.

    The square shares one edge with each nonagon; no interior faces exist,
    so the decomposition sees two empty-interior subbases and a one-face
    co-set.
    """
    left = [(0, 0), (0, 1), (-1, 2), (-2, 2), (-3, 2), (-4, 1), (-4, 0),
            (-3, -1), (-1, -1)]
    right = [(1, 0), (1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (5, 0),
             (4, -1), (2, -1)]
    centre = [(0, 0), (1, 0), (1, 1), (0, 1)]
    points = sorted(set(left + right + centre))
    ids: Dict[Tuple[int, int], int] = {p: i for i, p in enumerate(points)}
    sides = set()
    for ring in (left, right, centre):
        for i in range(len(ring)):
            a, b = ids[ring[i]], ids[ring[(i + 1) % len(ring)]]
            sides.add((min(a, b), max(a, b)))
    coords = {i: p for p, i in ids.items()}
    return PlanarEmbedding(coords, sorted(sides), name="twin-nonagons")


ALL = {
    "square": square,
    "domino": domino,
    "grid3": grid3,
    "grid4": grid4,
    "fig8": fig8,
    "twin-nonagons": twin_nonagons,
}
