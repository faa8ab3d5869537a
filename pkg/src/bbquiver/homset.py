"""Biquandle colorings of a diagram (the homset) and the counting invariant.

At every crossing the left-side pair ``(x, y)`` (under strand, over strand;
see :class:`~bbquiver.diagram.Crossing`) determines the right side:
the under strand's other semiarc is ``x ▷̲ y`` and the over strand's other
semiarc is ``y ▷̄ x``.  With both strands pointing up this is the crossing
map ``S(x, y) = (y ▷̄ x, x ▷̲ y)`` from the left pair to the right pair, and
a kink forces ``x ▷̲ x = x ▷̄ x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .algebra import Biquandle, BiquandleMap, identity_map
from .diagram import Diagram


@dataclass(frozen=True, order=True)
class Coloring:
    """Colors of semiarcs ``0..num_semiarcs-1`` followed by one per free loop."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, i):
        return self.colors[i]

    def __str__(self):
        return " ".join(map(str, self.colors))


@dataclass(frozen=True)
class Homset:
    diagram: Diagram
    biquandle: Biquandle
    colorings: tuple[Coloring, ...]

    def __len__(self):
        return len(self.colorings)

    def __iter__(self):
        return iter(self.colorings)

    def __getitem__(self, i) -> Coloring:
        return self.colorings[i]

    def index(self, c: Coloring) -> int:
        return self._positions()[c]

    def _positions(self) -> dict[Coloring, int]:
        cache = self.__dict__.get("_pos")
        if cache is None:
            cache = {c: i for i, c in enumerate(self.colorings)}
            object.__setattr__(self, "_pos", cache)
        return cache


def crossing_slots(d: Diagram) -> list[tuple[int, int, int, int]]:
    """``(under_left, over_left, under_right, over_right)`` per crossing."""
    return [(c.under_left, c.over_left, c.under_right, c.over_right) for c in d.crossings]


def check_coloring(d: Diagram, b: Biquandle, c: Coloring | Sequence[int]) -> bool:
    colors = c.colors if isinstance(c, Coloring) else tuple(c)
    if len(colors) != d.num_colors:
        return False
    if any(not 0 <= v < b.size for v in colors):
        return False
    for ul, ol, ur, orr in crossing_slots(d):
        x, y = colors[ul], colors[ol]
        if colors[ur] != b.under[x][y] or colors[orr] != b.over[y][x]:
            return False
    return True


def _flat(t) -> list[int]:
    return [v for row in t for v in row]


def _kernel_args(d: Diagram, b: Biquandle) -> tuple:
    n = b.size
    sx = [0] * (n * n)
    sy = [0] * (n * n)
    for (p, q), (x, y) in b.s_inv.items():
        sx[p * n + q] = x
        sy[p * n + q] = y
    return (
        n, d.num_semiarcs, crossing_slots(d),
        _flat(b.under), _flat(b.over), _flat(b.alpha_inv), _flat(b.beta_inv), sx, sy,
    )


def semiarc_colorings(d: Diagram, b: Biquandle) -> list[tuple[int, ...]]:
    return kernels.enumerate_colorings(*_kernel_args(d, b))


def enumerate_colorings(d: Diagram, b: Biquandle) -> Homset:
    """Every valid coloring, sorted lexicographically by color vector."""
    arcs = semiarc_colorings(d, b)
    loops = list(itertools.product(range(b.size), repeat=d.free_loops))
    cols = tuple(Coloring(a + l) for a in arcs for l in loops)
    return Homset(d, b, cols)


def counting_invariant(d: Diagram, b: Biquandle) -> int:
    return len(semiarc_colorings(d, b)) * b.size ** d.free_loops


def apply_endomorphism(f: BiquandleMap, c: Coloring, d: Diagram | None = None) -> Coloring:
    """Color-wise image of ``c`` under ``f``; checked against ``d`` when given."""
    image = Coloring(tuple(f.table[v] for v in c.colors))
    if d is not None and not check_coloring(d, f.target, image):
        raise AssertionError(f"image of {c} under {f.table} is not a coloring")
    return image


__all__ = [
    "Coloring",
    "Homset",
    "apply_endomorphism",
    "check_coloring",
    "counting_invariant",
    "crossing_slots",
    "enumerate_colorings",
    "identity_map",
]
