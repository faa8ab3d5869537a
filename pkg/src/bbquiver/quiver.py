"""Coloring quivers and bracket quivers.

Vertices are the colorings of a diagram.  Each endomorphism ``f`` in the
chosen set contributes one arrow ``c -> f∘c`` from every vertex, so every
vertex has out-degree equal to the size of the set.  A bracket quiver
additionally weights each vertex by its bracket state sum.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import Biquandle, BiquandleMap, enumerate_endomorphisms, homomorphism_witness, identity_map
from .bracket import BiquandleBracket, state_sums
from .diagram import Diagram
from .homset import Homset, apply_endomorphism, enumerate_colorings
from .ring import ExpPolynomial, RingElem

EndoSet = Union[str, Sequence[Union[Sequence[int], BiquandleMap]]]


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class ColoringQuiver:
    homset: Homset
    endos: tuple[BiquandleMap, ...]
    arrows: tuple[tuple[int, int, int], ...]  # (src, dst, endo index)

    @property
    def num_vertices(self) -> int:
        return len(self.homset)

    def in_degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for _, dst, _ in self.arrows:
            deg[dst] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for src, _, _ in self.arrows:
            deg[src] += 1
        return deg


@dataclass(frozen=True)
class BracketQuiver:
    quiver: ColoringQuiver
    bracket: BiquandleBracket
    weights: tuple[RingElem, ...]

    @property
    def homset(self) -> Homset:
        return self.quiver.homset

    @property
    def arrows(self):
        return self.quiver.arrows

    @property
    def endos(self):
        return self.quiver.endos


def resolve_endomorphisms(b: Biquandle, endos: EndoSet) -> tuple[BiquandleMap, ...]:
    """``"full"``, ``"identity"`` or an explicit duplicate-free list of tables."""
    if isinstance(endos, str):
        if endos == "full":
            return tuple(enumerate_endomorphisms(b))
        if endos == "identity":
            return (identity_map(b),)
        raise QuiverError(f"unknown endomorphism set {endos!r}; use 'full', 'identity' or a list")
    out: list[BiquandleMap] = []
    seen: set[tuple[int, ...]] = set()
    for i, f in enumerate(endos):
        table = tuple(f.table if isinstance(f, BiquandleMap) else (int(v) for v in f))
        if len(table) != b.size or any(not 0 <= v < b.size for v in table):
            raise QuiverError(f"endomorphism {i} must list {b.size} images in 0..{b.size - 1}")
        wit = homomorphism_witness(table, b, b)
        if wit is not None:
            raise QuiverError(f"endomorphism {i} {list(table)} is not a homomorphism at pair {wit}")
        if table in seen:
            raise QuiverError(f"endomorphism {i} {list(table)} is listed twice")
        seen.add(table)
        out.append(BiquandleMap(b, b, table))
    if not out:
        raise QuiverError("the endomorphism set is empty")
    return tuple(out)


def build_coloring_quiver(d: Diagram, b: Biquandle, endos: EndoSet = "full") -> ColoringQuiver:
    fs = resolve_endomorphisms(b, endos)
    hs = enumerate_colorings(d, b)
    arrows = []
    for i, c in enumerate(hs.colorings):
        for k, f in enumerate(fs):
            arrows.append((i, hs.index(apply_endomorphism(f, c)), k))
    return ColoringQuiver(hs, fs, tuple(arrows))


def in_degree_polynomial(q: ColoringQuiver | BracketQuiver) -> ExpPolynomial:
    """``sum over vertices of u^(in-degree)``."""
    cq = q.quiver if isinstance(q, BracketQuiver) else q
    return ExpPolynomial.from_monomials(("u",), ((k,) for k in cq.in_degrees()), (None,))


def build_bracket_quiver(
    d: Diagram, b: Biquandle, bb: BiquandleBracket, endos: EndoSet = "full"
) -> BracketQuiver:
    if bb.biquandle != b:
        raise QuiverError("bracket is defined over a different biquandle")
    q = build_coloring_quiver(d, b, endos)
    weights = tuple(state_sums(d, q.homset.colorings, bb))
    return BracketQuiver(q, bb, weights)


def arrow_polynomial(bq: BracketQuiver) -> ExpPolynomial:
    """``sum over arrows of s^β(src) t^β(dst)``, exponents read mod N."""
    N = bq.bracket.modulus
    w = bq.weights
    mons = ((w[s].value, w[t].value) for s, t, _ in bq.arrows)
    return ExpPolynomial.from_monomials(("s", "t"), mons, (N, N))


def vertex_polynomial(bq: BracketQuiver) -> ExpPolynomial:
    """``sum over vertices of u^β(v) w^(in-degree)``; the u exponent is mod N."""
    N = bq.bracket.modulus
    deg = bq.quiver.in_degrees()
    mons = ((bq.weights[i].value, deg[i]) for i in range(len(deg)))
    return ExpPolynomial.from_monomials(("u", "w"), mons, (N, None))


def edge_multiset(q: ColoringQuiver | BracketQuiver) -> Counter:
    cq = q.quiver if isinstance(q, BracketQuiver) else q
    return Counter((s, t) for s, t, _ in cq.arrows)


def _parts(q):
    if isinstance(q, BracketQuiver):
        return q.quiver, [w.value for w in q.weights]
    return q, None


def export_dot(q: ColoringQuiver | BracketQuiver) -> str:
    cq, weights = _parts(q)
    lines = ["digraph quiver {"]
    for i, c in enumerate(cq.homset.colorings):
        label = " ".join(map(str, c.colors))
        if weights is not None:
            label += f"|β={weights[i]}"
        lines.append(f'  v{i} [label="{label}"];')
    for s, t, k in cq.arrows:
        lines.append(f'  v{s} -> v{t} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_json(q: ColoringQuiver | BracketQuiver) -> dict:
    cq, weights = _parts(q)
    vertices = []
    for i, c in enumerate(cq.homset.colorings):
        v = {"id": i, "colors": list(c.colors)}
        if weights is not None:
            v["beta"] = weights[i]
        vertices.append(v)
    return {
        "vertices": vertices,
        "arrows": [{"src": s, "dst": t, "endo": k} for s, t, k in cq.arrows],
        "endos": [list(f.table) for f in cq.endos],
    }


def export_json(q: ColoringQuiver | BracketQuiver) -> str:
    return json.dumps(quiver_to_json(q), indent=2) + "\n"
