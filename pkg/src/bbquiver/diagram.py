"""Oriented link diagrams as signed crossings over numbered semiarcs.

Text format, one record per line (``/`` also separates records, ``#``
starts a comment)::

    X <sign> <under_in> <under_out> <over_in> <over_out>
    O

Semiarcs are the pieces of the diagram between crossings.  ``O`` is a
component with no crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DiagramError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        prefix = ""
        if source:
            prefix += f"{source}:"
        if line is not None:
            prefix += f"{line}:"
        super().__init__(f"{prefix} {message}" if prefix else message)


@dataclass(frozen=True)
class Crossing:
    """One crossing; slots hold semiarc ids.

    The *left* side of a crossing, viewed with both strands pointing up, holds
    one semiarc of each strand.  For a positive crossing these are
    ``under_in`` and ``over_out``; for a negative one ``under_out`` and
    ``over_in``.  Coloring and bracket coefficients are read from the left
    side, see :mod:`bbquiver.homset`.
    """

    sign: int
    under_in: int
    under_out: int
    over_in: int
    over_out: int

    @property
    def under_left(self) -> int:
        return self.under_in if self.sign > 0 else self.under_out

    @property
    def over_left(self) -> int:
        return self.over_out if self.sign > 0 else self.over_in

    @property
    def under_right(self) -> int:
        return self.under_out if self.sign > 0 else self.under_in

    @property
    def over_right(self) -> int:
        return self.over_in if self.sign > 0 else self.over_out

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.under_out, self.over_in, self.over_out)

    def oriented_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.under_in, self.over_out), (self.over_in, self.under_out)

    def disoriented_pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.under_in, self.over_in), (self.under_out, self.over_out)

    def smoothing_pairs(self, choice: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """Arcs joined by smoothing ``choice``.

        A is the oriented smoothing at a positive crossing and the disoriented
        one at a negative crossing; B is the other.
        """
        oriented = (choice == "A") == (self.sign > 0)
        return self.oriented_pairs() if oriented else self.disoriented_pairs()


@dataclass(frozen=True)
class Diagram:
    num_semiarcs: int
    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        _validate(self)

    @property
    def num_colors(self) -> int:
        """Length of a coloring vector: semiarcs followed by free loops."""
        return self.num_semiarcs + self.free_loops

    def __len__(self):
        return len(self.crossings)


def _validate(d: Diagram, lines: Sequence[int] | None = None, source: str | None = None):
    n = d.num_semiarcs
    if d.free_loops < 0:
        raise DiagramError("negative free loop count", None, source)
    if n != 2 * len(d.crossings):
        raise DiagramError(
            f"{len(d.crossings)} crossings need {2 * len(d.crossings)} semiarcs, got {n}", None, source
        )
    seen_in: dict[int, int] = {}
    seen_out: dict[int, int] = {}
    for i, c in enumerate(d.crossings):
        line = lines[i] if lines else None
        if c.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {c.sign}", line, source)
        for slot, s in zip(("under_in", "under_out", "over_in", "over_out"), c.slots):
            if not isinstance(s, int) or not 0 <= s < n:
                raise DiagramError(f"{slot} id {s} is outside 0..{n - 1}", line, source)
        for s in (c.under_in, c.over_in):
            if s in seen_in:
                raise DiagramError(f"semiarc {s} enters two crossing slots", line, source)
            seen_in[s] = i
        for s in (c.under_out, c.over_out):
            if s in seen_out:
                raise DiagramError(f"semiarc {s} leaves two crossing slots", line, source)
            seen_out[s] = i
    for s in range(n):
        if s not in seen_in or s not in seen_out:
            raise DiagramError(f"dangling semiarc {s}: it must both enter and leave a crossing", None, source)


def _sign(token: str, line: int, source: str | None) -> int:
    if token in ("+", "+1"):
        return 1
    if token in ("-", "-1"):
        return -1
    raise DiagramError(f"unknown sign token {token!r}", line, source)


def parse_diagram(text: str, source: str | None = None) -> Diagram:
    tokens: list[tuple[str, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        for tok in line.replace("/", " ").split():
            tokens.append((tok, lineno))

    crossings: list[Crossing] = []
    lines: list[int] = []
    loops = 0
    i = 0
    while i < len(tokens):
        tok, lineno = tokens[i]
        if tok in ("O", "o"):
            loops += 1
            i += 1
        elif tok in ("X", "x"):
            fields = tokens[i + 1 : i + 6]
            if len(fields) < 5 or any(l != lineno for _, l in fields):
                raise DiagramError("crossing record needs a sign and four semiarc ids", lineno, source)
            sign = _sign(fields[0][0], lineno, source)
            try:
                ids = [int(t) for t, _ in fields[1:]]
            except ValueError:
                raise DiagramError("semiarc ids must be integers", lineno, source) from None
            crossings.append(Crossing(sign, *ids))
            lines.append(lineno)
            i += 6
        else:
            raise DiagramError(f"unexpected token {tok!r}", lineno, source)

    num = 2 * len(crossings)
    d = object.__new__(Diagram)
    object.__setattr__(d, "num_semiarcs", num)
    object.__setattr__(d, "crossings", tuple(crossings))
    object.__setattr__(d, "free_loops", loops)
    _validate(d, lines, source)
    return d


def format_diagram(d: Diagram) -> str:
    out = []
    for c in d.crossings:
        s = "+" if c.sign > 0 else "-"
        out.append(f"X {s} {c.under_in} {c.under_out} {c.over_in} {c.over_out}")
    out += ["O"] * d.free_loops
    return "\n".join(out) + "\n"


def writhe(d: Diagram) -> int:
    return sum(c.sign for c in d.crossings)


def successor(d: Diagram) -> list[int]:
    """succ[s] is the semiarc following s along the orientation."""
    succ = [0] * d.num_semiarcs
    for c in d.crossings:
        succ[c.under_in] = c.under_out
        succ[c.over_in] = c.over_out
    return succ


def component_cycles(d: Diagram) -> list[list[int]]:
    succ = successor(d)
    seen = [False] * d.num_semiarcs
    cycles = []
    for start in range(d.num_semiarcs):
        if seen[start]:
            continue
        cyc = []
        s = start
        while not seen[s]:
            seen[s] = True
            cyc.append(s)
            s = succ[s]
        cycles.append(cyc)
    return cycles


def components(d: Diagram) -> int:
    return len(component_cycles(d)) + d.free_loops


@dataclass(frozen=True)
class SmoothingState:
    choices: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(self.choices))
        for ch in self.choices:
            if ch not in ("A", "B"):
                raise ValueError(f"smoothing choice must be 'A' or 'B', got {ch!r}")

    @classmethod
    def from_index(cls, index: int, n: int) -> "SmoothingState":
        """Bit i of ``index`` selects crossing i: 0 is A, 1 is B."""
        return cls(tuple("B" if index >> i & 1 else "A" for i in range(n)))

    def flip(self, i: int) -> "SmoothingState":
        ch = list(self.choices)
        ch[i] = "B" if ch[i] == "A" else "A"
        return SmoothingState(tuple(ch))


def all_states(d: Diagram) -> Iterable[SmoothingState]:
    n = len(d.crossings)
    for k in range(1 << n):
        yield SmoothingState.from_index(k, n)


def state_circles(d: Diagram, s: SmoothingState | Sequence[str]) -> int:
    choices = s.choices if isinstance(s, SmoothingState) else tuple(s)
    if len(choices) != len(d.crossings):
        raise ValueError(f"state has {len(choices)} choices for {len(d.crossings)} crossings")
    parent = list(range(d.num_semiarcs))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    circles = d.num_semiarcs
    for c, ch in zip(d.crossings, choices):
        for a, b in c.smoothing_pairs(ch):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                circles -= 1
    return circles + d.free_loops


# --- constructions -------------------------------------------------------


def from_braid(strands: int, word: Sequence[int]) -> Diagram:
    """Closure of a braid word; ``i`` is σ_i (positive), ``-i`` its inverse.

    Strands run upward.  At σ_i the strand entering at position i passes
    under the one entering at position i+1.
    """
    if strands < 1:
        raise ValueError("a braid needs at least one strand")
    cur = list(range(strands))
    next_id = strands
    raw: list[list[int]] = []
    for g in word:
        i = abs(g) - 1
        if g == 0 or i + 1 >= strands:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        left, right = cur[i], cur[i + 1]
        new_l, new_r = next_id, next_id + 1
        next_id += 2
        if g > 0:
            # left strand under, goes to position i+1
            raw.append([1, left, new_r, right, new_l])
        else:
            raw.append([-1, right, new_l, left, new_r])
        cur[i], cur[i + 1] = new_l, new_r
    close = {cur[j]: j for j in range(strands)}
    raw = [[r[0]] + [close.get(s, s) for s in r[1:]] for r in raw]
    used = sorted({s for r in raw for s in r[1:]})
    relabel = {s: k for k, s in enumerate(used)}
    crossings = tuple(Crossing(r[0], *(relabel[s] for s in r[1:])) for r in raw)
    loops = strands - sum(1 for j in range(strands) if j in relabel)
    return Diagram(len(used), crossings, loops)


def relabel(d: Diagram, perm: Sequence[int]) -> Diagram:
    """Rename semiarc s to perm[s]."""
    return Diagram(
        d.num_semiarcs,
        tuple(Crossing(c.sign, *(perm[s] for s in c.slots)) for c in d.crossings),
        d.free_loops,
    )


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    """Split union; the semiarcs of ``d2`` are shifted past those of ``d1``."""
    k = d1.num_semiarcs
    shifted = tuple(Crossing(c.sign, *(s + k for s in c.slots)) for c in d2.crossings)
    return Diagram(k + d2.num_semiarcs, d1.crossings + shifted, d1.free_loops + d2.free_loops)


def unknot() -> Diagram:
    return Diagram(0, (), 1)
