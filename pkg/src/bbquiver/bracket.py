"""Biquandle brackets over Z/NZ: verification, state sums, multisets, search.

A bracket is a pair of tables ``A[x][y]``, ``B[x][y]`` of units.  At a
crossing whose left-side colors are ``(x, y)`` (under strand, over strand)
the smoothings carry

=========  ==========================  ============================
crossing   oriented smoothing          disoriented smoothing
=========  ==========================  ============================
positive   ``A[x][y]`` (choice A)      ``B[x][y]`` (choice B)
negative   ``A[x][y]^-1`` (choice B)   ``B[x][y]^-1`` (choice A)
=========  ==========================  ============================

and a state with ``k`` circles contributes ``delta^k``.  The state sum is
multiplied by ``w^(-writhe)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterator, Sequence

from . import kernels
from .algebra import Biquandle, FormatError
from .diagram import Diagram
from .homset import Coloring, crossing_slots, enumerate_colorings
from .parallel import ordered_map, worker_count
from .ring import ModRing, RingElem

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BracketViolation:
    condition: str
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self):
        msg = f"{self.condition} fails at {self.witness}"
        return f"{msg}: {self.detail}" if self.detail else msg


@dataclass(frozen=True)
class BiquandleBracket:
    biquandle: Biquandle
    ring: ModRing
    a: Table
    b: Table
    delta: RingElem
    w: RingElem

    def A(self, x: int, y: int) -> RingElem:
        return self.ring(self.a[x][y])

    def B(self, x: int, y: int) -> RingElem:
        return self.ring(self.b[x][y])

    @property
    def modulus(self) -> int:
        return self.ring.modulus


@dataclass
class BracketReport:
    violations: list[BracketViolation] = field(default_factory=list)
    delta: RingElem | None = None
    w: RingElem | None = None
    bracket: BiquandleBracket | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def render(self) -> str:
        if self.ok:
            return f"OK delta={self.delta} w={self.w}"
        return "\n".join(str(v) for v in self.violations)


class BracketError(ValueError):
    def __init__(self, report: BracketReport):
        self.report = report
        super().__init__("tables do not form a biquandle bracket:\n" + report.render())


def _table(rows, n: int, N: int, name: str) -> Table:
    try:
        t = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError):
        raise FormatError(f"{name} table is not a 2-d integer array") from None
    if len(t) != n or any(len(r) != n for r in t):
        raise FormatError(f"{name} table must be {n}x{n}")
    for x, row in enumerate(t):
        for y, v in enumerate(row):
            if not 0 <= v < N:
                raise FormatError(f"{name}[{x}][{y}] = {v} is outside 0..{N - 1}")
    return t


def _flat(t) -> list[int]:
    return [v for row in t for v in row]


def verify_bracket(
    b: Biquandle,
    ring: ModRing | int,
    a_table: Sequence[Sequence[int]],
    b_table: Sequence[Sequence[int]],
    max_equation_reports: int = 1000,
) -> BracketReport:
    """Check units, delta and w constancy, and the five skein equations.

    The reference delta is the value at the first unit pair and the reference
    w the value at the first unit diagonal entry; deviating pairs become
    violations.
    """
    ring = ring if isinstance(ring, ModRing) else ModRing(ring)
    N, n = ring.modulus, b.size
    A = _table(a_table, n, N, "A")
    B = _table(b_table, n, N, "B")
    report = BracketReport()
    bad = report.violations

    from math import gcd

    def unit(v):
        return gcd(v, N) == 1

    for x, y in itertools.product(range(n), repeat=2):
        for name, t in (("A", A), ("B", B)):
            if not unit(t[x][y]):
                bad.append(BracketViolation("unit", (x, y), f"{name}[{x}][{y}] = {t[x][y]} is not a unit mod {N}"))

    delta = w = None
    for x, y in itertools.product(range(n), repeat=2):
        a, bb = A[x][y], B[x][y]
        if not (unit(a) and unit(bb)):
            continue
        d = (-a * pow(bb, -1, N) - pow(a, -1, N) * bb) % N
        if delta is None:
            delta = d
        elif d != delta:
            bad.append(BracketViolation("delta", (x, y), f"-A/B - B/A = {d}, expected {delta}"))
    for x in range(n):
        a, bb = A[x][x], B[x][x]
        if not (unit(a) and unit(bb)):
            continue
        v = (-a * a * pow(bb, -1, N)) % N
        if w is None:
            w = v
        elif v != w:
            bad.append(BracketViolation("w", (x,), f"-A^2/B = {v}, expected {w}"))

    if delta is not None:
        for eq, x, y, z in kernels.bracket_violations(
            n, _flat(b.under), _flat(b.over), _flat(A), _flat(B), delta, N, max_equation_reports
        ):
            bad.append(BracketViolation(f"equation {eq}", (x, y, z)))

    report.delta = ring(delta) if delta is not None else None
    report.w = ring(w) if w is not None else None
    if report.ok:
        report.bracket = BiquandleBracket(b, ring, A, B, report.delta, report.w)
    return report


def make_bracket(b: Biquandle, ring: ModRing | int, a_table, b_table) -> BiquandleBracket:
    report = verify_bracket(b, ring, a_table, b_table)
    if not report.ok:
        raise BracketError(report)
    return report.bracket


def crossing_terms(d: Diagram, c: Coloring, bb: BiquandleBracket):
    """Kernel inputs: join pairs and coefficients for choices A and B."""
    N = bb.modulus
    pairs_a, pairs_b, coef_a, coef_b = [], [], [], []
    for cr, (ul, ol, _, _) in zip(d.crossings, crossing_slots(d)):
        x, y = c.colors[ul], c.colors[ol]
        ori = cr.oriented_pairs()
        dis = cr.disoriented_pairs()
        ori = ori[0] + ori[1]
        dis = dis[0] + dis[1]
        if cr.sign > 0:
            pairs_a.append(ori)
            pairs_b.append(dis)
            coef_a.append(bb.a[x][y])
            coef_b.append(bb.b[x][y])
        else:
            pairs_a.append(dis)
            pairs_b.append(ori)
            coef_a.append(pow(bb.b[x][y], -1, N))
            coef_b.append(pow(bb.a[x][y], -1, N))
    return pairs_a, pairs_b, coef_a, coef_b


def state_sum(d: Diagram, c: Coloring, bb: BiquandleBracket) -> RingElem:
    N = bb.modulus
    pa, pb, ca, cb = crossing_terms(d, c, bb)
    total = kernels.state_sum(d.num_semiarcs, d.free_loops, pa, pb, ca, cb, bb.delta.value, N)
    wr = sum(cr.sign for cr in d.crossings)
    return bb.ring(total) * bb.w ** (-wr)


def _state_sum_task(args) -> int:
    d, c, bb = args
    return state_sum(d, c, bb).value


def state_sums(d: Diagram, colorings: Sequence[Coloring], bb: BiquandleBracket) -> list[RingElem]:
    """State sums for each coloring, in the given order."""
    values = ordered_map(_state_sum_task, [(d, c, bb) for c in colorings])
    return [bb.ring(v) for v in values]


def bracket_multiset(d: Diagram, b: Biquandle, bb: BiquandleBracket) -> list[RingElem]:
    if bb.biquandle != b:
        raise ValueError("bracket is defined over a different biquandle")
    hs = enumerate_colorings(d, b)
    return sorted(state_sums(d, hs.colorings, bb))


def format_multiset(values: Sequence[RingElem | int]) -> str:
    return "{" + ", ".join(str(int(v)) for v in sorted(int(v) for v in values)) + "}"


# --- search ----------------------------------------------------------------


def _chunk_task(args):
    n, U, O, N, units, first, limit = args
    return kernels.search_chunk(n, U, O, N, units, first, limit)


def iter_brackets(
    b: Biquandle,
    modulus: int,
    limit: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> Iterator[BiquandleBracket]:
    """Exhaustive bracket search, yielding results in lexicographic order.

    Candidates are split on the value of ``A[0][0]``; with ``BBQ_WORKERS > 1``
    the chunks run in a process pool and are still yielded in order.
    """
    ring = ModRing(modulus)
    units = ring.units()
    n = b.size
    cap = limit if limit is not None else 1 << 62
    U, O = _flat(b.under), _flat(b.over)
    tasks = [(n, U, O, modulus, units, u, cap) for u in units]
    found = 0

    def finish(rows):
        for A, B, _, _ in rows:
            tab_a = tuple(tuple(A[i * n:(i + 1) * n]) for i in range(n))
            tab_b = tuple(tuple(B[i * n:(i + 1) * n]) for i in range(n))
            yield make_bracket(b, ring, tab_a, tab_b)

    workers = worker_count()
    if workers > 1 and len(tasks) > 1:
        chunks = ordered_map(_chunk_task, tasks, workers)
        for i, rows in enumerate(chunks):
            for br in finish(rows):
                if found >= cap:
                    return
                found += 1
                yield br
            if progress:
                progress(i + 1, len(tasks))
        return
    for i, task in enumerate(tasks):
        rows = _chunk_task(task[:-1] + (cap - found,))
        for br in finish(rows):
            found += 1
            yield br
        if progress:
            progress(i + 1, len(tasks))
        if found >= cap:
            return


def search_brackets(b: Biquandle, modulus: int, limit: int | None = None) -> list[BiquandleBracket]:
    return list(iter_brackets(b, modulus, limit))


# --- file format -----------------------------------------------------------


def parse_bracket(text: str, source: str | None = None) -> tuple[ModRing, Table, Table]:
    """Read ``N``, the A rows, a blank line, then the B rows (element order)."""
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [int(t) for t in line.split()]))
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno, source) from None
    if not rows:
        raise FormatError("empty bracket file", None, source)
    head_line, head = rows[0]
    if len(head) != 1 or head[0] < 2:
        raise FormatError("first line must be the modulus N >= 2", head_line, source)
    N = head[0]
    body = rows[1:]
    if not body or len(body) % 2:
        raise FormatError("expected equal numbers of A and B rows", body[-1][0] if body else head_line, source)
    n = len(body) // 2
    for lineno, row in body:
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, expected {n}", lineno, source)
        for v in row:
            if not 0 <= v < N:
                raise FormatError(f"entry {v} is outside 0..{N - 1}", lineno, source)
    A = tuple(tuple(r) for _, r in body[:n])
    B = tuple(tuple(r) for _, r in body[n:])
    return ModRing(N), A, B


def format_bracket(bb: BiquandleBracket) -> str:
    lines = [str(bb.modulus)]
    lines += [" ".join(map(str, r)) for r in bb.a]
    lines.append("")
    lines += [" ".join(map(str, r)) for r in bb.b]
    return "\n".join(lines) + "\n"


def reindex(table: Sequence[Sequence[int]], labels: Sequence[int]) -> Table:
    """Move a table written with rows/columns labelled ``labels`` into element order.

    ``table[i][j]`` is the entry for ``(labels[i], labels[j])``; e.g. a table
    printed with rows and columns in the order 1, 0 uses ``labels=(1, 0)``.
    """
    n = len(labels)
    out = [[0] * n for _ in range(n)]
    for i, x in enumerate(labels):
        for j, y in enumerate(labels):
            out[x][y] = table[i][j]
    return tuple(tuple(r) for r in out)
