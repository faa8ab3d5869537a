"""Finite biquandles given by operation tables.

Elements are ``0..n-1``.  ``under[x][y]`` is x ▷̲ y and ``over[x][y]`` is
x ▷̄ y.  The crossing map is ``S(x, y) = (y ▷̄ x, x ▷̲ y)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

Table = tuple[tuple[int, ...], ...]


class FormatError(ValueError):
    """Malformed input data (shape, range, syntax), as opposed to an axiom failure."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(self._render())

    def _render(self) -> str:
        where = ""
        if self.source:
            where += f"{self.source}:"
        if self.line is not None:
            where += f"{self.line}:"
        return f"{where} {self.message}" if where else self.message


class AxiomError(ValueError):
    def __init__(self, report: "AxiomReport"):
        self.report = report
        super().__init__("tables do not form a biquandle:\n" + report.render())


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str

    def __str__(self):
        return f"axiom {self.axiom} fails at {self.witness}: {self.detail}"


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def render(self) -> str:
        return "\n".join(str(v) for v in self.violations) or "OK"


def _as_table(rows, n: int | None, name: str) -> Table:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{name} table is not a 2-d integer array: {exc}") from None
    size = len(table) if n is None else n
    if size < 1:
        raise FormatError(f"{name} table is empty")
    if len(table) != size:
        raise FormatError(f"{name} table has {len(table)} rows, expected {size}")
    for i, row in enumerate(table):
        if len(row) != size:
            raise FormatError(f"{name} table row {i} has {len(row)} entries, expected {size}")
        for j, v in enumerate(row):
            if not 0 <= v < size:
                raise FormatError(f"{name}[{i}][{j}] = {v} is outside 0..{size - 1}")
    return table


def verify_axioms(under: Sequence[Sequence[int]], over: Sequence[Sequence[int]]) -> AxiomReport:
    """Check the three biquandle axioms and list every violation with a witness.

    Raises FormatError if the tables are not square over ``0..n-1``.
    """
    U = _as_table(under, None, "under")
    O = _as_table(over, len(U), "over")
    n = len(U)
    report = AxiomReport()
    bad = report.violations

    for x in range(n):
        if U[x][x] != O[x][x]:
            bad.append(Violation("i", (x,), f"{x}▷̲{x} = {U[x][x]} but {x}▷̄{x} = {O[x][x]}"))

    for y in range(n):
        if len({O[x][y] for x in range(n)}) < n:
            bad.append(Violation("ii", (y,), f"alpha_{y}: x -> x▷̄{y} is not a bijection"))
        if len({U[x][y] for x in range(n)}) < n:
            bad.append(Violation("ii", (y,), f"beta_{y}: x -> x▷̲{y} is not a bijection"))
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for x, y in itertools.product(range(n), repeat=2):
        image = (O[y][x], U[x][y])
        if image in seen:
            bad.append(Violation("ii", (x, y), f"S({x},{y}) = S({seen[image][0]},{seen[image][1]}) = ({image[0]},{image[1]})"))
        else:
            seen[image] = (x, y)

    for x, y, z in itertools.product(range(n), repeat=3):
        if U[U[x][y]][U[z][y]] != U[U[x][z]][O[y][z]]:
            bad.append(Violation("iii", (x, y, z), "(x▷̲y)▷̲(z▷̲y) != (x▷̲z)▷̲(y▷̄z)"))
        if O[U[x][y]][U[z][y]] != U[O[x][z]][O[y][z]]:
            bad.append(Violation("iii", (x, y, z), "(x▷̲y)▷̄(z▷̲y) != (x▷̄z)▷̲(y▷̄z)"))
        if O[O[x][y]][O[z][y]] != O[O[x][z]][U[y][z]]:
            bad.append(Violation("iii", (x, y, z), "(x▷̄y)▷̄(z▷̄y) != (x▷̄z)▷̄(y▷̲z)"))
    return report


class Biquandle:
    """A validated finite biquandle; immutable."""

    __slots__ = ("size", "under", "over", "alpha_inv", "beta_inv", "s_inv")

    def __init__(self, under, over, *, validate: bool = True):
        U = _as_table(under, None, "under")
        O = _as_table(over, len(U), "over")
        if validate:
            report = verify_axioms(U, O)
            if not report.ok:
                raise AxiomError(report)
        n = len(U)
        set_ = object.__setattr__
        set_(self, "size", n)
        set_(self, "under", U)
        set_(self, "over", O)
        # alpha_inv[x][v] = y with y ▷̄ x = v;  beta_inv[y][v] = x with x ▷̲ y = v
        ainv = [[0] * n for _ in range(n)]
        binv = [[0] * n for _ in range(n)]
        sinv: dict[tuple[int, int], tuple[int, int]] = {}
        for x, y in itertools.product(range(n), repeat=2):
            ainv[x][O[y][x]] = y
            binv[y][U[x][y]] = x
            sinv[(O[y][x], U[x][y])] = (x, y)
        set_(self, "alpha_inv", tuple(map(tuple, ainv)))
        set_(self, "beta_inv", tuple(map(tuple, binv)))
        set_(self, "s_inv", sinv)

    def __setattr__(self, name, value):
        raise AttributeError("Biquandle is immutable")

    def __reduce__(self):
        return (Biquandle, (self.under, self.over))

    def __eq__(self, other):
        return isinstance(other, Biquandle) and self.under == other.under and self.over == other.over

    def __hash__(self):
        return hash((self.under, self.over))

    def __repr__(self):
        return f"Biquandle(size={self.size}, under={self.under}, over={self.over})"

    def elements(self) -> range:
        return range(self.size)

    def ul(self, x: int, y: int) -> int:
        """x ▷̲ y"""
        return self.under[x][y]

    def ol(self, x: int, y: int) -> int:
        """x ▷̄ y"""
        return self.over[x][y]

    def s_map(self, x: int, y: int) -> tuple[int, int]:
        return self.over[y][x], self.under[x][y]

    @classmethod
    def trivial(cls, n: int) -> "Biquandle":
        t = [[x] * n for x in range(n)]
        return cls(t, t)

    @classmethod
    def from_functions(cls, n: int, under, over) -> "Biquandle":
        return cls(
            [[under(x, y) for y in range(n)] for x in range(n)],
            [[over(x, y) for y in range(n)] for x in range(n)],
        )


def s_map_inverse(b: Biquandle, pair: tuple[int, int]) -> tuple[int, int]:
    return b.s_inv[tuple(pair)]


@dataclass(frozen=True)
class BiquandleMap:
    source: Biquandle
    target: Biquandle
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def compose(self, inner: "BiquandleMap") -> "BiquandleMap":
        """``self ∘ inner``"""
        return BiquandleMap(inner.source, self.target, tuple(self.table[v] for v in inner.table))

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.table)) == self.source.size


def homomorphism_witness(f: Sequence[int], src: Biquandle, tgt: Biquandle) -> tuple[int, int] | None:
    """First pair (x, y) at which ``f`` fails to preserve an operation, else None."""
    for x, y in itertools.product(range(src.size), repeat=2):
        fx, fy = f[x], f[y]
        if f[src.under[x][y]] != tgt.under[fx][fy] or f[src.over[x][y]] != tgt.over[fx][fy]:
            return (x, y)
    return None


def is_homomorphism(f: Sequence[int], src: Biquandle, tgt: Biquandle) -> bool:
    return homomorphism_witness(f, src, tgt) is None


def enumerate_endomorphisms(b: Biquandle) -> list[BiquandleMap]:
    """All endomorphisms in lexicographic order of their tables.

    Backtracks over ``f(0), f(1), ...``; a partial table is abandoned as soon
    as some pair of assigned elements has an assigned image that breaks
    preservation.
    """
    n = b.size
    U, O = b.under, b.over
    f = [-1] * n
    out: list[BiquandleMap] = []

    def consistent(k: int) -> bool:
        for x in range(k + 1):
            fx = f[x]
            for y in range(k + 1):
                fy = f[y]
                u = f[U[x][y]]
                if u >= 0 and u != U[fx][fy]:
                    return False
                o = f[O[x][y]]
                if o >= 0 and o != O[fx][fy]:
                    return False
        return True

    def rec(k: int):
        if k == n:
            out.append(BiquandleMap(b, b, tuple(f)))
            return
        for v in range(n):
            f[k] = v
            if consistent(k):
                rec(k + 1)
        f[k] = -1

    rec(0)
    return out


def identity_map(b: Biquandle) -> BiquandleMap:
    return BiquandleMap(b, b, tuple(range(b.size)))


# --- file formats ----------------------------------------------------------


def parse_biquandle(text: str, source: str | None = None, *, validate: bool = True) -> Biquandle:
    """Read the text format (``n``, n rows of ▷̲, blank line, n rows of ▷̄) or JSON."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno, source) from None
        try:
            n, under, over = obj["n"], obj["under"], obj["over"]
        except (KeyError, TypeError):
            raise FormatError('JSON biquandle needs keys "n", "under", "over"', None, source) from None
        if len(under) != n:
            raise FormatError(f"n = {n} but under table has {len(under)} rows", None, source)
        return Biquandle(under, over, validate=validate)

    lines = text.splitlines()
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append((lineno, [int(t) for t in line.split()]))
        except ValueError:
            raise FormatError(f"non-integer token in {line!r}", lineno, source) from None
    if not rows:
        raise FormatError("empty biquandle file", None, source)
    head_line, head = rows[0]
    if len(head) != 1 or head[0] < 1:
        raise FormatError("first line must be the size n >= 1", head_line, source)
    n = head[0]
    body = rows[1:]
    if len(body) != 2 * n:
        raise FormatError(f"expected {2 * n} table rows, found {len(body)}", body[-1][0] if body else head_line, source)
    for lineno, row in body:
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, expected {n}", lineno, source)
        for v in row:
            if not 0 <= v < n:
                raise FormatError(f"entry {v} is outside 0..{n - 1}", lineno, source)
    under = [r for _, r in body[:n]]
    over = [r for _, r in body[n:]]
    return Biquandle(under, over, validate=validate)


def format_biquandle(b: Biquandle) -> str:
    lines = [str(b.size)]
    lines += [" ".join(map(str, row)) for row in b.under]
    lines.append("")
    lines += [" ".join(map(str, row)) for row in b.over]
    return "\n".join(lines) + "\n"


def biquandle_to_json(b: Biquandle) -> dict:
    return {"n": b.size, "under": [list(r) for r in b.under], "over": [list(r) for r in b.over]}
