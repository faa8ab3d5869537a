"""Arithmetic in Z/NZ and polynomials whose exponents are residues or integers."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence


class NonUnit(ArithmeticError):
    """Raised when inverting an element that is not a unit."""

    def __init__(self, value: int, modulus: int):
        super().__init__(f"{value} is not a unit mod {modulus}")
        self.value = value
        self.modulus = modulus


@dataclass(frozen=True)
class ModRing:
    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    def __call__(self, value: int) -> "RingElem":
        return RingElem(value % self.modulus, self)

    def units(self) -> list[int]:
        """Unit residues in increasing order."""
        return [u for u in range(1, self.modulus) if gcd(u, self.modulus) == 1]

    def __str__(self):
        return f"Z_{self.modulus}"


@dataclass(frozen=True)
class RingElem:
    value: int
    ring: ModRing = field(compare=True)

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.ring.modulus}")

    def _coerce(self, other) -> int:
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise ValueError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.ring(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.ring(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.ring(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self.ring(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return inv(self) ** (-k)
        return self.ring(pow(self.value, k, self.ring.modulus))

    def __lt__(self, other: "RingElem"):
        return self.value < other.value

    def __int__(self):
        return self.value

    __index__ = __int__

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} mod {self.ring.modulus}"


def is_unit(e: RingElem) -> bool:
    return gcd(e.value, e.ring.modulus) == 1


def inv(e: RingElem) -> RingElem:
    if not is_unit(e):
        raise NonUnit(e.value, e.ring.modulus)
    return e.ring(pow(e.value, -1, e.ring.modulus))


@dataclass(frozen=True)
class ExpPolynomial:
    """A finite sum of monomials with positive integer coefficients.

    ``moduli`` declares per variable whether exponents are residues mod N
    (an int) or plain nonnegative integers (``None``).  Exponent tuples are
    normalized on construction, so equal polynomials compare and render
    equal.
    """

    variables: tuple[str, ...]
    terms: Mapping[tuple[int, ...], int]
    moduli: tuple[int | None, ...] = ()

    def __post_init__(self):
        variables = tuple(self.variables)
        moduli = tuple(self.moduli) or (None,) * len(variables)
        if len(moduli) != len(variables):
            raise ValueError("one modulus declaration per variable is required")
        merged: dict[tuple[int, ...], int] = {}
        for exps, coeff in dict(self.terms).items():
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent tuple {exps} does not match variables {variables}")
            norm = []
            for e, m in zip(exps, moduli):
                e = int(e)
                if m is not None:
                    e %= m
                elif e < 0:
                    raise ValueError(f"negative integer exponent {e}")
                norm.append(e)
            key = tuple(norm)
            merged[key] = merged.get(key, 0) + int(coeff)
        terms = {k: v for k, v in sorted(merged.items()) if v != 0}
        if any(v < 0 for v in terms.values()):
            raise ValueError("coefficients must be positive")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "moduli", moduli)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_monomials(
        cls,
        variables: Sequence[str],
        monomials: Iterable[Sequence[int]],
        moduli: Sequence[int | None] = (),
    ) -> "ExpPolynomial":
        """Sum of coefficient-1 monomials, one per exponent tuple."""
        terms: dict[tuple[int, ...], int] = {}
        for exps in monomials:
            key = tuple(int(e) for e in exps)
            terms[key] = terms.get(key, 0) + 1
        return cls(tuple(variables), terms, tuple(moduli))

    def __eq__(self, other):
        if not isinstance(other, ExpPolynomial):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.variables, tuple(self.terms.items())))

    def __add__(self, other: "ExpPolynomial") -> "ExpPolynomial":
        return poly_add(self, other)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def __str__(self):
        return canonical_string(self)


def poly_add(p: ExpPolynomial, q: ExpPolynomial) -> ExpPolynomial:
    if p.variables != q.variables:
        raise ValueError(f"variable mismatch: {p.variables} vs {q.variables}")
    if p.moduli != q.moduli:
        raise ValueError(f"exponent domain mismatch: {p.moduli} vs {q.moduli}")
    terms = dict(p.terms)
    for k, v in q.terms.items():
        terms[k] = terms.get(k, 0) + v
    return ExpPolynomial(p.variables, terms, p.moduli)


def _monomial(variables: Sequence[str], exps: Sequence[int], coeff: int) -> str:
    body = "".join(
        v if e == 1 else f"{v}^{e}" for v, e in zip(variables, exps) if e != 0
    )
    if not body:
        return str(coeff)
    return body if coeff == 1 else f"{coeff}{body}"


def canonical_string(p: ExpPolynomial) -> str:
    """Render terms in lexicographic exponent order, e.g. ``4s^3t^3 + 4s^4t^4``."""
    if not p.terms:
        return "0"
    return " + ".join(_monomial(p.variables, k, v) for k, v in sorted(p.terms.items()))
