"""Monomials, binomials and integer polynomials over exponent vectors.

A monomial is a tuple of non-negative exponents, one per variable. The
variables of a KW semigroup ring are ordered ``u, v, u_1, ..., u_{n-2}`` and
carry the weights ``p, q, h_1, ..., h_{n-2}``; the semigroup degree of a
monomial is its dot product with the weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .semigroup import factorizations_over

Monomial = tuple[int, ...]


def degree(m: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def mono(n: int, **powers) -> Monomial:
    """``mono(4, u=2, u1=1)`` in the variable order u, v, u1, u2, ..."""
    exps = [0] * n
    for name, e in powers.items():
        exps[var_index(name)] += e
    return tuple(exps)


def var_index(name: str) -> int:
    if name == "u":
        return 0
    if name == "v":
        return 1
    return 1 + int(name[1:])


def var_names(n: int) -> list[str]:
    return ["u", "v"] + [f"u{i}" for i in range(1, n - 1)]


def mono_str(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or var_names(len(m))
    parts = [nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, m) if e]
    return "*".join(parts) or "1"


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class Binomial:
    """``plus - minus``, normalized so ``plus`` is lexicographically larger."""

    plus: Monomial
    minus: Monomial
    degree: int

    @classmethod
    def make(cls, a: Monomial, b: Monomial, weights: Sequence[int]) -> "Binomial":
        da, db = degree(a, weights), degree(b, weights)
        if da != db:
            raise ValueError(f"{mono_str(a)} - {mono_str(b)} is not homogeneous ({da} != {db})")
        if a == b:
            raise ValueError("binomial with equal monomials is zero")
        plus, minus = (a, b) if a > b else (b, a)
        return cls(plus, minus, da)

    def is_coprime(self) -> bool:
        return not any(x and y for x, y in zip(self.plus, self.minus))

    def __str__(self) -> str:
        return f"{mono_str(self.plus)} - {mono_str(self.minus)}"


class Poly:
    """Sparse integer polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "Poly":
        return cls({m: coeff}, len(m))

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls({}, nvars)

    @classmethod
    def binomial(cls, a: Monomial, b: Monomial) -> "Poly":
        return cls({a: 1}, len(a)) - cls({b: 1}, len(b))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self.nvars or other.nvars)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out, self.nvars or other.nvars)

    def degrees(self, weights: Sequence[int]) -> set[int]:
        return {degree(m, weights) for m in self.terms}

    def coefficients(self) -> set[int]:
        return set(self.terms.values())

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in sorted(self.terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono_str(m)
            if mag != 1:
                body = f"{mag}*{body}" if body != "1" else str(mag)
            out.append(f"{sign} {body}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> list[dict]:
        return [{"sign": c, "exponents": list(m)}
                for m, c in sorted(self.terms.items(), reverse=True)]


def matmul(A: list[list[Poly]], B: list[list[Poly]], nvars: int) -> list[list[Poly]]:
    if A and B and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch {len(A)}x{len(A[0])} @ {len(B)}x{len(B[0])}")
    out = []
    for row in A:
        new_row = []
        for j in range(len(B[0])):
            acc = Poly.zero(nvars)
            for k, a in enumerate(row):
                if a and B[k][j]:
                    acc = acc + a * B[k][j]
            new_row.append(acc)
        out.append(new_row)
    return out


def monomials_of_degree(d: int, weights: Sequence[int]) -> list[Monomial]:
    """Every monomial of semigroup degree ``d`` (empty for negative ``d``)."""
    return factorizations_over(weights, d) if d >= 0 else []
