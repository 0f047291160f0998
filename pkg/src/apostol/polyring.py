"""Sparse multivariate polynomial arithmetic over exact rationals.

This is the coefficient ring for all series work in the package.  The ring
has a fixed, closed set of five variables:

    x, y   the two polynomial variables of the families,
    z      an auxiliary shift variable used by the identity verifiers,
    La, Lb symbolic log-indeterminates standing for log(a) and log(b),
           so that a**t and b**t expand exactly as exp(La*t), exp(Lb*t).

A polynomial is a mapping from exponent vectors (one non-negative integer
per variable, in the canonical order x < y < z < La < Lb) to nonzero
Fraction coefficients.  The zero polynomial is the empty mapping, so two
polynomials are equal exactly when their term maps are equal; there is no
normalization step to forget.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

# The scalar field: arbitrary-precision exact fractions, always stored
# reduced with a positive denominator.
Rational = Fraction

Scalar = Union[int, Fraction]


class VarId(IntEnum):
    """The five ring variables; the numeric value is the exponent slot."""

    X = 0
    Y = 1
    Z = 2
    LA = 3
    LB = 4


NVARS = len(VarId)

VAR_NAMES = ("x", "y", "z", "La", "Lb")

Exponents = tuple[int, int, int, int, int]

_ZERO_EXPS: Exponents = (0, 0, 0, 0, 0)


def _term_sort_key(item: tuple[Exponents, Fraction]) -> tuple[int, Exponents]:
    exps, _ = item
    return (sum(exps), exps)


class MultiPoly:
    """An immutable sparse polynomial in the fixed five-variable ring.

    Never mutate the term map of an existing value; every operation returns
    a fresh polynomial in canonical form (no zero coefficients stored).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, Scalar] | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[exps] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def one(cls) -> MultiPoly:
        return cls({_ZERO_EXPS: Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> MultiPoly:
        return cls({_ZERO_EXPS: Fraction(value)})

    @classmethod
    def var(cls, v: VarId) -> MultiPoly:
        exps = [0] * NVARS
        exps[v] = 1
        return cls({tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, coeff: Scalar, exps: Iterable[int]) -> MultiPoly:
        e = tuple(exps)
        if len(e) != NVARS or any(x < 0 for x in e):
            raise ValueError(f"exponent vector must be {NVARS} non-negative integers, got {e}")
        return cls({e: Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_value(self) -> Fraction | None:
        """The value of a constant polynomial, or None if any variable occurs."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and _ZERO_EXPS in self._terms:
            return self._terms[_ZERO_EXPS]
        return None

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lexicographic order, leading term first.

        The ordering (total degree, then exponent vector on the canonical
        variable order) is the single source of deterministic output for
        rendering and golden files.
        """
        return sorted(self._terms.items(), key=_term_sort_key, reverse=True)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other: MultiPoly | Scalar) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.const(other)

    def __add__(self, other: MultiPoly | Scalar) -> MultiPoly:
        q = self._coerce(other)
        if not self._terms:
            return q
        if not q._terms:
            return self
        out = dict(self._terms)
        for exps, coeff in q._terms.items():
            s = out.get(exps, Fraction(0)) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        p = MultiPoly.__new__(MultiPoly)
        p._terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        p = MultiPoly.__new__(MultiPoly)
        p._terms = {e: -c for e, c in self._terms.items()}
        return p

    def __sub__(self, other: MultiPoly | Scalar) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> MultiPoly:
        return self._coerce(other) + (-self)

    def __mul__(self, other: MultiPoly | Scalar) -> MultiPoly:
        q = self._coerce(other)
        if not self._terms or not q._terms:
            return MultiPoly.zero()
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in q._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2],
                     e1[3] + e2[3], e1[4] + e2[4])
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        p = MultiPoly.__new__(MultiPoly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative polynomial powers are not defined in this ring")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def substitute(self, bindings: Mapping[VarId, Scalar]) -> MultiPoly:
        """Replace each bound variable by a rational value; others untouched.

        substitute commutes with + and *, which the tests rely on: proving an
        identity for the symbolic La, Lb therefore proves it for every
        numeric specialization.
        """
        if not bindings:
            return self
        values = {VarId(v): Fraction(val) for v, val in bindings.items()}
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            c = coeff
            new_exps = list(exps)
            for v, val in values.items():
                e = exps[v]
                if e:
                    c *= val ** e
                    new_exps[v] = 0
            if not c:
                continue
            key = tuple(new_exps)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        p = MultiPoly.__new__(MultiPoly)
        p._terms = out
        return p

    # -- comparison and display --------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == MultiPoly.const(other)._terms
        return NotImplemented

    __hash__ = None  # term map is a plain dict; values are compared, not hashed

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.sorted_terms())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)})"


def format_poly(p: MultiPoly) -> str:
    """Render a polynomial like ``x^2 - x + 1/6`` in graded-lex order."""
    if not p:
        return "0"
    pieces: list[str] = []
    for i, (exps, coeff) in enumerate(p.sorted_terms()):
        mono = "*".join(
            VAR_NAMES[v] if e == 1 else f"{VAR_NAMES[v]}^{e}"
            for v, e in enumerate(exps)
            if e
        )
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces)
