"""Shared test utilities: seeded random ring elements and conversions."""

from __future__ import annotations

import random
from fractions import Fraction

from apostol.polyring import NVARS, MultiPoly, VarId
from apostol.series import PowerSeries


def random_rational(rng: random.Random, max_abs: int = 5) -> Fraction:
    return Fraction(rng.randint(-max_abs, max_abs), rng.randint(1, max_abs))


def random_poly(rng: random.Random, max_degree: int = 4, max_terms: int = 6,
                variables: tuple[VarId, ...] = tuple(VarId)) -> MultiPoly:
    p = MultiPoly.zero()
    for _ in range(rng.randint(0, max_terms)):
        exps = [0] * NVARS
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.choice(variables)] += 1
        p = p + MultiPoly.monomial(random_rational(rng), exps)
    return p


def random_series(rng: random.Random, order: int, **poly_kwargs) -> PowerSeries:
    return PowerSeries([random_poly(rng, **poly_kwargs) for _ in range(order)])


def random_invertible_series(rng: random.Random, order: int) -> PowerSeries:
    head = Fraction(0)
    while head == 0:
        head = random_rational(rng)
    coeffs = [MultiPoly.const(head)]
    coeffs += [random_poly(rng, max_degree=2, max_terms=3) for _ in range(order - 1)]
    return PowerSeries(coeffs)


def xpoly_to_multipoly(p) -> MultiPoly:
    """Lift the oracle's univariate x-polynomial into the five-variable ring."""
    out = MultiPoly.zero()
    for i, c in enumerate(p):
        if c:
            out = out + MultiPoly.monomial(c, (i, 0, 0, 0, 0))
    return out
