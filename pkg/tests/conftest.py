from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from valext import NumberField, extensions_of, p_maximal_order

# The instance corpus: defining polynomial (low-to-high coefficients) and p.
CORPUS = [
    ((1, 0, 1), 5),  # x^2+1, split
    ((1, 0, 1), 2),  # x^2+1, ramified
    ((1, 0, 1), 7),  # x^2+1, inert
    ((-1, -1, 0, 1), 23),  # x^3-x-1, partially ramified
    ((8, -2, 1, 1), 2),  # x^3+x^2-2x+8, index divisible by p
]

CORPUS_IDS = ["x2+1@5", "x2+1@2", "x2+1@7", "x3-x-1@23", "dedekind@2"]


@lru_cache(maxsize=None)
def field_for(coeffs: tuple) -> NumberField:
    return NumberField(list(coeffs))


@lru_cache(maxsize=None)
def order_for(coeffs: tuple, p: int):
    return p_maximal_order(field_for(coeffs), p)


@lru_cache(maxsize=None)
def extensions_for(coeffs: tuple, p: int):
    return extensions_of(field_for(coeffs), p)


def random_rational(rng, p: int, scale: int = 3) -> Fraction:
    """Rational with controlled p-part, for seeded property tests."""
    num = rng.randint(-(p**scale), p**scale)
    den = rng.randint(1, p**scale)
    return Fraction(num, den) * Fraction(p) ** rng.randint(-2, 2)


def random_element(rng, field: NumberField, p: int):
    """Nonzero field element with small mixed-denominator coordinates."""
    while True:
        coords = [random_rational(rng, p, scale=2) for _ in range(field.n)]
        if any(c != 0 for c in coords):
            return field.element(coords)


def random_order_element(rng, order, p: int):
    """Element of the order with coordinates in Z (hence in Z_(p))."""
    coords = [rng.randint(-p * 3, p * 3) for _ in range(order.field.n)]
    return order.element(coords)
