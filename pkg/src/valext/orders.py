"""Orders in a number field as Z_(p)-lattices, and Round-2 p-maximalization.

The p-maximal order localized at p models the relative integral closure of
Z_(p) in L. Only p-maximality is ever computed: integers coprime to p are
units throughout, so the discriminant never needs factoring.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import NotIrreducible
from .fpalgebra import nilradical, quotient_mod_p
from .linalg import (
    VecQ,
    fp_kernel,
    lattice_canonical,
    lattice_coords,
    pval,
    q_identity,
    q_inverse,
)
from .numberfield import NFElem, NumberField


class Order:
    """Full-rank unital subring of L given by a canonical lattice basis.

    basis[j] is the power-basis coordinate vector of the j-th basis element.
    """

    def __init__(self, field: NumberField, basis: list[VecQ]):
        self.field = field
        self.basis = [[Fraction(x) for x in v] for v in basis]
        if len(self.basis) != field.n:
            raise ValueError("order basis must have full rank")
        rows = [[self.basis[j][i] for j in range(field.n)] for i in range(field.n)]
        self._inv_rows = q_inverse(rows)
        self._tables: dict[int, list[list[list[int]]]] = {}

    def element(self, coords) -> NFElem:
        out = [Fraction(0)] * self.field.n
        for c, b in zip(coords, self.basis):
            c = Fraction(c)
            if c != 0:
                for i in range(self.field.n):
                    out[i] += c * b[i]
        return self.field.element(out)

    def basis_element(self, j: int) -> NFElem:
        return self.field.element(self.basis[j])

    def coords(self, x: NFElem) -> VecQ:
        """Exact coordinates of x in the order basis (over Q)."""
        return [
            sum((self._inv_rows[i][k] * x.coords[k] for k in range(self.field.n)), Fraction(0))
            for i in range(self.field.n)
        ]

    def contains(self, x: NFElem, p: int) -> bool:
        return all(c == 0 or pval(c, p) >= 0 for c in self.coords(x))

    def coords_mod_p(self, x: NFElem, p: int) -> list[int]:
        """Image of an order element in O/pO, as F_p coordinates."""
        out = []
        for c in self.coords(x):
            if c != 0 and pval(c, p) < 0:
                raise NotIrreducible(
                    "element expected in the order has p in a coordinate denominator"
                )
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return out

    def mult_table_mod_p(self, p: int) -> list[list[list[int]]]:
        """Structure constants of O/pO over the order basis."""
        if p not in self._tables:
            n = self.field.n
            elems = [self.basis_element(j) for j in range(n)]
            table = [
                [self.coords_mod_p(elems[i] * elems[j], p) for j in range(n)] for i in range(n)
            ]
            self._tables[p] = table
        return self._tables[p]

    def __eq__(self, other):
        return (
            isinstance(other, Order)
            and self.field == other.field
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, tuple(tuple(v) for v in self.basis)))

    def __repr__(self):
        return f"Order(n={self.field.n})"


def equation_order(field: NumberField) -> Order:
    """Z[theta] localized: the power basis itself."""
    return Order(field, q_identity(field.n))


def discriminant(field: NumberField) -> Fraction:
    """disc(f) for monic f, via the norm of f'(theta)."""
    n = field.n
    fprime = [field.f[i] * i for i in range(1, n + 1)]
    deriv = field.from_poly(fprime)
    norm, _ = deriv.norm_trace()
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * norm


def p_radical(order: Order, p: int) -> list[VecQ]:
    """Preimage in the order of the nilradical of O/pO, as a lattice basis."""
    alg = quotient_mod_p(order, p)
    nil = nilradical(alg)
    gens = [order.element(v).coords for v in nil.basis]
    gens += [[p * x for x in b] for b in order.basis]
    return lattice_canonical(gens, p)


def ring_of_multipliers(order: Order, ideal: list[VecQ], p: int) -> Order:
    """The order {x in L : x I <= I} for an ideal I containing pO.

    Computed via pO' = {w in O : w I <= p I}: each generator g of I gives an
    F_p-linear map O/pO -> I/pI, and the intersection of their kernels is
    pO'/pO.
    """
    n = order.field.n
    ideal_elems = [order.field.element(v) for v in ideal]
    rows_stacked: list[list[int]] = []
    for g in ideal_elems:
        cols = []
        for j in range(n):
            prod = order.basis_element(j) * g
            c = lattice_coords(ideal, prod.coords)
            col = []
            for x in c:
                if x != 0 and pval(x, p) < 0:
                    raise NotIrreducible("ideal is not multiplicatively closed")
                col.append(x.numerator * pow(x.denominator, -1, p) % p)
            cols.append(col)
        for i in range(len(ideal)):
            rows_stacked.append([cols[j][i] for j in range(n)])
    kern = fp_kernel(rows_stacked, p)
    gens = [order.basis[j][:] for j in range(n)]
    for v in kern:
        lifted = order.element(v).coords
        gens.append([x / p for x in lifted])
    return Order(order.field, lattice_canonical(gens, p))


def p_maximal_order(field: NumberField, p: int) -> Order:
    """Round 2: enlarge through multiplier rings of the p-radical until stable."""
    disc = discriminant(field)
    if disc == 0:
        raise NotIrreducible("zero discriminant: defining polynomial is not squarefree")
    max_steps = pval(disc, p) // 2 + 1 if disc != 0 else 0
    order = equation_order(field)
    for _ in range(max_steps + 1):
        rad = p_radical(order, p)
        bigger = ring_of_multipliers(order, rad, p)
        if bigger == order:
            return order
        order = bigger
    raise NotIrreducible("Round-2 iteration exceeded the discriminant bound")


def order_index_valuation(sub: Order, sup: Order, p: int) -> int:
    """v_p of the index [sup : sub] via basis determinants."""
    from .linalg import q_det

    rows_sub = [[sub.basis[j][i] for j in range(sub.field.n)] for i in range(sub.field.n)]
    rows_sup = [[sup.basis[j][i] for j in range(sup.field.n)] for i in range(sup.field.n)]
    ratio = q_det(rows_sub) / q_det(rows_sup)
    return pval(ratio, p)


def denominator_clear(x: NFElem) -> tuple[NFElem, int]:
    """Write x = y/d with y in Z[theta] and d a positive integer."""
    d = lcm(*(c.denominator for c in x.coords)) if x.coords else 1
    return x * d, d
