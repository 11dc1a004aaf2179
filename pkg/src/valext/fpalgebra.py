"""Finite-dimensional commutative unital algebras over F_p.

Houses the quotient A = O/pO of an order, its nilradical, reduced quotients,
and the constructive decomposition of a reduced algebra into a product of
fields by repeatedly splitting off an idempotent g(z) built from the minimal
relation of a non-invertible element z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import IllegalIdeal, NotReduced
from .linalg import (
    MatFp,
    VecFp,
    fp_identity,
    fp_kernel,
    fp_matpow,
    fp_rank,
    fp_rref,
    fp_solve,
    fp_vec,
)


class FpAlgebra:
    """Commutative unital F_p-algebra given by structure constants.

    table[i][j] is the coordinate vector of b_i * b_j; unit is the
    coordinate vector of 1.
    """

    def __init__(self, p: int, table: list[list[VecFp]], unit: VecFp, validate: bool = True):
        self.p = p
        self.dim = len(table)
        self.table = [[fp_vec(v, p) for v in row] for row in table]
        self.unit = fp_vec(unit, p)
        if validate:
            self._validate()

    def _validate(self):
        d, p = self.dim, self.p
        for i in range(d):
            if len(self.table[i]) != d or any(len(v) != d for v in self.table[i]):
                raise ValueError("structure constant table not cubical")
        for i in range(d):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    raise ValueError("multiplication not commutative")
        basis = fp_identity(d)
        for i in range(d):
            if self.mul(self.unit, basis[i]) != basis[i]:
                raise ValueError("unit does not act as identity")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.mul(self.table[i][j], basis[k])
                    right = self.mul(basis[i], self.table[j][k])
                    if left != right:
                        raise ValueError("multiplication not associative")

    def zero(self) -> VecFp:
        return [0] * self.dim

    def basis_vector(self, i: int) -> VecFp:
        v = [0] * self.dim
        v[i] = 1
        return v

    def mul(self, x: VecFp, y: VecFp) -> VecFp:
        p = self.p
        out = [0] * self.dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                c = a * b % p
                row = self.table[i][j]
                for k in range(self.dim):
                    if row[k]:
                        out[k] = (out[k] + c * row[k]) % p
        return out

    def pow(self, x: VecFp, e: int) -> VecFp:
        result = self.unit[:]
        base = x[:]
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def mult_matrix(self, x: VecFp) -> MatFp:
        """Matrix of multiplication by x; column j is x * b_j."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def is_unit(self, x: VecFp) -> bool:
        """True iff multiplication by x is invertible."""
        return fp_rank(self.mult_matrix(x), self.p) == self.dim

    def inverse(self, x: VecFp) -> VecFp:
        inv = fp_solve(self.mult_matrix(x), self.unit, self.p)
        if inv is None:
            raise ValueError("element is not invertible")
        return inv

    def frobenius_power(self) -> int:
        """Smallest m with p^m >= dim; x^(p^m) kills every nilpotent."""
        m = 0
        q = 1
        while q < self.dim:
            q *= self.p
            m += 1
        return m

    def __repr__(self):
        return f"FpAlgebra(p={self.p}, dim={self.dim})"


class AlgIdeal:
    """Ideal of an FpAlgebra, stored as an echelonized basis."""

    def __init__(self, algebra: FpAlgebra, vectors: list[VecFp], validate: bool = True):
        self.algebra = algebra
        rows = [fp_vec(v, algebra.p) for v in vectors if any(x % algebra.p for x in v)]
        if rows:
            rref, pivots = fp_rref(rows, algebra.p)
            self.basis = rref[: len(pivots)]
            self.pivots = pivots
        else:
            self.basis = []
            self.pivots = []
        if validate:
            self._validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _validate(self):
        for v in self.basis:
            for i in range(self.algebra.dim):
                prod = self.algebra.mul(v, self.algebra.basis_vector(i))
                if not self.contains(prod):
                    raise ValueError("not closed under multiplication by the algebra")

    def reduce(self, v: VecFp) -> VecFp:
        """Canonical coset representative: v minus its ideal part."""
        p = self.algebra.p
        v = fp_vec(v, p)
        for row, pc in zip(self.basis, self.pivots):
            if v[pc]:
                f = v[pc]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def contains(self, v: VecFp) -> bool:
        return all(x == 0 for x in self.reduce(v))


@dataclass
class Component:
    """One field factor of a decomposed reduced algebra.

    All vectors live in the ambient algebra's coordinates except inside
    `algebra`, which uses the component's own basis.
    """

    idempotent: VecFp
    basis: MatFp
    projection: MatFp
    algebra: FpAlgebra

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class Decomposition:
    """Orthogonal idempotent decomposition of a reduced algebra into fields."""

    algebra: FpAlgebra
    components: list[Component]

    @property
    def idempotents(self) -> list[VecFp]:
        return [c.idempotent for c in self.components]


def quotient_mod_p(order, p: int) -> FpAlgebra:
    """A = O/pO with basis the images of the order basis."""
    table = order.mult_table_mod_p(p)
    unit = order.coords_mod_p(order.field.one(), p)
    return FpAlgebra(p, table, unit)


def nilradical(a: FpAlgebra) -> AlgIdeal:
    """Kernel of the m-fold Frobenius, p^m >= dim: exactly the nilpotents."""
    frob_cols = [a.pow(a.basis_vector(i), a.p) for i in range(a.dim)]
    frob = [[frob_cols[j][i] for j in range(a.dim)] for i in range(a.dim)]
    m = a.frobenius_power()
    full = fp_matpow(frob, m, a.p) if m else fp_identity(a.dim)
    return AlgIdeal(a, fp_kernel(full, a.p))


def quotient_by(a: FpAlgebra, ideal: AlgIdeal) -> tuple[FpAlgebra, MatFp]:
    """Quotient algebra and the projection matrix onto it.

    Coordinates of the quotient are the non-pivot positions of the ideal's
    echelon basis, so the projection has an obvious section (fill pivots
    with zero).
    """
    if ideal.dim and ideal.contains(a.unit):
        raise IllegalIdeal("ideal contains the unit")
    free = [c for c in range(a.dim) if c not in ideal.pivots]

    def qcoords(v: VecFp) -> VecFp:
        red = ideal.reduce(v)
        return [red[c] for c in free]

    reps = [a.basis_vector(c) for c in free]
    table = [[qcoords(a.mul(r1, r2)) for r2 in reps] for r1 in reps]
    unit = qcoords(a.unit)
    proj = [[0] * a.dim for _ in free]
    for j in range(a.dim):
        col = qcoords(a.basis_vector(j))
        for i in range(len(free)):
            proj[i][j] = col[i]
    return FpAlgebra(a.p, table, unit, validate=False), proj


def is_unit(a: FpAlgebra, x: VecFp) -> bool:
    return a.is_unit(x)


def _span_coords(a: FpAlgebra, basis: MatFp, pivots: list[int], v: VecFp) -> VecFp:
    coords = [v[pc] for pc in pivots]
    recon = [0] * a.dim
    for c, row in zip(coords, basis):
        if c:
            for i in range(a.dim):
                recon[i] = (recon[i] + c * row[i]) % a.p
    if recon != v:
        raise AssertionError("vector not in the factor span")
    return coords


def _factor_mult_matrix(a: FpAlgebra, basis: MatFp, pivots: list[int], z: VecFp) -> MatFp:
    cols = [_span_coords(a, basis, pivots, a.mul(z, b)) for b in basis]
    d = len(basis)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _find_noninvertible(a: FpAlgebra, basis: MatFp, pivots: list[int]) -> VecFp | None:
    """Deterministic search for a nonzero non-invertible element of a factor.

    Basis elements first, then every F_p-coefficient tuple in lexicographic
    order; exhaustion proves the factor is a field.
    """
    d = len(basis)
    p = a.p
    for b in basis:
        if fp_rank(_factor_mult_matrix(a, basis, pivots, b), p) < d:
            return b[:]
    for coeffs in itertools.product(range(p), repeat=d):
        if not any(coeffs):
            continue
        z = [0] * a.dim
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(a.dim):
                    z[i] = (z[i] + c * b[i]) % p
        if fp_rank(_factor_mult_matrix(a, basis, pivots, z), p) < d:
            return z
    return None


def _min_relation(a: FpAlgebra, z: VecFp, unit: VecFp, bound: int) -> list[int]:
    """Monic coefficients b_0..b_k of the least relation sum b_i z^i = 0,
    with z^0 read as the factor unit."""
    p = a.p
    powers = [unit[:]]
    cur = z[:]
    for k in range(1, bound + 2):
        rows = [[powers[j][i] for j in range(k)] for i in range(a.dim)]
        sol = fp_solve(rows, cur, p)
        if sol is not None:
            return [(-s) % p for s in sol] + [1]
        powers.append(cur[:])
        cur = a.mul(cur, z)
    raise AssertionError("no relation found below the dimension bound")


def split_reduced(a: FpAlgebra, trace: list[str] | None = None) -> Decomposition:
    """Decompose a reduced algebra into a product of fields.

    Finds a nonzero non-invertible z, strips the lowest power from its
    minimal relation to get g with g(0) = 1, splits off the idempotent
    g(z), and recurses on both factors; a factor with no non-invertible
    nonzero element is a field and terminates its branch.
    """
    if nilradical(a).dim != 0:
        raise NotReduced("algebra has nonzero nilpotents")
    components: list[Component] = []
    rows, pivots = fp_rref(fp_identity(a.dim), a.p)
    _split_factor(a, a.unit[:], rows, pivots, components, trace)
    return Decomposition(a, components)


def _split_factor(
    a: FpAlgebra,
    unit: VecFp,
    basis: MatFp,
    pivots: list[int],
    out: list[Component],
    trace: list[str] | None,
):
    z = _find_noninvertible(a, basis, pivots)
    if z is None:
        out.append(_make_component(a, unit, basis, pivots))
        return
    rel = _min_relation(a, z, unit, len(basis))
    j = next(i for i, c in enumerate(rel) if c)
    if j == 0:
        raise AssertionError("non-invertible element has a unit constant term")
    inv = pow(rel[j], -1, a.p)
    g = [c * inv % a.p for c in rel[j:]]
    # Horner with the factor unit as 1
    e = a.zero()
    for c in reversed(g):
        e = a.mul(e, z)
        if c:
            e = [(x + c * u) % a.p for x, u in zip(e, unit)]
    if a.mul(e, e) != e or not any(e) or e == unit:
        raise AssertionError("constructed element is not a proper idempotent")
    if trace is not None:
        trace.append(f"SPLIT{{z={z}, relation={rel}, idempotent={e}}}")
    comp = [(u - x) % a.p for u, x in zip(unit, e)]
    for idem in (e, comp):
        sub = [a.mul(b, idem) for b in basis]
        sub_rows, sub_pivots = fp_rref(sub, a.p)
        sub_rows = sub_rows[: len(sub_pivots)]
        _split_factor(a, idem, sub_rows, sub_pivots, out, trace)


def _make_component(a: FpAlgebra, unit: VecFp, basis: MatFp, pivots: list[int]) -> Component:
    # Re-basis with the idempotent first, so component coordinates make the
    # unit [1, 0, ...] and one-dimensional residue fields read as canonical
    # F_p labels.
    d = len(basis)
    chosen = [unit[:]]
    for row in basis:
        if len(chosen) == d:
            break
        if fp_rank(chosen + [row], a.p) > len(chosen):
            chosen.append(row[:])
    if len(chosen) != d:
        raise AssertionError("failed to complete the component basis")
    cols = [[chosen[j][i] for j in range(d)] for i in range(a.dim)]

    def coords(v: VecFp) -> VecFp:
        sol = fp_solve(cols, v, a.p)
        if sol is None:
            raise AssertionError("vector not in the factor span")
        return sol

    table = [[coords(a.mul(chosen[i], chosen[j])) for j in range(d)] for i in range(d)]
    alg = FpAlgebra(a.p, table, coords(unit), validate=False)
    proj = [[0] * a.dim for _ in range(d)]
    for j in range(a.dim):
        col = coords(a.mul(a.basis_vector(j), unit))
        for i in range(d):
            proj[i][j] = col[i]
    return Component(idempotent=unit[:], basis=chosen, projection=proj, algebra=alg)


def lift_idempotents(
    a: FpAlgebra,
    dec: Decomposition,
    proj: MatFp,
    trace: list[str] | None = None,
) -> list[VecFp]:
    """Lift the decomposition's idempotents through a -> a/nilradical.

    Any preimage becomes idempotent after the m-fold Frobenius (p^m >= dim),
    because x^2 - x is nilpotent and Frobenius is a ring endomorphism.
    """
    m = a.frobenius_power()
    lifted = []
    for comp in dec.components:
        x = fp_solve(proj, comp.idempotent, a.p)
        if x is None:
            raise AssertionError("projection is not surjective onto the component")
        for it in range(m):
            x = a.pow(x, a.p)
            if trace is not None:
                trace.append(f"LIFT{{iteration={it + 1}}}")
        if a.mul(x, x) != x:
            raise AssertionError("lift is not idempotent")
        lifted.append(x)
    total = a.zero()
    for i, e in enumerate(lifted):
        for j in range(i):
            if any(a.mul(e, lifted[j])):
                raise AssertionError("lifted idempotents are not orthogonal")
        total = [(s + x) % a.p for s, x in zip(total, e)]
    if total != a.unit:
        raise AssertionError("lifted idempotents do not sum to 1")
    return lifted
