"""Extensions of v_p to L: enumeration, membership decision, value, residue.

extensions_of runs the pipeline p-maximal order -> O/pO -> reduced quotient
-> field decomposition -> lifted idempotents and reads off one extension per
field component. decide_position classifies an element against one
extension's valuation ring by reverse induction on its minimal polynomial
relation; value and residue are recovered from it exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeValue, NotIrreducible, ZeroElement
from .fpalgebra import (
    FpAlgebra,
    lift_idempotents,
    nilradical,
    quotient_by,
    quotient_mod_p,
    split_reduced,
)
from .linalg import (
    MatFp,
    VecFp,
    VecQ,
    fp_matmul,
    fp_matvec,
    fp_kernel,
    fp_rank,
    lattice_canonical,
    lattice_contains,
    pval,
)
from .numberfield import NFElem, NumberField
from .orders import Order, denominator_clear, p_maximal_order
from .polynomials import poly_deg
from .values import INFINITY, Val


class PositionKind(enum.Enum):
    UNIT = "Unit"
    IN_MAXIMAL_IDEAL = "InMaximalIdeal"
    OUTSIDE = "Outside"


@dataclass
class Position:
    """Where an element sits relative to one extension's valuation ring.

    For the two non-negative kinds, witness = (u, s) with u, s in the
    p-maximal order, s outside the prime, and x = u/s exactly.
    """

    kind: PositionKind
    witness: tuple[NFElem, NFElem] | None = None


class ExtensionValuation:
    """One extension w of v_p to L.

    Values of nonzero elements lie in (1/e)Z; the residue field is the
    field component of the reduced quotient, reached through
    residue_projection applied to O/pO coordinates.
    """

    def __init__(
        self,
        index: int,
        e: int,
        f: int,
        field: NumberField,
        p: int,
        order: Order,
        residue_algebra: FpAlgebra,
        residue_projection: MatFp,
        prime_basis: list[VecQ],
    ):
        self.index = index
        self.e = e
        self.f = f
        self.field = field
        self.p = p
        self.order = order
        self.residue_algebra = residue_algebra
        self.residue_projection = residue_projection
        self.prime_basis = prime_basis

    def residue_of_integral(self, x: NFElem) -> VecFp:
        """Residue-field image of an element of the p-maximal order."""
        return fp_matvec(self.residue_projection, self.order.coords_mod_p(x, self.p), self.p)

    def in_prime(self, x: NFElem) -> bool:
        """Lattice membership of x in the prime P = ker(residue) of the order."""
        return lattice_contains(self.prime_basis, x.coords, self.p)

    def position(self, x: NFElem, trace: list[str] | None = None) -> Position:
        return decide_position(x, self, trace)

    def value(self, x: NFElem, trace: list[str] | None = None) -> Val:
        return value(self, x, trace)

    def residue(self, x: NFElem, trace: list[str] | None = None) -> VecFp:
        return residue(self, x, trace)

    def kappa_inverse(self, r: VecFp) -> VecFp:
        return self.residue_algebra.inverse(r)

    def to_descriptor(self) -> dict:
        return {
            "index": self.index,
            "e": self.e,
            "f": self.f,
            "residue_field_dim": self.residue_algebra.dim,
            "prime_basis": [[str(x) for x in row] for row in self.prime_basis],
        }

    def __repr__(self):
        return f"ExtensionValuation(index={self.index}, e={self.e}, f={self.f}, p={self.p})"


def extensions_of(
    field: NumberField, p: int, trace: list[str] | None = None
) -> list[ExtensionValuation]:
    """All extensions of v_p to L, one per maximal ideal of the closure."""
    order = p_maximal_order(field, p)
    alg = quotient_mod_p(order, p)
    nil = nilradical(alg)
    reduced, proj = quotient_by(alg, nil)
    dec = split_reduced(reduced, trace=trace)
    lifted = lift_idempotents(alg, dec, proj, trace=trace)

    exts = []
    total_local = 0
    for i, (comp, idem) in enumerate(zip(dec.components, lifted)):
        f_i = comp.dim
        local = [alg.mul(alg.basis_vector(j), idem) for j in range(alg.dim)]
        local_dim = fp_rank(local, p)
        if local_dim % f_i:
            raise AssertionError("local factor dimension not divisible by residue degree")
        e_i = local_dim // f_i
        total_local += local_dim
        resproj = fp_matmul(comp.projection, proj, p)
        gens = [order.element(v).coords for v in fp_kernel(resproj, p)]
        gens += [[p * x for x in b] for b in order.basis]
        prime = lattice_canonical(gens, p)
        exts.append(
            ExtensionValuation(
                index=i + 1,
                e=e_i,
                f=f_i,
                field=field,
                p=p,
                order=order,
                residue_algebra=comp.algebra,
                residue_projection=resproj,
                prime_basis=prime,
            )
        )
    if total_local != alg.dim:
        raise AssertionError("local factor dimensions do not fill O/pO")
    return exts


def decide_position(x: NFElem, w: ExtensionValuation, trace: list[str] | None = None) -> Position:
    """Classify x against w's valuation ring by reverse induction.

    Take the minimal relation sum c_i x^i = 0 normalized so min v_p(c_i) = 0
    and walk the partial sums alpha_j downward, keeping x*alpha_j in the
    prime: a unit coefficient exits with x in the localization (case 1),
    x*alpha_(j-1) outside the prime exits with 1/x in it (case 2), and
    otherwise the induction continues (case 3).
    """
    if x.is_zero:
        raise ZeroElement("position of 0 is undefined")
    p = w.p
    mp = x.min_poly()
    if mp[0] == 0:
        raise NotIrreducible("nonzero element is a zero divisor")
    d = poly_deg(mp)
    vals = [pval(c, p) if c != 0 else None for c in mp]
    jstar = min(
        (i for i in range(d + 1) if vals[i] is not None), key=lambda i: vals[i]
    )
    c = [ci / mp[jstar] for ci in mp]

    def kappa_of(y: NFElem) -> VecFp:
        return w.residue_of_integral(y)

    alpha = x.field.zero()  # alpha_(d+1); x*alpha in the prime trivially
    for j in range(d + 1, 0, -1):
        c_prev = c[j - 1]
        alpha_prev = x * alpha + x.field.from_rational(c_prev)
        y = x * alpha_prev
        if c_prev != 0 and pval(c_prev, p) == 0:
            if trace is not None:
                trace.append(f"CASE1{{j={j}}}")
            ru = kappa_of(y)
            rs = kappa_of(alpha_prev)
            if not any(rs):
                raise NotIrreducible("case-1 denominator fell into the prime")
            res = w.residue_algebra.mul(ru, w.kappa_inverse(rs))
            kind = PositionKind.UNIT if any(res) else PositionKind.IN_MAXIMAL_IDEAL
            return Position(kind, witness=(y, alpha_prev))
        ry = kappa_of(y)
        if any(ry):
            if trace is not None:
                trace.append(f"CASE2{{j={j}}}")
            ra = kappa_of(alpha_prev)
            res_inv = w.residue_algebra.mul(ra, w.kappa_inverse(ry))
            if any(res_inv):
                # x and 1/x are both units of the localization
                return Position(PositionKind.UNIT, witness=(y, alpha_prev))
            return Position(PositionKind.OUTSIDE)
        if trace is not None:
            trace.append(f"CASE3{{j={j}}}")
        alpha = alpha_prev
    raise NotIrreducible("reverse induction failed to classify the element")


def value(w: ExtensionValuation, x: NFElem, trace: list[str] | None = None) -> Val:
    """w(x) as an exact rational with denominator dividing e.

    m = e*w(x) is the largest integer k with x^e p^(-k) still in the
    valuation ring; it is found by binary search inside norm-derived bounds.
    """
    if x.is_zero:
        return INFINITY
    e = w.e
    y0, den = denominator_clear(x)
    norm, _ = y0.norm_trace()
    if norm == 0:
        raise NotIrreducible("nonzero element has zero norm")
    vden = pval(Fraction(den), w.p) if den % w.p == 0 else 0
    vnorm = pval(norm, w.p)
    lo = -e * vden
    hi = e * vnorm
    xe = x**e
    pfrac = Fraction(w.p)

    def nonneg(k: int) -> bool:
        probe = xe * pfrac**-k
        return decide_position(probe, w, trace).kind is not PositionKind.OUTSIDE

    if not nonneg(lo):
        raise AssertionError("lower search bound is not in the valuation ring")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if nonneg(mid):
            lo = mid
        else:
            hi = mid - 1
    m = lo
    final = decide_position(xe * pfrac**-m, w, trace)
    if final.kind is not PositionKind.UNIT:
        raise AssertionError("binary search did not land on a unit")
    return Val(Fraction(m, e))


def residue(w: ExtensionValuation, x: NFElem, trace: list[str] | None = None) -> VecFp:
    """Image of x in the residue field; requires w(x) >= 0."""
    if x.is_zero:
        return w.residue_algebra.zero()
    pos = decide_position(x, w, trace)
    if pos.kind is PositionKind.OUTSIDE:
        raise NegativeValue("element has negative value at this extension")
    u, s = pos.witness
    ru = w.residue_of_integral(u)
    rs = w.residue_of_integral(s)
    return w.residue_algebra.mul(ru, w.kappa_inverse(rs))
