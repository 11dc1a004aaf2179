"""Univariate polynomials as coefficient lists, lowest degree first.

PolyQ is a list of Fractions, PolyFp a list of ints reduced mod p. The zero
polynomial is the empty list; otherwise the leading coefficient is nonzero.
"""

from __future__ import annotations

from fractions import Fraction

PolyQ = list[Fraction]
PolyFp = list[int]


def poly_q(coeffs) -> PolyQ:
    return poly_trim([Fraction(c) for c in coeffs])


def poly_trim(coeffs: PolyQ) -> PolyQ:
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    return coeffs


def poly_deg(f: PolyQ) -> int:
    """Degree, with deg 0 = -1."""
    return len(f) - 1


def poly_add(f: PolyQ, g: PolyQ) -> PolyQ:
    n = max(len(f), len(g))
    return poly_trim(
        [
            (f[i] if i < len(f) else Fraction(0)) + (g[i] if i < len(g) else Fraction(0))
            for i in range(n)
        ]
    )


def poly_neg(f: PolyQ) -> PolyQ:
    return [-c for c in f]


def poly_sub(f: PolyQ, g: PolyQ) -> PolyQ:
    return poly_add(f, poly_neg(g))


def poly_scale(f: PolyQ, c: Fraction) -> PolyQ:
    if c == 0:
        return []
    return [x * c for x in f]


def poly_mul(f: PolyQ, g: PolyQ) -> PolyQ:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(f: PolyQ, g: PolyQ) -> tuple[PolyQ, PolyQ]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = f[:]
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    inv = 1 / g[-1]
    while len(f) >= len(g) and f:
        k = len(f) - len(g)
        c = f[-1] * inv
        q[k] = c
        for i in range(len(g)):
            f[k + i] -= c * g[i]
        f = poly_trim(f)
    return poly_trim(q), f


def poly_gcd(f: PolyQ, g: PolyQ) -> PolyQ:
    """Monic gcd over Q."""
    while g:
        f, g = g, poly_divmod(f, g)[1]
    if f:
        f = poly_scale(f, 1 / f[-1])
    return f


def poly_xgcd(f: PolyQ, g: PolyQ) -> tuple[PolyQ, PolyQ, PolyQ]:
    """(d, s, t) with s f + t g = d, d the monic gcd."""
    r0, r1 = f[:], g[:]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if r0:
        lead = r0[-1]
        r0 = poly_scale(r0, 1 / lead)
        s0 = poly_scale(s0, 1 / lead)
        t0 = poly_scale(t0, 1 / lead)
    return r0, s0, t0


def poly_eval(f: PolyQ, x):
    """Horner evaluation; works for any x supporting + and * with Fractions."""
    acc = None
    for c in reversed(f):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return Fraction(0)
    return acc


# ---------------------------------------------------------------------------
# Polynomials over F_p


def fp_poly(coeffs, p: int) -> PolyFp:
    out = [int(c) % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def fp_poly_add(f: PolyFp, g: PolyFp, p: int) -> PolyFp:
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return fp_poly(out, p)


def fp_poly_mul(f: PolyFp, g: PolyFp, p: int) -> PolyFp:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return fp_poly(out, p)


def fp_poly_eval(f: PolyFp, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc
