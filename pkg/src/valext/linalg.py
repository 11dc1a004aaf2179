"""Exact dense linear algebra over Q and F_p, and Z_(p)-lattice bases.

Matrices are lists of rows; vectors are flat lists. Everything over Q uses
fractions.Fraction, everything over F_p uses ints reduced into [0, p).
Sizes here are desk scale (the dimension is the field degree), so plain
Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RankDeficient

VecQ = list[Fraction]
MatQ = list[list[Fraction]]
VecFp = list[int]
MatFp = list[list[int]]


def pval(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("pval of zero")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


# ---------------------------------------------------------------------------
# Rational matrices


def q_mat(rows) -> MatQ:
    return [[Fraction(x) for x in row] for row in rows]


def q_identity(n: int) -> MatQ:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def q_matvec(m: MatQ, v: VecQ) -> VecQ:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


def q_matmul(a: MatQ, b: MatQ) -> MatQ:
    cols = len(b[0])
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(len(a))
    ]


def q_rref(m: MatQ) -> tuple[MatQ, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = [row[:] for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def q_rank(m: MatQ) -> int:
    if not m:
        return 0
    return len(q_rref(m)[1])


def q_kernel(m: MatQ) -> list[VecQ]:
    """Basis of {v : m v = 0}, one vector per free column."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rref, pivots = q_rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def q_solve(a: MatQ, b: VecQ) -> VecQ | None:
    """One solution of a x = b, or None when inconsistent.

    Free variables, if any, are set to zero.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    rref, pivots = q_rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][cols]
    return x


def q_det(m: MatQ) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def q_inverse(m: MatQ) -> MatQ:
    n = len(m)
    aug = [m[i][:] + q_identity(n)[i] for i in range(n)]
    rref, pivots = q_rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in rref]


# ---------------------------------------------------------------------------
# Matrices over F_p


def fp_vec(v, p: int) -> VecFp:
    return [int(x) % p for x in v]


def fp_mat(rows, p: int) -> MatFp:
    return [fp_vec(row, p) for row in rows]


def fp_identity(n: int) -> MatFp:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def fp_matvec(m: MatFp, v: VecFp, p: int) -> VecFp:
    return [sum(row[j] * v[j] for j in range(len(v))) % p for row in m]


def fp_matmul(a: MatFp, b: MatFp, p: int) -> MatFp:
    cols = len(b[0])
    inner = len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) % p for j in range(cols)]
        for i in range(len(a))
    ]


def fp_matpow(m: MatFp, e: int, p: int) -> MatFp:
    result = fp_identity(len(m))
    base = [row[:] for row in m]
    while e:
        if e & 1:
            result = fp_matmul(result, base, p)
        base = fp_matmul(base, base, p)
        e >>= 1
    return result


def fp_rref(m: MatFp, p: int) -> tuple[MatFp, list[int]]:
    m = [row[:] for row in m]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] % p != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def fp_rank(m: MatFp, p: int) -> int:
    if not m:
        return 0
    return len(fp_rref(m, p)[1])


def fp_kernel(m: MatFp, p: int) -> list[VecFp]:
    """Basis of the null space {v : m v = 0} over F_p."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rref, pivots = fp_rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc] % p
        basis.append(v)
    return basis


def fp_solve(a: MatFp, b: VecFp, p: int) -> VecFp | None:
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [b[i] % p] for i in range(rows)]
    rref, pivots = fp_rref(aug, p)
    if cols in pivots:
        return None
    x = [0] * cols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][cols]
    return x


# ---------------------------------------------------------------------------
# Z_(p)-lattices: finitely generated submodules of Q^n over the localization
# of Z at p. Integers coprime to p are units, so canonical bases have p-power
# pivots with off-pivot entries reduced modulo the pivot power.


def rep_mod_ppow(x: Fraction, p: int, k: int) -> Fraction:
    """Canonical representative of x modulo p^k Z_(p).

    The representative is p^v * c with v = pval(x) and 0 <= c < p^(k-v),
    p not dividing c; zero when pval(x) >= k.
    """
    if x == 0:
        return Fraction(0)
    v = pval(x, p)
    if v >= k:
        return Fraction(0)
    u = x / Fraction(p) ** v
    mod = p ** (k - v)
    c = u.numerator * pow(u.denominator, -1, mod) % mod
    return Fraction(c) * Fraction(p) ** v


def lattice_canonical(
    vectors: list[VecQ], p: int, require_full_rank: bool = True
) -> list[VecQ]:
    """Canonical basis of the Z_(p)-module generated by the given vectors.

    Column echelon over the localization: pivot rows are processed top down,
    each pivot entry is normalized to an exact power of p (its unit part is
    divided out), and entries of earlier basis vectors at later pivot rows
    are reduced modulo the pivot power. The result is unique for the module,
    and the map is idempotent.
    """
    if not vectors:
        raise ValueError("no generators")
    n = len(vectors[0])
    cols = [[Fraction(x) for x in v] for v in vectors if any(Fraction(x) != 0 for x in v)]
    basis: list[tuple[int, int, VecQ]] = []  # (pivot row, pivot power, column)
    for i in range(n):
        cand = [c for c in cols if c[i] != 0]
        if not cand:
            continue
        piv = min(cand, key=lambda c: pval(c[i], p))
        cols.remove(piv)
        k = pval(piv[i], p)
        unit = piv[i] / Fraction(p) ** k
        piv = [x / unit for x in piv]
        pk = Fraction(p) ** k
        for c in cols:
            if c[i] != 0:
                f = c[i] / pk
                for r in range(n):
                    c[r] -= f * piv[r]
        basis.append((i, k, piv))
    if require_full_rank and len(basis) < n:
        raise RankDeficient(f"generators span rank {len(basis)} < {n}")
    # Reduce entries at later pivot rows; later pivot columns vanish on
    # earlier pivot rows, so reductions in increasing row order are stable.
    for bi, (_, _, col) in enumerate(basis):
        for pj, kj, pivcol in basis[bi + 1 :]:
            rep = rep_mod_ppow(col[pj], p, kj)
            if col[pj] != rep:
                f = (col[pj] - rep) / (Fraction(p) ** kj)
                for r in range(len(col)):
                    col[r] -= f * pivcol[r]
    return [col for _, _, col in basis]


def lattice_contains(basis: list[VecQ], v: VecQ, p: int) -> bool:
    """Membership of v in the full-rank lattice spanned by basis over Z_(p)."""
    n = len(v)
    rows = [[basis[j][i] for j in range(len(basis))] for i in range(n)]
    coords = q_solve(rows, list(v))
    if coords is None:
        return False
    return all(c == 0 or pval(c, p) >= 0 for c in coords)


def lattice_coords(basis: list[VecQ], v: VecQ) -> VecQ:
    """Coordinates of v in the given full-rank basis (exact, over Q)."""
    n = len(v)
    rows = [[basis[j][i] for j in range(len(basis))] for i in range(n)]
    coords = q_solve(rows, list(v))
    if coords is None:
        raise ValueError("vector not in the span")
    return coords
