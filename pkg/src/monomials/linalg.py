"""Exact linear algebra over the rationals and the integers.

Matrices are lists/tuples of row tuples.  Rational work uses
:class:`fractions.Fraction`; integer normal forms (Smith, Hermite) use
plain ints, so everything stays exact at any size.
"""

from fractions import Fraction
from math import gcd


def vec_dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x for x in a)


def vec_addm(a, b, c=1):
    """a + c*b."""
    return tuple(x + c * y for x, y in zip(a, b))


def primitive(v):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Scale a rational vector to a primitive integer vector."""
    from math import lcm

    denom = 1
    for x in v:
        denom = lcm(denom, Fraction(x).denominator)
    return primitive(tuple(int(x * denom) for x in v))


def row_echelon(rows):
    """Reduced row echelon form over Fraction.

    Returns (echelon rows, pivot column indices).
    """
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows):
    return len(row_echelon(rows)[0])


def det(rows):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    mat = [list(map(Fraction, r)) for r in rows]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        d *= mat[c][c]
        pv = mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] / pv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    return sign * d


def solve(rows, rhs):
    """One exact solution of rows * x = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    ech, pivots = row_echelon(aug)
    x = [Fraction(0)] * ncols
    for row, c in zip(ech, pivots):
        if c == ncols:
            return None  # pivot in the rhs column: inconsistent
        x[c] = row[-1]
    # rows of ech beyond pivots are zero by construction
    for row in ech[len(pivots):]:
        if row[-1] != 0:
            return None
    # verify (cheap, catches free-variable interplay)
    for r, b in zip(rows, rhs):
        if vec_dot(r, x) != b:
            return None
    return tuple(x)


def nullspace(rows, ncols=None):
    """Basis of {x : rows * x = 0} over Fraction."""
    if not rows:
        if ncols is None:
            return []
        basis = []
        for i in range(ncols):
            e = [Fraction(0)] * ncols
            e[i] = Fraction(1)
            basis.append(tuple(e))
        return basis
    ncols = len(rows[0])
    ech, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(ech, pivots):
            x[c] = -row[f]
        basis.append(tuple(x))
    return basis


def invert(rows):
    """Exact inverse of a square rational matrix."""
    n = len(rows)
    aug = [list(map(Fraction, rows[i])) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    ech, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [tuple(row[n:]) for row in ech]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [tuple(vec_dot(ra, cb) for cb in bt) for ra in a]


def mat_vec(a, x):
    return tuple(vec_dot(r, x) for r in a)


def smith_normal_form(matrix):
    """Smith normal form with transforms: U * A * V = D.

    Returns (U, D, V, invariant_factors) with U, V unimodular integer
    matrices and D diagonal with d_1 | d_2 | ... >= 0.
    """
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # find a non-zero pivot in the trailing block
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0:
                    if pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, m):
                if a[i][t] % a[t][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    swap_rows(t, i)
                    done = False
                elif a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j] % a[t][t] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    swap_cols(t, j)
                    done = False
                elif a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            if done:
                break
        # make every trailing entry divisible by the pivot
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue  # redo the clearing with the fattened row
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    factors = [a[i][i] for i in range(min(m, n))]
    return (
        [tuple(r) for r in u],
        [tuple(r) for r in a],
        [tuple(r) for r in v],
        factors,
    )


def invariant_factors(matrix):
    return smith_normal_form(matrix)[3]


def integer_row_basis(rows):
    """Echelon basis of the integer lattice spanned by the rows.

    Gcd elimination column by column; the span over Z is preserved by the
    unimodular row operations used.
    """
    mat = [list(map(int, r)) for r in rows if any(r)]
    if not mat:
        return []
    n = len(mat[0])
    basis = []
    for col in range(n):
        nz = [r for r in mat if r[col] != 0]
        zz = [r for r in mat if r[col] == 0 and any(r)]
        if not nz:
            mat = zz
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            keep = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r2 = [x - q * y for x, y in zip(r, p)]
                if r2[col] != 0:
                    keep.append(r2)
                elif any(r2):
                    zz.append(r2)
            nz = keep
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        basis.append(tuple(p))
        mat = zz
    return basis


def saturation_basis(rows):
    """Basis of (Q-row-span of rows) intersected with Z^n.

    Uses the Smith normal form: with U*A*V = D, the saturation is spanned by
    the first rank rows of V^{-1}; those are rows of a unimodular matrix,
    hence a saturated basis.
    """
    rows = [tuple(map(int, r)) for r in rows if any(r)]
    if not rows:
        return []
    _, d, v, factors = smith_normal_form(rows)
    r = sum(1 for f in factors if f != 0)
    vinv = invert(v)
    basis = []
    for i in range(r):
        basis.append(tuple(int(x) for x in vinv[i]))
    return basis


def coordinates_in_basis(vector, basis):
    """Integer coordinates of vector in the given lattice basis, or None."""
    cols = list(zip(*basis))  # len(vector) rows, len(basis) cols
    sol = solve(cols, vector)
    if sol is None:
        return None
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)
