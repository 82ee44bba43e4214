"""Dense exact linear algebra over the coefficient domains.

Small systems only (coefficient matching of polynomial identities), so
plain Gaussian elimination with exact arithmetic is the right tool.  Over
ZZ, solving uses a column Hermite reduction so solvability is decided
exactly, not over QQ.
"""

from __future__ import annotations

from .rings import Domain, ZZ, gcdext


def rref(rows, dom: Domain):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows)
                      if not dom.is_zero(mat[i][c])), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = dom.div(dom.one, mat[r][c])
        mat[r] = [dom.mul(inv, x) for x in mat[r]]
        for i in range(nrows):
            if i != r and not dom.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [dom.sub(a, dom.mul(f, b))
                          for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def nullspace(rows, ncols: int, dom: Domain):
    """Echelonized basis of {v : rows . v = 0} over a field."""
    if not rows:
        basis = []
        for j in range(ncols):
            v = [dom.zero] * ncols
            v[j] = dom.one
            basis.append(v)
        return basis
    mat, pivots = rref(rows, dom)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [dom.zero] * ncols
        v[j] = dom.one
        for r, c in enumerate(pivots):
            v[c] = dom.neg(mat[r][j])
        basis.append(v)
    return basis


def solve(rows, rhs, dom: Domain):
    """One solution of rows . x = rhs over a field, or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    mat, pivots = rref(aug, dom)
    for row in mat:
        if all(dom.is_zero(x) for x in row[:-1]) and not dom.is_zero(row[-1]):
            return None
    x = [dom.zero] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None
        x[c] = mat[r][ncols]
    return x


def solve_zz(rows, rhs):
    """One integer solution of rows . x = rhs, or None (exact over ZZ)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    mat = [list(r) for r in rows]
    # column Hermite reduction: mat * U stays equal to the working matrix
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop_combine(c1, c2, s, t, u, v):
        # (col c1, col c2) <- (s*c1 + t*c2, u*c1 + v*c2)
        for i in range(nrows):
            a, b = mat[i][c1], mat[i][c2]
            mat[i][c1], mat[i][c2] = s * a + t * b, u * a + v * b
        for i in range(ncols):
            a, b = U[i][c1], U[i][c2]
            U[i][c1], U[i][c2] = s * a + t * b, u * a + v * b

    pivots = []
    col = 0
    for row in range(nrows):
        if col >= ncols:
            break
        nz = [c for c in range(col, ncols) if mat[row][c]]
        if not nz:
            continue
        lead = nz[0]
        if lead != col:
            for i in range(nrows):
                mat[i][col], mat[i][lead] = mat[i][lead], mat[i][col]
            for i in range(ncols):
                U[i][col], U[i][lead] = U[i][lead], U[i][col]
        for c in range(col + 1, ncols):
            if mat[row][c]:
                g, s, t = gcdext(mat[row][col], mat[row][c])
                a, b = mat[row][col] // g, mat[row][c] // g
                colop_combine(col, c, s, t, -b, a)
        if mat[row][col] < 0:
            for i in range(nrows):
                mat[i][col] = -mat[i][col]
            for i in range(ncols):
                U[i][col] = -U[i][col]
        pivots.append((row, col))
        col += 1
    # forward-substitute on the echelon columns
    w = [0] * ncols
    resid = list(rhs)
    for row, c in pivots:
        p = mat[row][c]
        if resid[row] % p:
            return None
        w[c] = resid[row] // p
        for i in range(nrows):
            resid[i] -= w[c] * mat[i][c]
    if any(resid):
        return None
    return [sum(U[i][c] * w[c] for c in range(ncols)) for i in range(ncols)]


def solve_in_domain(rows, rhs, dom: Domain):
    if dom is ZZ:
        return solve_zz(rows, rhs)
    return solve(rows, rhs, dom)
