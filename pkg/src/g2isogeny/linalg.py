"""Dense linear algebra over a field context.

Matrices are lists of rows.  ``K`` is a :class:`~g2isogeny.field.PrimeField`
(entries are ints) or a :class:`~g2isogeny.field.QuadraticExtension`
(entries are ``Fp2``); only its ``add/sub/mul/inv/neg/is_zero`` are used.
"""


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B, K):
    Bt = transpose(B)
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = K.zero
            for a, b in zip(row, col):
                acc = K.add(acc, K.mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out


def vecmat(w, M, K):
    return matmul([list(w)], M, K)[0]


def identity(n, K):
    return [[K.one if i == j else K.zero for j in range(n)] for i in range(n)]


def rref(M, K):
    """Reduced row echelon form.

    Pivots are searched column by column, taking the first row with a
    nonzero entry.  Returns ``(rows, pivots)`` with zero rows dropped.
    """
    A = [list(r) for r in M]
    if not A:
        return [], []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if not K.is_zero(A[i][c])), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        piv_inv = K.inv(A[r][c])
        A[r] = [K.mul(x, piv_inv) for x in A[r]]
        for i in range(nrows):
            if i != r and not K.is_zero(A[i][c]):
                f = A[i][c]
                A[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, K):
    return len(rref(M, K)[1])


def nullspace(M, K):
    """Basis of {x : M x = 0} in canonical reduced echelon form."""
    ncols = len(M[0])
    R, pivots = rref(M, K)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [K.zero] * ncols
        v[fcol] = K.one
        for row, pc in zip(R, pivots):
            v[pc] = K.neg(row[fcol])
        basis.append(v)
    if not basis:
        return []
    return rref(basis, K)[0]


def left_nullspace(M, K):
    """Basis of {w : w M = 0}, canonical reduced echelon form.

    Its length is ``len(M) - rank(M)``.
    """
    return nullspace(transpose(M), K)


def reduce_modulo(v, rows, pivots, K):
    """Eliminate the pivot columns of an RREF basis from ``v``."""
    v = list(v)
    for row, pc in zip(rows, pivots):
        if not K.is_zero(v[pc]):
            f = v[pc]
            v = [K.sub(x, K.mul(f, y)) for x, y in zip(v, row)]
    return v


def solve(A, b, K):
    """Unique solution of A x = b for square invertible A, else None."""
    n = len(A)
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, K)
    if pivots != list(range(n)):
        return None
    return [R[i][n] for i in range(n)]


def det(M, K):
    A = [list(r) for r in M]
    n = len(A)
    d = K.one
    for c in range(n):
        pr = next((i for i in range(c, n) if not K.is_zero(A[i][c])), None)
        if pr is None:
            return K.zero
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            d = K.neg(d)
        d = K.mul(d, A[c][c])
        piv_inv = K.inv(A[c][c])
        for i in range(c + 1, n):
            if not K.is_zero(A[i][c]):
                f = K.mul(A[i][c], piv_inv)
                A[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(A[i], A[c])]
    return d


def diagonalize_symmetric(M, K):
    """Congruence diagonalization of a symmetric matrix.

    Returns ``(T, D)`` with ``transpose(T) M T = diag(D)`` and T invertible.
    Zero diagonal entries are moved to the end.  Requires odd
    characteristic (a zero diagonal with a nonzero off-diagonal entry is
    fixed by adding one basis vector to another).
    """
    n = len(M)
    A = [list(r) for r in M]
    T = identity(n, K)

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in T:
            row[i], row[j] = row[j], row[i]

    def add_to(i, j, f):
        # column i += f * column j, then row i += f * row j
        for row in A:
            row[i] = K.add(row[i], K.mul(f, row[j]))
        A[i] = [K.add(x, K.mul(f, y)) for x, y in zip(A[i], A[j])]
        for row in T:
            row[i] = K.add(row[i], K.mul(f, row[j]))

    for i in range(n):
        if K.is_zero(A[i][i]):
            j = next((j for j in range(i + 1, n) if not K.is_zero(A[j][j])), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if not K.is_zero(A[i][j])), None)
                if j is None:
                    continue
                add_to(i, j, K.one)
        piv_inv = K.inv(A[i][i])
        for j in range(i + 1, n):
            if not K.is_zero(A[i][j]):
                add_to(j, i, K.neg(K.mul(A[i][j], piv_inv)))

    diag = [A[i][i] for i in range(n)]
    order = sorted(range(n), key=lambda i: K.is_zero(diag[i]))
    if order != list(range(n)):
        T = [[row[i] for i in order] for row in T]
        diag = [diag[i] for i in order]
    return T, diag
