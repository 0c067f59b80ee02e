"""Exact integer linear algebra for idempotent unit-lattice matrices.

Fixed-lattice and kernel bases are canonicalized by Hermite normal form
(positive pivots, entries above a pivot reduced into [0, pivot)), so every
decomposition is byte-reproducible.  All arithmetic is exact; matrices here
are desk-scale (d ≤ 8), so no modular shortcuts are used.
"""

from fractions import Fraction


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged rows")
        self.entries = rows

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def identity(n):
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.entries)),)

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch %dx%d · %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        bt = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries))

    def transpose(self):
        return IntMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    @property
    def is_square(self):
        return self.rows == self.cols


def mat_is_idempotent(M):
    if not M.is_square:
        raise ValueError("idempotency only makes sense for square matrices")
    return M * M == M


def row_hnf(rows):
    """Row Hermite normal form with transformation.

    Returns (H, U) as lists of row tuples with U·rows = H, U unimodular,
    H in row echelon form with positive pivots and reduced entries above.
    """
    m = len(rows)
    H = [list(r) for r in rows]
    n = len(H[0]) if H else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def addrow(i, j, q):
        # row i -= q * row j
        H[i] = [a - q * b for a, b in zip(H[i], H[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    pivot = 0
    for col in range(n):
        while True:
            live = [i for i in range(pivot, m) if H[i][col] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(H[i][col]))
            if i0 != pivot:
                H[i0], H[pivot] = H[pivot], H[i0]
                U[i0], U[pivot] = U[pivot], U[i0]
            if len(live) == 1:
                break
            for i in range(pivot + 1, m):
                if H[i][col]:
                    addrow(i, pivot, H[i][col] // H[pivot][col])
        if pivot < m and H[pivot][col] != 0:
            if H[pivot][col] < 0:
                H[pivot] = [-a for a in H[pivot]]
                U[pivot] = [-a for a in U[pivot]]
            for i in range(pivot):
                if H[i][col]:
                    addrow(i, pivot, H[i][col] // H[pivot][col])
            pivot += 1
    return [tuple(r) for r in H], [tuple(r) for r in U]


def _lattice_basis(vectors):
    """Canonical (HNF) basis of the lattice spanned by the given vectors."""
    if not vectors:
        return []
    H, _ = row_hnf(list(vectors))
    return [r for r in H if any(r)]


def fixed_lattice_basis(M):
    """Canonical Z-basis of {v : Mv = v}, the image lattice of idempotent M."""
    if not mat_is_idempotent(M):
        raise ValueError("matrix is not idempotent")
    return _lattice_basis([M.column(j) for j in range(M.cols)])


def kernel_basis(M):
    """Canonical Z-basis of {v : Mv = 0} for idempotent M."""
    if not mat_is_idempotent(M):
        raise ValueError("matrix is not idempotent")
    rows = list(M.transpose().entries)
    if not rows:
        return []
    H, U = row_hnf(rows)
    ker = [u for h, u in zip(H, U) if not any(h)]
    return _lattice_basis(ker)


def det(M):
    """Determinant by fraction-free (Bareiss) elimination."""
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse_unimodular(M):
    """Exact integer inverse of a matrix with determinant ±1."""
    n = M.rows
    if not M.is_square:
        raise ValueError("inverse of a non-square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M.entries)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    out = []
    for i in range(n):
        row = a[i][n:]
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return IntMatrix(out)


class SummandDecomposition:
    """Z^d = fixed lattice ⊕ kernel for an idempotent matrix M, witnessed by
    the assembled basis matrix Y (fixed columns first) and its integer
    inverse T."""

    __slots__ = ("M", "r", "fixed_basis", "kernel_basis", "Y", "T", "det_sign")

    def __init__(self, M, r, fixed_basis, kernel_basis, Y, T, det_sign):
        self.M = M
        self.r = r
        self.fixed_basis = tuple(fixed_basis)
        self.kernel_basis = tuple(kernel_basis)
        self.Y = Y
        self.T = T
        self.det_sign = det_sign

    @property
    def d(self):
        return self.M.rows

    def y_coordinates(self, v):
        """Coordinates of v in the assembled basis (T·v)."""
        return self.T.apply(v)


def assemble_unimodular(fixed, kernel):
    """Assemble Y = [fixed | kernel] as columns, verify |det Y| = 1, and
    compute the exact integer inverse T."""
    vectors = list(fixed) + list(kernel)
    if not vectors:
        return IntMatrix(()), IntMatrix(()), 1
    d = len(vectors[0])
    if len(vectors) != d:
        raise ValueError("expected %d basis vectors, got %d" % (d, len(vectors)))
    Y = IntMatrix(tuple(zip(*vectors)))
    dY = det(Y)
    if dY not in (1, -1):
        raise ValueError("assembled basis is not unimodular (det = %d)" % dY)
    T = inverse_unimodular(Y)
    return Y, T, dY


def decompose(M):
    """Full summand decomposition of an idempotent d×d matrix."""
    fixed = fixed_lattice_basis(M)
    kernel = kernel_basis(M)
    Y, T, sign = assemble_unimodular(fixed, kernel)
    return SummandDecomposition(M, len(fixed), fixed, kernel, Y, T, sign)


def solve_in_lattice(v, basis):
    """Integer coordinates of v in the given lattice vectors, or None.

    Works for dependent spanning sets too: solves through the HNF of the
    vectors and pulls the answer back via the transformation matrix.
    """
    basis = [tuple(b) for b in basis]
    v = tuple(v)
    if not basis:
        return () if not any(v) else None
    if any(len(b) != len(v) for b in basis):
        raise ValueError("vector lengths differ")
    H, U = row_hnf(basis)
    t = [0] * len(basis)
    rem = list(v)
    for i, h in enumerate(H):
        piv = next((j for j, x in enumerate(h) if x), None)
        if piv is None:
            continue
        if rem[piv] % h[piv] != 0:
            return None
        q = rem[piv] // h[piv]
        t[i] = q
        rem = [a - q * b for a, b in zip(rem, h)]
    if any(rem):
        return None
    # coordinates in the original vectors: t·U
    return tuple(sum(t[i] * U[i][j] for i in range(len(basis)))
                 for j in range(len(basis)))
