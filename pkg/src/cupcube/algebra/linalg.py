"""Integer and Z/n linear algebra.

Everything here works on plain Python ints (lists of lists), so no
intermediate value can wrap around.  Vectors are rows and matrices act on
the right: a vector ``x`` is in the kernel of ``A`` when ``x A = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, prod

Matrix = list  # list[list[int]]


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def shape(A):
    r = len(A)
    return r, (len(A[0]) if r else 0)


def matmul(A, B, n=0):
    """Exact product ``A B``, reduced mod ``n`` when ``n > 0``."""
    r, k = shape(A)
    k2, c = shape(B)
    if k != k2 and r and k2:
        raise ValueError(f"shape mismatch {r}x{k} @ {k2}x{c}")
    cols = list(zip(*B)) if B else []
    out = [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]
    if n:
        out = [[v % n for v in row] for row in out]
    return out


def vecmat(x, A, n=0):
    if not A:
        return []
    out = [sum(xi * row[j] for xi, row in zip(x, A)) for j in range(len(A[0]))]
    if n:
        out = [v % n for v in out]
    return out


def det(A):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    k = len(A)
    if k == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for i in range(k - 1):
        if M[i][i] == 0:
            for r in range(i + 1, k):
                if M[r][i] != 0:
                    M[i], M[r] = M[r], M[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) // prev
        prev = M[i][i]
    return sign * M[k - 1][k - 1]


def snf(A):
    """Smith normal form ``U A V = S`` over the integers.

    Returns ``(U, S, V)`` with ``U`` and ``V`` unimodular and ``S``
    diagonal, ``S[i][i]`` non-negative and dividing ``S[i+1][i+1]``.
    """
    r, c = shape(A)
    S = [list(row) for row in A]
    U = identity(r)
    V = identity(c)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        S[dst] = [a + k * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in S:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(r, c)):
        while True:
            # pivot: smallest nonzero |entry| in the trailing block
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    v = S[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return U, S, V
            _, i, j = best
            swap_rows(t, i)
            swap_cols(t, j)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, r):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, c):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            # enforce divisibility of the trailing block by the pivot
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                        if S[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-v for v in S[t]]
            U[t] = [-v for v in U[t]]
    return U, S, V


def diagonal(S):
    r, c = shape(S)
    return [S[i][i] for i in range(min(r, c))]


def inverse_unimodular(U):
    """Inverse of an integer matrix with determinant +-1 (Gauss-Jordan over Z)."""
    k = len(U)
    M = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(U)]
    for col in range(k):
        # Euclid on the column to bring a unit to the pivot
        while True:
            rows = [i for i in range(col, k) if M[i][col]]
            if not rows:
                raise ValueError("matrix is singular")
            piv = min(rows, key=lambda i: abs(M[i][col]))
            M[col], M[piv] = M[piv], M[col]
            p = M[col][col]
            done = True
            for i in range(col + 1, k):
                q = M[i][col] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[col])]
                if M[i][col]:
                    done = False
            if done:
                break
        if abs(M[col][col]) != 1:
            raise ValueError("matrix is not unimodular")
        if M[col][col] == -1:
            M[col] = [-v for v in M[col]]
    for col in range(k - 1, -1, -1):
        for i in range(col):
            q = M[i][col]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[col])]
    return [row[k:] for row in M]


@dataclass
class ModuleBasis:
    """A finite submodule of ``(Z/n)^k`` as a direct sum of cyclic pieces.

    ``gens[i]`` generates a cyclic summand of order ``orders[i]``.  When the
    module came out of :func:`kernel_mod`, ``coords`` recovers the
    coordinates of a member with respect to ``gens``.
    """

    n: int
    dim: int
    gens: list
    orders: list
    # row i of `_to_coords`, paired with `_scale[i]`, reads off coordinate i
    _to_coords: list = field(default=None, repr=False)
    _scale: list = field(default=None, repr=False)

    @property
    def size(self):
        return prod(self.orders)

    @property
    def rank(self):
        return len(self.gens)

    def combine(self, coeffs):
        out = [0] * self.dim
        for c, g in zip(coeffs, self.gens):
            if c:
                out = [(a + c * b) % self.n for a, b in zip(out, g)]
        return out

    def elements(self):
        """Every member, in lexicographic order of coordinates."""
        for coeffs in product(*(range(o) for o in self.orders)):
            yield self.combine(coeffs)

    def coords(self, x):
        if self._to_coords is None:
            raise ValueError("basis carries no coordinate data")
        out = []
        for col, s, o in zip(self._to_coords, self._scale, self.orders):
            y = sum(a * b for a, b in zip(x, col)) % self.n
            if y % s:
                raise ValueError("vector is not in the module")
            out.append((y // s) % o)
        if self.combine(out) != [v % self.n for v in x]:
            raise ValueError("vector is not in the module")
        return out

    def __contains__(self, x):
        try:
            self.coords(x)
        except ValueError:
            return False
        return True


def kernel_mod(A, n, rows=None):
    """Left kernel ``{x in (Z/n)^r : x A = 0 mod n}`` of an ``r x c`` matrix.

    The matrix is lifted to Z and put in Smith form ``U A V = S``.  Writing
    ``y = x U^-1``, the condition becomes ``y_i d_i = 0 mod n``, so row ``i``
    of ``U`` scaled by ``n / gcd(n, d_i)`` generates a cyclic summand of
    order ``gcd(n, d_i)``.  ``rows`` gives the ambient dimension when ``A``
    has no columns.
    """
    if n <= 0:
        raise ValueError("kernel_mod needs a positive modulus")
    r = len(A) if rows is None else rows
    if A and A[0]:
        U, S, _ = snf([[v % n for v in row] for row in A])
        d = diagonal(S) + [0] * (r - min(shape(A)))
    else:
        U, d = identity(r), [0] * r
    Uinv = inverse_unimodular(U) if r else []
    pieces = []
    for i in range(r):
        order = gcd(n, d[i])  # gcd(n, 0) = n: free coordinate
        if order == 1:
            continue
        scale = n // order
        gen = [(scale * v) % n for v in U[i]]
        col = [Uinv[j][i] for j in range(r)]
        pieces.append((order, gen, col, scale))
    pieces.sort(key=lambda p: (p[0], p[1]))
    return ModuleBasis(
        n=n,
        dim=r,
        gens=[p[1] for p in pieces],
        orders=[p[0] for p in pieces],
        _to_coords=[p[2] for p in pieces],
        _scale=[p[3] for p in pieces],
    )


def span_mod(vectors, n, dim):
    """Submodule of ``(Z/n)^dim`` spanned by ``vectors``, in normal form.

    Computed as the kernel of the kernel: the span is the set of x killed
    by every functional that kills all the vectors.
    """
    if not vectors:
        return kernel_mod(identity(dim), n)
    # functionals killing the span: y with V y^T = 0, i.e. left kernel of V^T
    Vt = [list(col) for col in zip(*vectors)]
    ann = kernel_mod(Vt, n)
    if not ann.gens:
        return kernel_mod([[] for _ in range(dim)], n, rows=dim)
    # scale each annihilating functional so it is a map to Z/n
    cols = [list(g) for g in ann.gens]
    A = [list(row) for row in zip(*cols)]
    return kernel_mod(A, n)


def solve_mod(A, b, n):
    """One solution ``x`` of ``x A = b (mod n)``, or ``None``."""
    r, c = shape(A)
    U, S, V = snf([[v % n for v in row] for row in A])
    d = diagonal(S)
    rhs = vecmat(b, V, n) if c else []
    y = [0] * r
    for j in range(c):
        dj = d[j] if j < len(d) else 0
        g = gcd(dj, n)
        if rhs[j] % g:
            return None
        if g == n:
            continue  # dj = 0 mod n and rhs = 0
        m = n // g
        y[j] = (rhs[j] // g) * pow(dj // g, -1, m) % m
    return vecmat(y, U, n) if r else []
