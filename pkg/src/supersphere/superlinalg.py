"""Supermatrices over superfunctions: supertrace, Berezinian and inverse.

Matrices are in standard format: the first ``p`` rows/columns are even, the
remaining ``q`` odd.  An even supermatrix has entry (i, j) of parity
``|i| + |j|``; only even supermatrices are inverted or have a Berezinian.
"""
from __future__ import annotations

from itertools import permutations

from .grassmann import SpaceDims, SuperFun


def _perm_sign(perm) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _det(rows: list[list[SuperFun]], dims: SpaceDims) -> SuperFun:
    """Leibniz determinant; entries must be even so they commute."""
    size = len(rows)
    if size == 0:
        return SuperFun.const(dims, 1)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = SuperFun.zero(dims)
    for perm in permutations(range(size)):
        term = SuperFun.const(dims, _perm_sign(perm))
        for i, j in enumerate(perm):
            if rows[i][j].is_zero():
                break
            term = term * rows[i][j]
        else:
            total = total + term
    return total


def _minor(rows, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]


def _inverse_even_block(rows: list[list[SuperFun]], dims: SpaceDims) -> list[list[SuperFun]]:
    """Inverse of a square matrix with even entries via adjugate / determinant."""
    size = len(rows)
    det = _det(rows, dims)
    if det.body().is_zero():
        raise ZeroDivisionError("singular block")
    inv_det = det.inverse()
    if size == 1:
        return [[inv_det]]
    out = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            cof = _det(_minor(rows, j, i), dims)
            out[i][j] = cof * inv_det if (i + j) % 2 == 0 else -(cof * inv_det)
    return out


class SuperMatrix:
    """Square supermatrix with block structure (p|q)."""

    __slots__ = ("dims", "p", "q", "rows")

    def __init__(self, dims: SpaceDims, p: int, q: int, rows: list[list[SuperFun]]):
        if len(rows) != p + q or any(len(r) != p + q for r in rows):
            raise ValueError(f"expected a {p + q}x{p + q} matrix")
        self.dims, self.p, self.q = dims, p, q
        self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, dims: SpaceDims, p: int, q: int) -> "SuperMatrix":
        size = p + q
        return cls(dims, p, q, [[SuperFun.const(dims, int(i == j)) for j in range(size)]
                                for i in range(size)])

    @property
    def size(self) -> int:
        return self.p + self.q

    def index_parity(self, i: int) -> int:
        """Parity of 0-based row/column index i."""
        return 0 if i < self.p else 1

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_even(self) -> bool:
        for i in range(self.size):
            for j in range(self.size):
                par = self.rows[i][j].parity()
                if par is None or (not self.rows[i][j].is_zero()
                                   and par != (self.index_parity(i) + self.index_parity(j)) % 2):
                    return False
        return True

    def blocks(self):
        p = self.p
        A = [r[:p] for r in self.rows[:p]]
        B = [r[p:] for r in self.rows[:p]]
        C = [r[:p] for r in self.rows[p:]]
        D = [r[p:] for r in self.rows[p:]]
        return A, B, C, D

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("block structure mismatch")
        rows = [[_dot(self.rows[i], [other.rows[k][j] for k in range(self.size)], self.dims)
                 for j in range(self.size)] for i in range(self.size)]
        return SuperMatrix(self.dims, self.p, self.q, rows)

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        return SuperMatrix(self.dims, self.p, self.q,
                           [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return SuperMatrix(self.dims, self.p, self.q,
                           [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return ((self.p, self.q) == (other.p, other.q)
                and all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)))

    __hash__ = None

    def map(self, fn) -> "SuperMatrix":
        """Apply ``fn`` entrywise (e.g. an even derivation)."""
        return SuperMatrix(self.dims, self.p, self.q, [[fn(a) for a in r] for r in self.rows])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"SuperMatrix({self.p}|{self.q})[{body}]"


def _dot(row, col, dims) -> SuperFun:
    acc = SuperFun.zero(dims)
    for a, b in zip(row, col):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a * b
    return acc


def _matmul(X, Y, dims):
    return [[_dot(X[i], [Y[k][j] for k in range(len(Y))], dims) for j in range(len(Y[0]))]
            for i in range(len(X))]


def matrix_parity(X: SuperMatrix) -> int | None:
    """0 for even, 1 for odd supermatrices (entry (i, j) of parity |X|+|i|+|j|), else None."""
    found = None
    for i in range(X.size):
        for j in range(X.size):
            a = X.rows[i][j]
            if a.is_zero():
                continue
            par = a.parity()
            if par is None:
                return None
            par = (par + X.index_parity(i) + X.index_parity(j)) % 2
            if found is not None and par != found:
                return None
            found = par
    return 0 if found is None else found


def supertrace(X: SuperMatrix) -> SuperFun:
    """``sum (-1)^(|i|(|X|+1)) X_ii``: even diagonal minus odd diagonal for even X.

    Odd matrices get a plain trace; inhomogeneous ones are treated as even.
    """
    sub = matrix_parity(X) != 1
    acc = SuperFun.zero(X.dims)
    for i in range(X.size):
        acc = acc - X.rows[i][i] if (i >= X.p and sub) else acc + X.rows[i][i]
    return acc


def superdet(X: SuperMatrix) -> SuperFun:
    """Berezinian ``det(A - B D^-1 C) / det(D)`` of an even invertible supermatrix."""
    A, B, C, D = X.blocks()
    dims = X.dims
    if X.q == 0:
        return _det(A, dims)
    Dinv = _inverse_even_block(D, dims)
    det_D_inv = _det(Dinv, dims)
    if X.p == 0:
        return det_D_inv
    BDC = _matmul(_matmul(B, Dinv, dims), C, dims)
    S = [[A[i][j] - BDC[i][j] for j in range(X.p)] for i in range(X.p)]
    return _det(S, dims) * det_D_inv


def sm_inverse(X: SuperMatrix) -> SuperMatrix:
    """Two-sided inverse by Schur complement of the odd block."""
    dims, p, q = X.dims, X.p, X.q
    A, B, C, D = X.blocks()
    if q == 0:
        return SuperMatrix(dims, p, 0, _inverse_even_block(A, dims))
    Dinv = _inverse_even_block(D, dims)
    if p == 0:
        return SuperMatrix(dims, 0, q, Dinv)
    BDinv = _matmul(B, Dinv, dims)
    DinvC = _matmul(Dinv, C, dims)
    S = [[A[i][j] - s for j, s in enumerate(row)] for i, row in enumerate(_matmul(BDinv, C, dims))]
    Sinv = _inverse_even_block(S, dims)
    top_right = [[-a for a in r] for r in _matmul(Sinv, BDinv, dims)]
    bottom_left = [[-a for a in r] for r in _matmul(DinvC, Sinv, dims)]
    corr = _matmul(_matmul(DinvC, Sinv, dims), BDinv, dims)
    bottom_right = [[Dinv[i][j] + corr[i][j] for j in range(q)] for i in range(q)]
    rows = [top_left + top_r for top_left, top_r in zip(Sinv, top_right)]
    rows += [bl + br for bl, br in zip(bottom_left, bottom_right)]
    return SuperMatrix(dims, p, q, rows)
