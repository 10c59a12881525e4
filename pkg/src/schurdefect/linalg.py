"""Exact linear algebra over a field: echelon forms, kernels, subspace lattice.

Subspaces are kept in reduced row-echelon form so that equality of subspaces
is entry-wise equality of their basis matrices; there are no tolerances
anywhere. Row reduction over prime fields switches to an int64 numpy kernel
for larger matrices (exact mod-p arithmetic); the pure-Python path is the
reference and the two are cross-tested for identical output.
"""

from __future__ import annotations

from bisect import bisect_left

import numpy as np

from .errors import NotContained, SingularMatrix
from .fields import Field, PrimeField

# numpy elimination pays off only past this many cells
_NUMPY_CELLS = 1500


def _rref_numpy(p: int, rows, ncols: int):
    M = np.array(rows, dtype=np.int64) % p
    nrows = M.shape[0]
    r = 0
    pivots = []
    for c in range(ncols):
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        # products stay below p^2 < 2^62: exact in int64
        M -= np.outer(col, M[r])
        M %= p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [[int(x) for x in M[i]] for i in range(r)], pivots


def _rref_rows(field: Field, rows, ncols: int):
    """Reduced row echelon of `rows`; returns (basis_rows, pivot_cols).

    Zero rows are dropped; pivots strictly increase; pivot entries are 1 and
    pivot columns are zero elsewhere (fully reduced, canonical).
    """
    if (
        isinstance(field, PrimeField)
        and rows
        and len(rows) * ncols >= _NUMPY_CELLS
    ):
        return _rref_numpy(field.p, rows, ncols)
    return _rref_rows_python(field, rows, ncols)


def _rref_rows_python(field: Field, rows, ncols: int):
    sub, mul, div = field.sub, field.mul, field.div
    basis: list[list] = []
    pivcols: list[int] = []
    for row in rows:
        r = list(row)
        for idx, pc in enumerate(pivcols):
            c = r[pc]
            if c:
                b = basis[idx]
                r = [x if not y else sub(x, mul(c, y)) for x, y in zip(r, b)]
        pc = next((t for t in range(ncols) if r[t]), None)
        if pc is None:
            continue
        inv = r[pc]
        if inv != field.one:
            r = [x if not x else div(x, inv) for x in r]
        for idx in range(len(basis)):
            c = basis[idx][pc]
            if c:
                basis[idx] = [x if not y else sub(x, mul(c, y))
                              for x, y in zip(basis[idx], r)]
        pos = bisect_left(pivcols, pc)
        basis.insert(pos, r)
        pivcols.insert(pos, pc)
    return basis, pivcols


class Matrix:
    """Dense matrix over one field; rows are lists of scalars."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: Field, data, ncols: int | None = None):
        self.field = field
        self.data = [list(r) for r in data]
        self.nrows = len(self.data)
        if self.nrows:
            self.ncols = len(self.data[0])
            if any(len(r) != self.ncols for r in self.data):
                raise ValueError("ragged rows")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [r[j] for r in self.data]

    def transpose(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix(self.field, [[] for _ in range(self.ncols)], 0)
        return Matrix(self.field, [list(c) for c in zip(*self.data)], self.nrows)

    def matvec(self, x):
        """m @ x for a column vector x (length ncols); skips zero entries of x."""
        if len(x) != self.ncols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = [f.zero] * self.nrows
        add, mul = f.add, f.mul
        for j, xj in enumerate(x):
            if xj:
                for i in range(self.nrows):
                    c = self.data[i][j]
                    if c:
                        out[i] = add(out[i], mul(c, xj))
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        if self.ncols != other.nrows:
            raise ValueError("inner dimension mismatch")
        f = self.field
        add, mul = f.add, f.mul
        ot = list(zip(*other.data)) if other.nrows else []
        out = []
        for r in self.data:
            row = []
            for c in range(other.ncols):
                acc = f.zero
                oc = ot[c]
                for k, rk in enumerate(r):
                    if rk:
                        v = oc[k]
                        if v:
                            acc = add(acc, mul(rk, v))
                row.append(acc)
            out.append(row)
        return Matrix(f, out, other.ncols)

    def stack(self, other: "Matrix") -> "Matrix":
        self.field.check_same(other.field)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.data + other.data, self.ncols)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise SingularMatrix("only square matrices are invertible")
        n = self.nrows
        f = self.field
        z, o = f.zero, f.one
        aug = [list(r) + [o if i == j else z for j in range(n)]
               for i, r in enumerate(self.data)]
        reduced, pivots = _rref_rows(f, aug, 2 * n)
        if len(reduced) < n or pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Matrix(f, [r[n:] for r in reduced], n)

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.nrows == other.nrows
                and self.ncols == other.ncols and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols})"


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form (same shape, zero rows at the bottom) + pivots."""
    basis, pivots = _rref_rows(m.field, m.data, m.ncols)
    z = m.field.zero
    rows = [list(r) for r in basis]
    while len(rows) < m.nrows:
        rows.append([z] * m.ncols)
    return Matrix(m.field, rows, m.ncols), tuple(pivots)


class Subspace:
    """Subspace of F^n, canonically represented by an RREF basis matrix."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis_rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = [list(r) for r in basis_rows]
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors) -> "Subspace":
        basis, pivots = _rref_rows(field, vectors, ambient_dim)
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field, ambient_dim) -> "Subspace":
        return cls(field, ambient_dim, [], ())

    @classmethod
    def full(cls, field, ambient_dim) -> "Subspace":
        ident = Matrix.identity(field, ambient_dim)
        return cls(field, ambient_dim, ident.data, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient_dim)

    def contains(self, vector) -> bool:
        if len(vector) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        f = self.field
        sub, mul = f.sub, f.mul
        r = list(vector)
        for idx, pc in enumerate(self.pivots):
            c = r[pc]
            if c:
                b = self.basis[idx]
                r = [sub(x, mul(c, y)) for x, y in zip(r, b)]
        return not any(r)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def coordinates(self, vector):
        """Coefficients of `vector` in the RREF basis; None if not contained."""
        f = self.field
        sub, mul = f.sub, f.mul
        r = list(vector)
        coords = []
        for idx, pc in enumerate(self.pivots):
            c = r[pc]
            coords.append(c)
            if c:
                b = self.basis[idx]
                r = [sub(x, mul(c, y)) for x, y in zip(r, b)]
        if any(r):
            return None
        return coords

    def equations(self) -> Matrix:
        """Matrix E with kernel(E) = self; rows are independent linear conditions."""
        ker = kernel(self.basis_matrix())
        return Matrix(self.field, ker.basis, self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim,
                     tuple(tuple(r) for r in self.basis)))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim} over {self.field})"


def kernel(m: Matrix) -> Subspace:
    """{x : m @ x = 0}, canonical; dim = ncols - rank."""
    f = m.field
    basis, pivots = _rref_rows(f, m.data, m.ncols)
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    z, o = f.zero, f.one
    neg = f.neg
    vecs = []
    for fc in free:
        v = [z] * m.ncols
        v[fc] = o
        for r, pc in zip(basis, pivots):
            if r[fc]:
                v[pc] = neg(r[fc])
        vecs.append(v)
    return Subspace.from_vectors(f, m.ncols, vecs)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.from_vectors(u.field, u.ambient_dim, u.basis + v.basis)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Kernel-of-stacked-basis method: coefficient vectors (a, b) with
    sum a_i u_i + sum b_j v_j = 0 give u-side combinations spanning u ∩ v."""
    _check_ambient(u, v)
    f = u.field
    n = u.ambient_dim
    ru, rv = u.dim, v.dim
    if ru == 0 or rv == 0:
        return Subspace.zero(f, n)
    cols = Matrix(f, [[u.basis[i][t] for i in range(ru)]
                      + [v.basis[j][t] for j in range(rv)]
                      for t in range(n)], ru + rv)
    coeffs = kernel(cols)
    add, mul = f.add, f.mul
    vecs = []
    for c in coeffs.basis:
        w = [f.zero] * n
        for i in range(ru):
            if c[i]:
                row = u.basis[i]
                w = [add(x, mul(c[i], y)) for x, y in zip(w, row)]
        vecs.append(w)
    return Subspace.from_vectors(f, n, vecs)


def complement(inner: Subspace, outer: Subspace) -> Subspace:
    """Deterministic direct complement of inner within outer: the rows of
    outer's RREF basis whose pivots are not pivots of inner."""
    _check_ambient(inner, outer)
    if not outer.contains_subspace(inner):
        raise NotContained("inner subspace is not contained in outer")
    innerpivs = set(inner.pivots)
    rows = [r for r, pc in zip(outer.basis, outer.pivots) if pc not in innerpivs]
    pivots = [pc for pc in outer.pivots if pc not in innerpivs]
    return Subspace(inner.field, inner.ambient_dim, rows, pivots)


def preimage(m: Matrix, w: Subspace) -> Subspace:
    """{x : m @ x ∈ w}."""
    if m.nrows != w.ambient_dim:
        raise ValueError("matrix codomain does not match subspace ambient")
    eqs = w.equations()
    if eqs.nrows == 0:
        return Subspace.full(m.field, m.ncols)
    return kernel(eqs @ m)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    u.field.check_same(v.field)
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
