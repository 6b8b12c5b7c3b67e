"""Dense exact linear algebra over Q and Q(i).

Matrices are immutable; subspaces are stored as row bases.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .arith import Field, Scalar, one, to_scalar, zero


class Matrix:
    __slots__ = ("rows", "field", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], field: Field, ncols: int | None = None):
        data = tuple(tuple(to_scalar(x, field) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
        self.rows = data
        self.field = field
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _trusted(cls, rows, field: Field, ncols: int) -> "Matrix":
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.field = field
        obj.nrows = len(obj.rows)
        obj.ncols = ncols
        return obj

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field) -> "Matrix":
        z = zero(field)
        return cls._trusted([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field) -> "Matrix":
        z, o = zero(field), one(field)
        return cls._trusted([[o if i == j else z for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def diag(cls, entries: Sequence, field: Field) -> "Matrix":
        n = len(entries)
        z = zero(field)
        rows = [[to_scalar(entries[i], field) if i == j else z for j in range(n)] for i in range(n)]
        return cls._trusted(rows, field, n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def T(self) -> "Matrix":
        cols = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix._trusted(cols, self.field, self.nrows)

    def conj(self) -> "Matrix":
        if self.field is not Field.QI_HERMITIAN:
            return self
        return Matrix._trusted([[x.conjugate() for x in row] for row in self.rows], self.field, self.ncols)

    def H(self) -> "Matrix":
        """Conjugate transpose (plain transpose unless the field is hermitian)."""
        return self.conj().T()

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        z = zero(self.field)
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            new = []
            for col in cols:
                acc = z
                for k, x in nz:
                    y = col[k]
                    if y:
                        acc = acc + x * y
                new.append(acc)
            out.append(new)
        return Matrix._trusted(out, self.field, other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._trusted(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.field, self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = to_scalar(c, self.field)
        return Matrix._trusted([[c * x for x in row] for row in self.rows], self.field, self.ncols)

    def cols(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._trusted([[row[j] for j in idx] for row in self.rows], self.field, len(idx))

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix._trusted([self.rows[i] for i in idx], self.field, self.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("ambient dimension mismatch")
        return Matrix._trusted(self.rows + other.rows, self.field, self.ncols)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix._trusted([a + b for a, b in zip(self.rows, other.rows)], self.field, self.ncols + other.ncols)

    def to_lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self.rows]


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    z = zero(a.field)
    rows = [list(r) + [z] * b.ncols for r in a.rows] + [[z] * a.ncols + list(r) for r in b.rows]
    return Matrix._trusted(rows, a.field, a.ncols + b.ncols)


def empty(ncols: int, field: Field) -> Matrix:
    return Matrix._trusted([], field, ncols)


# ---------------------------------------------------------------- elimination


def rref(M: Matrix) -> tuple[Matrix, int, list[int]]:
    """Gauss-Jordan reduced row echelon form with unit pivots."""
    rows = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = one(M.field) / rows[r][c]
        prow = [x * inv if x else x for x in rows[r]]
        rows[r] = prow
        nzc = [j for j in range(c, nc) if prow[j]]
        for i in range(nr):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * prow[j]
        pivots.append(c)
        r += 1
    z = zero(M.field)
    for i in range(r, nr):
        rows[i] = [z] * nc
    return Matrix._trusted(rows, M.field, nc), r, pivots


def _integer_rows(M: Matrix) -> list[list[int]]:
    """Scale each row to integers (realified for Q(i)); rank is unchanged."""
    out = []
    if M.field is Field.Q:
        for row in M.rows:
            den = 1
            for x in row:
                d = x.denominator
                den = den * d // gcd(den, d)
            out.append([x.numerator * (den // x.denominator) for x in row])
        return out
    # A + iB  ->  [[A, -B], [B, A]]; each complex row gives two real rows
    for row in M.rows:
        den = 1
        for x in row:
            d = x.parts[2]
            den = den * d // gcd(den, d)
        re = [x.parts[0] * (den // x.parts[2]) for x in row]
        im = [x.parts[1] * (den // x.parts[2]) for x in row]
        out.append(re + [-v for v in im])
        out.append(im + re)
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination rank of an integer matrix."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    nr, nc = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        prow = a[r]
        for i in range(r + 1, nr):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, nc):
                ri[j] = (p * ri[j] - f * prow[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def rank(M: Matrix) -> int:
    """Rank via Bareiss elimination; Q(i) ranks come from the realified matrix."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    rr = bareiss_rank(_integer_rows(M))
    return rr if M.field is Field.Q else rr // 2


def kernel(M: Matrix) -> Matrix:
    """Right null space; columns form a basis (ncols x nullity)."""
    R, rk, pivots = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in set(pivots)]
    z, o = zero(M.field), one(M.field)
    basis = []
    for fcol in free:
        v = [z] * n
        v[fcol] = o
        for i, pc in enumerate(pivots):
            v[pc] = -R.rows[i][fcol]
        basis.append(v)
    return Matrix._trusted(basis, M.field, n).T() if basis else Matrix._trusted([[]] * n, M.field, 0)


def left_kernel(M: Matrix) -> Matrix:
    """Rows x with x M = 0."""
    return kernel(M.T()).T()


def solve(A: Matrix, B: Matrix) -> Matrix | None:
    """Some X with A X = B, or None when inconsistent."""
    if A.nrows != B.nrows:
        raise ValueError("shape mismatch")
    aug = A.hstack(B)
    R, rk, pivots = rref(aug)
    if any(p >= A.ncols for p in pivots):
        return None
    z = zero(A.field)
    X = [[z] * B.ncols for _ in range(A.ncols)]
    for i, pc in enumerate(pivots):
        X[pc] = list(R.rows[i][A.ncols:])
    return Matrix._trusted(X, A.field, B.ncols)


def solve_left(A: Matrix, B: Matrix) -> Matrix | None:
    """Some X with X A = B, or None."""
    X = solve(A.T(), B.T())
    return None if X is None else X.T()


def inverse(A: Matrix) -> Matrix:
    if A.nrows != A.ncols:
        raise ValueError("not square")
    n = A.nrows
    R, rk, pivots = rref(A.hstack(Matrix.identity(n, A.field)))
    if n and (len(pivots) < n or pivots[n - 1] != n - 1):
        raise ZeroDivisionError("singular matrix")
    return R.cols(range(n, 2 * n)).select_rows(range(n))


def row_basis(M: Matrix) -> Matrix:
    """rref with zero rows dropped: the canonical basis of the row space."""
    R, rk, _ = rref(M)
    return R.select_rows(range(rk))


def subspace_sum(A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.ncols:
        raise ValueError("ambient dimension mismatch")
    return row_basis(A.vstack(B))


def subspace_intersect(A: Matrix, B: Matrix) -> Matrix:
    """Intersection of row spaces: x A = y B  <=>  (x, -y) [A; B] = 0."""
    if A.ncols != B.ncols:
        raise ValueError("ambient dimension mismatch")
    A = row_basis(A)
    B = row_basis(B)
    if A.nrows == 0 or B.nrows == 0:
        return empty(A.ncols, A.field)
    K = left_kernel(A.vstack(B))
    if K.nrows == 0:
        return empty(A.ncols, A.field)
    X = K.cols(range(A.nrows))
    return row_basis(X @ A)


def contains(A: Matrix, v: Matrix) -> bool:
    """Whether the rows of ``v`` lie in the row space of ``A``."""
    return rank(A.vstack(v)) == rank(A)
