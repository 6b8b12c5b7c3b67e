"""Form spaces V = U + W, subspaces, projections, radicals and signatures."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .arith import Field, conj, format_scalar, parse_scalar, real_part, zero
from .errors import NotIsotropicError, ParseError
from .linalg import Matrix, block_diag, empty, kernel, rank, row_basis


class CaseTag(enum.Enum):
    REAL_ORTHOGONAL = "real-orthogonal"
    UNITARY = "unitary"
    COMPLEX_ORTHOGONAL = "complex-orthogonal"
    SYMPLECTIC = "symplectic"

    @property
    def field(self) -> Field:
        return _FIELDS[self]

    @property
    def kind(self) -> str:
        """'symmetric', 'hermitian' or 'alternating'."""
        return _KINDS[self]

    @property
    def signed(self) -> bool:
        return self in (CaseTag.REAL_ORTHOGONAL, CaseTag.UNITARY)

    @classmethod
    def parse(cls, text: str) -> "CaseTag":
        key = text.strip().lower().replace("_", "-")
        for tag in cls:
            if key == tag.value or key == tag.name.lower().replace("_", "-"):
                return tag
        aliases = {"ro": cls.REAL_ORTHOGONAL, "u": cls.UNITARY, "co": cls.COMPLEX_ORTHOGONAL, "sp": cls.SYMPLECTIC,
                   "realorthogonal": cls.REAL_ORTHOGONAL, "complexorthogonal": cls.COMPLEX_ORTHOGONAL}
        if key.replace("-", "") in aliases:
            return aliases[key.replace("-", "")]
        raise ValueError(f"unknown case {text!r}")


_FIELDS = {
    CaseTag.REAL_ORTHOGONAL: Field.Q,
    CaseTag.UNITARY: Field.QI_HERMITIAN,
    CaseTag.COMPLEX_ORTHOGONAL: Field.QI_BILINEAR,
    CaseTag.SYMPLECTIC: Field.Q,
}
_KINDS = {
    CaseTag.REAL_ORTHOGONAL: "symmetric",
    CaseTag.UNITARY: "hermitian",
    CaseTag.COMPLEX_ORTHOGONAL: "symmetric",
    CaseTag.SYMPLECTIC: "alternating",
}


@dataclass(frozen=True)
class GroupParams:
    """(p, q, p1, q1) for the signed cases, (n, m) otherwise."""

    p: int | None = None
    q: int | None = None
    p1: int | None = None
    q1: int | None = None
    n: int | None = None
    m: int | None = None

    @classmethod
    def signed(cls, p: int, q: int, p1: int, q1: int) -> "GroupParams":
        return cls(p=p, q=q, p1=p1, q1=q1)

    @classmethod
    def split(cls, n: int, m: int) -> "GroupParams":
        return cls(n=n, m=m)

    def validate(self, case: CaseTag) -> None:
        if case.signed:
            vals = (self.p, self.q, self.p1, self.q1)
            if None in vals or self.n is not None or self.m is not None:
                raise ValueError(f"{case.value} needs exactly p, q, p1, q1")
            if not all(isinstance(v, int) for v in vals):
                raise ValueError("group parameters must be integers")
            if not (0 < self.p1 < self.p and 0 < self.q1 < self.q):
                raise ValueError(f"need 0 < p1 < p and 0 < q1 < q, got {self.to_dict()}")
        else:
            if None in (self.n, self.m) or any(v is not None for v in (self.p, self.q, self.p1, self.q1)):
                raise ValueError(f"{case.value} needs exactly n, m")
            if not (isinstance(self.n, int) and isinstance(self.m, int)):
                raise ValueError("group parameters must be integers")
            if not 0 < self.m < self.n:
                raise ValueError(f"need 0 < m < n, got {self.to_dict()}")

    def to_dict(self) -> dict:
        return {k: v for k, v in (("p", self.p), ("q", self.q), ("p1", self.p1), ("q1", self.q1),
                                  ("n", self.n), ("m", self.m)) if v is not None}

    @classmethod
    def from_dict(cls, d: dict) -> "GroupParams":
        extra = set(d) - {"p", "q", "p1", "q1", "n", "m"}
        if extra:
            raise ValueError(f"unknown group parameters {sorted(extra)}")
        return cls(**{k: int(v) for k, v in d.items()})


@dataclass(frozen=True, eq=False)
class FormSpace:
    case: CaseTag
    params: GroupParams
    dim: int
    dim_U: int
    gram: Matrix
    labels: tuple[str, ...]

    @property
    def field(self) -> Field:
        return self.case.field

    @property
    def kind(self) -> str:
        return self.case.kind

    @property
    def dim_W(self) -> int:
        return self.dim - self.dim_U

    @property
    def u_idx(self) -> range:
        return range(self.dim_U)

    @property
    def w_idx(self) -> range:
        return range(self.dim_U, self.dim)

    @property
    def gram_U(self) -> Matrix:
        return self.gram.cols(self.u_idx).select_rows(self.u_idx)

    @property
    def gram_W(self) -> Matrix:
        return self.gram.cols(self.w_idx).select_rows(self.w_idx)

    def factor_gram(self, factor: str) -> Matrix:
        return self.gram_U if factor == "U" else self.gram_W

    def factor_idx(self, factor: str) -> range:
        return self.u_idx if factor == "U" else self.w_idx

    def max_isotropic_dim(self) -> int:
        pr = self.params
        if self.case.signed:
            return min(pr.p, pr.q)
        if self.case is CaseTag.COMPLEX_ORTHOGONAL:
            return pr.n // 2
        return pr.n

    def __eq__(self, other):
        return isinstance(other, FormSpace) and (self.case, self.params) == (other.case, other.params)

    def __hash__(self):
        return hash((self.case, self.params))


@lru_cache(maxsize=None)
def standard_space(case: CaseTag, params: GroupParams) -> FormSpace:
    """The ambient space in the fixed coordinate order with its Gram matrix."""
    params.validate(case)
    field = case.field
    if case.signed:
        p, q, p1, q1 = params.p, params.q, params.p1, params.q1
        signs = [1] * p1 + [-1] * q1 + [1] * (p - p1) + [-1] * (q - q1)
        labels = ([f"u{i}+" for i in range(1, p1 + 1)] + [f"u{i}-" for i in range(1, q1 + 1)]
                  + [f"w{i}+" for i in range(1, p - p1 + 1)] + [f"w{i}-" for i in range(1, q - q1 + 1)])
        gram = Matrix.diag(signs, field)
        return FormSpace(case, params, p + q, p1 + q1, gram, tuple(labels))
    n, m = params.n, params.m
    if case is CaseTag.COMPLEX_ORTHOGONAL:
        labels = [f"u{i}" for i in range(1, m + 1)] + [f"w{i}" for i in range(1, n - m + 1)]
        return FormSpace(case, params, n, m, Matrix.identity(n, field), tuple(labels))
    gram = block_diag(_symplectic_block(m), _symplectic_block(n - m))
    labels = ([f"e{i}" for i in range(1, m + 1)] + [f"f{i}" for i in range(1, m + 1)]
              + [f"e{i}" for i in range(m + 1, n + 1)] + [f"f{i}" for i in range(m + 1, n + 1)])
    return FormSpace(case, params, 2 * n, 2 * m, gram, tuple(labels))


def _symplectic_block(k: int) -> Matrix:
    rows = [[0] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        rows[i][k + i] = 1
        rows[k + i][i] = -1
    return Matrix(rows, Field.Q, 2 * k)


def gram_of(B: Matrix, G: Matrix) -> Matrix:
    """Gram matrix of the rows of B: conj(B) G B^T."""
    return B.conj() @ G @ B.T()


def congruent(M: Matrix, P: Matrix) -> Matrix:
    """conj(P) M P^T: the Gram matrix after replacing the basis b by P b."""
    return P.conj() @ M @ P.T()


# ---------------------------------------------------------------- subspaces


class Subspace:
    """A subspace of a form space held as an rref row basis."""

    __slots__ = ("space", "basis")

    def __init__(self, space: FormSpace, rows, *, require_independent: bool = True):
        M = rows if isinstance(rows, Matrix) else Matrix(rows, space.field, space.dim)
        if M.ncols != space.dim:
            raise ValueError(f"basis has {M.ncols} columns, ambient dimension is {space.dim}")
        if M.field is not space.field:
            M = Matrix(M.rows, space.field, M.ncols)
        R = row_basis(M)
        if require_independent and R.nrows != M.nrows:
            raise ValueError("basis rows are linearly dependent")
        self.space = space
        self.basis = R

    @classmethod
    def from_rref(cls, space: FormSpace, R: Matrix) -> "Subspace":
        obj = object.__new__(cls)
        obj.space = space
        obj.basis = R
        return obj

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.space == other.space and self.basis == other.basis

    def __hash__(self):
        return hash((self.space, self.basis))

    def __repr__(self):
        return f"Subspace({self.space.case.value}, {self.space.params.to_dict()}, {self.basis!r})"

    def gram(self) -> Matrix:
        return gram_of(self.basis, self.space.gram)

    def apply(self, h: Matrix) -> "Subspace":
        """Image under the ambient isometry h (acting on column vectors)."""
        return Subspace(self.space, self.basis @ h.T())

    def contains(self, other: "Subspace") -> bool:
        return rank(self.basis.vstack(other.basis)) == self.dim


def is_isotropic(S: Subspace) -> bool:
    return S.gram().is_zero()


def require_isotropic(S: Subspace) -> None:
    if not is_isotropic(S):
        raise NotIsotropicError("subspace is not isotropic")


def _coordinate_projection(S: Subspace, keep: range) -> Subspace:
    z = zero(S.space.field)
    keep_set = set(keep)
    rows = [[x if j in keep_set else z for j, x in enumerate(row)] for row in S.basis.rows]
    return Subspace(S.space, Matrix._trusted(rows, S.space.field, S.space.dim), require_independent=False)


def proj_U(S: Subspace) -> Subspace:
    """(S + W) meet U, which is the coordinate projection onto the U block."""
    return _coordinate_projection(S, S.space.u_idx)


def proj_W(S: Subspace) -> Subspace:
    return _coordinate_projection(S, S.space.w_idx)


def block_subspace(space: FormSpace, factor: str) -> Subspace:
    idx = space.factor_idx(factor)
    rows = [[1 if j == i else 0 for j in range(space.dim)] for i in idx]
    return Subspace(space, rows)


def intersect(A: Subspace, B: Subspace) -> Subspace:
    from .linalg import subspace_intersect

    return Subspace.from_rref(A.space, subspace_intersect(A.basis, B.basis))


def radical(S: Subspace) -> Subspace:
    """S meet S-perp: kernel of the restricted Gram matrix lifted back to V."""
    if S.dim == 0:
        return S
    K = kernel(S.gram())
    if K.ncols == 0:
        return Subspace.from_rref(S.space, empty(S.space.dim, S.space.field))
    return Subspace(S.space, K.T() @ S.basis)


# ---------------------------------------------------------------- congruence


def diagonalize(M: Matrix, kind: str) -> tuple[list, Matrix]:
    """Congruence diagonalization of a symmetric or hermitian matrix.

    Returns (d, P) with conj(P) M P^T = diag(d).  When the remaining block has
    zero diagonal but a nonzero entry A_ij, row i is replaced by
    row_i + conj(A_ij) row_j, giving diagonal entry 2|A_ij|^2 (char 0).
    """
    if kind not in ("symmetric", "hermitian"):
        raise ValueError("alternating forms are not diagonalizable")
    field = M.field
    n = M.nrows
    A = [list(r) for r in M.rows]
    P = [list(r) for r in Matrix.identity(n, field).rows]

    def add_multiple(i: int, j: int, c) -> None:
        # basis_i += c * basis_j
        cc = conj(c, field)
        P[i] = [x + c * y for x, y in zip(P[i], P[j])]
        A[i] = [x + cc * y for x, y in zip(A[i], A[j])]
        for row in A:
            row[i] = row[i] + c * row[j]

    def swap(i: int, j: int) -> None:
        P[i], P[j] = P[j], P[i]
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(k, n) if i != j and A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            add_multiple(i, j, conj(A[i][j], field))
            piv = i
        if piv != k:
            swap(k, piv)
        akk = A[k][k]
        for l in range(k + 1, n):
            if A[k][l]:
                add_multiple(l, k, -(A[k][l] / akk))
    d = [A[i][i] for i in range(n)]
    return d, Matrix._trusted(P, field, n)


class IsometryType(NamedTuple):
    s: int
    s_plus: int
    s_minus: int


class RankType(NamedTuple):
    s: int
    rank: int


def inertia(M: Matrix, kind: str) -> IsometryType:
    """(nullity, positive, negative) of a real symmetric or hermitian Gram matrix."""
    d, _ = diagonalize(M, kind)
    pos = sum(1 for x in d if real_part(x) > 0)
    neg = sum(1 for x in d if real_part(x) < 0)
    return IsometryType(len(d) - pos - neg, pos, neg)


def signature(S: Subspace) -> IsometryType:
    if not S.space.case.signed:
        raise ValueError(f"signature is undefined for {S.space.case.value}; use rank_type")
    return inertia(S.gram(), S.space.kind)


def rank_type(S: Subspace) -> RankType:
    """Radical dimension and rank of the restricted form (any case)."""
    rk = rank(S.gram()) if S.dim else 0
    return RankType(S.dim - rk, rk)


# ---------------------------------------------------------------- file I/O


def subspace_to_json(S: Subspace) -> dict:
    sp = S.space
    return {
        "case": sp.case.value,
        "params": sp.params.to_dict(),
        "basis": [[format_scalar(x, sp.field) for x in row] for row in S.basis.rows],
    }


def subspace_from_json(obj) -> Subspace:
    try:
        if not isinstance(obj, dict):
            raise ValueError("top level must be an object")
        missing = {"case", "params", "basis"} - set(obj)
        if missing:
            raise ValueError(f"missing keys {sorted(missing)}")
        case = CaseTag.parse(obj["case"])
        params = GroupParams.from_dict(obj["params"])
        space = standard_space(case, params)
        rows = obj["basis"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("basis must be a list of rows")
        parsed = [[parse_scalar(x, space.field) for x in row] for row in rows]
        if any(len(r) != space.dim for r in parsed):
            raise ValueError(f"every basis row needs {space.dim} entries")
        return Subspace(space, Matrix(parsed, space.field, space.dim))
    except (ValueError, TypeError, ZeroDivisionError, KeyError) as exc:
        raise ParseError(str(exc)) from exc


def load_subspace(path: str) -> Subspace:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return subspace_from_json(obj)
