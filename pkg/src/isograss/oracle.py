"""Independent checks: Lie algebras, tangent-space orbit dimensions, random isometries.

Randomness comes from ``random.Random(seed)`` (Mersenne Twister), so every
sample is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Field, I
from .errors import InconsistencyError
from .forms import CaseTag, FormSpace, Subspace, is_isotropic, require_isotropic
from .group import IsometryElement
from .linalg import Matrix, block_diag, inverse, kernel, rank


@dataclass(frozen=True)
class LieAlgebraBasis:
    case: CaseTag
    factor: str
    basis: tuple[Matrix, ...]

    def __len__(self) -> int:
        return len(self.basis)


def _unknown_units(d: int, field: Field) -> list[Matrix]:
    """Spanning set of d x d matrices over the coefficient field of the Lie algebra.

    Rational for the real forms, Gaussian for complex orthogonal; for the
    hermitian case the real span of E_ij and i E_ij.
    """
    units = []
    scalars = [1, I] if field is Field.QI_HERMITIAN else [1]
    for s in scalars:
        for i in range(d):
            for j in range(d):
                rows = [[0] * d for _ in range(d)]
                rows[i][j] = s
                units.append(Matrix(rows, field, d))
    return units


def _flatten(M: Matrix, realify: bool) -> list:
    flat = [x for row in M.rows for x in row]
    if not realify:
        return flat
    return [x.real for x in flat] + [x.imag for x in flat]


def lie_algebra_of(G: Matrix) -> list[Matrix]:
    """Basis of {A : A^* G + G A = 0} (real span in the hermitian case)."""
    field = G.field
    d = G.nrows
    units = _unknown_units(d, field)
    herm = field is Field.QI_HERMITIAN
    coef_field = Field.Q if herm else field
    cols = [_flatten(E.H() @ G + G @ E, herm) for E in units]
    L = Matrix(list(zip(*cols)), coef_field, len(units))
    K = kernel(L)
    out = []
    for c in range(K.ncols):
        acc = Matrix.zeros(d, d, field)
        for k, E in enumerate(units):
            x = K.rows[k][c]
            if x:
                acc = acc + E.scale(x)
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def lie_algebra(space: FormSpace, factor: str) -> LieAlgebraBasis:
    """Lie algebra of the isometry group of the U or W block (or 'V' for all of G)."""
    if factor == "V":
        G = space.gram
    elif factor in ("U", "W"):
        G = space.factor_gram(factor)
    else:
        raise ValueError(f"factor must be U, W or V, got {factor!r}")
    basis = tuple(lie_algebra_of(G))
    expected = _group_dim(space.case, G.nrows)
    if len(basis) != expected:
        raise InconsistencyError(f"Lie algebra has dimension {len(basis)}, expected {expected}")
    return LieAlgebraBasis(space.case, factor, basis)


def _group_dim(case: CaseTag, d: int) -> int:
    if case is CaseTag.UNITARY:
        return d * d
    if case is CaseTag.SYMPLECTIC:
        return (d // 2) * (d + 1)
    return d * (d - 1) // 2


def h_algebra(space: FormSpace) -> list[Matrix]:
    """Basis of the Lie algebra of H in ambient coordinates."""
    zU = Matrix.zeros(space.dim_U, space.dim_U, space.field)
    zW = Matrix.zeros(space.dim_W, space.dim_W, space.field)
    return ([block_diag(A, zW) for A in lie_algebra(space, "U").basis]
            + [block_diag(zU, B) for B in lie_algebra(space, "W").basis])


def tangent_orbit_dim(S: Subspace) -> int:
    """Rank of A -> (A s_i mod S)_i over the H Lie algebra.

    Real dimension for the real forms (the hermitian case is realified),
    Q(i)-dimension for complex orthogonal.
    """
    require_isotropic(S)
    space = S.space
    R = S.basis
    pivots = [next(j for j, x in enumerate(row) if x) for row in R.rows]
    free = [j for j in range(space.dim) if j not in set(pivots)]
    herm = space.field is Field.QI_HERMITIAN
    images = []
    for A in h_algebra(space):
        moved = R @ A.T()  # row s_i goes to s_i A^T, i.e. A acting on the column s_i
        vec = []
        for row in moved.rows:
            red = list(row)
            for piv, base in zip(pivots, R.rows):
                c = red[piv]
                if c:
                    red = [x - c * y for x, y in zip(red, base)]
            vec.extend(red[j] for j in free)
        images.append(vec)
    if not images or not images[0]:
        return 0
    if herm:
        images = [[x.real for x in v] + [x.imag for x in v] for v in images]
        return rank(Matrix(images, Field.Q))
    return rank(Matrix(images, space.field))


# ---------------------------------------------------------------- sampling


def random_fraction(rng: random.Random, magnitude: int) -> Fraction:
    return Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, magnitude))


def cayley(A: Matrix) -> Matrix:
    """(I - A)(I + A)^{-1}."""
    n = A.nrows
    Id = Matrix.identity(n, A.field)
    return (Id - A) @ inverse(Id + A)


def cayley_sample(space: FormSpace, factor: str, seed, magnitude: int = 3, density: float = 1.0,
                  retries: int = 32) -> Matrix:
    """Cayley image of a random Lie algebra element of the given factor.

    Coefficients are rationals with numerator and denominator bounded by
    ``magnitude``; with ``density < 1`` each basis element is used with that
    probability.  Deterministic in ``seed``.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    basis = lie_algebra(space, factor).basis
    d = basis[0].nrows if basis else len(space.factor_idx(factor)) if factor != "V" else space.dim
    for _ in range(retries):
        acc = [[0] * d for _ in range(d)]
        for E in basis:
            if density >= 1 or rng.random() < density:
                c = random_fraction(rng, magnitude)
                if c:
                    for i, row in enumerate(E.rows):
                        for j, x in enumerate(row):
                            if x:
                                acc[i][j] += c * x
        A = Matrix(acc, space.field, d)
        try:
            return cayley(A)
        except ZeroDivisionError:
            continue
    raise RuntimeError("I + A stayed singular through every retry")


def component_labels(space: FormSpace) -> list[tuple[int, ...]]:
    """Labels of the components of H reachable by sign elements."""
    if space.case is CaseTag.REAL_ORTHOGONAL:
        return [(a, b, c, d) for a in (1, -1) for b in (1, -1) for c in (1, -1) for d in (1, -1)]
    if space.case is CaseTag.COMPLEX_ORTHOGONAL:
        return [(a, b) for a in (1, -1) for b in (1, -1)]
    return [()]


def _blocks(space: FormSpace) -> list[range]:
    pr = space.params
    if space.case is CaseTag.REAL_ORTHOGONAL:
        c = [0, pr.p1, pr.p1 + pr.q1, pr.p + pr.q1, pr.p + pr.q]
        return [range(c[i], c[i + 1]) for i in range(4)]
    if space.case is CaseTag.COMPLEX_ORTHOGONAL:
        return [space.u_idx, space.w_idx]
    return []


def sign_element(space: FormSpace, flips) -> tuple[IsometryElement, tuple[int, ...]]:
    """Diagonal isometry negating the basis vectors in ``flips`` and its component label.

    Real orthogonal labels are (t1, t2, t3, t4), the determinants on the
    u+, u-, w+, w- blocks; complex orthogonal labels are the determinants on
    U and W.  In the symplectic case e_i and f_i must be flipped together.
    """
    flips = set(flips)
    if any(not 0 <= j < space.dim for j in flips):
        raise IndexError(f"flip index out of range 0..{space.dim - 1}")
    if space.case is CaseTag.SYMPLECTIC:
        m, n = space.params.m, space.params.n
        partner = {}
        for i in range(m):
            partner[i], partner[m + i] = m + i, i
        for i in range(n - m):
            a, b = 2 * m + i, 2 * m + (n - m) + i
            partner[a], partner[b] = b, a
        if any(partner[j] not in flips for j in flips):
            raise ValueError("symplectic sign elements must flip e_i and f_i together")
    diag = [-1 if j in flips else 1 for j in range(space.dim)]
    g = Matrix.diag(diag, space.field)
    h = IsometryElement(g.cols(space.u_idx).select_rows(space.u_idx), g.cols(space.w_idx).select_rows(space.w_idx))
    label = tuple(-1 if sum(1 for j in blk if j in flips) % 2 else 1 for blk in _blocks(space))
    return h, label


def component_representative(space: FormSpace, label: tuple[int, ...]) -> IsometryElement:
    """Sign element in the component with the given label (flip the first vector of each negative block)."""
    blocks = _blocks(space)
    flips = {blk[0] for blk, t in zip(blocks, label) if t == -1}
    h, got = sign_element(space, flips)
    assert got == tuple(label)
    return h


def coset(space: FormSpace, label: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a component label in H / (H meet G_0)."""
    if space.case is CaseTag.REAL_ORTHOGONAL:
        t1, t2, t3, t4 = label
        return (t1 * t3, t2 * t4)
    if space.case is CaseTag.COMPLEX_ORTHOGONAL:
        return (label[0] * label[1],)
    return ()


def sample_h(space: FormSpace, seed, component: int = 0, magnitude: int = 3) -> IsometryElement:
    """Cayley samples on both factors composed with a component representative."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    g1 = cayley_sample(space, "U", rng, magnitude)
    g2 = cayley_sample(space, "W", rng, magnitude)
    labels = component_labels(space)
    rep = component_representative(space, labels[component % len(labels)])
    return IsometryElement(g1, g2) @ rep


# ---------------------------------------------------------------- random isotropic subspaces


def random_isotropic(space: FormSpace, r: int, seed, sparsity: float = 0.5, magnitude: int = 2) -> Subspace:
    """A random r-dimensional isotropic subspace.

    Symplectic: vectors drawn successively from the orthogonal complement of
    the previous ones.  Other cases: a sparse Cayley image of an element of
    the full isometry group applied to a fixed isotropic subspace.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if r > space.max_isotropic_dim():
        raise ValueError("r exceeds the maximal isotropic dimension")
    if space.case is CaseTag.SYMPLECTIC:
        return _random_symplectic(space, r, rng, sparsity, magnitude)
    from .orbits import canonical_rep, valid_tuples

    tuples = valid_tuples(space.case, space.params, r)
    base = canonical_rep(space.case, space.params, tuples[rng.randrange(len(tuples))])
    g = cayley_sample(space, "V", rng, magnitude, density=sparsity)
    S = base.apply(g)
    assert is_isotropic(S)
    return S


def _random_symplectic(space: FormSpace, r: int, rng: random.Random, sparsity: float, magnitude: int) -> Subspace:
    G = space.gram
    d = space.dim
    rows: list[list[Fraction]] = []
    while len(rows) < r:
        if rows:
            B = Matrix(rows, space.field, d)
            P = kernel(B @ G)  # columns y with <rows, y> = 0
            cand = [Fraction(0)] * d
            for c in range(P.ncols):
                if rng.random() < sparsity:
                    k = rng.randint(-magnitude, magnitude)
                    if k:
                        cand = [x + k * P.rows[j][c] for j, x in enumerate(cand)]
        else:
            cand = [Fraction(rng.randint(-magnitude, magnitude)) if rng.random() < sparsity else Fraction(0)
                    for _ in range(d)]
        if any(cand) and rank(Matrix(rows + [cand], space.field, d)) == len(rows) + 1:
            rows.append(cand)
    return Subspace(space, Matrix(rows, space.field, d))
