"""Explicit elements of H carrying one isotropic subspace to another in the same orbit."""

from __future__ import annotations

from .errors import DifferentOrbitsError, InconsistencyError, WitnessNotFound
from .forms import Subspace, gram_of
from .group import IsometryElement
from .invariants import classify
from .linalg import Matrix, empty, kernel, left_kernel, rank, row_basis, solve_left
from .witt import complete_basis, find_congruence, witt_extend


class _Split:
    """S = Z + Y + K with Z = S meet X, Y = S meet O (X the chosen side, O the other)."""

    def __init__(self, S: Subspace, side: str):
        sp = S.space
        other = "W" if side == "U" else "U"
        self.X_idx, self.O_idx = sp.factor_idx(side), sp.factor_idx(other)
        B = S.basis
        BX, BO = B.cols(self.X_idx), B.cols(self.O_idx)
        r = B.nrows
        CZ = left_kernel(BO)
        CY = left_kernel(BX)
        CK = complete_basis(CZ.vstack(CY), r, sp.field)
        mul = lambda C, M: C @ M if C.nrows else empty(M.ncols, sp.field)  # noqa: E731
        self.B, self.BX = B, BX
        self.Z = mul(CZ, BX)
        self.Y = mul(CY, BO)
        self.KX = mul(CK, BX)
        self.KO = mul(CK, BO)
        self.P = self.Z.vstack(self.KX)  # basis of proj_X S


def _radical_split(P: Matrix, Z: Matrix, G: Matrix) -> tuple[Matrix, Matrix]:
    """(R', N) with Rad(span P) = span(Z) + span(R') and span P = Rad + span(N)."""
    field = G.field
    if P.nrows == 0:
        return empty(G.ncols, field), empty(G.ncols, field)
    K = kernel(gram_of(P, G))
    rad = (K.T() @ P) if K.ncols else empty(G.ncols, field)
    rad = row_basis(rad) if rad.nrows else rad
    # coordinates of the radical relative to a basis extending Z
    extra_rad = _extend(Z, rad)
    full_rad = Z.vstack(extra_rad)
    N = _extend(full_rad, P)
    return extra_rad, N


def _extend(A: Matrix, B: Matrix) -> Matrix:
    """Rows of B (in order) that extend the independent rows A to a basis of span(A) + span(B)."""
    rows = A
    out = empty(A.ncols, A.field)
    cur = rank(rows) if rows.nrows else 0
    for i in range(B.nrows):
        cand = rows.vstack(B.select_rows([i]))
        if rank(cand) > cur:
            rows, cur = cand, cur + 1
            out = out.vstack(B.select_rows([i]))
    return out


def _perp(P: Matrix, G: Matrix) -> Matrix:
    """Orthogonal complement of span(P) in (F^d, G), as rows."""
    if P.nrows == 0:
        return Matrix.identity(G.nrows, G.field)
    K = kernel(P.conj() @ G)
    return K.T() if K.ncols else empty(G.ncols, G.field)


def _factor_isometry(G: Matrix, kind: str, Z1: Matrix, P1: Matrix, Z2: Matrix, P2: Matrix, seed: int) -> Matrix:
    """An isometry g of the factor with g(Z1) = Z2 and g(span P1) = span P2.

    The nondegenerate part is matched on P itself or on its orthogonal
    complement (which has the same radical), whichever is smaller; the other
    route is tried if the first finds no isometry over the base field.
    """
    routes = []
    for use_perp in (False, True):
        Q1 = _perp(P1, G) if use_perp else P1
        Q2 = _perp(P2, G) if use_perp else P2
        R1, N1 = _radical_split(Q1, Z1, G)
        R2, N2 = _radical_split(Q2, Z2, G)
        if (R1.nrows, N1.nrows) != (R2.nrows, N2.nrows):
            raise InconsistencyError("matched pieces have different dimensions")
        routes.append((N1.nrows, use_perp, R1, N1, R2, N2))
    routes.sort(key=lambda x: (x[0], x[1]))
    for _, _, R1, N1, R2, N2 in routes:
        T = find_congruence(gram_of(N1, G), gram_of(N2, G), kind, seed=seed) if N1.nrows else N2
        if T is None:
            continue
        image_N = T @ N2 if N1.nrows else N2
        D = Z1.vstack(R1).vstack(N1)
        E = Z2.vstack(R2).vstack(image_N)
        return witt_extend(G, D, E, kind)
    raise WitnessNotFound("no isometry between the nondegenerate parts was found over the base field")


def _witness_from_side(S: Subspace, S2: Subspace, side: str, seed: int) -> IsometryElement:
    sp = S.space
    kind = sp.kind
    one, two = _Split(S, side), _Split(S2, side)
    other = "W" if side == "U" else "U"
    GX, GO = sp.factor_gram(side), sp.factor_gram(other)
    gX = _factor_isometry(GX, kind, one.Z, one.P, two.Z, two.P, seed)
    # lift each g_X(k_X) to a vector of S2 and read off its O part
    moved = one.KX @ gX.T() if one.KX.nrows else one.KX
    if moved.nrows:
        lam = solve_left(two.BX, moved)
        if lam is None:
            raise InconsistencyError("g_X does not carry proj_X S onto proj_X S2")
        lifted = lam @ two.B
        KO2 = lifted.cols(one.O_idx)
    else:
        KO2 = one.KO
    D = one.Y.vstack(one.KO)
    E = two.Y.vstack(KO2)
    gO = witt_extend(GO, D, E, kind)
    return IsometryElement(gX, gO) if side == "U" else IsometryElement(gO, gX)


def orbit_witness(S: Subspace, S2: Subspace, seed: int = 0) -> IsometryElement:
    """(g1, g2) in H with (g1 + g2) S = S2.

    Over Q or Q(i) the H-orbits can be finer than over R or C, so a witness
    may not exist over the base field; WitnessNotFound is raised when none is
    found.
    """
    if S.space != S2.space:
        raise DifferentOrbitsError("subspaces live in different form spaces")
    t1, t2 = classify(S), classify(S2)
    if t1 != t2:
        raise DifferentOrbitsError(f"different orbits: {t1} vs {t2}")
    last = None
    for side in ("U", "W"):
        try:
            h = _witness_from_side(S, S2, side, seed)
        except WitnessNotFound as exc:
            last = exc
            continue
        if not h.check(S.space) or h.apply(S) != S2:
            raise InconsistencyError("constructed witness fails its postcondition")
        return h
    raise last
