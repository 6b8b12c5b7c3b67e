"""Witt extension of partial isometries and explicit isometries between small forms.

Conventions: vectors are rows, ``<x, y> = conj(x) G y^T``, and a group element
g acts on columns, so the rows of a basis D are carried to ``D g^T``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from sympy import symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic_normal

from .arith import Field, GaussianRational, conj, gaussian_sqrt, one, rational_sqrt, to_scalar, zero
from .errors import InconsistencyError
from .forms import congruent, diagonalize, gram_of
from .linalg import Matrix, empty, inverse, kernel, rank, solve

_X, _Y, _Z = symbols("x y z", integer=True)


def _kind_of(field: Field, alternating: bool) -> str:
    if alternating:
        return "alternating"
    return "hermitian" if field is Field.QI_HERMITIAN else "symmetric"


def form_kind(G: Matrix) -> str:
    """'alternating' when G = -G^T, otherwise symmetric or hermitian by field."""
    return _kind_of(G.field, G.T() == -G and not G.is_zero())


def _pair(u: Matrix, v: Matrix, G: Matrix):
    """<u, v> for single-row matrices."""
    return (u.conj() @ G @ v.T()).rows[0][0]


def complete_basis(C: Matrix, n: int, field: Field) -> Matrix:
    """Rows of standard unit vectors extending the independent rows C to a basis of F^n."""
    rows = list(C.rows)
    extra = []
    cur = rank(C) if C.nrows else 0
    for j in range(n):
        e = [one(field) if i == j else zero(field) for i in range(n)]
        if rank(Matrix(rows + [e], field, n)) > cur:
            rows.append(e)
            extra.append(e)
            cur += 1
        if cur == n:
            break
    return Matrix(extra, field, n) if extra else empty(n, field)


def _hyperbolic_partners(X: Matrix, N: Matrix, G: Matrix, kind: str) -> Matrix:
    """Isotropic z_j with <x_i, z_j> = delta_ij, z_j orthogonal to N and to each other."""
    field = G.field
    d = G.nrows
    zs: list[Matrix] = []
    for j in range(X.nrows):
        cons = X.conj() @ G
        rhs = [[one(field) if i == j else zero(field)] for i in range(X.nrows)]
        if N.nrows:
            cons = cons.vstack(N.conj() @ G)
            rhs += [[zero(field)] for _ in range(N.nrows)]
        for z in zs:
            cons = cons.vstack(z.conj() @ G)
            rhs.append([zero(field)])
        sol = solve(cons, Matrix(rhs, field, 1))
        if sol is None:
            raise ValueError("form is degenerate: no hyperbolic partner exists")
        z = sol.T()
        if kind != "alternating":
            t = -_pair(z, z, G) / 2
            if t:
                z = z + X.select_rows([j]).scale(t)
        zs.append(z)
    out = empty(d, field)
    for z in zs:
        out = out.vstack(z)
    return out


def symplectic_basis(rows: Matrix, G: Matrix) -> Matrix:
    """Rows e_1..e_k, f_1..f_k of a nondegenerate alternating subspace with <e_i, f_j> = delta_ij."""
    field = G.field
    pool = [rows.select_rows([i]) for i in range(rows.nrows)]
    es, fs = [], []
    while pool:
        e = pool.pop(0)
        idx = next((i for i, f in enumerate(pool) if _pair(e, f, G)), None)
        if idx is None:
            raise ValueError("subspace is degenerate for the alternating form")
        f = pool.pop(idx)
        f = f.scale(one(field) / _pair(e, f, G))
        new_pool = []
        for x in pool:
            x = x + e.scale(_pair(f, x, G)) - f.scale(_pair(e, x, G))
            new_pool.append(x)
        pool = new_pool
        es.append(e)
        fs.append(f)
    out = empty(G.ncols, field)
    for v in es + fs:
        out = out.vstack(v)
    return out


def _reflection(v: Matrix, G: Matrix, zeta) -> Matrix:
    """x -> x - (1 - zeta) v <v, x> / <v, v>, as a matrix acting on columns."""
    n = G.nrows
    kappa = (1 - zeta) / _pair(v, v, G)
    return Matrix.identity(n, G.field) - v.T() @ (v.conj() @ G).scale(kappa)


def witt_extend(G: Matrix, D: Matrix, E: Matrix, kind: str | None = None) -> Matrix:
    """An isometry g of (F^d, G) with D g^T = E.

    D and E hold independent rows with equal Gram matrices.  The radical of
    span(D) is first paired off with isotropic partners (on both sides), which
    makes the domain nondegenerate.  Symmetric and hermitian forms are then
    handled one orthogonal vector at a time with (unitary) reflections; for
    alternating forms both sides are completed by symplectic bases of the
    orthogonal complements.
    """
    field = G.field
    d = G.nrows
    kind = kind or form_kind(G)
    if D.shape != E.shape or D.ncols != d:
        raise ValueError(f"dimension mismatch: domain {D.shape}, image {E.shape}, form {G.shape}")
    k = D.nrows
    if rank(D) != k or rank(E) != k:
        raise ValueError("domain and image must have independent rows")
    if gram_of(D, G) != gram_of(E, G):
        raise ValueError("the map does not preserve the form")
    if k == 0:
        return Matrix.identity(d, field)

    gram_D = gram_of(D, G)
    Kc = kernel(gram_D)
    C = Kc.T() if Kc.ncols else empty(k, field)
    CN = complete_basis(C, k, field)
    X1, N1 = C @ D if C.nrows else empty(d, field), CN @ D if CN.nrows else empty(d, field)
    X2, N2 = C @ E if C.nrows else empty(d, field), CN @ E if CN.nrows else empty(d, field)
    Z1 = _hyperbolic_partners(X1, N1, G, kind)
    Z2 = _hyperbolic_partners(X2, N2, G, kind)
    F1 = X1.vstack(N1).vstack(Z1)
    F2 = X2.vstack(N2).vstack(Z2)
    if gram_of(F1, G) != gram_of(F2, G):
        raise InconsistencyError("hyperbolic completion broke the Gram match")

    if kind == "alternating":
        comp1 = kernel(F1.conj() @ G).T()
        comp2 = kernel(F2.conj() @ G).T()
        M1 = F1.vstack(symplectic_basis(comp1, G)) if comp1.nrows else F1
        M2 = F2.vstack(symplectic_basis(comp2, G)) if comp2.nrows else F2
        g = (inverse(M1) @ M2).T()
    else:
        vals, P = diagonalize(gram_of(F1, G), kind)
        A = P @ F1
        B = P @ F2
        g = Matrix.identity(d, field)
        for i in range(A.nrows):
            c = A.select_rows([i]) @ g.T()
            b = B.select_rows([i])
            if c == b:
                continue
            v = c - b
            vv = _pair(v, v, G)
            if vv:
                zeta = 1 - vv / _pair(v, c, G)
                g = _reflection(v, G, zeta) @ g
            else:
                v = c + b
                vv = _pair(v, v, G)
                zeta = 1 - vv / _pair(v, c, G)
                g = _reflection(v, G, zeta) @ g
                g = _reflection(b, G, -one(field)) @ g
    if g.H() @ G @ g != G or D @ g.T() != E:
        raise InconsistencyError("Witt extension failed its own check")
    return g


# ---------------------------------------------------------------- isometries between small forms


def _legendre(a: Fraction, b: Fraction, c: Fraction):
    """Nontrivial rational (x, y, z) with a x^2 + b y^2 + c z^2 = 0, or None."""
    from math import lcm

    den = lcm(Fraction(a).denominator, Fraction(b).denominator, Fraction(c).denominator)
    A, B, Cc = (int(Fraction(v) * den) for v in (a, b, c))
    try:
        sol = diop_ternary_quadratic_normal(A * _X**2 + B * _Y**2 + Cc * _Z**2)
    except (ValueError, TypeError, NotImplementedError):
        return None
    if sol is None or sol[0] is None:
        return None
    x, y, z = (Fraction(int(s)) for s in sol)
    if (x, y, z) == (0, 0, 0) or A * x * x + B * y * y + Cc * z * z != 0:
        return None
    return x, y, z


def _hyperbolic_represent(u: list, diag: list, target, field: Field) -> list:
    """Given an isotropic u for diag(diag), a vector of norm target."""
    k = len(diag)
    E = Matrix.diag(diag, field)
    U = Matrix([u], field, k)
    idx = next(j for j, x in enumerate(u) if x)
    # w with <u, w> = 1
    w = [zero(field)] * k
    w[idx] = one(field) / (conj(u[idx], field) * diag[idx])
    W = Matrix([w], field, k)
    c = _pair(W, W, E) / 2
    Up = W - U.scale(c)
    V = U + Up.scale(to_scalar(target, field) / 2)
    return list(V.rows[0])


def _represent_q(diag: list[Fraction], target: Fraction, rng: random.Random, trials: int = 400):
    """Rational vector v with sum diag_j v_j^2 = target, or None."""
    k = len(diag)
    target = Fraction(target)
    if k == 0:
        return [] if target == 0 else None
    if k == 1:
        s = rational_sqrt(target / diag[0])
        return None if s is None else [s]
    if k == 2:
        sol = _legendre(diag[0], diag[1], -target)
        if sol is None:
            return None
        x, y, z = sol
        if z:
            return [x / z, y / z]
        return _hyperbolic_represent([x, y], diag, target, Field.Q)
    # isotropic subform gives everything
    for i in range(k):
        for j in range(i + 1, k):
            s = rational_sqrt(-diag[j] / diag[i])
            if s is not None:
                u = [Fraction(0)] * k
                u[i], u[j] = s, Fraction(1)
                return _hyperbolic_represent(u, diag, target, Field.Q)
    for attempt in range(trials):
        bound = 1 + attempt // 40
        extra = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if attempt else Fraction(0)
                 for _ in range(k - 2)]
        rest = target - sum(dj * x * x for dj, x in zip(diag[2:], extra))
        if rest == 0:
            continue
        sub = _represent_q(diag[:2], rest, rng, trials)
        if sub is not None:
            return sub + extra
    return None


def _represent_hermitian(diag: list[Fraction], target: Fraction, rng: random.Random):
    """Gaussian vector v with sum diag_j |v_j|^2 = target (a rational quadratic problem in 2k variables)."""
    doubled = [x for d in diag for x in (d, d)]
    sol = _represent_q(doubled, target, rng)
    if sol is None:
        return None
    return [GaussianRational(sol[2 * j], sol[2 * j + 1]) for j in range(len(diag))]


def _represent_gaussian_bilinear(diag: list, target, rng: random.Random, bound: int = 3):
    """Gaussian vector v with sum diag_j v_j^2 = target (bilinear form over Q(i)), or None."""
    k = len(diag)
    target = to_scalar(target, Field.QI_BILINEAR)
    if k == 1:
        s = gaussian_sqrt(target / diag[0])
        return None if s is None else [s]
    for i in range(k):
        for j in range(i + 1, k):
            s = gaussian_sqrt(-diag[j] / diag[i])
            if s is not None:
                u = [GaussianRational(0)] * k
                u[i], u[j] = s, GaussianRational(1)
                return _hyperbolic_represent(u, diag, target, Field.QI_BILINEAR)
    small = [GaussianRational(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]
    for head in product(small, repeat=k - 1):
        rest = target - sum((dj * x * x for dj, x in zip(diag[1:], head)), GaussianRational(0))
        s = gaussian_sqrt(rest / diag[0])
        if s is not None:
            return [s] + list(head)
    return None


def _represent(diag: list, target, field: Field, kind: str, rng: random.Random):
    if kind == "hermitian":
        return _represent_hermitian([x.real for x in diag], to_scalar(target, field).real, rng)
    if field is Field.Q:
        return _represent_q([Fraction(x) for x in diag], Fraction(target), rng)
    return _represent_gaussian_bilinear(list(diag), target, rng)


def find_congruence(F: Matrix, F2: Matrix, kind: str, seed: int = 0) -> Matrix | None:
    """T with conj(T) F2 T^T = F for nondegenerate forms F, F2, or None when none is found.

    Alternating forms always succeed.  Otherwise the first diagonal value of F
    is represented by F2, the orthogonal complement is split off, and the
    problem recurses; representation uses Legendre's equation over Q (and
    over Q for the realified hermitian problem) or exact square roots and a
    bounded search over Q(i).
    """
    field = F.field
    k = F.nrows
    if F2.shape != (k, k):
        return None
    if k == 0:
        return empty(0, field)
    if kind == "alternating":
        Id = Matrix.identity(k, field)
        B1 = symplectic_basis(Id, F)
        B2 = symplectic_basis(Id, F2)
        # rows of B1 and B2 have the same Gram; express the identity basis of F via B1
        return inverse(B1) @ B2
    rng = random.Random(seed)
    d1, P1 = diagonalize(F, kind)
    d2, P2 = diagonalize(F2, kind)
    T = _diag_congruence(list(d1), list(d2), field, kind, rng)
    if T is None:
        return None
    # rows P1 e have Gram diag(d1); rows T P2 e have Gram diag(d1) under F2
    result = inverse(P1) @ T @ P2
    if congruent(F2, result) != F:
        raise InconsistencyError("congruence solver produced a wrong answer")
    return result


def _diag_congruence(d1: list, d2: list, field: Field, kind: str, rng: random.Random) -> Matrix | None:
    """T with conj(T) diag(d2) T^T = diag(d1)."""
    k = len(d1)
    if k == 0:
        return empty(0, field)
    v = _represent(d2, d1[0], field, kind, rng)
    if v is None:
        return None
    E = Matrix.diag(d2, field)
    V = Matrix([v], field, k)
    assert _pair(V, V, E) == to_scalar(d1[0], field)
    if k == 1:
        return V
    comp = kernel(V.conj() @ E).T()  # rows orthogonal to v
    G_comp = gram_of(comp, E)
    e_rest, Pc = diagonalize(G_comp, kind)
    sub = _diag_congruence(d1[1:], list(e_rest), field, kind, rng)
    if sub is None:
        return None
    rest = sub @ Pc @ comp
    return V.vstack(rest)
