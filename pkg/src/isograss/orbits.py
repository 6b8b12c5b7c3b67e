"""Orbit atlas: enumeration, canonical representatives, dimensions, open orbits, components."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .arith import I
from .errors import InconsistencyError, InvalidTupleError
from .forms import CaseTag, FormSpace, GroupParams, Subspace, standard_space
from .invariants import OrbitParams, validate_params
from .linalg import Matrix

CSV_COLUMNS = ("case", "p", "q", "p1", "q1", "n", "m", "tuple", "dim_H", "dim_stab", "dim_orbit", "is_open",
               "component_count")


@dataclass(frozen=True)
class OrbitInfo:
    params: OrbitParams
    group: GroupParams
    dim_H: int
    dim_stab: int
    dim_orbit: int
    is_open: bool
    component_count: int

    def to_dict(self) -> dict:
        return {
            "case": self.params.case.value,
            "params": self.group.to_dict(),
            "tuple": list(self.params.entries),
            "names": list(self.params.names),
            "dim_H": self.dim_H,
            "dim_stab": self.dim_stab,
            "dim_orbit": self.dim_orbit,
            "is_open": self.is_open,
            "component_count": self.component_count,
        }

    def csv_row(self) -> list:
        g = self.group
        blank = lambda v: "" if v is None else v  # noqa: E731
        return [self.params.case.value, blank(g.p), blank(g.q), blank(g.p1), blank(g.q1), blank(g.n), blank(g.m),
                " ".join(map(str, self.params.entries)), self.dim_H, self.dim_stab, self.dim_orbit,
                str(self.is_open).lower(), self.component_count]


def _space(case: CaseTag, params: GroupParams) -> FormSpace:
    return standard_space(case, params)


def _check_r(space: FormSpace, r: int) -> None:
    if not isinstance(r, int) or r < 0 or r > space.max_isotropic_dim():
        raise InvalidTupleError(f"r={r} out of range 0..{space.max_isotropic_dim()} for {space.case.value}")


def _require_valid(case: CaseTag, params: GroupParams, t: OrbitParams) -> None:
    if t.case is not case:
        raise InvalidTupleError(f"tuple is for {t.case.value}, not {case.value}")
    if not validate_params(case, params, t):
        raise InvalidTupleError(f"tuple {t} violates the constraints for {case.value} {params.to_dict()}")


# ---------------------------------------------------------------- enumeration


def valid_tuples(case: CaseTag, params: GroupParams, r: int) -> list[OrbitParams]:
    """All tuples of entry sum r passing validate_params, in lexicographic order."""
    space = _space(case, params)
    _check_r(space, r)
    width = 5 if case.signed else 4
    out = []
    for head in product(range(r + 1), repeat=width - 1):
        last = r - sum(head)
        if last < 0:
            continue
        entries = head + (last,)
        if validate_params(case, params, entries):
            out.append(OrbitParams(case, entries))
    out.sort(key=lambda t: t.entries)
    return out


def enumerate_orbits(case: CaseTag, params: GroupParams, r: int) -> list[OrbitInfo]:
    tuples = valid_tuples(case, params, r)
    dH = dim_group(case, params)
    stabs = [dim_stabilizer(case, params, t) for t in tuples]
    best = min(stabs) if stabs else 0
    return [
        OrbitInfo(t, params, dH, s, dH - s, r > 0 and s == best, component_count(case, params, t))
        for t, s in zip(tuples, stabs)
    ]


def orbit_info(case: CaseTag, params: GroupParams, t: OrbitParams) -> OrbitInfo:
    _require_valid(case, params, t)
    for info in enumerate_orbits(case, params, t.r):
        if info.params == t:
            return info
    raise InconsistencyError(f"validated tuple {t} missing from enumeration")


# ---------------------------------------------------------------- canonical representatives


def canonical_rep(case: CaseTag, params: GroupParams, t: OrbitParams) -> Subspace:
    """The standard isotropic subspace realizing the tuple t."""
    _require_valid(case, params, t)
    space = _space(case, params)
    vecs: list[dict[int, object]] = []
    if case.signed:
        p, p1, q1 = params.p, params.p1, params.q1
        up = lambda i: i - 1  # noqa: E731
        um = lambda i: p1 + i - 1  # noqa: E731
        wp = lambda j: p1 + q1 + j - 1  # noqa: E731
        wm = lambda j: p1 + q1 + (p - p1) + j - 1  # noqa: E731
        rU, rW, a, aU, aW = t.entries
        vecs += [{up(i): 1, um(i): 1} for i in range(1, rU + 1)]
        vecs += [{wp(j): 1, wm(j): 1} for j in range(1, rW + 1)]
        vecs += [{up(rU + c): 1, wm(rW + c): 1} for c in range(1, aU + 1)]
        vecs += [{um(rU + d): 1, wp(rW + d): 1} for d in range(1, aW + 1)]
        vecs += [{up(rU + aU + l): 1, um(rU + aW + l): 1, wp(rW + aW + l): 1, wm(rW + aU + l): 1}
                 for l in range(1, a + 1)]
    elif case is CaseTag.COMPLEX_ORTHOGONAL:
        n, m = params.n, params.m
        u = lambda i: i - 1  # noqa: E731
        w = lambda j: m + j - 1  # noqa: E731
        rU, rW, a, b = t.entries
        vecs += [{u(i): 1, u(m + 1 - i): I} for i in range(1, rU + 1)]
        vecs += [{w(j): 1, w(n - m + 1 - j): I} for j in range(1, rW + 1)]
        vecs += [{u(rU + a + l): 1, w(rW + a + l): I} for l in range(1, b + 1)]
        vecs += [{u(rU + k): 1, u(m + 1 - rU - k): I, w(rW + k): 1, w(n - m + 1 - rW - k): I}
                 for k in range(1, a + 1)]
    else:
        n, m = params.n, params.m
        e = lambda i: i - 1 if i <= m else 2 * m + (i - m) - 1  # noqa: E731
        f = lambda i: m + i - 1 if i <= m else 2 * m + (n - m) + (i - m) - 1  # noqa: E731
        rU, rW, a, b = t.entries
        h = b // 2
        vecs += [{e(i): 1} for i in range(m - rU + 1, m + 1)]
        vecs += [{e(j): 1} for j in range(n - rW + 1, n + 1)]
        for l in range(1, h + 1):
            vecs += [{e(l): 1, f(m + l): 1}, {f(l): 1, e(m + l): 1}]
        vecs += [{e(k): 1, e(m + k): 1} for k in range(h + 1, h + a + 1)]
    rows = [[v.get(j, 0) for j in range(space.dim)] for v in vecs]
    return Subspace(space, Matrix(rows, space.field, space.dim))


# ---------------------------------------------------------------- dimensions


def _c2(x) -> Fraction:
    return Fraction(x * (x - 1), 2)


def _dim_sp(x: int) -> Fraction:
    """dim Sp(x) for even x: (x/2)(x+1)."""
    return Fraction(x * (x + 1), 2)


def dim_group(case: CaseTag, params: GroupParams) -> int:
    space = _space(case, params)
    dU, dW = space.dim_U, space.dim_W
    if case is CaseTag.REAL_ORTHOGONAL or case is CaseTag.COMPLEX_ORTHOGONAL:
        return int(_c2(dU) + _c2(dW))
    if case is CaseTag.UNITARY:
        return dU * dU + dW * dW
    return int(_dim_sp(dU) + _dim_sp(dW))


def _orthogonal_formula(dU: int, dW: int, rU: int, rW: int, a: int, k: int) -> Fraction:
    x = dU - 2 * rU - 2 * a
    y = dW - 2 * rW - 2 * a
    return (_c2(dU) / 2 + _c2(dW) / 2 + Fraction(rU * rU, 2) + Fraction(rW * rW, 2) + _c2(k) - a * k
            - _c2(x) / 2 - _c2(y) / 2 + _c2(x - k) + _c2(y - k))


def _unitary_formula(dU: int, dW: int, rU: int, rW: int, a: int, k: int) -> Fraction:
    # Same Levi bookkeeping as the real orthogonal case, with real dimensions
    # dim U(s,t) = (s+t)^2, dim GL(k,C) = 2k^2 and a complex a-by-k block = 2ak.
    x = dU - 2 * rU - 2 * a
    y = dW - 2 * rW - 2 * a
    return (Fraction(dU * dU + dW * dW, 2) + rU * rU + rW * rW - Fraction(x * x + y * y, 2)
            + k * k + (x - k) ** 2 + (y - k) ** 2 - 2 * a * k)


def unitary_formula_as_printed(params: GroupParams, t: OrbitParams) -> Fraction:
    """The closed form printed for the unitary stabilizer, kept for comparison.

    It is not integer-valued in general (e.g. 5/2 r_U^2), so dim_stabilizer
    does not use it.
    """
    p, q, p1, q1 = params.p, params.q, params.p1, params.q1
    rU, rW, a, aU, aW = t.entries
    r = t.r
    return ((p1 + q1) ** 2 + (p - p1 + q - q1) ** 2 - 2 * (p1 + q1) * rU - 2 * (p - p1 + q - q1) * rW
            + Fraction(5, 2) * rU * rU + Fraction(5, 2) * rW * rW + (a + aU + aW) * (-2 * p - 2 * q + 4 * r - aU - aW))


def _symplectic_formula(dU: int, dW: int, rU: int, rW: int, a: int, b: int) -> Fraction:
    x = dU - 2 * rU - 2 * a
    y = dW - 2 * rW - 2 * a
    return (_dim_sp(dU) / 2 + _dim_sp(dW) / 2 + Fraction(rU * rU + rW * rW, 2) - a * b
            - _dim_sp(x) / 2 - _dim_sp(y) / 2 + _dim_sp(b) + _dim_sp(x - b) + _dim_sp(y - b))


def stabilizer_formula(case: CaseTag, params: GroupParams, t: OrbitParams) -> Fraction:
    """Exact (rational) value of the closed form, before the integrality check."""
    space = _space(case, params)
    dU, dW = space.dim_U, space.dim_W
    rU, rW, a = t.entries[:3]
    if case is CaseTag.SYMPLECTIC:
        return _symplectic_formula(dU, dW, rU, rW, a, t.b)
    if case is CaseTag.UNITARY:
        return _unitary_formula(dU, dW, rU, rW, a, t.k)
    return _orthogonal_formula(dU, dW, rU, rW, a, t.k)


def dim_stabilizer(case: CaseTag, params: GroupParams, t: OrbitParams) -> int:
    _require_valid(case, params, t)
    val = stabilizer_formula(case, params, t)
    if val.denominator != 1 or not 0 <= val <= dim_group(case, params):
        raise InconsistencyError(f"stabilizer dimension {val} is not an integer in range for {t}")
    return int(val)


def dim_orbit(case: CaseTag, params: GroupParams, t: OrbitParams) -> int:
    return dim_group(case, params) - dim_stabilizer(case, params, t)


# ---------------------------------------------------------------- open orbits


def open_orbits_closed_form(case: CaseTag, params: GroupParams, r: int) -> list[OrbitParams]:
    space = _space(case, params)
    _check_r(space, r)
    if r == 0:
        return [OrbitParams(case, (0,) * (5 if case.signed else 4))]
    if case.signed:
        p, q, p1, q1 = params.p, params.q, params.p1, params.q1
        AU, AW = min(p1, q - q1), min(q1, p - p1)
        if r < AU + AW:
            return [OrbitParams(case, (0, 0, 0, aU, r - aU))
                    for aU in range(0, AU + 1) if 0 <= r - aU <= AW]
        rest = r - AU - AW
        if space.dim_U > space.dim_W:
            return [OrbitParams(case, (rest, 0, 0, AU, AW))]
        return [OrbitParams(case, (0, rest, 0, AU, AW))]
    n, m = params.n, params.m
    if case is CaseTag.COMPLEX_ORTHOGONAL:
        if r <= min(m, n - m):
            return [OrbitParams(case, (0, 0, 0, r))]
        if m > n - m:
            return [OrbitParams(case, (r - n + m, 0, 0, n - m))]
        return [OrbitParams(case, (0, r - m, 0, m))]
    if r >= min(2 * m, 2 * n - 2 * m):
        if m <= n - m:
            return [OrbitParams(case, (0, r - 2 * m, 0, 2 * m))]
        return [OrbitParams(case, (r - 2 * n + 2 * m, 0, 0, 2 * n - 2 * m))]
    if r % 2 == 0:
        return [OrbitParams(case, (0, 0, 0, r))]
    return [OrbitParams(case, (0, 0, 1, r - 1))]


def open_orbits(case: CaseTag, params: GroupParams, r: int) -> list[OrbitParams]:
    """Closed-form open orbits, checked against the maximal-dimension orbits of the atlas."""
    closed = sorted(open_orbits_closed_form(case, params, r), key=lambda t: t.entries)
    argmax = [info.params for info in enumerate_orbits(case, params, r) if info.is_open]
    if closed != argmax:
        raise InconsistencyError(
            f"open orbits disagree: closed form {[str(t) for t in closed]} vs atlas {[str(t) for t in argmax]}")
    return closed


# ---------------------------------------------------------------- components


def component_count(case: CaseTag, params: GroupParams, t: OrbitParams) -> int:
    """Number N of orbits of H meet G_0 inside the H-orbit of t."""
    _require_valid(case, params, t)
    if case is CaseTag.UNITARY or case is CaseTag.SYMPLECTIC:
        return 1
    if case is CaseTag.COMPLEX_ORTHOGONAL:
        return 2 if 2 * (t.r + t.a) == params.n else 1
    return _real_orthogonal_table(params, t)


def _real_orthogonal_table(params: GroupParams, t: OrbitParams) -> int:
    p, q, p1, q1 = params.p, params.q, params.p1, params.q1
    rU, rW, a, aU, aW = t.entries
    only_a = rU == rW == aU == aW == 0 and a > 0
    # N = 4: O(2a,2a), H = O(a,a) x O(a,a), tuple (0,0,a,0,0)
    if only_a and p1 == q1 == p - p1 == q - q1 == a:
        return 4
    # N = 2: O(p,2a) with H = O(p1,a) x O(p-p1,a)
    if only_a and q1 == a and q - q1 == a and p1 >= a and p - p1 >= a and p > 2 * a:
        return 2
    # N = 2: O(2a,q) with H = O(a,q1) x O(a,q-q1)
    if only_a and p1 == a and p - p1 == a and q1 >= a and q - q1 >= a and q > 2 * a:
        return 2
    # N = 2: p = q with all four constraints tight
    if (p == q and rU + a + aU == p1 and rW + a + aW == p - p1 and rU + a + aW == q1
            and rW + a + aU == q - q1 and rU + rW + aU + aW > 0):
        return 2
    return 1


def hit_cosets(case: CaseTag, params: GroupParams, t: OrbitParams) -> set[tuple[int, ...]]:
    """Cosets of H/(H meet G_0) shown to meet the stabilizer by the sign-element arguments."""
    _require_valid(case, params, t)
    if case is CaseTag.COMPLEX_ORTHOGONAL:
        # a free coordinate on either side gives a reflection in the stabilizer
        n, m = params.n, params.m
        free_U = 2 * t.r_U + 2 * t.a + t.b < m
        free_W = 2 * t.r_W + 2 * t.a + t.b < n - m
        return {(1,), (-1,)} if (free_U or free_W) else {(1,)}
    if case is not CaseTag.REAL_ORTHOGONAL:
        return {()}
    p, q, p1, q1 = params.p, params.q, params.p1, params.q1
    rU, rW, a, aU, aW = t.entries
    hits = {(1, 1)}
    if rU + a + aU < p1 or rW + a + aW < p - p1:
        hits.add((-1, 1))
    if rU + a + aW < q1 or rW + a + aU < q - q1:
        hits.add((1, -1))
    if rU > 0 or rW > 0 or aU > 0 or aW > 0:
        hits.add((-1, -1))
    return _generated_subgroup(hits)


def _generated_subgroup(gens: set[tuple[int, ...]]) -> set[tuple[int, ...]]:
    group = set(gens)
    while True:
        new = {tuple(x * y for x, y in zip(g, h)) for g in group for h in group} | group
        if new == group:
            return group
        group = new


def component_count_from_cosets(case: CaseTag, params: GroupParams, t: OrbitParams) -> int:
    """4 / |subgroup of hit cosets| (real orthogonal), 2 / |...| (complex orthogonal)."""
    if case is CaseTag.UNITARY or case is CaseTag.SYMPLECTIC:
        return 1
    total = 4 if case is CaseTag.REAL_ORTHOGONAL else 2
    return total // len(hit_cosets(case, params, t))


# Witness construction and stabilizer membership live in their own modules;
# re-exported here so the orbit-level API is in one place.
from .group import IsometryElement, is_in_stabilizer  # noqa: E402,F401
from .witness import orbit_witness  # noqa: E402,F401
from .witt import witt_extend  # noqa: E402,F401
