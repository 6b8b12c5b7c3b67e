"""The orbit-invariant tuple of an isotropic subspace and the constraint system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InconsistencyError, InvalidTupleError
from .forms import CaseTag, GroupParams, IsometryType, Subspace, gram_of, inertia, require_isotropic, signature
from .linalg import rank

SIGNED_NAMES = ("r_U", "r_W", "a", "a_U", "a_W")
SPLIT_NAMES = ("r_U", "r_W", "a", "b")


@dataclass(frozen=True)
class OrbitParams:
    """(r_U, r_W, a, a_U, a_W) for the signed cases, (r_U, r_W, a, b) otherwise."""

    case: CaseTag
    entries: tuple[int, ...]

    def __post_init__(self):
        want = 5 if self.case.signed else 4
        if len(self.entries) != want:
            raise InvalidTupleError(f"{self.case.value} tuples have {want} entries, got {len(self.entries)}")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 0 for x in self.entries):
            raise InvalidTupleError(f"tuple entries must be nonnegative integers: {self.entries}")

    @classmethod
    def of(cls, case: CaseTag, *entries: int) -> "OrbitParams":
        return cls(case, tuple(entries))

    @property
    def names(self) -> tuple[str, ...]:
        return SIGNED_NAMES if self.case.signed else SPLIT_NAMES

    @property
    def r_U(self) -> int:
        return self.entries[0]

    @property
    def r_W(self) -> int:
        return self.entries[1]

    @property
    def a(self) -> int:
        return self.entries[2]

    @property
    def a_U(self) -> int:
        self._need(True)
        return self.entries[3]

    @property
    def a_W(self) -> int:
        self._need(True)
        return self.entries[4]

    @property
    def b(self) -> int:
        self._need(False)
        return self.entries[3]

    def _need(self, signed: bool) -> None:
        if self.case.signed != signed:
            raise AttributeError(f"not defined for {self.case.value}")

    @property
    def r(self) -> int:
        return sum(self.entries)

    @property
    def k(self) -> int:
        """a_U + a_W in the signed cases, b otherwise."""
        return self.entries[3] + self.entries[4] if self.case.signed else self.entries[3]

    def to_dict(self) -> dict:
        return dict(zip(self.names, self.entries))

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def parse_tuple(case: CaseTag, text: str) -> OrbitParams:
    parts = [x for x in text.replace("(", "").replace(")", "").replace(" ", "").split(",") if x]
    try:
        entries = tuple(int(x) for x in parts)
    except ValueError as exc:
        raise InvalidTupleError(f"cannot parse tuple {text!r}") from exc
    return OrbitParams(case, entries)


def validate_params(case: CaseTag, params: GroupParams, t: OrbitParams | Sequence[int]) -> bool:
    """Whether t satisfies the case's inequality system."""
    entries = t.entries if isinstance(t, OrbitParams) else tuple(t)
    if len(entries) != (5 if case.signed else 4) or any(x < 0 for x in entries):
        return False
    if case.signed:
        rU, rW, a, aU, aW = entries
        p, q, p1, q1 = params.p, params.q, params.p1, params.q1
        return (rU + a + aU <= p1 and rU + a + aW <= q1
                and rW + a + aW <= p - p1 and rW + a + aU <= q - q1)
    rU, rW, a, b = entries
    n, m = params.n, params.m
    if case is CaseTag.COMPLEX_ORTHOGONAL:
        return 2 * rU + 2 * a + b <= m and 2 * rW + 2 * a + b <= n - m
    if b % 2:
        return False
    return rU + a + b // 2 <= m and rW + a + b // 2 <= n - m


def classify(S: Subspace) -> OrbitParams:
    """The invariant tuple of an isotropic subspace.

    Everything is computed from the U side and again from the W side; the two
    must agree (the Gram matrices of the two projections of a basis of S are
    negatives of each other).
    """
    require_isotropic(S)
    space = S.space
    case = space.case
    r = S.dim
    if r == 0:
        return OrbitParams(case, (0,) * (5 if case.signed else 4))
    B_U = S.basis.cols(space.u_idx)
    B_W = S.basis.cols(space.w_idx)
    rk_U, rk_W = rank(B_U), rank(B_W)
    r_U = r - rk_W  # dim S meet U
    r_W = r - rk_U
    M_U = gram_of(B_U, space.gram_U)
    M_W = gram_of(B_W, space.gram_W)
    if M_U != -M_W:
        raise InconsistencyError("projected Gram matrices do not negate each other")
    k_U, k_W = rank(M_U), rank(M_W)
    a = rk_U - k_U - r_U
    a_from_W = rk_W - k_W - r_W
    if a != a_from_W or k_U != k_W:
        raise InconsistencyError(f"U side and W side disagree: a={a} vs {a_from_W}, rank {k_U} vs {k_W}")
    if case.signed:
        sig_U = inertia(M_U, space.kind)
        sig_W = inertia(M_W, space.kind)
        if (sig_U.s_plus, sig_U.s_minus) != (sig_W.s_minus, sig_W.s_plus):
            raise InconsistencyError(f"signatures of the projections do not swap: {sig_U} vs {sig_W}")
        t = OrbitParams(case, (r_U, r_W, a, sig_U.s_plus, sig_U.s_minus))
    else:
        t = OrbitParams(case, (r_U, r_W, a, k_U))
    if t.r != r or not validate_params(case, space.params, t):
        raise InconsistencyError(f"classified tuple {t} violates the constraint system")
    return t


def isometry_type(S: Subspace) -> IsometryType:
    """(s, s_plus, s_minus) of any subspace in a signed case."""
    return signature(S)
