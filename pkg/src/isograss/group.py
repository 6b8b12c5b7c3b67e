"""Elements (h1, h2) of H acting on V = U + W."""

from __future__ import annotations

from dataclasses import dataclass

from .forms import FormSpace, Subspace
from .linalg import Matrix, block_diag, inverse


def preserves(g: Matrix, G: Matrix) -> bool:
    """g^* G g == G."""
    return g.H() @ G @ g == G


@dataclass(frozen=True)
class IsometryElement:
    h1: Matrix
    h2: Matrix

    def ambient(self) -> Matrix:
        return block_diag(self.h1, self.h2)

    def check(self, space: FormSpace) -> bool:
        return (self.h1.shape == (space.dim_U, space.dim_U) and self.h2.shape == (space.dim_W, space.dim_W)
                and preserves(self.h1, space.gram_U) and preserves(self.h2, space.gram_W))

    def apply(self, S: Subspace) -> Subspace:
        if self.h1.nrows + self.h2.nrows != S.space.dim:
            raise ValueError("isometry and subspace live in different spaces")
        return S.apply(self.ambient())

    def __matmul__(self, other: "IsometryElement") -> "IsometryElement":
        return IsometryElement(self.h1 @ other.h1, self.h2 @ other.h2)

    def inverse(self) -> "IsometryElement":
        return IsometryElement(inverse(self.h1), inverse(self.h2))

    @classmethod
    def identity(cls, space: FormSpace) -> "IsometryElement":
        return cls(Matrix.identity(space.dim_U, space.field), Matrix.identity(space.dim_W, space.field))


def is_in_stabilizer(h: IsometryElement, S: Subspace) -> bool:
    """Whether (h1 + h2) S == S."""
    sp = S.space
    if h.h1.shape != (sp.dim_U, sp.dim_U) or h.h2.shape != (sp.dim_W, sp.dim_W):
        raise ValueError("shape mismatch between isometry and form space")
    return h.apply(S) == S
