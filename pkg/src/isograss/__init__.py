"""Orbits of symmetric subgroups on isotropic Grassmannians, in exact arithmetic."""

from .arith import Field, GaussianRational, I
from .errors import (DifferentOrbitsError, InconsistencyError, InvalidTupleError, IsograssError, NotIsotropicError,
                     ParseError, WitnessNotFound)
from .forms import (CaseTag, FormSpace, GroupParams, IsometryType, Subspace, is_isotropic, proj_U, proj_W, radical,
                    signature, standard_space)
from .group import IsometryElement, is_in_stabilizer
from .invariants import OrbitParams, classify, isometry_type, validate_params
from .linalg import Matrix, kernel, rank, rref, subspace_intersect, subspace_sum
from .oracle import cayley_sample, lie_algebra, sign_element, tangent_orbit_dim
from .orbits import (OrbitInfo, canonical_rep, component_count, dim_group, dim_orbit, dim_stabilizer,
                     enumerate_orbits, open_orbits)
from .witness import orbit_witness
from .witt import witt_extend

__version__ = "0.1.0"

__all__ = [
    "Field", "GaussianRational", "I",
    "DifferentOrbitsError", "InconsistencyError", "InvalidTupleError", "IsograssError", "NotIsotropicError",
    "ParseError", "WitnessNotFound",
    "CaseTag", "FormSpace", "GroupParams", "IsometryType", "Subspace", "is_isotropic", "proj_U", "proj_W",
    "radical", "signature", "standard_space",
    "IsometryElement", "is_in_stabilizer",
    "OrbitParams", "classify", "isometry_type", "validate_params",
    "Matrix", "kernel", "rank", "rref", "subspace_intersect", "subspace_sum",
    "cayley_sample", "lie_algebra", "sign_element", "tangent_orbit_dim",
    "OrbitInfo", "canonical_rep", "component_count", "dim_group", "dim_orbit", "dim_stabilizer",
    "enumerate_orbits", "open_orbits",
    "orbit_witness", "witt_extend",
]
