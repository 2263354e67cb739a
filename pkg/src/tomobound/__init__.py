"""Small-boundary reconstruction of binary images from monotone line sums."""

__version__ = "0.1.0"

from .core import (
    BinaryImage,
    BoundaryReport,
    ConjugateProfile,
    LineSums,
    alpha,
    boundary,
    conjugate,
    margins,
    profile,
    validate,
)
from .ryser import Consistency, canonical_neighbour, is_consistent
from .construction import (
    FrozenColumn,
    ReconState,
    StepRecord,
    find_regions,
    phi_step,
    reconstruct,
    select_i_a,
    select_i_b,
    validate_trace,
)
from .generalize import alpha_bound_general, pad, reconstruct_general, strip
from .oracle import OracleLimits, enumerate_images, min_boundaries, probe_conjecture
from .families import FamilySpec, family, generate
from .errors import *  # noqa: F401,F403
