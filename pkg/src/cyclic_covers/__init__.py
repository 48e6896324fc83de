"""Classification of families of cyclic covers of the projective line.

Families ``y^m = prod (x - t_i)^{a_i}`` are screened for being totally
geodesic in ``A_g``, with exact-arithmetic certificates for the negative
verdicts and closed-form dimension bounds for totally geodesic germs.
"""

__version__ = "0.1.0"

from .branch import (
    BranchDatum,
    CanonicalDatum,
    canonicalize,
    enumerate_candidates,
    enumerate_classes,
    equivalent,
    validate,
)
from .invariants import (
    EigenProfile,
    FamilyInvariants,
    eigen_dim,
    eigen_profile,
    family_invariants,
    genus_hurwitz,
    invariant_quadric_dim,
    invariant_sym2_dim,
    local_exponent,
)
from .classifier import (
    Caveat,
    Criterion,
    HyperellipticAllowlist,
    Status,
    Verdict,
    classify,
    exclusion_criterion,
    load_allowlist,
    shimura_criterion,
    survey,
)
from .witness import (
    CoverModel,
    WitnessCertificate,
    build_cover,
    find_witness,
    log_derivative_coeffs,
    psi_exponents,
    verify_witness,
)
from .bounds import (
    BoundReport,
    bound_report,
    generic_gonal_bound,
    gonality_upper,
    quadric_system_bound,
    rank_lower_bound,
    tg_dim_bound,
    tg_dim_bound_gonal,
)
