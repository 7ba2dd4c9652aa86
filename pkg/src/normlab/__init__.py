"""Luxemburg norms, slice geometry probes and slice-diameter certificates
on finite truncations of c_0-type lattices."""
from .errors import (
    BudgetExceeded, DomainError, EmptySliceSearch, NonBracketable, NormlabError,
    SymmetryViolation, ZeroVector,
)
from .vectors import (
    Coordinate, DualFunctional, Order, Sector, SparseVector, abs_leq, base, basis,
    indicator, l1_norm, pair, restrict, sup_norm, tail,
)
from .modulars import DEFAULT_TOL, Nakano, OrliczM, PhiSum, nakano_eval, orliczM, orlicz_eval, phi_sum_eval
from .norms import (
    L1, Day, Lp, Luxemburg, NormSpec, Sup, ZNorm, eval_norm, luxemburg, mathfrak_LF,
    nakano_norm, orlicz_norm, zinf_norm, scale_check, spec_from_config, z_norm,
)
from .probes import (
    SliceSpec, asq_witness, e_alpha_sup, midpoint_sc_probe, phi_strictness_probe,
    section_radius, slice_diameter_lb, strict_monotonicity_probe,
)
from .certificates import (
    Inconclusive, Ld2pCertificate, certify_no_ld2p, certify_no_ld2p_linfty,
    check_certificate, hM_sn_norm, hM_xn, thm41_constants, thm43_symmetric_check,
    usm_slice_bound,
)

__version__ = "0.1.0"
