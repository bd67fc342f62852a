"""orbiklt: exact klt and orbifold-curve classification for surface pairs.

Everything computes over arbitrary-precision rationals; see the module
docstrings for the mathematics each part implements.
"""

from .coset import (abelianization_free_rank, coset_enumeration,
                    curve_relators, enumerated_curve_order)
from .dualgraph import (BranchAttachment, ChainData, DiscrepancyResult,
                        DualGraph, GraphClass, adjunction_degrees, chain_data,
                        classify_graph, cyclic_invariants,
                        intersection_matrix, is_negative_definite,
                        local_group_order, solve_discrepancies)
from .errors import (EnumerationOverflowError, NonCoprimeError,
                     NotNegativeDefiniteError, NotSpecialError, OrbikltError,
                     ParseError, UnsupportedError, WrongClassError)
from .exact import (Rational, coeff, gcd_list, hj_evaluate, hj_expand,
                    rational_str)
from .germs import (NOT_KLT, CuspCover, GermBranch, GermClass, GermConfig,
                    GermKind, TangentCoverSplit, blowup_discrepancy,
                    classify_germ, cover_split_tangent, cusp_branch,
                    enumerate_germ_configs, enumerate_klt_germs,
                    enumerate_tangent_families, etale_cover_over_cusp,
                    is_klt_germ, smooth_branch, tangent_family_klt)
from .orbibase import (CurveGroupInfo, FiberData, FibrationData, KodairaDim,
                       MinimalModelOutcome, OrbifoldCurve, Presentation,
                       SurfaceSummary, Trichotomy, Verdict, VerdictBranch,
                       abelianity_verdict, curve_degree, curve_group,
                       curve_presentation, fiber_multiplicity,
                       is_general_type_fibration, is_special_curve,
                       is_special_orbisurface, orbifold_base, trichotomy)

__version__ = "0.1.0"
