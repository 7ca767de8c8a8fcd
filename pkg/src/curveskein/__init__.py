"""Exact skein-theoretic link invariants of plane curve singularities,
ideal-counting series on the Hilbert-scheme side, and the identity
checks that tie the two together."""

from .annulus import (el_add, el_basis, el_product, el_scale, el_unit,
                      el_zero, frame, meridian_apply, meridian_value,
                      plethysm_apply, skein_mul, splice_satellite,
                      torus_satellite, trace, trace_low,
                      trace_low_meridian)
from .checks import (MatchReport, blowup_term_match, delta_shift,
                     f_lambda, one_leg_H, skein_flop_check,
                     theorem1_check, theorem2_low_check,
                     vertex_flop_check)
from .curves import (Branch, CurveGerm, annulus_element, blowup, branch,
                     branch_stats, classify_germ, colored_W, germ,
                     homfly_P, link_stats, lowest_profile, node_germ,
                     pairwise_linking, reassembled_element)
from .errors import (ConsistencyError, CurveSkeinError, InputError,
                     IntegralityError, TruncationError)
from .hilbert import enumerate_modules, min_generators, z_curve, z_series
from .partitions import (dominance_leq, hook_sum, hooks, kappa,
                         partition, partitions_of, transpose)
from .qseries import QSeries, macmahon, resolved_conifold, series_equal
from .scalars import SExpansion, SkeinScalar, fit_monomial, render_scalar
from .schur import (lr_expand, schur_qrho, shifted_principal_value,
                    sym_character)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
