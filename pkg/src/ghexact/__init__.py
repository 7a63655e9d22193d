"""Exact Gromov-Hausdorff geometry of finite metric spaces with rational distances."""

from .distance import (
    DistanceCertificate,
    candidate_levels,
    feasible,
    gh_exact,
    gh_level_search,
    gh_lower_bound,
    gh_upper_bound_max_diam,
)
from .errors import GHError, InputError, PreconditionError, SearchBudgetExceeded
from .matrixfile import format_matrix, parse_matrix, read_space, write_space
from .metric import (
    DELTA1,
    FiniteMetricSpace,
    PointSubset,
    diameter,
    hausdorff_distance,
    line,
    scale,
    simplex,
    validate,
)
from .partitions import (
    PartitionOrCovering,
    PartitionStats,
    alpha_m,
    below_diameter_cover,
    cover_number_below_diam,
    covering_to_partition,
    d_m,
    enumerate_partitions,
    partition_stats,
    push_covering,
)
from .relations import Correspondence, distortion
from .segments import (
    Betweenness,
    ExtendabilityReport,
    ExtensionWitness,
    Extremality,
    LinearCurve,
    NonExtendabilityCheck,
    TwoPointExtension,
    classify_extremality,
    extend_check,
    interpolated_matrix,
    is_between,
    linear_curve,
    linear_space,
    nonextendability_certificate,
    nonextendability_check,
    proper_class_gadget,
    segment_members,
    simplex_extension_witness,
    subextreme_between_delta1,
    two_point_extension,
)
from .simplex_dist import (
    dist_to_simplex,
    dist_to_simplex_alpha0,
    dist_to_simplex_large_lambda,
    simplex_distance,
)

__version__ = "0.1.0"
