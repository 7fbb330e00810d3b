"""Freeness, Tjurina numbers and weak combinatorics of cubic-line arrangements."""

__version__ = "0.1.0"

from .builders import example, fermat_cubic, inflection_points, tangent_line_at
from .census import Arrangement, Component, census, classify_point, cluster, is_smooth_cubic, pair_intersections
from .combinatorics import (
    DegreeWindow,
    WeakCombinatorics,
    combinatorial_count,
    count_satisfied,
    degree_window,
    enumerate_admissible,
    enumerate_free_candidates,
    hirzebruch_check,
)
from .jacobian import (
    FreenessReport,
    SingularityType,
    Verdict,
    analyze,
    du_plessis_wall,
    hilbert_jacobian,
    mdr,
    syzygy_matrix,
    total_tjurina_algebraic,
    total_tjurina_combinatorial,
)
from .linalg import ExactMatrix, kernel_dimension
from .poly import ComplexPoint, HomogeneousPoly, evaluate_complex, hessian_det, monomial_basis, multiply, partial
