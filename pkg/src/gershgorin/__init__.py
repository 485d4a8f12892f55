"""Gershgorin disk eigenvalue localization with three mutually independent
counting routes: a brute-force spectrum oracle, an argument-principle
winding count, and matched homotopy tracking.
"""

from .errors import (
    AmbiguousWindingError,
    CoefficientOverflowError,
    ContourSeparationError,
    EigenvalueOnContourError,
    GershgorinError,
    MatrixFileError,
    OracleConvergenceError,
    PathEscapeError,
    QuadratureBudgetError,
    SpectrumProximityError,
    StepUnderflowError,
)
from .geometry import (
    Arc,
    Contour,
    Disk,
    Region,
    RegionSet,
    circle_contour,
    connected_regions,
    contains,
    contour_winding_number,
    gershgorin_disks,
    region_contour,
    region_gap,
    region_of,
)
from .matching import MatchResult, matching_distance, pointwise_continuity_probe
from .matrix import (
    MonicPolynomial,
    ORACLE_MAX_DIM,
    SpectrumMultiset,
    as_matrix,
    characteristic_polynomial,
    eigenvalues_oracle,
    homotopy_member,
    max_entry_norm,
    resolvent_log_derivative,
)
from .matrixfile import parse_matrix, serialize_matrix, write_matrix
from .svgplot import render_svg
from .tracking import (
    EigenPath,
    HomotopyTrace,
    RegionCheck,
    VerificationReport,
    extract_paths,
    track,
    verify_gershgorin_part2,
)
from .winding import WindingCount, count_along_homotopy, count_inside

__version__ = "0.1.0"

__all__ = [
    "AmbiguousWindingError",
    "Arc",
    "CoefficientOverflowError",
    "Contour",
    "ContourSeparationError",
    "Disk",
    "EigenPath",
    "EigenvalueOnContourError",
    "GershgorinError",
    "HomotopyTrace",
    "MatchResult",
    "MatrixFileError",
    "MonicPolynomial",
    "ORACLE_MAX_DIM",
    "OracleConvergenceError",
    "PathEscapeError",
    "QuadratureBudgetError",
    "Region",
    "RegionCheck",
    "RegionSet",
    "SpectrumMultiset",
    "SpectrumProximityError",
    "StepUnderflowError",
    "VerificationReport",
    "WindingCount",
    "as_matrix",
    "characteristic_polynomial",
    "circle_contour",
    "connected_regions",
    "contains",
    "contour_winding_number",
    "count_along_homotopy",
    "count_inside",
    "eigenvalues_oracle",
    "extract_paths",
    "gershgorin_disks",
    "homotopy_member",
    "matching_distance",
    "max_entry_norm",
    "parse_matrix",
    "pointwise_continuity_probe",
    "region_contour",
    "region_gap",
    "region_of",
    "render_svg",
    "resolvent_log_derivative",
    "serialize_matrix",
    "track",
    "verify_gershgorin_part2",
    "write_matrix",
]
