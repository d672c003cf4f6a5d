"""Cross-sections of surfaces of revolution.

Tools for the constructive link between a surface of revolution
x^2 + y^2 = F(z) and the quadrics: tilted planar cross-sections are traced
in their own chart, scored for central symmetry, and a profile whose
sections are all centrally symmetric is certified quadratic by fitting.
The section center heights also reconstruct F' without differentiation,
and a midpoint mean-value test characterizes quadratics directly.
"""

from .detect import (
    CenterCurve,
    CenterEntry,
    QuadricVerdict,
    SectionRecord,
    center_heights,
    derivative_from_centers,
    detect_quadric,
    fit_quadratic,
    predicted_center_height,
    sweep_intercepts,
)
from .errors import (
    DegenerateLoop,
    InvalidDomain,
    LoopEscapesDomain,
    NonPositiveProfile,
    NonSimpleSection,
    OutOfDomain,
    ParseError,
    RankDeficient,
    RevquadError,
    SingularConfiguration,
    SlabViolation,
    ZeroSlope,
)
from .formats import center_curve_csv, centrality_json, loop_csv, loop_svg, verdict_json
from .profiles import (
    Profile,
    QuadricParams,
    infimum_radius,
    make_polynomial_profile,
    make_quadric_profile,
    make_sampled_profile,
    parse_profile,
    preset_lines,
)
from .sections import Plane, SectionLoop, embed_3d, section_extent, section_gap, slope_bound, trace_section
from .symmetry import (
    CentralityReport,
    asymmetry_at,
    centrality,
    centroid,
    max_midpoint_residual,
    midpoint_residual,
    symmetric_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "CenterCurve",
    "CenterEntry",
    "CentralityReport",
    "DegenerateLoop",
    "InvalidDomain",
    "LoopEscapesDomain",
    "NonPositiveProfile",
    "NonSimpleSection",
    "OutOfDomain",
    "ParseError",
    "Plane",
    "Profile",
    "QuadricParams",
    "QuadricVerdict",
    "RankDeficient",
    "RevquadError",
    "SectionLoop",
    "SectionRecord",
    "SingularConfiguration",
    "SlabViolation",
    "ZeroSlope",
    "asymmetry_at",
    "center_curve_csv",
    "center_heights",
    "centrality",
    "centrality_json",
    "centroid",
    "derivative_from_centers",
    "detect_quadric",
    "embed_3d",
    "fit_quadratic",
    "infimum_radius",
    "loop_csv",
    "loop_svg",
    "make_polynomial_profile",
    "make_quadric_profile",
    "make_sampled_profile",
    "max_midpoint_residual",
    "midpoint_residual",
    "parse_profile",
    "preset_lines",
    "predicted_center_height",
    "section_extent",
    "section_gap",
    "slope_bound",
    "symmetric_quotient",
    "sweep_intercepts",
    "trace_section",
    "verdict_json",
]
