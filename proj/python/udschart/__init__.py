"""Exposure/mimicry evaluation of web-authentication schemes."""

from udschart._core import (
    BenefitVector,
    Catalog,
    Category,
    CombinedScheme,
    ExpectedPlacement,
    HorizontalSegment,
    LintFinding,
    Placement,
    Rating,
    SchemeProfile,
    VerticalSegment,
    combine_markers,
    combine_profiles,
    coordinates,
    horizontal_placement,
    merged_s6,
    parse_catalog,
    place,
    reference_catalog,
    render_diff,
    render_findings,
    render_placements,
    render_svg,
    render_table,
    serialize_catalog,
    sublevel_count,
    sublevel_from_counts,
    validate,
    vertical_segment,
    vertical_sublevel,
)

__version__ = "0.1.0"

__all__ = [
    "BenefitVector",
    "Catalog",
    "Category",
    "CombinedScheme",
    "ExpectedPlacement",
    "HorizontalSegment",
    "LintFinding",
    "Placement",
    "Rating",
    "SchemeProfile",
    "VerticalSegment",
    "combine_markers",
    "combine_profiles",
    "coordinates",
    "horizontal_placement",
    "merged_s6",
    "parse_catalog",
    "place",
    "reference_catalog",
    "render_diff",
    "render_findings",
    "render_placements",
    "render_svg",
    "render_table",
    "serialize_catalog",
    "sublevel_count",
    "sublevel_from_counts",
    "validate",
    "vertical_segment",
    "vertical_sublevel",
]
