"""Projective geometry over the rationals.

Modules:
- projective: points, lines, conics, joins/meets, duality, collineations
- decomposition: residual certificates, pencils, common members
"""

from .decomposition import (
    Pencil,
    ResidualCertificate,
    common_member,
    curve_rank,
    in_pencil,
    pencil_of,
    residual_curve,
    shares_component,
)
from .projective import (
    UNIT_CIRCLE,
    Collineation,
    Conic,
    HLine,
    HPoint,
    coconic,
    collinear,
    concurrent,
    conic_through,
    curves_through,
    dualize,
    join,
    meet,
    on_cubic_rank,
    param_point,
    tangent_at,
)

__all__ = [
    "Pencil",
    "ResidualCertificate",
    "common_member",
    "curve_rank",
    "in_pencil",
    "pencil_of",
    "residual_curve",
    "shares_component",
    "UNIT_CIRCLE",
    "Collineation",
    "Conic",
    "HLine",
    "HPoint",
    "coconic",
    "collinear",
    "concurrent",
    "conic_through",
    "curves_through",
    "dualize",
    "join",
    "meet",
    "on_cubic_rank",
    "param_point",
    "tangent_at",
]
