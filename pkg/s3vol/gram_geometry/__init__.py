"""Gram matrices, validity, angle/length conversion and duality."""

from s3vol.gram_geometry.gram import (
    angles_from_lengths,
    cofactor,
    dual,
    dual_angle_vector,
    eq6_exp2il,
    gram_from_angles,
    is_spherical,
    lengths_from_angles,
    permute_faces,
    vertex_conditions,
)
from s3vol.gram_geometry.index_map import (
    EDGE_INDEX_MAP,
    EDGE_QUADRUPLES,
    OPPOSITE_EDGE,
    VERTEX_TRIPLES,
    EdgeIndex,
    sigma,
)
from s3vol.gram_geometry.models import (
    DihedralAngles,
    EdgeLengths,
    GramMatrix,
    ValidityReport,
)
