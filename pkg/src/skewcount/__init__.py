"""Exact counting of monotone lattice paths in skew Young diagrams.

The same number is computed by several mutually independent routes — a
binomial determinant, a dynamic program, explicit path enumeration, lozenge
tilings of a sheared region, and disjoint path families on Z^2 — and the
bijections tying those routes together are constructed explicitly.
"""

from .errors import (
    BadIndexError,
    CapExceededError,
    ComplementNotPairableError,
    DegenerateBoundaryError,
    MalformedFamilyError,
    NegativePartError,
    NonMonotoneError,
    NotAdmissibleError,
    NotContainedError,
    NotSquareError,
    RowOutOfRangeError,
    ShapeError,
    SkewCountError,
    WrongEndpointsError,
)
from .exact import IntMatrix, binomial, det_exact
from .gv import (
    GVConfig,
    PathFamily,
    enumerate_disjoint_families,
    gv_count,
    gv_endpoints,
    gv_matrix,
)
from .kreweras import KrewerasMatrix, kreweras_count, kreweras_matrix, remove_empty_rows
from .paths import (
    LatticePath,
    count_monotone,
    count_paths_dp,
    enumerate_paths,
    is_admissible,
    iter_monotone_paths,
    path_from_north_record,
)
from .shapes import (
    Partition,
    ProfilePair,
    SkewShape,
    contains_cell,
    format_shape,
    parse_shape,
    partitions_in_box,
    profiles,
    subpartitions,
)
from .tilings import (
    T1,
    T2,
    T3,
    Lozenge,
    Region,
    RhombusPathFamily,
    Tiling,
    Triangle,
    TriPoint,
    enumerate_tilings,
    extract_family,
    family_A_to_lattice_path,
    family_B_to_z2_paths,
    lattice_path_to_tiling,
    lozenge_corners,
    lozenge_triangles,
    region_from_shape,
    render_svg,
    tiling_type_census,
)

__version__ = "0.1.0"

__all__ = [
    "BadIndexError",
    "CapExceededError",
    "ComplementNotPairableError",
    "DegenerateBoundaryError",
    "GVConfig",
    "IntMatrix",
    "KrewerasMatrix",
    "LatticePath",
    "Lozenge",
    "MalformedFamilyError",
    "NegativePartError",
    "NonMonotoneError",
    "NotAdmissibleError",
    "NotContainedError",
    "NotSquareError",
    "Partition",
    "PathFamily",
    "ProfilePair",
    "Region",
    "RhombusPathFamily",
    "RowOutOfRangeError",
    "ShapeError",
    "SkewCountError",
    "SkewShape",
    "T1",
    "T2",
    "T3",
    "Tiling",
    "TriPoint",
    "Triangle",
    "WrongEndpointsError",
    "binomial",
    "contains_cell",
    "count_monotone",
    "count_paths_dp",
    "det_exact",
    "enumerate_disjoint_families",
    "enumerate_paths",
    "enumerate_tilings",
    "extract_family",
    "family_A_to_lattice_path",
    "family_B_to_z2_paths",
    "format_shape",
    "gv_count",
    "gv_endpoints",
    "gv_matrix",
    "is_admissible",
    "iter_monotone_paths",
    "kreweras_count",
    "kreweras_matrix",
    "lattice_path_to_tiling",
    "lozenge_corners",
    "lozenge_triangles",
    "parse_shape",
    "partitions_in_box",
    "path_from_north_record",
    "profiles",
    "region_from_shape",
    "remove_empty_rows",
    "render_svg",
    "subpartitions",
    "tiling_type_census",
    "__version__",
]
