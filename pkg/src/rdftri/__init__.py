"""Regular dense foldable lattice triangulations, their products and signatures.

Everything is exact: coordinates and volumes are integers, liftings are
fractions with an optional infinitesimal channel.
"""

from .complex import (
    Bipartition,
    DualGraph,
    Triangulation,
    bipartition,
    check_coloring,
    dual_graph,
    f_vector,
    fold,
    is_foldable,
    odd_mask,
    signature,
    signed_signature,
)
from .cube import (
    CubeConstruction,
    RdfReport,
    c3_min,
    c4_table,
    certify_rdf,
    claimed_signature,
    compose_c6,
    rdf_cube,
    sample_template_s,
)
from .errors import *  # noqa: F401,F403
from .io import FileFormatError
from .lattice import (
    PointConfiguration,
    cube,
    normalized_volume,
    product_configuration,
    segment,
    sharp_simplex,
    simplex,
    standard_shape,
)
from .lifting import TwoLevel, TwoLevelLifting
from .product import (
    VertexOrdering,
    bipyramid,
    bipyramid_apices,
    make_ordering,
    product_signature_predicted,
    simplicial_product,
    square_bipyramid,
)
from .regularity import (
    RegularityCertificate,
    flatten_lifting,
    induces_triangulation,
    is_regular,
    lifted_hyperplane_sign,
    product_lifting,
)
from .shapes import dense_segment, sharp_triangulation, unit_segment
from .staircase import (
    shuffles,
    staircase,
    staircase_signature,
    staircase_signature_recursive,
    svector_grid,
)
from .wronski import (
    CoxReport,
    SparsePolynomial,
    WronskiSystem,
    coefficient_polynomials,
    cox_oriented,
    emit_system,
    product_coefficient_identity_check,
    wronski_polynomial,
    wronski_system,
)

__version__ = "0.1.0"
