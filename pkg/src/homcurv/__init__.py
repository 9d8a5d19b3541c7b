"""homcurv: invariant metrics and sectional curvature on compact homogeneous spaces."""

__version__ = "0.1.0"

from .algebra import (
    LieAlgebra,
    MatrixRealization,
    GroupElement,
    build_algebra,
    direct_sum,
    bracket,
    ad_operator,
    matrix_of,
    coords_of,
    q_inner,
    rank,
    group_element,
    centralizer_subalgebra,
    validate_algebra,
)
from .spaces import (
    HomogeneousSpace,
    CatalogError,
    make_space,
    catalog_labels,
    catalog_build,
    catalog_entries,
    isotropy_actions,
    fixed_subalgebra_in_h,
)
