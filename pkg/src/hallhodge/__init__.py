"""Hall-Littlewood polynomials of root data and the point counts / Hodge-Euler
characteristics of affine Grassmannian intersections they encode."""
from .errors import (
    CapacityError,
    ConfigurationError,
    ConsistencyError,
    DimensionViolation,
    DomainError,
    HallHodgeError,
    InvarianceError,
    PolynomialityViolation,
    PositivityViolation,
)
from .hall_littlewood import HLPolynomial, hall_littlewood, specialize_t, weyl_character
from .hodge import (
    EulerRow,
    EulerTable,
    cartan_stratum_count,
    euler_table,
    predict_point_count,
    qm1_expand,
    topological_euler,
)
from .laurent import LaurentPoly, parse_laurent
from .rootdata import (
    RootDatum,
    WeylElement,
    build_root_datum,
    dominant_below,
    orbit,
    pair_rho,
    stabilizer_poincare,
    weyl_elements,
)
from .symfunc import (
    GroupAlgebraElement,
    SymmetricFunction,
    monomial_sym,
    multiply,
    parse_symmetric,
    to_m_basis,
)

__version__ = "0.1.0"
