"""Independent ground truth: charge-statistic Hall-Littlewood polynomials in
type A, Freudenthal weight multiplicities, and brute-force lattice counting
over F_2 and F_3."""
from .charge import (
    charge,
    hl_charge_typeA,
    kostka_foulkes_charge,
    kostka_number,
    partitions,
    semistandard_tableaux,
)
from .freudenthal import dominant_multiplicities, freudenthal_multiplicity
from .lattice import (
    LatticePoint,
    classify_lattice,
    count_lattice_points,
    lattice_census,
)

__all__ = [
    "charge",
    "hl_charge_typeA",
    "kostka_foulkes_charge",
    "kostka_number",
    "partitions",
    "semistandard_tableaux",
    "dominant_multiplicities",
    "freudenthal_multiplicity",
    "LatticePoint",
    "classify_lattice",
    "count_lattice_points",
    "lattice_census",
]
