"""dasq: exact analysis of doubly-affine integer squares.

Latin, semimagic and magic squares share constant row/column sums; this
package classifies them, computes their exact spectra (characteristic
polynomials, ranks, singular-value clans, R-index, entropy Compression,
Spread), tracks matrix-power trajectories to constancy, explains the
constancy onset through the nilpotent part's Jordan structure, builds
compound squares of multiplicative order, and enumerates the complete
census of 880 order-4 classic magic squares.
"""

from .catalog import (
    CatalogEntry,
    catalog,
    catalog_entry,
    catalog_names,
    commutator,
    compound,
    products_suite,
)
from .census import (
    CalibrationError,
    Census,
    KERNEL_NAME,
    census_square_by_index,
    clan_partition,
    enumerate_classic_magic4,
    frenicle_index,
    get_census,
    onev_census,
)
from .classify import (
    ClassificationFlags,
    LineSumReport,
    bent_diagonal_sums,
    classify,
    da_linesum,
    frenicle_canonical,
    line_sums,
    symmetries,
)
from .core import (
    CharPoly,
    IntSquare,
    OrderMismatchError,
    ParseError,
    RationalSquare,
    SquareError,
    char_poly,
    determinant,
    gramian,
    identity,
    is_constant,
    mat_mul,
    mat_pow,
    ones,
    parse_square,
    poly_eval_matrix,
    rank,
    trace,
    transpose,
)
from .powering import (
    PowerStepRecord,
    PowerTrajectory,
    cbh_alternation_check,
    constancy_onset,
    trajectory,
)
from .spectra import (
    ConvergenceError,
    Disk,
    SpectralSummary,
    compression,
    gerschgorin_disks,
    is_1ev,
    r_index,
    singular_values,
    spectral_summary,
    spread,
    sv_squared_charpoly,
    zero_multiplicity,
)
from .structure import (
    JordanZeroProfile,
    NotNilpotentError,
    nilpotency_index,
    nilpotent_part,
    predicted_constancy_power,
    zero_jordan_profile,
)

__version__ = "0.1.0"

__all__ = [
    "CalibrationError",
    "CatalogEntry",
    "Census",
    "CharPoly",
    "ClassificationFlags",
    "ConvergenceError",
    "Disk",
    "IntSquare",
    "JordanZeroProfile",
    "KERNEL_NAME",
    "LineSumReport",
    "NotNilpotentError",
    "OrderMismatchError",
    "ParseError",
    "PowerStepRecord",
    "PowerTrajectory",
    "RationalSquare",
    "SpectralSummary",
    "SquareError",
    "bent_diagonal_sums",
    "catalog",
    "catalog_entry",
    "catalog_names",
    "cbh_alternation_check",
    "census_square_by_index",
    "char_poly",
    "clan_partition",
    "classify",
    "commutator",
    "compound",
    "compression",
    "constancy_onset",
    "da_linesum",
    "determinant",
    "enumerate_classic_magic4",
    "frenicle_canonical",
    "frenicle_index",
    "gerschgorin_disks",
    "get_census",
    "gramian",
    "identity",
    "is_1ev",
    "is_constant",
    "line_sums",
    "mat_mul",
    "mat_pow",
    "nilpotency_index",
    "nilpotent_part",
    "ones",
    "onev_census",
    "parse_square",
    "poly_eval_matrix",
    "predicted_constancy_power",
    "products_suite",
    "r_index",
    "rank",
    "singular_values",
    "spectral_summary",
    "spread",
    "sv_squared_charpoly",
    "symmetries",
    "trace",
    "trajectory",
    "transpose",
    "zero_jordan_profile",
    "zero_multiplicity",
]
