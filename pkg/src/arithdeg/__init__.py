"""Exact arithmetic degrees of special cycles on the moduli of QM abelian
surfaces with CM, with brute-force oracles for every local ingredient."""

from .arithmetic import (
    FactoredRational,
    FieldData,
    Splitting,
    SplittingData,
    factorize,
    kronecker,
    splitting_type,
    validate_field,
)
from .degree import (
    DegreeReport,
    Setting,
    argument_M,
    beta_valuation,
    degree_Y,
    degree_Z,
    epsilon,
    kry_length,
    kry_reduction_check,
    local_length,
    orbital_integral,
    point_count,
)
from .ideals import divisor_sum_count, r_global, r_local, r_oracle
from .local import (
    INFINITY,
    DiffSet,
    Place,
    QuaternionData,
    diff_B_set,
    diff_set,
    hilbert_oracle,
    hilbert_symbol,
    inv_B,
    validate_quaternion,
)

__version__ = "0.1.0"
