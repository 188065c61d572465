"""Exact-arithmetic toolkit for units defined by integer polynomials.

Decides when f(x) is a unit of Z[x]/(x^n - a) (for a = 1: of the group
ring Z C_n), classifies polynomials whose unit-order set is infinite,
enumerates and bounds the set when it is finite, and produces
machine-checkable Bezout certificates.
"""

from ._backend import backend_name
from .classify import (
    Classification,
    CycloShape,
    GenericVerdict,
    PeriodicSet,
    classify_roots,
    compute_bound,
    enumerate_orders,
    factor_shape,
    is_generic,
    unit_residues,
)
from .cli import parse_poly
from .cyclo import (
    PhiClass,
    PrimePowerClass,
    cyclotomic,
    cyclotomic_via_mobius,
    euler_phi,
    factorize,
    mobius,
    phi_is_pm1,
    prime_power_class,
)
from .errors import (
    DegreeLimitError,
    InvalidInputError,
    ParseError,
    RingUnitsError,
    ShapeNotCyclotomicError,
    SizeLimitError,
)
from .polycore import (
    ONE,
    X,
    ZERO,
    BezoutCertificate,
    IntPoly,
    NotAUnit,
    bezout_witness,
    divide_exact,
    monomial,
    mult_matrix_det,
    resultant,
    xn_minus_const,
)
from .unitcheck import (
    UnitVerdict,
    defines_unit_on_order,
    defines_units_on_roots,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "Classification",
    "CycloShape",
    "DegreeLimitError",
    "GenericVerdict",
    "IntPoly",
    "InvalidInputError",
    "NotAUnit",
    "ONE",
    "ParseError",
    "PeriodicSet",
    "PhiClass",
    "PrimePowerClass",
    "RingUnitsError",
    "ShapeNotCyclotomicError",
    "SizeLimitError",
    "UnitVerdict",
    "X",
    "ZERO",
    "backend_name",
    "bezout_witness",
    "classify_roots",
    "compute_bound",
    "cyclotomic",
    "cyclotomic_via_mobius",
    "defines_unit_on_order",
    "defines_units_on_roots",
    "divide_exact",
    "enumerate_orders",
    "euler_phi",
    "factor_shape",
    "factorize",
    "is_generic",
    "mobius",
    "monomial",
    "mult_matrix_det",
    "parse_poly",
    "phi_is_pm1",
    "prime_power_class",
    "resultant",
    "unit_residues",
    "verify_certificate",
    "xn_minus_const",
]
