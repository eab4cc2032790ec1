"""Exact-arithmetic calibration geometry on flat 7- and 8-dimensional models.

Everything is computed over exact rationals: the calibration forms, their
tangent-valued companions, the induced complex/symplectic packages, and
the full identity suites tying them together.  A small forms DSL and a
CLI drive verification and reproduce the worked flat-torus examples.
"""

from .exterior import (
    DimensionMismatch,
    ExteriorError,
    GradeError,
    KForm,
    NonUnitVector,
    NotTangent,
    Vector,
    VectorValuedForm,
    contract,
    eval_form,
    flat,
    gram,
    hodge,
    hodge_hyperplane,
    inner,
    mu,
    mu_hyperplane,
    restrict,
    restrict_frame,
    sharp,
    star_complement,
    wedge,
)
from .dsl import ParseError, parse_form, parse_vector, print_form, print_vector
from .frames import (
    complete_frame,
    householder,
    rand_orthonormal_frame,
    rand_unit,
    rotate_pair,
    stereographic_unit,
)
from .g2 import (
    G2Structure,
    SplitEV,
    chi_of,
    complex_structure_j,
    cross_of,
    is_associative,
    is_coassociative,
    metric_from_phi,
    phi0,
    psi_of,
    split_from_2plane,
    verify_g2_identities,
)
from .cy import (
    InducedCY,
    boundary_reports,
    classify_mirror_type,
    cy_axioms_sweep,
    global_witness_forms,
    induce_cy,
    omega_expansion_check,
    phi_interpolation,
    structure_transfer_check,
)
from .ledger import IdentitySuite, SignLedger, VaryingSignError
from .octonion import (
    OCT_TO_REFERENCE_WITNESS,
    Octonion,
    SignedPermutation,
    cross7,
    cross_product_form,
    find_signed_permutation,
    g2_frame_test,
    oct_mul,
)
from .report import ENGINE_VERSION, CheckResult, Report
from .spin7 import (
    SplitKD,
    Spin7Structure,
    descent_swap_check,
    double_induce,
    g2_transfer_check,
    induce_g2,
    is_cayley,
    psi0,
    split_from_3frame,
    triality_checks,
    triality_table,
    triple_cross,
    upsilon_of,
    verify_spin7,
)

__version__ = ENGINE_VERSION
