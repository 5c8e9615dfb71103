"""Exact verification of (ba)^n = e_0^T (U_b S)^n H_1 over noncommutative rings,
and of its derivative-operator form in the Heisenberg algebra."""

from .algebra import (
    POLY,
    ZZ,
    FreeAlgebra,
    FreeAlgElem,
    Poly,
    RingOps,
    ad_power,
    binomial,
    commutator,
    free_mul,
    poly_derivative,
    poly_eval_in_ring,
    ring_of,
)
from .copeland import (
    ConfigError,
    GeneralConfig,
    VerifyReport,
    ada1_check,
    basis_row,
    build_e,
    build_H,
    build_S,
    build_U,
    general_rhs,
    genlem_check,
    rows_equiv,
    shift_prop_check,
    uh_prop_check,
    verify_general,
)
from .matrix import (
    INF,
    Mat,
    ShapeError,
    TamenessError,
    check_tri_bound,
    identity,
    mat_mul,
    mat_pow,
    row,
    window_eq,
)
from .weyl import (
    HEIS,
    HeisenbergElem,
    build_V,
    cor_deriv_ad_check,
    deriv1_check,
    heisenberg_mul,
    triv_comm_check,
    verify_copeland,
    verify_u_eq_v,
    weyl_apply,
)

__version__ = "0.1.0"
