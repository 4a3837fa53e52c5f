"""Exact computations in the quantum disc algebra, its two-dimensional
differential calculus, quantum cones and the integral."""

from ._core import (
    CheckResult,
    CokernelDecomposition,
    CotangentFunctional,
    DiscElement,
    DomainError,
    HigherForm,
    KindError,
    OneForm,
    ParseError,
    PoleError,
    Report,
    Scalar,
    TwoForm,
    VerificationFailure,
    check,
    cokernel_reduce,
    cone_integral,
    d0,
    d1,
    divergence,
    evaluate,
    integral_lambda,
    normalize,
    partial,
    partial_bar,
    q_int,
    sigma_pow,
    star,
    verify_disc_relations,
    verify_suite,
    wedge,
)

__version__ = "0.1.0"
