"""Completeness certificates for L-function zero lists."""

from ._zerocert import (
    Interval,
    LFunctionDescriptor,
    TestWindow,
    ZeroList,
    arctan_cut,
    certify_elliptic,
    certify_general,
    certify_hecke,
    certify_zeta_R,
    certify_zeta_window,
    choose_cutoff,
    descriptor_from_file,
    digamma,
    elliptic_ap,
    explicit_formula_check,
    f_eval,
    fhat_bounds,
    fhat_derivative_bound,
    fhat_eval,
    fhat_real_enclosure,
    gaussian_dedekind_coeff,
    log_gamma_branch,
    qi_dedekind_descriptor,
    w_f_eval,
    w_inf_eval,
    zero_list_from_file,
    zeta_counting_bounds,
    zeta_descriptor,
)

__all__ = [
    "Interval",
    "LFunctionDescriptor",
    "TestWindow",
    "ZeroList",
    "arctan_cut",
    "certify_elliptic",
    "certify_general",
    "certify_hecke",
    "certify_zeta_R",
    "certify_zeta_window",
    "choose_cutoff",
    "descriptor_from_file",
    "digamma",
    "elliptic_ap",
    "explicit_formula_check",
    "f_eval",
    "fhat_bounds",
    "fhat_derivative_bound",
    "fhat_eval",
    "fhat_real_enclosure",
    "gaussian_dedekind_coeff",
    "log_gamma_branch",
    "qi_dedekind_descriptor",
    "w_f_eval",
    "w_inf_eval",
    "zero_list_from_file",
    "zeta_counting_bounds",
    "zeta_descriptor",
]

__version__ = "0.1.0"
