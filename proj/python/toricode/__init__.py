"""Toric codes from lattice polytopes over finite fields."""

from ._core import (
    EvaluationMatrix,
    Field,
    LatticePolytope,
    LinearCode,
    ToricodeError,
    degree_one_params,
    dilated_simplex,
    dmin_dual,
    dmin_primal_bruteforce,
    dual_dmin_bound,
    dual_dmin_predicted,
    evaluation_matrix,
    exceptional_simplex,
    f_s,
    f_s_enumerate,
    from_vertices,
    generic_fraction,
    interval,
    is_generic_tuple,
    lawrence_prism,
    mode,
    mode_predicted,
    primal_code,
    pyramid,
    r_s,
    realize,
    relative_mode,
    verify_table1,
    w_s,
)

__all__ = [
    "EvaluationMatrix",
    "Field",
    "LatticePolytope",
    "LinearCode",
    "ToricodeError",
    "degree_one_params",
    "dilated_simplex",
    "dmin_dual",
    "dmin_primal_bruteforce",
    "dual_dmin_bound",
    "dual_dmin_predicted",
    "evaluation_matrix",
    "exceptional_simplex",
    "f_s",
    "f_s_enumerate",
    "from_vertices",
    "generic_fraction",
    "interval",
    "is_generic_tuple",
    "lawrence_prism",
    "mode",
    "mode_predicted",
    "primal_code",
    "pyramid",
    "r_s",
    "realize",
    "relative_mode",
    "verify_table1",
    "w_s",
]
