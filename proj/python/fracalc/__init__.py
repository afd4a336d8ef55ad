"""One-sided fractional calculus toolkit.

Thin wrapper around the C++ core: fractional integrals and Marchaud-type
derivatives, the two-sided operator catalog with its Fourier-multiplier
cross-check, the degenerate extension problem, truncated-inversion kernels,
and one-sided maximal/weight machinery.
"""

__all__ = [
    "GridFunction",
    "OperatorKind",
    "TailKind",
    "TailModel",
    "apply_symbol",
    "check_ap",
    "check_ap_plus",
    "dirichlet_solve",
    "extension_value",
    "gamma",
    "kernel_mass",
    "ktilde_convolve",
    "macdonald_k",
    "make_bump",
    "make_gaussian",
    "make_one_sided_exp",
    "marchaud_left",
    "marchaud_right",
    "marchaud_right_eps",
    "maximal_minus",
    "maximal_plus",
    "multiplier_h",
    "neumann_trace",
    "riemann_liouville",
    "run_suite",
    "symbol",
    "two_sided",
    "weyl",
]

try:
    from . import _fracalc as _impl
except ImportError:  # in-tree builds leave the extension on sys.path instead
    import _fracalc as _impl

globals().update({name: getattr(_impl, name) for name in __all__})
