"""Exact Chebyshev polynomials over Z: generation, identity checks and root analysis."""

from .chebyshev import (ChebKind, gen_closed_form, gen_recurrence, monic_transform,
                        value_at_one)
from .identities import CheckReport, IdentityId, check_identity, run_suite
from .poly import (IntPoly, Rat, add, compose, content_primitive, derivative, eval_rat,
                   exact_div, gcd_poly, mul)
from .quadext import QuadExtElem, closed_form_value, j_power_period, qe_inv, qe_mul
from .rational import (RationalRootReport, cross_check, expected_rational_roots,
                       rational_roots_generic)
from .roots import (IsolInterval, SturmChain, count_roots, is_squarefree, isolate_roots,
                    refine, sturm_chain)

__version__ = "0.1.0"

__all__ = [
    "ChebKind", "CheckReport", "IdentityId", "IntPoly", "IsolInterval", "QuadExtElem",
    "Rat", "RationalRootReport", "SturmChain", "add", "check_identity", "closed_form_value",
    "compose", "content_primitive", "count_roots", "cross_check", "derivative", "eval_rat",
    "exact_div", "expected_rational_roots", "gcd_poly", "gen_closed_form", "gen_recurrence",
    "is_squarefree", "isolate_roots", "j_power_period", "monic_transform", "mul", "qe_inv",
    "qe_mul", "rational_roots_generic", "refine", "run_suite", "sturm_chain", "value_at_one",
]
