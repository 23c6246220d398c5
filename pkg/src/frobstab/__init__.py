"""Exact computations around Frobenius pullbacks and semistability.

Kempf instability for torus actions, degrees of rational GL_n
representations, truncated symmetric powers in characteristic p, and the
minimal Frobenius-iteration counts that make semistability survive.
"""

from __future__ import annotations

from .bounds import BoundResult, bound_thm31, bound_thm32, bound_thm44, bound_thm54, cor55_rank
from .kempf import InstabilityReport, conjugate_instability_search, instability, min_norm_oracle, min_norm_wolfe
from .lattice import ParabolicDesc, norm_sq, pairing, parabolic_of, primitive
from .repcalc import RepSpec, rep_degree, tensor, tl_rep, wedge_lift
from .sandbox import SplitBundle, apply_functor, frobenius_pullback, hn_profile, is_semistable, slope
from .states import MuValue, State, mu_of, state_of_point
from .truncsym import BudgetExceeded, invariants_dim, tl_basis, tl_dim

__version__ = "0.1.0"
