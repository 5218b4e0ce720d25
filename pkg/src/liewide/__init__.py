"""Wide and cyclic wide regular subalgebras of semisimple Lie algebras.

Exact (rational) computations with root systems, closed subsets, Chevalley
bases, regular subalgebras ``s_{T,t}`` and explicit simple modules ``V(lam)``.
"""

from .closedset import (
    ClosedSubset,
    closure,
    conjugate_special_negative,
    enumerate_closed_subsets,
    is_closed,
    is_parabolic,
    symmetric_hull,
)
from .hwmod import (
    build_simple_module,
    endomorphism_algebra,
    is_cyclic_indecomposable,
    is_indecomposable,
    quotient_module,
    radical_image,
    restrict,
)
from .presets import direct_sum_subalgebra, preset_tk_subalgebra
from .regsub import GENERATED_BY_TR, RegularSubalgebra, chevalley_constants, killing_form
from .rootsys import RootSystem, Weight, build_root_system, weyl_dimension
from .widecheck import Decision, decide_cyclic_wide, empirical_cyclic_wide, is_wide, verify_theorems

__version__ = "0.1.0"

__all__ = [
    "ClosedSubset", "closure", "conjugate_special_negative", "enumerate_closed_subsets",
    "is_closed", "is_parabolic", "symmetric_hull",
    "build_simple_module", "endomorphism_algebra", "is_cyclic_indecomposable",
    "is_indecomposable", "quotient_module", "radical_image", "restrict",
    "direct_sum_subalgebra", "preset_tk_subalgebra",
    "GENERATED_BY_TR", "RegularSubalgebra", "chevalley_constants", "killing_form",
    "RootSystem", "Weight", "build_root_system", "weyl_dimension",
    "Decision", "decide_cyclic_wide", "empirical_cyclic_wide", "is_wide", "verify_theorems",
]
