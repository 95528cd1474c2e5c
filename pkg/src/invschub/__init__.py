"""
Involution Schubert calculus: permutations of the integers, Schubert and
involution Schubert polynomials, covering transformations on involutions,
transition formulas, and the involution Little bump.
"""

from .perm import *  # noqa: F401,F403
from .poly import *  # noqa: F401,F403
from .involutions import *  # noqa: F401,F403
from .tau import *  # noqa: F401,F403
from .inv_schubert import *  # noqa: F401,F403
from .fpf import *  # noqa: F401,F403
from .little import *  # noqa: F401,F403
from .sweeps import SweepReport, enumerate_universe, run_suite, suite_names  # noqa: F401

__version__ = "0.1.0"
