"""
Finite regular semigroups and their structure: biordered sets, the
fundamental semigroup T_E/p, inductive groupoids, free idempotent generated
presentations and normal categories.
"""
__version__ = "0.1.0"

from .errors import SemigroupError
from .config import Caps, DEFAULT_CAPS
from .core import FiniteSemigroup, build_semigroup, generate_family, read_cayley
