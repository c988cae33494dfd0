"""Exact arithmetic for the real quadrangle of type E6.

Cayley-Dickson algebras, the exceptional Jordan algebra of hermitian 3x3
octonion matrices, Veronese points and their isotropy, generator actions
of the exceptional group, the Plücker toy model in the exterior square of
C^6, and a finite incidence-geometry checker.
"""

from .composition import CDNum
from .jordan import Herm3
from .scalars import GScalar, I

__version__ = "0.1.0"
__all__ = ["CDNum", "GScalar", "Herm3", "I"]
