"""twistr: exact spectral R-matrices for twisted quantum affine algebras.

The package constructs, in exact rational arithmetic, the spectral-parameter
dependent R-matrices associated with the three families of order-2 twisted
quantum affine algebras, by two independent routes -- the extended twisted
tensor-product-graph recursion (with closed-form eigenvalue products) and the
direct null-space solution of the intertwining equations -- and cross-checks
them against each other and the Yang-Baxter equation.
"""

from .liealg import FamilySpec, family_spec
from .scalars import QSample, RatFun

__version__ = "0.1.0"

__all__ = ["FamilySpec", "family_spec", "QSample", "RatFun", "__version__"]
