"""Exact computation of degrees of linear pullback components of foliation
spaces, by integration of Segre classes over a Grassmannian.

The package is organized bottom-up:

* :mod:`lpbdeg.exact` -- rational scalars, exact linear algebra, univariate
  polynomials and interpolation.
* :mod:`lpbdeg.polyring` -- truncated multivariate polynomial ring used for
  characteristic classes in Chern roots.
* :mod:`lpbdeg.symfunc` -- partitions and the character-sum route to Segre
  classes.
* :mod:`lpbdeg.bundles` -- virtual bundle expressions and their Chern roots,
  classes and characters.
* :mod:`lpbdeg.grassmann` -- integration of symmetric classes over G(k, m).
* :mod:`lpbdeg.foliation` -- the degree engine for linear pullback components
  and the interpolated closed forms.
* :mod:`lpbdeg.forms` -- explicit projective differential 1-forms, linear
  pullback and recovery.
* :mod:`lpbdeg.cli` -- command line front end with a persistent degree cache.

Everything is exact: coefficients are integers or ``fractions.Fraction``
values, and no floating point enters any computation.
"""

__version__ = "0.1.0"

from .exact import UniPoly, kernel_basis, lagrange_interpolate, solve_linear
from .foliation import (
    InternalInconsistencyError,
    LpbInvariants,
    closed_form,
    degree_lpb,
    lpb_invariants,
    reference_formula,
)
from .forms import LinearProjection, ProjectiveOneForm, pullback_linear, recover

__all__ = [
    "InternalInconsistencyError",
    "LinearProjection",
    "LpbInvariants",
    "ProjectiveOneForm",
    "UniPoly",
    "__version__",
    "closed_form",
    "degree_lpb",
    "kernel_basis",
    "lagrange_interpolate",
    "lpb_invariants",
    "pullback_linear",
    "recover",
    "reference_formula",
    "solve_linear",
]
