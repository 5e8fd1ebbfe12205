"""Kernel selection: compiled extension when built, pure Python otherwise.

Both backends export the same three functions with identical semantics:
rational_census, ellm_census_bounded, ellm_maximal_bounded.  The test suite
cross-checks them against each other and against the straightforward
generators in qtcat.paths.
"""

try:
    from qtcat import _speedups as _impl
except ImportError:  # no compiled extension available
    from qtcat import _kernels_py as _impl

BACKEND = _impl.BACKEND

rational_census = _impl.rational_census
ellm_census_bounded = _impl.ellm_census_bounded
ellm_maximal_bounded = _impl.ellm_maximal_bounded
