"""Covariant harmonic oscillators: coupled normal modes, two-mode entanglement,
Lorentz-squeezed space-time and momentum-energy wave functions."""

__version__ = "0.1.0"

from .errors import CovoscError, DomainError, NumericError, RangeError  # noqa: E402,F401
