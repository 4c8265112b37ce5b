"""Exact symbolic computation for affine extensions of quantum principal bundles."""

from .scalars import Mu, PoleError, Scalar

__all__ = ["Mu", "PoleError", "Scalar"]
__version__ = "0.1.0"
