"""Quasisymmetric power sums: compositions, permutation bijections, exact basis algebra and an oracle."""

from .compositions import Composition
from .errors import QSymError

__version__ = "0.1.0"
__all__ = ["Composition", "QSymError", "__version__"]
