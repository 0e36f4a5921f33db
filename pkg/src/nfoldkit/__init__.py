"""nfoldkit - exact N-fold integer programming with partition-aware Graver bounds."""

__version__ = "0.1.0"

__all__ = [
    "__version__",
]
