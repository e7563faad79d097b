"""Threshold secret-sharing circuits synthesized from superconcentrator-like
graphs over a prime field, with connectivity and entropy verification."""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
