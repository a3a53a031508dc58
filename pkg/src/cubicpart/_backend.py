"""Kernel selection.

The compiled extension is used when it imports; setting the environment
variable ``CUBICPART_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import os

from . import _pykernels

try:
    if os.environ.get("CUBICPART_PURE_PYTHON") == "1":
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as kernels

    NAME = "cython"
except ImportError:
    kernels = _pykernels
    NAME = "python"

MAX_MODULUS = kernels.MAX_MODULUS
