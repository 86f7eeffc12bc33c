"""Select the compiled inner loops when available.

Set ``HHPAIRING_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

from __future__ import annotations

import os

from . import _reference

if os.environ.get("HHPAIRING_PURE_PYTHON") == "1":
    _impl = _reference
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _reference
        BACKEND = "python"

monomial_product = _impl.monomial_product
weighted_gram = _impl.weighted_gram
tensor_tables = _impl.tensor_tables

__all__ = ["BACKEND", "monomial_product", "weighted_gram", "tensor_tables"]
