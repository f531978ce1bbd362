"""Hot-kernel backend selection.

The compiled extension is used when it imports; set ``EDGERING_PURE_PYTHON=1``
to force the pure-Python fallback.  Both backends stay importable as
``compiled`` (``None`` if not built) and ``python`` for cross-checking.
"""
from __future__ import annotations

import os

from . import _pykernels as python

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("EDGERING_PURE_PYTHON"):
    _impl = compiled
    BACKEND = "cython"
else:
    _impl = python
    BACKEND = "python"

fiber_components = _impl.fiber_components
lattice_count = _impl.lattice_count
canonical_form = _impl.canonical_form
degree_vector_feasible = python.degree_vector_feasible
composition_count = python.composition_count
