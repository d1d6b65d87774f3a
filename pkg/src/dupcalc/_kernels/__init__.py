"""Hot loops: compiled Cython core when available, numpy fallback otherwise.

Set ``DUPCALC_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels as pure

BACKEND = "python"
compiled = None

if os.environ.get("DUPCALC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled
        BACKEND = "cython"
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure

cg_closure = _impl.cg_closure
propagate = _impl.propagate

__all__ = ["BACKEND", "cg_closure", "propagate", "pure", "compiled"]
