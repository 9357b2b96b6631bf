"""Backend selection for the word/point kernels.

The compiled extension (`g2kl._core_cy`, built from Cython) is preferred when
importable; the pure-Python twin is the fallback.  Set ``G2KL_PURE=1`` to
force the pure backend.  Both expose the identical function-level API; the
test suite asserts their outputs agree.
"""

import os

from . import _core_py

if os.environ.get("G2KL_PURE"):
    _impl = _core_py
else:
    try:
        from . import _core_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _core_py

BACKEND = _impl.BACKEND_NAME

V0 = _impl.V0
apply_gen = _impl.apply_gen
apply_word = _impl.apply_word
eval_word = _impl.eval_word
descent_mask = _impl.descent_mask
canonical_from_point = _impl.canonical_from_point
length_from_point = _impl.length_from_point
bruhat_leq = _impl.bruhat_leq
subword_points = _impl.subword_points
