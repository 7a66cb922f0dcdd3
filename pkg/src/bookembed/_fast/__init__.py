"""Kernel selection: compiled extension when present, pure Python otherwise.

``kernel()`` returns the active module; ``kernel("pure")`` / ``kernel("native")``
force one (the latter raises if the extension is missing), which is what the
benchmark uses to compare both implementations.
"""

from __future__ import annotations

from . import pure

try:
    from . import _native
except ImportError:
    _native = None

active = _native if _native is not None else pure

IMPLEMENTATION = active.IMPLEMENTATION

CLASS_ONE_PAGE = pure.CLASS_ONE_PAGE
CLASS_MAX = pure.CLASS_MAX
CLASS_SUM = pure.CLASS_SUM
CLASS_MINRES = pure.CLASS_MINRES


def kernel(which="auto"):
    if which == "auto":
        return active
    if which == "pure":
        return pure
    if which == "native":
        if _native is None:
            raise RuntimeError("native kernel is not built")
        return _native
    raise ValueError(f"unknown kernel {which!r}")
