"""Statistic kernel backend selection.

Prefers the compiled Cython kernels and falls back to the numpy
implementation.  Set RVEXACT_BACKEND=python (or =compiled) to force a
backend; forcing "compiled" raises if the extension is unavailable.
"""

from __future__ import annotations

import os

_forced = os.environ.get("RVEXACT_BACKEND", "").strip().lower()

if _forced in ("python", "py", "pure"):
    from . import _pykernels as _impl
elif _forced in ("compiled", "c", "cython"):
    from . import _ckernels as _impl  # type: ignore[no-redef]
elif _forced == "":
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as _impl
else:
    raise RuntimeError(
        f"RVEXACT_BACKEND={_forced!r} not understood; use 'compiled' or 'python'"
    )

BACKEND_NAME: str = _impl.BACKEND_NAME
statistics = _impl.statistics

SCORE = _impl.SCORE
WALD = _impl.WALD
WALD_REG = _impl.WALD_REG
LRT = _impl.LRT
FIRTH = _impl.FIRTH

__all__ = [
    "BACKEND_NAME",
    "statistics",
    "SCORE",
    "WALD",
    "WALD_REG",
    "LRT",
    "FIRTH",
]
