"""Hot-kernel backend selection.

KEMPNER_BACKEND chooses the implementation: "numba" (default when
importable), "numpy" (pure fallback), or "auto". Both backends expose the
same functions with identical results and tie-breaks; only speed differs.
"""

from __future__ import annotations

import os

ENV_VAR = "KEMPNER_BACKEND"


def _load():
    choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{ENV_VAR} must be auto, numba, or numpy, got {choice!r}")
    if choice in ("auto", "numba"):
        try:
            from . import numba_backend
            return numba_backend
        except ImportError:
            if choice == "numba":
                raise
    from . import numpy_backend
    return numpy_backend


_impl = _load()

membership_bitmap = _impl.membership_bitmap
best_run = _impl.best_run
sweep_runs = _impl.sweep_runs
beta_block = _impl.beta_block
set_threads = _impl.set_threads


def active_backend() -> str:
    return _impl.NAME
