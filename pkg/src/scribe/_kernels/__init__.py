"""Kernel backend selection.

Two interchangeable backends provide the hot inner loops (LSTM step
recursions, CTC alpha/beta): a Cython extension (``_core``) and a
pure-numpy fallback (``pure``). The compiled one is used when it
imported successfully; set ``SCRIBE_KERNELS=pure`` or
``SCRIBE_KERNELS=compiled`` to force a choice. ``benchmarks/``
contains a script comparing the two.
"""

import os

from . import pure

try:
    from . import _core as compiled
except ImportError:
    compiled = None


def available_backends():
    """Names of importable backends, fallback last."""
    names = []
    if compiled is not None:
        names.append("compiled")
    names.append("pure")
    return names


def get_backend(name=None):
    """Return the backend module for `name` (default: the active one)."""
    if name is None:
        return _ACTIVE
    if name == "pure":
        return pure
    if name == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernel backend is not available")
        return compiled
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    forced = os.environ.get("SCRIBE_KERNELS")
    if forced:
        return get_backend(forced)
    return compiled if compiled is not None else pure


_ACTIVE = _select()

backend_name = _ACTIVE.NAME
lstm_forward = _ACTIVE.lstm_forward
lstm_backward = _ACTIVE.lstm_backward
ctc_alpha_beta = _ACTIVE.ctc_alpha_beta
