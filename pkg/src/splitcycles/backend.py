"""Kernel backend selection: numba-compiled or plain Python.

The kernels in _kernels.py are single-source. The numba backend clones
that module and re-binds every kernel to its @njit-compiled version, so
intra-module calls resolve to compiled code; the python backend runs the
same source uncompiled. Select with SPLITCYCLES_BACKEND={numba,python}
(default: numba when importable, else python).
"""
import importlib.util
import os

from . import _kernels as _py

_ENV = "SPLITCYCLES_BACKEND"
_JIT_NAMES = ("bit_add", "bit_prefix", "bit_select", "pred_colored",
              "succ_colored", "color_dart", "uncolor_to", "extend_colors",
              "close_verdict", "alloc_state", "enumerate_tree",
              "replay_cycle")
_cache = {}


class Backend:
    def __init__(self, name, module):
        self.name = name
        self.enumerate_tree = module.enumerate_tree
        self.replay_cycle = module.replay_cycle


def _clone_kernels():
    spec = importlib.util.find_spec("splitcycles._kernels")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def _make_numba_backend() -> Backend:
    from numba import njit
    mod = _clone_kernels()
    for name in _JIT_NAMES:
        setattr(mod, name, njit(cache=True)(getattr(mod, name)))
    return Backend("numba", mod)


def get_backend(force=None) -> Backend:
    """Resolve the kernel backend; `force` overrides the environment."""
    choice = force or os.environ.get(_ENV, "").strip().lower() or "auto"
    if choice in _cache:
        return _cache[choice]
    if choice == "python":
        b = Backend("python", _py)
    else:
        try:
            b = _make_numba_backend()
        except Exception:
            if choice == "numba":
                raise
            b = Backend("python", _py)
    _cache[choice] = b
    return b


def backend_name() -> str:
    return get_backend().name
