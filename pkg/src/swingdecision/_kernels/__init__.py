"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
``SWINGDECISION_KERNELS=python`` (or ``compiled``) to force a backend.
Both expose the same functions with bit-identical results.
"""

import os

from . import pybackend

_choice = os.environ.get("SWINGDECISION_KERNELS", "auto").lower()

_compiled = None
if _choice in ("auto", "compiled"):
    try:
        from . import _treecore as _compiled
    except ImportError:
        if _choice == "compiled":
            raise ImportError(
                "SWINGDECISION_KERNELS=compiled but the extension is not built"
            )

if _compiled is not None:
    BACKEND = "compiled"
    route_tree = _compiled.route_tree
    forest_predict = _compiled.forest_predict
else:
    BACKEND = "python"
    route_tree = pybackend.route_tree
    forest_predict = pybackend.forest_predict

NODE_LEAF = pybackend.NODE_LEAF
NODE_NUMERIC = pybackend.NODE_NUMERIC
NODE_CATEGORICAL = pybackend.NODE_CATEGORICAL
unseen_goes_left = pybackend.unseen_goes_left


def get_backend(name: str):
    """Explicit backend module lookup, used by tests and benchmarks."""
    if name == "python":
        return pybackend
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels unavailable")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    names = ["python"]
    if _compiled is not None:
        names.append("compiled")
    return names
